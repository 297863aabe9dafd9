"""Claim registry and parameter-sweep auditing.

Each registered claim packages a checkable statement, a default sweep range,
hard feasibility caps, an instance enumerator, and a per-instance checker.
``audit`` sweeps the range and reports confirmations and refutations with
concrete counterexamples; refutations replay (running the checker on the
refuted parameters reproduces the refutation).

Claims are graded ``asserted-in-print`` (the printed statement is expected
to survive brute force) or ``asserted-in-print, refuted-by-sweep`` (the
printed statement is contradicted by exhaustive computation; the audit
documents where).  Known printed slips live in the errata registry below and
are reported as errata, never silently corrected.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .constructors import (
    new_loop,
    product,
    units_group,
    zn_groupoid,
    zn_semigroup,
)
from .errors import ArityMismatch, BadN, CarrierMismatch, RangeTooLarge, UnknownClaim
from .identities import STRONG, check_identity, predict_zn
from .magma import Magma
from .special import cauchy_audit
from .structures import Structure
from .substructures import (
    closure,
    enumerate_ideals,
    enumerate_substructures,
    is_simple,
    loop_centers,
    loop_subloop_family,
    normalizers,
    smarandache_witness,
)

ASSERTED_IN_PRINT = "asserted-in-print"
REFUTED_IN_PRINT = "asserted-in-print, refuted-by-sweep"

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def _primes_in(lo: int, hi: int) -> list[int]:
    return [p for p in _PRIMES if lo <= p <= hi]


def _valid_loop_ms(n: int) -> list[int]:
    return [
        m
        for m in range(2, n)
        if math.gcd(m, n) == 1 and math.gcd(m - 1, n) == 1
    ]


def _loop_param_ok(n: int, m: int) -> bool:
    return (
        n > 3
        and n % 2 == 1
        and 1 < m < n
        and math.gcd(m, n) == 1
        and math.gcd(m - 1, n) == 1
    )


# -- errata registry -----------------------------------------------------------------


@dataclass(frozen=True)
class Erratum:
    id: str
    context: str
    printed: str
    computed: str
    claim_ids: tuple[str, ...] = ()
    data: tuple = ()  # structured (key, value) pairs for tests/tools

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "context": self.context,
            "printed": self.printed,
            "computed": self.computed,
            "claims": list(self.claim_ids),
        }

    def datum(self, key: str):
        for k, v in self.data:
            if k == key:
                return v
        raise KeyError(key)


ERRATA: tuple[Erratum, ...] = (
    Erratum(
        "ERR-IDEM-15-9-6",
        "printed idempotent-groupoid instance over Z_15 with (t,u) = (9,6)",
        "claimed idempotent",
        "9 + 6 = 15 = 0 (mod 15), so x*x = 0 for every x; the iff criterion "
        "t + u = 1 (mod n) excludes it",
        ("T-IDEM",),
        (("n", 15), ("t", 9), ("u", 6)),
    ),
    Erratum(
        "ERR-LOOP-SIGN-10-16",
        "printed worked loop product with m = 8 on carriers of sizes 10 and "
        "16: (6,9)*(4,10)",
        "(2, 8), computed as (m-1)a + m*b",
        "(8, 2) under the adopted rule m*b - (m-1)a (mod n); the printed "
        "arithmetic flips the sign convention used everywhere else",
        ("T-LOOP-AXIOMS",),
        (("printed", (2, 8)), ("computed", (8, 2))),
    ),
    Erratum(
        "ERR-L52-DIAG-4-4",
        "printed 6x6 loop table for (n,m) = (5,2): diagonal cell at row 4, "
        "column 4",
        "[0,3]",
        "e — every other diagonal cell of the same table is e, and x*x = e "
        "is forced by the construction; the printed cell also breaks the "
        "latin-square property of its row",
        ("T-LOOP-AXIOMS",),
        (("row", 4), ("col", 4), ("computed", "e"), ("printed", 3)),
    ),
    Erratum(
        "ERR-MAT12-5CELLS",
        "printed 5x5 interval-matrix product over Z_12",
        "cells (1,2)=5, (1,4)=9, (2,1)=5, (3,0)=3, (3,2)=1 (0-indexed)",
        "11, 7, 11, 9, 7 by row-into-column arithmetic mod 12",
        (),
        (
            ("printed", ((0, 10, 0, 1, 0), (2, 0, 5, 0, 9), (0, 5, 0, 4, 0), (3, 0, 1, 0, 3), (0, 3, 0, 1, 0))),
            ("computed", ((0, 10, 0, 1, 0), (2, 0, 11, 0, 7), (0, 11, 0, 4, 0), (9, 0, 7, 0, 3), (0, 3, 0, 1, 0))),
            ("slip_cells", ((1, 2), (1, 4), (2, 1), (3, 0), (3, 2))),
        ),
    ),
    Erratum(
        "ERR-PROD5-SLOT3",
        "printed five-component worked product (slots 0-indexed)",
        "slot 3 prints [0,3]; slot 1 prints [0,0]",
        "slot 3 computes to 7 (genuine slip); slot 1's 0 is the "
        "out-of-carrier representative of 11 under the loop convention "
        "0 -> n (normalization, not a slip)",
        (),
        (
            ("printed", (1, 0, 6, 3, 11)),
            ("computed", (1, 11, 6, 7, 11)),
            ("slip_slots", (3,)),
            ("normalized_slots", (1,)),
        ),
    ),
    Erratum(
        "ERR-SUBLOOP-SET-33-11",
        "printed subloop listing {e, 11, 12, 23} for stride t = 11 over "
        "n = 33",
        "{e, 11, 12, 23}",
        "{e, 1, 12, 23} (the base-1 stride-11 family member); the printed "
        "set is not closed (11*12 lands outside it) and contradicts the "
        "table header of the same example",
        ("T-SUBLOOP-FAMILY", "T-NORMALIZER"),
        (("printed", ("e", 11, 12, 23)), ("computed", ("e", 1, 12, 23))),
    ),
    Erratum(
        "ERR-ISO-S2-1-3",
        "second printed principal-isotope table, cell (1,3)",
        "3 — which repeats within its row, breaking latinity",
        "e: the unique (a,b) pair reproducing the table is (e,4), matching "
        "35 of 36 cells; cell (1,3) of that isotope is e",
        (),
        (("a", "e"), ("b", 4), ("cell", (1, 3)), ("computed", "e"), ("printed", 3)),
    ),
    Erratum(
        "ERR-PROD4-SLOT2",
        "printed four-component groupoid product, slot 2 (0-indexed): "
        "x = (3,8,1,5), y = (2,1,8,10)",
        "12 — computed with the pair (1,1) instead of the declared (4,4)",
        "17 = 4*1 + 4*8 (mod 19)",
        (),
        (
            ("printed", (5, 16, 12, 1)),
            ("computed", (5, 16, 17, 1)),
            ("slip_slots", (2,)),
        ),
    ),
    Erratum(
        "ERR-ENTRYWISE-12-7-0",
        "printed 3x3 entrywise matrix product over Z_12 with (t,u) = (7,0)",
        "[[9,0,0],[1,11,0],[7,0,8]]",
        "[[9,7,1],[7,8,0],[2,0,11]] by entrywise 7a + 0b (mod 12); the "
        "printed matrix agrees only in cells (0,0), (1,2), (2,1)",
        (),
        (
            ("printed", ((9, 0, 0), (1, 11, 0), (7, 0, 8))),
            ("computed", ((9, 7, 1), (7, 8, 0), (2, 0, 11))),
            ("agree_cells", ((0, 0), (1, 2), (2, 1))),
        ),
    ),
    Erratum(
        "ERR-ROWVEC-12-7-0",
        "printed row-vector x matrix product in the same example, slots 2 "
        "and 3 (0-indexed)",
        "(8, 0)",
        "(108, 80) by unreduced row-into-column arithmetic; the printed "
        "values reduce inconsistently with the neighbouring slots",
        (),
        (
            ("printed", (69, 76, 8, 0, 80, 77)),
            ("computed", (69, 76, 108, 80, 80, 77)),
            ("slip_slots", (2, 3)),
        ),
    ),
    Erratum(
        "ERR-P-IFF",
        "printed iff for the P-identity over the family t + u = 1 (mod n)",
        "P holds iff t*t = t (mod n)",
        "P holds for every (t,u) in the family (exhaustive n <= 30); the "
        "printed iff is refuted wherever n does not divide t*t - t",
        ("T-STRONG-FAMILY",),
        (),
    ),
    Erratum(
        "ERR-BOL-IFF",
        "printed iff for the right-Bol identity over the family "
        "t + u = 1 (mod n)",
        "Bol holds iff t*t = t (mod n)",
        "Bol holds iff n divides t*t*(t-1) (exhaustive n <= 30); first "
        "separating instance (n,t,u) = (4,2,3)",
        ("T-STRONG-FAMILY",),
        (),
    ),
    Erratum(
        "ERR-SIMPLE-2-2",
        "printed simplicity claim for groupoids with n = t + u, t and u "
        "prime, at (t,u) = (2,2)",
        "simple",
        "the two-sided ideal {0,2} is proper and nontrivial in the (2,2) "
        "groupoid on Z_4; the claim survives only under the convention "
        "that ideals containing 0 do not count",
        ("T-BISIMPLE-GPD",),
        (("n", 4), ("t", 2), ("u", 2), ("ideal", (0, 2))),
    ),
)


def errata_for(claim_id: str) -> tuple[Erratum, ...]:
    return tuple(e for e in ERRATA if claim_id in e.claim_ids)


def erratum(erratum_id: str) -> Erratum:
    for e in ERRATA:
        if e.id == erratum_id:
            return e
    raise KeyError(erratum_id)


# -- claim and report types -----------------------------------------------------------


@dataclass(frozen=True)
class TheoremClaim:
    id: str
    statement: str
    parameter_domain: str
    status: str
    default_range: dict = field(compare=False)
    max_range: dict = field(compare=False)
    instances: callable = field(compare=False, repr=False)
    checker: callable = field(compare=False, repr=False)

    @property
    def errata_refs(self) -> tuple[str, ...]:
        return tuple(e.id for e in errata_for(self.id))


def jsonable(x):
    """Recursively coerce report payloads to plain JSON values."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return [jsonable(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


@dataclass
class AuditReport:
    claim: str
    checked: int
    confirmed: int
    refuted: list
    runtime_note: str
    errata_refs: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        """The report's external JSON shape (runtime_note is advisory and
        deliberately excluded: identical sweeps must serialize identically)."""
        return {
            "claim": self.claim,
            "checked": self.checked,
            "confirmed": self.confirmed,
            "refuted": jsonable(self.refuted),
            "errata_refs": list(self.errata_refs),
        }


# -- per-claim checkers ----------------------------------------------------------------


def _grade_strong(structure_or_magma, ident: str) -> bool:
    m = (
        structure_or_magma.magma
        if isinstance(structure_or_magma, Structure)
        else structure_or_magma
    )
    return check_identity(m, ident).grade == STRONG


def _chk_idem(p):
    n, t, u = p["n"], p["t"], p["u"]
    got = _grade_strong(zn_groupoid(n, t, u), "idempotent-law")
    want = (t + u - 1) % n == 0
    if got == want:
        return True, None
    return False, {"got": got, "predicted": want}


def _iter_idem(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "t": t, "u": u}
        for n in range(max(2, lo), hi + 1)
        for t in range(n)
        for u in range(n)
    ]


def _chk_ptt(p):
    n, t = p["n"], p["t"]
    got = _grade_strong(zn_groupoid(n, t, t), "P-identity")
    if got and predict_zn("P-identity", n, t, t) is not False:
        return True, None
    v = check_identity(zn_groupoid(n, t, t).magma, "P-identity")
    return False, {"got": got, "counterexample": v.counterexample}


def _iter_ptt(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "t": t} for n in range(max(2, lo), hi + 1) for t in range(1, n)
    ]


def _chk_zero_family(p):
    n, t, side = p["n"], p["t"], p["side"]
    g = zn_groupoid(n, t, 0) if side == "right0" else zn_groupoid(n, 0, t)
    want = (t * t - t) % n == 0
    bad = []
    for ident in ("P-identity", "left-alternative", "right-alternative"):
        got = _grade_strong(g, ident)
        if got != want:
            bad.append({"identity": ident, "got": got, "predicted": want})
    return (not bad), (bad or None)


def _iter_zero_family(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "t": t, "side": side}
        for n in range(max(2, lo), hi + 1)
        for t in range(1, n)
        for side in ("right0", "left0")
    ]


_FAMILY_IDENTITIES = (
    "left-alternative",
    "right-alternative",
    "P-identity",
    "bol",
    "moufang",
)


def _chk_strong_family(p):
    n, t, u = p["n"], p["t"], p["u"]
    g = zn_groupoid(n, t, u)
    want = (t * t - t) % n == 0
    bad = []
    for ident in _FAMILY_IDENTITIES:
        v = check_identity(g.magma, ident)
        got = v.grade == STRONG
        if got != want:
            bad.append(
                {
                    "identity": ident,
                    "got": got,
                    "predicted_by_printed_iff": want,
                    "witness": v.counterexample,
                }
            )
    return (not bad), (bad or None)


def _iter_strong_family(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "t": t, "u": (1 - t) % n}
        for n in range(max(2, lo), hi + 1)
        for t in range(n)
    ]


def _chk_sgpd(p):
    n, t, u = p["n"], p["t"], p["u"]
    w = smarandache_witness(zn_groupoid(n, t, u))
    if w is not None and w.grade == "smarandache":
        return True, None
    return False, {"witness": None if w is None else sorted(w.components[0])}


def _iter_sgpd(rng):
    lo, hi = rng["n"]
    out = []
    for n in range(max(6, lo), hi + 1):
        for t in range(1, n):
            u = (1 - t) % n
            if u == 0 or t == u or math.gcd(t, u) != 1:
                continue
            out.append({"n": n, "t": t, "u": u})
    return out


def _ideal_sets(structure, side):
    return sorted(
        frozenset(s.subsets[0]) for s in enumerate_ideals(structure, side=side)
    )


def _chk_ideal_dual(p):
    n, t, u = p["n"], p["t"], p["u"]
    right = _ideal_sets(zn_groupoid(n, t, u), "right")
    left = _ideal_sets(zn_groupoid(n, u, t), "left")
    if right == left:
        return True, None
    return False, {
        "right_of_tu": [sorted(s) for s in right],
        "left_of_ut": [sorted(s) for s in left],
    }


def _iter_ideal_dual(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "t": t, "u": u}
        for n in range(max(2, lo), hi + 1)
        for t in range(n)
        for u in range(n)
    ]


def _prime_pair_product(p, q, op):
    return product(zn_semigroup(p, op), zn_semigroup(q, op))


def _chk_simple_add(p):
    s = _prime_pair_product(p["p"], p["q"], "add")
    if is_simple(s, mode="substructure"):
        return True, None
    subs = [x for x in enumerate_substructures(s) if x.proper_nontrivial]
    wit = subs[0].subsets if subs else None
    return False, {"substructure": [sorted(x) for x in wit] if wit else None}


def _chk_ideal_simple(p):
    s = _prime_pair_product(p["p"], p["q"], "add")
    if is_simple(s, mode="ideal"):
        return True, None
    return False, {"note": "proper nontrivial ideal found"}


def _iter_prime_pairs(rng):
    lo, hi = rng["p"]
    primes = _primes_in(lo, hi)
    return [
        {"p": p, "q": q} for p, q in itertools.combinations(primes, 2)
    ]


def _chk_loop_axioms(p):
    n, m = p["n"], p["m"]
    if not _loop_param_ok(n, m):
        try:
            new_loop(n, m)
        except Exception:
            return True, None
        return False, {"note": "constructor accepted invalid parameters"}
    L = new_loop(n, m)
    T = L.magma.table()
    k = T.shape[0]
    ar = np.arange(k)
    latin = bool(
        np.all(np.sort(T, axis=1) == ar) and np.all(np.sort(T, axis=0) == ar[:, None])
    )
    ident = bool(np.all(T[0, :] == ar) and np.all(T[:, 0] == ar))
    diag = bool(np.all(np.diagonal(T)[1:] == 0))
    if latin and ident and diag:
        return True, None
    return False, {"latin": latin, "identity": ident, "square_is_e": diag}


def _iter_loops(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "m": m}
        for n in range(max(5, lo) | 1, hi + 1, 2)
        for m in range(2, n)
    ]


def _iter_valid_loops(rng):
    lo, hi = rng["n"]
    return [
        {"n": n, "m": m}
        for n in range(max(5, lo) | 1, hi + 1, 2)
        for m in _valid_loop_ms(n)
    ]


def _chk_loop_order2(p):
    n, m = p["n"], p["m"]
    L = new_loop(n, m)
    mag = L.magma
    bad = [x for x in range(1, n + 1) if mag.element_order(x) != 2]
    if not bad:
        return True, None
    return False, {"elements": bad[:5]}


def _chk_cauchy_biloop(p):
    n, q = p["n"], p["q"]
    s = product(new_loop(n, 2), new_loop(q, 2))
    rep = cauchy_audit(s)
    book = {tuple(r["element"]) for r in rep["book"]}
    expected = {(a, b) for a in range(1, n + 1) for b in range(1, q + 1)}
    if expected <= book and not rep["book_failures"]:
        return True, None
    missing = sorted(expected - book)[:5]
    return False, {"missing": missing, "book_failures": rep["book_failures"][:5]}


def _iter_cauchy_biloops(rng):
    lo, hi = rng["n"]
    ns = [n for n in range(max(5, lo) | 1, hi + 1, 2)]
    return [{"n": a, "q": b} for a, b in itertools.combinations(ns, 2)]


def _chk_2sylow(p):
    pp, m = p["p"], p["m"]
    L = new_loop(pp, m)
    subs = enumerate_substructures(L, class_filter="group")
    bad = []
    for s in subs:
        if not s.proper_nontrivial:
            continue
        k = s.size
        if (k & (k - 1)) != 0 or (pp + 1) % k != 0:
            bad.append({"members": sorted(s.subsets[0]), "size": k})
    return (not bad), (bad or None)


def _iter_prime_loops(rng):
    lo, hi = rng["p"]
    return [
        {"p": p, "m": m}
        for p in _primes_in(max(5, lo), hi)
        for m in _valid_loop_ms(p)
    ]


def _chk_comm_loop(p):
    n, m = p["n"], p["m"]
    got = bool(new_loop(n, m).magma.classify().commutative)
    want = m == (n + 1) // 2
    if got == want:
        return True, None
    return False, {"commutative": got, "m_is_half": want}


def _chk_fn_count(p):
    r = strict_noncommutative_count(p["n"])
    if r["brute"] == r["formula"]:
        return True, None
    return False, {"brute": r["brute"], "formula": r["formula"], "ms": r["ms"]}


def _iter_fn(rng):
    lo, hi = rng["n"]
    return [{"n": n} for n in range(max(5, lo) | 1, hi + 1, 2)]


def _chk_normalizer(p):
    n, m, t, i = p["n"], p["m"], p["t"], p["i"]
    L = new_loop(n, m)
    H = frozenset({0} | {(i + k * t - 1) % n + 1 for k in range(n // t)})
    norm = normalizers(L, H)
    want = math.gcd(m * m - m + 1, t) == math.gcd(2 * m - 1, t)
    if norm["equal"] == want:
        return True, None
    return False, {
        "first": sorted(norm["first"]),
        "second": sorted(norm["second"]),
        "gcd_law": want,
    }


def _iter_normalizer(rng):
    lo, hi = rng["n"]
    out = []
    for n in range(max(5, lo) | 1, hi + 1, 2):
        divisors = [t for t in range(2, n) if n % t == 0]
        if not divisors:
            continue
        for m in _valid_loop_ms(n):
            for t in divisors:
                for i in range(1, t + 1):
                    out.append({"n": n, "m": m, "t": t, "i": i})
    return out


def _chk_mouf_center(p):
    pp, m = p["p"], p["m"]
    L = new_loop(pp, m)
    mc = loop_centers(L)["moufang_center"]
    whole = frozenset(range(pp + 1))
    if mc == frozenset({0}) or mc == whole:
        return True, None
    return False, {"moufang_center": sorted(mc)}


def _chk_center_e(p):
    pp, m = p["p"], p["m"]
    if loop_centers(new_loop(pp, m))["center"] == frozenset({0}):
        return True, None
    return False, {"center": sorted(loop_centers(new_loop(pp, m))["center"])}


def _chk_subloop_family(p):
    n, m = p["n"], p["m"]
    fam = loop_subloop_family(new_loop(n, m))
    bad = []
    for f in fam:
        if not (f.closed and f.is_subloop and len(f.elements) == n // f.t + 1):
            bad.append({"t": f.t, "i": f.base, "closed": f.closed})
    return (not bad), (bad or None)


def _iter_family_ns(rng):
    lo, hi = rng["n"]
    out = []
    for n in (9, 15, 21, 25, 27, 33):
        if not (lo <= n <= hi):
            continue
        out.extend({"n": n, "m": m} for m in _valid_loop_ms(n))
    return out


def _first_coprime_pair(n):
    for t in range(1, n):
        u = (1 - t) % n
        if u != 0 and math.gcd(t, u) == 1:
            return t, u
    return None


def _chk_idem_gpd_n(p):
    parts = []
    for n, t, u in p["components"]:
        parts.append(zn_groupoid(n, t, u))
    s = product(*parts)
    v = check_identity(s.magma, "idempotent-law")
    if v.grade == STRONG:
        return True, None
    return False, {"counterexample": v.counterexample}


def _iter_idem_gpd_n(rng):
    lo, hi = rng["n"]
    ns = list(range(max(4, lo), hi + 1))
    out = []
    for k in (2, 3):
        for combo in itertools.combinations(ns, k):
            comps = []
            for n in combo:
                pair = _first_coprime_pair(n)
                if pair is None:
                    break
                comps.append((n, pair[0], pair[1]))
            else:
                out.append({"components": tuple(comps)})
    return out


def _chk_prime_half(p):
    comps = [
        zn_groupoid(q, (q + 1) // 2, (q + 1) // 2) for q in p["primes"]
    ]
    s = product(*comps)
    v = check_identity(s.magma, "idempotent-law")
    if v.grade != STRONG:
        return False, {"idempotent": False}
    w = smarandache_witness(s)
    if w is not None and w.grade == "smarandache":
        return True, None
    return False, {"witness": None}


def _iter_prime_half(rng):
    lo, hi = rng["p"]
    primes = [q for q in _primes_in(lo, hi) if q > 2]
    out = [{"primes": (a, b)} for a, b in itertools.combinations(primes, 2)]
    if len(primes) >= 3:
        out.append({"primes": tuple(primes[:3])})
    return out


def _chk_no_cauchy(p):
    comps = [zn_semigroup(q, "mul") for q in p["primes"]]
    s = product(*comps)
    rep = cauchy_audit(s)
    if not rep["book"]:
        return True, None
    return False, {"book_elements": [r["element"] for r in rep["book"][:5]]}


def _iter_no_cauchy(rng):
    lo, hi = rng["p"]
    primes = _primes_in(lo, hi)
    out = [{"primes": pair} for pair in itertools.combinations(primes, 2)]
    out.extend({"primes": t} for t in itertools.combinations(primes, 3))
    return out


def _chk_lagrange_fail(_p):
    amb = product(zn_semigroup(16, "mul"), units_group(7))
    seed = [(a, b) for a in (0, 1, 4, 8, 12) for b in (1, 6)]
    sub = closure(amb, seed)
    total = amb.order_of()
    ok = sub.size == 10 and total == 96 and total % sub.size != 0
    if ok:
        return True, None
    return False, {"sub_order": sub.size, "order": total}


def _chk_cauchy_fail(_p):
    s = product(units_group(11), zn_semigroup(9, "mul"))
    rep = cauchy_audit(s)
    total = s.order_of()
    hit = [r for r in rep["book_failures"] if tuple(r["element"]) == (10, 8)]
    if not hit:
        return False, {"note": "(10,8) not reported as a book-mode failure"}
    r = hit[0]
    book_order = math.prod(r["orders"])
    std_order = math.lcm(*r["orders"])
    ok = (
        total == 90
        and tuple(r["orders"]) == (2, 2)
        and book_order == 4
        and total % book_order != 0
        and total % std_order == 0
    )
    return (ok, None) if ok else (False, {"record": r})


def _iter_single(_rng):
    return [{}]


def _chk_bisimple(p):
    t, u = p["t"], p["u"]
    n = t + u
    g = zn_groupoid(n, t, u)
    ideals = [
        frozenset(s.subsets[0])
        for s in enumerate_ideals(g, side="two")
        if s.proper_nontrivial
    ]
    inclusive_simple = not ideals
    zero_free = [s for s in ideals if 0 not in s]
    exclusive_simple = not zero_free
    if exclusive_simple:
        return True, None if inclusive_simple else {
            "convention": "holds only when ideals containing 0 are discounted",
            "zero_ideal": sorted(min(ideals, key=len)),
        }
    return False, {"ideal": sorted(min(zero_free, key=len))}


def _iter_bisimple(rng):
    lo, hi = rng["n"]
    out = []
    for t in _PRIMES:
        for u in _PRIMES:
            n = t + u
            if max(2, lo) <= n <= hi:
                out.append({"t": t, "u": u})
    out.sort(key=lambda d: (d["t"] + d["u"], d["t"]))
    return out


# -- the registry ----------------------------------------------------------------------


def _claims() -> list[TheoremClaim]:
    c = []
    c.append(
        TheoremClaim(
            "T-IDEM",
            "Z_n(t,u) satisfies x*x = x for every x iff t + u = 1 (mod n)",
            "n in [2..N], all (t,u) in Z_n^2",
            ASSERTED_IN_PRINT,
            {"n": (2, 30)},
            {"n": (2, 64)},
            _iter_idem,
            _chk_idem,
        )
    )
    c.append(
        TheoremClaim(
            "T-PTT",
            "Z_n(t,t) satisfies the P-identity (x*y)*x = x*(y*x) for every t",
            "n in [2..N], t in [1..n-1]",
            ASSERTED_IN_PRINT,
            {"n": (2, 30)},
            {"n": (2, 64)},
            _iter_ptt,
            _chk_ptt,
        )
    )
    c.append(
        TheoremClaim(
            "T-ALT",
            "Z_n(t,0) and Z_n(0,t) satisfy P / left-alternative / "
            "right-alternative iff t*t = t (mod n)",
            "n in [2..N], t in [1..n-1], both zero placements",
            ASSERTED_IN_PRINT,
            {"n": (2, 20)},
            {"n": (2, 40)},
            _iter_zero_family,
            _chk_zero_family,
        )
    )
    c.append(
        TheoremClaim(
            "T-STRONG-FAMILY",
            "over the family t + u = 1 (mod n): left/right-alternative, "
            "P, Bol, and Moufang all hold iff t*t = t (mod n) — as printed; "
            "brute force shows P always holds and Bol follows "
            "n | t*t*(t-1) instead",
            "n in [2..N], all t with u = 1 - t (mod n)",
            REFUTED_IN_PRINT,
            {"n": (2, 30)},
            {"n": (2, 40)},
            _iter_strong_family,
            _chk_strong_family,
        )
    )
    c.append(
        TheoremClaim(
            "T-SGPD",
            "Z_n(t,u) with n > 5, t + u = 1 (mod n), t != u, gcd(t,u) = 1 "
            "has a proper subset that is a semigroup under *",
            "n in [6..N], qualifying (t,u)",
            ASSERTED_IN_PRINT,
            {"n": (6, 20)},
            {"n": (6, 40)},
            _iter_sgpd,
            _chk_sgpd,
        )
    )
    c.append(
        TheoremClaim(
            "T-IDEAL-DUAL",
            "P is a right ideal of Z_n(t,u) iff P is a left ideal of "
            "Z_n(u,t)",
            "n in [2..N], all (t,u)",
            ASSERTED_IN_PRINT,
            {"n": (2, 12)},
            {"n": (2, 24)},
            _iter_ideal_dual,
            _chk_ideal_dual,
        )
    )
    c.append(
        TheoremClaim(
            "T-SIMPLE-ADD",
            "the product of (Z_p,+) and (Z_q,+), p != q prime, has no "
            "proper nontrivial componentwise substructure",
            "prime pairs p < q <= P",
            ASSERTED_IN_PRINT,
            {"p": (2, 13)},
            {"p": (2, 31)},
            _iter_prime_pairs,
            _chk_simple_add,
        )
    )
    c.append(
        TheoremClaim(
            "T-IDEAL-SIMPLE",
            "the product of (Z_p,+) and (Z_q,+), p != q prime, has no "
            "proper nontrivial ideal",
            "prime pairs p < q <= P",
            ASSERTED_IN_PRINT,
            {"p": (2, 13)},
            {"p": (2, 31)},
            _iter_prime_pairs,
            _chk_ideal_simple,
        )
    )
    c.append(
        TheoremClaim(
            "T-LOOP-AXIOMS",
            "for odd n > 3 and 1 < m < n with gcd(m,n) = gcd(m-1,n) = 1 the "
            "table i*j = (mj - (m-1)i) (mod n) is a latin square with "
            "identity e and x*x = e; invalid parameters are rejected",
            "odd n in [5..N], every m in [2..n-1] (valid and invalid)",
            ASSERTED_IN_PRINT,
            {"n": (5, 51)},
            {"n": (5, 101)},
            _iter_loops,
            _chk_loop_axioms,
        )
    )
    c.append(
        TheoremClaim(
            "T-LOOP-ORDER2",
            "every non-identity element of a valid (n,m) loop has order 2",
            "odd n in [5..N], valid m",
            ASSERTED_IN_PRINT,
            {"n": (5, 51)},
            {"n": (5, 101)},
            _iter_valid_loops,
            _chk_loop_order2,
        )
    )
    c.append(
        TheoremClaim(
            "T-CAUCHY",
            "in a product of two valid loops, every element with both "
            "components off e has component orders (2,2) with 4 dividing "
            "the product order (book-mode Cauchy)",
            "odd pairs n < q <= N with m = s = 2",
            ASSERTED_IN_PRINT,
            {"n": (5, 13)},
            {"n": (5, 25)},
            _iter_cauchy_biloops,
            _chk_cauchy_biloop,
        )
    )
    c.append(
        TheoremClaim(
            "T-2SYLOW",
            "for prime p, every proper nontrivial group inside the (p,m) "
            "loop has 2-power order dividing p + 1",
            "prime p in [5..P], valid m",
            ASSERTED_IN_PRINT,
            {"p": (5, 13)},
            {"p": (5, 23)},
            _iter_prime_loops,
            _chk_2sylow,
        )
    )
    c.append(
        TheoremClaim(
            "T-COMM-LOOP",
            "the (n,m) loop is commutative iff m = (n+1)/2",
            "odd n in [5..N], valid m",
            ASSERTED_IN_PRINT,
            {"n": (5, 51)},
            {"n": (5, 101)},
            _iter_valid_loops,
            _chk_comm_loop,
        )
    )
    c.append(
        TheoremClaim(
            "T-FN-COUNT",
            "the number of strictly non-commutative (n,m) loops equals "
            "F_n = prod (p_i - 3) p_i^(a_i - 1) over the prime "
            "factorization of n",
            "odd n in [5..N]",
            ASSERTED_IN_PRINT,
            {"n": (5, 25)},
            {"n": (5, 51)},
            _iter_fn,
            _chk_fn_count,
        )
    )
    c.append(
        TheoremClaim(
            "T-NORMALIZER",
            "for H = H_i(t) in a valid (n,m) loop: first normalizer equals "
            "second normalizer iff gcd(m*m - m + 1, t) = gcd(2m - 1, t)",
            "composite odd n in [5..N] (defaults 21, 25, 33), valid m, "
            "t | n, base i",
            ASSERTED_IN_PRINT,
            {"n": (21, 33)},
            {"n": (5, 51)},
            _iter_normalizer,
            _chk_normalizer,
        )
    )
    c.append(
        TheoremClaim(
            "T-MOUF-CENTER",
            "the Moufang center of a valid prime-(p,m) loop is {e} or the "
            "whole loop",
            "prime p in [5..P], valid m",
            ASSERTED_IN_PRINT,
            {"p": (5, 13)},
            {"p": (5, 23)},
            _iter_prime_loops,
            _chk_mouf_center,
        )
    )
    c.append(
        TheoremClaim(
            "T-CENTER-E",
            "the center (commutant intersect nucleus) of a valid "
            "prime-(p,m) loop is {e}",
            "prime p in [5..P], valid m",
            ASSERTED_IN_PRINT,
            {"p": (5, 13)},
            {"p": (5, 23)},
            _iter_prime_loops,
            _chk_center_e,
        )
    )
    c.append(
        TheoremClaim(
            "T-SUBLOOP-FAMILY",
            "for every divisor 1 < t < n and base 1 <= i <= t, "
            "H_i(t) = {e, i, i+t, ...} is a closed subloop of size n/t + 1",
            "n in {9, 15, 21, 25, 27, 33} within [lo..hi], valid m",
            ASSERTED_IN_PRINT,
            {"n": (9, 33)},
            {"n": (9, 51)},
            _iter_family_ns,
            _chk_subloop_family,
        )
    )
    c.append(
        TheoremClaim(
            "T-IDEM-GPD-N",
            "a componentwise product of groupoids Z_{m_i}(t_i,u_i) with "
            "gcd(t_i,u_i) = 1 and t_i + u_i = 1 (mod m_i) is idempotent",
            "2- and 3-component products, m_i in [4..N]",
            ASSERTED_IN_PRINT,
            {"n": (4, 8)},
            {"n": (4, 16)},
            _iter_idem_gpd_n,
            _chk_idem_gpd_n,
        )
    )
    c.append(
        TheoremClaim(
            "T-PRIME-HALF",
            "products of Z_p((p+1)/2, (p+1)/2) over distinct primes are "
            "idempotent and carry a proper nontrivial closed subset "
            "(witnessing the Smarandache grade)",
            "prime pairs and one triple from [lo..hi]",
            ASSERTED_IN_PRINT,
            {"p": (3, 13)},
            {"p": (3, 23)},
            _iter_prime_half,
            _chk_prime_half,
        )
    )
    c.append(
        TheoremClaim(
            "T-NO-CAUCHY",
            "products of (Z_p,x) over distinct primes have no element with "
            "all component orders r_i > 1 and prod r_i dividing the "
            "product order (book-mode Cauchy list empty)",
            "prime pairs and triples from [lo..hi] (defaults 11, 13, 19)",
            ASSERTED_IN_PRINT,
            {"p": (11, 19)},
            {"p": (3, 23)},
            _iter_no_cauchy,
            _chk_no_cauchy,
        )
    )
    c.append(
        TheoremClaim(
            "T-LAGRANGE-FAIL",
            "the mixed product (Z_16,x) x units(7) of order 96 contains a "
            "closed substructure of order 10, and 10 does not divide 96",
            "single fixed instance",
            ASSERTED_IN_PRINT,
            {},
            {},
            _iter_single,
            _chk_lagrange_fail,
        )
    )
    c.append(
        TheoremClaim(
            "T-CAUCHY-FAIL",
            "in units(11) x (Z_9,x) of order 90, the element (10,8) has "
            "component orders (2,2); the book-mode order 4 does not divide "
            "90 while the standard order 2 does",
            "single fixed instance",
            ASSERTED_IN_PRINT,
            {},
            {},
            _iter_single,
            _chk_cauchy_fail,
        )
    )
    c.append(
        TheoremClaim(
            "T-BISIMPLE-GPD",
            "Z_{t+u}(t,u) with t, u prime is simple — confirmed under the "
            "convention that ideals containing 0 are discounted (every "
            "ideal here contains 0 since (t+u)x = 0); refuted by {0,2} at "
            "(2,2) when such ideals count",
            "prime pairs (t,u) with t + u in [lo..hi]",
            ASSERTED_IN_PRINT,
            {"n": (4, 30)},
            {"n": (4, 62)},
            _iter_bisimple,
            _chk_bisimple,
        )
    )
    return c


_REGISTRY: list[TheoremClaim] | None = None


def registry() -> list[TheoremClaim]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _claims()
    return _REGISTRY


def lookup_claim(claim_id: str) -> TheoremClaim:
    for c in registry():
        if c.id == claim_id:
            return c
    raise UnknownClaim(f"no claim with id {claim_id!r}")


def _resolve_ranges(claim: TheoremClaim, ranges: dict | None) -> dict:
    rng = dict(claim.default_range)
    for key, bounds in (ranges or {}).items():
        if key not in claim.max_range:
            raise RangeTooLarge(
                f"claim {claim.id} has no sweep parameter {key!r}; "
                f"valid: {sorted(claim.max_range)}"
            )
        lo, hi = bounds
        cap_lo, cap_hi = claim.max_range[key]
        if lo < cap_lo or hi > cap_hi:
            raise RangeTooLarge(
                f"claim {claim.id} caps {key} to [{cap_lo}..{cap_hi}], "
                f"got [{lo}..{hi}]"
            )
        rng[key] = (lo, hi)
    return rng


def audit(claim_id: str, ranges: dict | None = None) -> AuditReport:
    """Sweep a claim's parameter range; report confirmations/refutations."""
    claim = lookup_claim(claim_id)
    rng = _resolve_ranges(claim, ranges)
    start = time.perf_counter()
    checked = 0
    confirmed = 0
    refuted = []
    for params in claim.instances(rng):
        ok, cx = claim.checker(params)
        checked += 1
        if ok:
            confirmed += 1
        else:
            refuted.append({"params": params, "counterexample": cx})
    elapsed = time.perf_counter() - start
    return AuditReport(
        claim=claim.id,
        checked=checked,
        confirmed=confirmed,
        refuted=refuted,
        runtime_note=f"{elapsed:.2f}s over {checked} instances",
        errata_refs=claim.errata_refs,
    )


def replay_refutation(claim_id: str, params: dict) -> bool:
    """True iff the checker still refutes the given parameters."""
    ok, _ = lookup_claim(claim_id).checker(params)
    return not ok


# -- the strict non-commutativity count --------------------------------------------------


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def strict_noncommutative_count(n: int) -> dict:
    """Brute count of strictly non-commutative (n,m) loops vs the closed
    formula F_n = prod (p_i - 3) p_i^(a_i - 1).

    Strictly non-commutative: x*y != y*x for every pair of distinct
    non-identity elements.
    """
    if n <= 3 or n % 2 == 0:
        raise BadN(f"n must be odd and exceed 3, got {n}")
    formula = 1
    for prime, alpha in _factorize(n):
        formula *= (prime - 3) * prime ** (alpha - 1)
    ms = []
    for m in _valid_loop_ms(n):
        T = new_loop(n, m).magma.table()
        core = T[1:, 1:]
        if not np.any(np.triu(core == core.T, k=1)):
            ms.append(m)
    return {"brute": len(ms), "formula": formula, "ms": ms}


# -- homomorphism checking ----------------------------------------------------------------


@dataclass(frozen=True)
class HomResult:
    ok: bool
    component: int | None = None
    pair: tuple | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_homomorphism(src: Structure, dst: Structure, assignment, maps) -> HomResult:
    """Componentwise homomorphism check.

    `assignment` sends each source component index to a destination
    component index (several sources may share a destination; destination
    arity may differ).  `maps` gives, per source component, a dict or
    callable sending source elements to destination elements.  Returns the
    lexicographically first failing pair per the earliest failing component.
    """
    src_mags = src.component_magmas()
    dst_mags = dst.component_magmas()
    if isinstance(assignment, dict):
        assign = dict(assignment)
    else:
        assign = {i: j for i, j in enumerate(assignment)}
    for i in range(len(src_mags)):
        if i not in assign:
            raise ArityMismatch(
                f"source component {i} of {src.name} has no destination "
                f"assigned"
            )
        if not 0 <= assign[i] < len(dst_mags):
            raise ArityMismatch(
                f"assignment sends component {i} to {assign[i]}, but "
                f"{dst.name} has {len(dst_mags)} component(s)"
            )
    for i in sorted(assign):
        s_mag = src_mags[i]
        d_mag = dst_mags[assign[i]]
        eta = maps[i]
        fn = eta if callable(eta) else eta.__getitem__
        s_elems = s_mag.elements()
        images = []
        for a in s_elems:
            try:
                b = fn(a)
            except (KeyError, IndexError):
                raise CarrierMismatch(
                    f"element map for component {i} is not total: no image "
                    f"for {a!r}"
                ) from None
            if not d_mag.carrier.contains(b):
                raise CarrierMismatch(
                    f"image {b!r} of {a!r} is outside the destination "
                    f"carrier (component {i} -> {assign[i]})"
                )
            images.append(d_mag.index(b))
        F = np.array(images, dtype=np.int64)
        Ts = s_mag.table()
        Td = d_mag.table()
        lhs = F[Ts]
        rhs = Td[F[:, None], F[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a_i, b_i = (int(x) for x in bad[0])
            return HomResult(
                False,
                component=i,
                pair=(s_elems[a_i], s_elems[b_i]),
                note=f"eta(a*b) != eta(a)*eta(b) in component {i}",
            )
    return HomResult(True)
