"""Identity templates, the named catalog, Smarandache grading, and the
closed-form predictor for Z_n(t,u) groupoids.

An identity is a pair of terms over variables {x, y, z}; checking is
exhaustive assignment, vectorized through the Cayley table. Grades:

* Strong            — holds at every assignment of the whole magma,
* SmarandacheVia(H) — fails somewhere, but holds on a closed proper subset
                      H of size >= 2 (the first such subset found by closing
                      singletons, then pairs, ascending by element index),
* Quasi-Smarandache — products only: witnesses exist in some but not all
                      components,
* Fails             — no witness at all; carries the first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownClaim
from .magma import Magma, close_indices, sub_table
from .structures import Structure

STRONG = "strong"
SMARANDACHE = "smarandache"
QUASI_SMARANDACHE = "quasi-smarandache"
FAILS = "fails"

VARS = ("x", "y", "z")


@dataclass(frozen=True)
class Term:
    """Var leaf (name set, children None) or Op node (children set)."""

    name: str | None = None
    left: "Term | None" = None
    right: "Term | None" = None

    @property
    def is_var(self) -> bool:
        return self.name is not None

    def variables(self) -> set[str]:
        if self.is_var:
            return {self.name}
        return self.left.variables() | self.right.variables()

    def __str__(self) -> str:
        if self.is_var:
            return self.name
        return f"({self.left}·{self.right})"


def V(name: str) -> Term:
    return Term(name=name)


def O(left: Term, right: Term) -> Term:
    return Term(left=left, right=right)


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: Term
    rhs: Term

    @property
    def vars_used(self) -> tuple[str, ...]:
        used = self.lhs.variables() | self.rhs.variables()
        return tuple(v for v in VARS if v in used)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class IdentityVerdict:
    grade: str
    checked: int
    witness: object = None          # subset (or per-component tuple of subsets)
    counterexample: dict | None = None
    active_mask: tuple[bool, ...] | None = None

    @property
    def is_componentwise_witness(self) -> bool:
        return isinstance(self.witness, tuple) and all(
            isinstance(w, frozenset) for w in self.witness
        )


x, y, z = V("x"), V("y"), V("z")

_CATALOG: list[Identity] = [
    Identity("commutative", O(x, y), O(y, x)),
    Identity("idempotent-law", O(x, x), x),
    Identity("associative", O(O(x, y), z), O(x, O(y, z))),
    Identity("left-alternative", O(O(x, x), y), O(x, O(x, y))),
    Identity("right-alternative", O(O(y, x), x), O(y, O(x, x))),
    Identity("P-identity", O(O(x, y), x), O(x, O(y, x))),
    Identity("bol", O(O(O(x, y), z), x), O(x, O(O(y, z), x))),
    Identity("moufang", O(O(x, y), O(z, x)), O(O(x, O(y, z)), x)),
    Identity("bol-left", O(x, O(y, O(x, z))), O(O(x, O(y, x)), z)),
    Identity("bol-right", O(O(O(z, x), y), x), O(z, O(O(x, y), x))),
]

_ALIASES = {
    "is-semigroup": "associative",
    "bol-as-printed": "bol",
    "p-identity": "P-identity",
}


def catalog() -> list[Identity]:
    return list(_CATALOG)


def lookup(name: str) -> Identity:
    key = _ALIASES.get(name, _ALIASES.get(name.lower(), name))
    for ident in _CATALOG:
        if ident.name == key:
            return ident
    raise UnknownClaim(f"unknown identity {name!r}")


# -- evaluation --------------------------------------------------------------


def _eval_term(term: Term, T: np.ndarray, grids: dict[str, np.ndarray]):
    if term.is_var:
        return grids[term.name]
    a = _eval_term(term.left, T, grids)
    b = _eval_term(term.right, T, grids)
    return T[a, b]


def _check_on_table(T: np.ndarray, ident: Identity):
    """(holds, first mismatching var-index assignment or None, checked)."""
    n = T.shape[0]
    used = ident.vars_used
    k = len(used)
    grids = {}
    for pos, v in enumerate(used):
        shape = [1] * k
        shape[pos] = n
        grids[v] = np.arange(n).reshape(shape)
    lhs = np.broadcast_to(_eval_term(ident.lhs, T, grids), (n,) * k)
    rhs = np.broadcast_to(_eval_term(ident.rhs, T, grids), (n,) * k)
    mism = lhs != rhs
    checked = n**k
    if not mism.any():
        return True, None, checked
    first = np.argwhere(mism)[0]
    return False, {v: int(first[pos]) for pos, v in enumerate(used)}, checked


def check_identity(magma: Magma, ident: Identity | str) -> IdentityVerdict:
    """Exhaustive check; grade restricted to Strong/Fails."""
    if isinstance(ident, str):
        ident = lookup(ident)
    comps = magma.component_magmas()
    if comps is not None and magma.carrier.size() > 4096:
        # Componentwise fallback: an equation holds on a product iff it
        # holds in every factor. The counterexample is assembled per
        # component (failing components contribute their own first
        # counterexample, passing ones their first element).
        verdicts = [check_identity(m, ident) for m in comps]
        checked = sum(v.checked for v in verdicts)
        if all(v.grade == STRONG for v in verdicts):
            return IdentityVerdict(STRONG, checked)
        cx = {}
        for var in ident.vars_used:
            parts = []
            for m, v in zip(comps, verdicts):
                if v.grade == FAILS:
                    parts.append(m.elements()[v.counterexample[var]])
                else:
                    parts.append(m.elements()[0])
            cx[var] = tuple(parts)
        return IdentityVerdict(FAILS, checked, counterexample=cx)
    T = magma.table()
    holds, bad, checked = _check_on_table(T, ident)
    if holds:
        return IdentityVerdict(STRONG, checked)
    elems = magma.elements()
    cx = {v: elems[i] for v, i in bad.items()}
    return IdentityVerdict(FAILS, checked, counterexample=cx)


# -- subset machinery ---------------------------------------------------------


def _find_witness(magma: Magma, ident: Identity) -> frozenset[int] | None:
    """First closed proper subset of size >= 2 satisfying the identity,
    closing singletons then pairs in ascending element order."""
    T = magma.table()
    n = T.shape[0]
    seen: set[frozenset[int]] = set()

    def try_seed(seed: set[int]) -> frozenset[int] | None:
        sub = close_indices(T, seed)
        if sub in seen:
            return None
        seen.add(sub)
        if len(sub) < 2 or len(sub) >= n:
            return None
        ordered = sorted(sub)
        holds, _, _ = _check_on_table(sub_table(T, ordered), ident)
        return sub if holds else None

    for i in range(n):
        hit = try_seed({i})
        if hit is not None:
            return hit
    for i in range(n):
        for j in range(i + 1, n):
            hit = try_seed({i, j})
            if hit is not None:
                return hit
    return None


def s_check_identity(structure: Structure, ident: Identity | str) -> IdentityVerdict:
    if isinstance(ident, str):
        ident = lookup(ident)
    comps = structure.component_magmas()
    if len(comps) == 1:
        return _s_check_single(comps[0], ident)

    results = [_s_check_single(m, ident) for m in comps]
    checked = sum(r.checked for r in results)
    if all(r.grade == STRONG for r in results):
        return IdentityVerdict(STRONG, checked)

    # Component witnesses: a Strong component may stand on itself when it
    # has no proper closed subset of size >= 2.
    witnesses: list[frozenset | None] = []
    for m, r in zip(comps, results):
        if r.grade == SMARANDACHE:
            witnesses.append(r.witness)
        elif r.grade == STRONG:
            own = _find_witness(m, ident)
            witnesses.append(own if own is not None else frozenset(m.elements()))
        else:
            witnesses.append(None)
    mask = tuple(w is not None for w in witnesses)
    if all(mask):
        return IdentityVerdict(
            SMARANDACHE, checked, witness=tuple(witnesses)
        )
    if any(mask):
        return IdentityVerdict(
            QUASI_SMARANDACHE,
            checked,
            witness=tuple(w if w is not None else frozenset() for w in witnesses),
            active_mask=mask,
        )
    cx = {}
    for var in ident.vars_used:
        parts = []
        for m, r in zip(comps, results):
            if r.grade == FAILS:
                parts.append(r.counterexample[var])
            else:
                parts.append(m.elements()[0])
        cx[var] = tuple(parts)
    return IdentityVerdict(FAILS, checked, counterexample=cx)


def _s_check_single(magma: Magma, ident: Identity) -> IdentityVerdict:
    base = check_identity(magma, ident)
    if base.grade == STRONG:
        return base
    witness = _find_witness(magma, ident)
    if witness is not None:
        elems = magma.elements()
        return IdentityVerdict(
            SMARANDACHE,
            base.checked,
            witness=frozenset(elems[i] for i in witness),
        )
    return base


# -- Z_n(t,u) closed forms -----------------------------------------------------


def predict_zn(id_name: str, n: int, t: int, u: int) -> bool | None:
    """Closed-form verdicts for the documented Z_n(t,u) families; None when
    the family is undocumented and brute force must decide."""
    name = lookup(id_name).name
    t %= n
    u %= n
    if name == "idempotent-law":
        return (t + u - 1) % n == 0
    if (t + u) % n == 1 % n:
        if name in ("left-alternative", "right-alternative", "moufang"):
            return (t * t - t) % n == 0
        if name == "P-identity":
            return True
        if name == "bol":
            return (t * t * (t - 1)) % n == 0
        return None
    if u == 0 or t == 0:
        w = t if u == 0 else u
        if name in ("P-identity", "left-alternative", "right-alternative"):
            return (w * w - w) % n == 0
        return None
    return None
