"""Closure, substructure/ideal enumeration, Smarandache witnesses,
simplicity, loop machinery (subloop families, normalizers, centers,
commutator/associator subloops, isotopes, normality), and Lagrange/Sylow
audits.

Search budget: substructure enumeration explores closures of every seed of
size <= 2, plus a full power-set sweep when the carrier has <= 12 elements.
Seeds of size <= 2 are existence-complete for proper nontrivial
substructures: any member of such a substructure K seeds a closure inside K,
and a two-element seed inside K yields a closed subset of size >= 2 — so a
proper nontrivial substructure exists iff the budgeted search finds one.
Ideal enumeration lists principal reaches; every ideal is a union of
principal ones, so a proper nontrivial ideal exists iff a principal one
does.

Product structures follow the componentwise shape throughout: a product
substructure is a cross of per-component closed subsets, and counts as
proper nontrivial only when every component subset does.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .carriers import LoopSet
from .errors import NotLatin
from .magma import (
    Magma,
    StructureClass,
    classify_index_table,
    close_indices,
    sub_table,
)
from .rules import FromTable
from .structures import Structure

GROUP = "group"
SEMIGROUP = "semigroup"

_CLASS_PREDICATES = {
    "group": lambda c: c.associative and c.has_identity and c.all_invertible,
    "monoid": lambda c: c.associative and c.has_identity,
    "semigroup": lambda c: c.associative,
    "loop": lambda c: c.latin_square and c.has_identity,
    "quasigroup": lambda c: c.latin_square,
    "groupoid": lambda c: c.closed,
}


def class_predicate(name: str):
    try:
        return _CLASS_PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown class filter {name!r}") from None


# -- the substructure record ----------------------------------------------------


@dataclass
class Substructure:
    parent: Structure
    subsets: tuple[frozenset, ...]  # one per component, raw values
    sclass: StructureClass | None = None
    proper_nontrivial: bool = False
    # Closures of arbitrary seeds inside a product need not be a cross of
    # per-component sets; when so, this holds the true member set and
    # `subsets` holds the per-component projections.
    members_set: frozenset | None = None

    @property
    def size(self) -> int:
        if self.members_set is not None:
            return len(self.members_set)
        return math.prod(len(s) for s in self.subsets)

    def members(self) -> frozenset:
        """Element values of the parent magma (tuples for products)."""
        if self.members_set is not None:
            return self.members_set
        if len(self.subsets) == 1:
            return self.subsets[0]
        return frozenset(itertools.product(*(sorted(s) for s in self.subsets)))

    def sort_key(self):
        mags = self.parent.component_magmas()
        return (
            self.size,
            tuple(
                tuple(sorted(m.index(v) for v in s))
                for m, s in zip(mags, self.subsets)
            ),
        )

    def labels(self) -> list[list[str]]:
        return _component_labels(self.parent, self.subsets)


def _component_labels(structure: Structure, subsets) -> list[list[str]]:
    out = []
    for comp, mag, s in zip(
        structure.components, structure.component_magmas(), subsets
    ):
        ordered = sorted(s, key=mag.index)
        out.append([comp.carrier.label(v) for v in ordered])
    return out


def substructure_to_dict(sub: Substructure) -> dict:
    if sub.members_set is not None:
        members = [
            sub.parent.label_element(v) for v in sorted(sub.members_set)
        ]
    else:
        members = _component_labels(sub.parent, sub.subsets)
    return {
        "parent": sub.parent.name,
        "members": members,
        "size": sub.size,
        "class": sub.sclass.to_dict() if sub.sclass is not None else None,
        "proper_nontrivial": sub.proper_nontrivial,
    }


def _is_proper_nontrivial_idx(
    subset: frozenset[int], n: int, e: int | None, z: int | None
) -> bool:
    if not subset or len(subset) >= n:
        return False
    if len(subset) == 1:
        only = next(iter(subset))
        if only == e or only == z:
            return False
    return True


class _ComponentScan:
    """Cached per-component table, identity/absorber, and induced classes."""

    def __init__(self, magma: Magma):
        self.magma = magma
        self.T = magma.table()
        self.n = self.T.shape[0]
        self.e = magma.identity_index()
        self.z = magma.absorbing_index()
        self._class_cache: dict[frozenset, StructureClass] = {}

    def induced_class(self, subset: frozenset[int]) -> StructureClass:
        if subset not in self._class_cache:
            self._class_cache[subset] = classify_index_table(
                sub_table(self.T, sorted(subset))
            )
        return self._class_cache[subset]

    def proper_nontrivial(self, subset: frozenset[int]) -> bool:
        return _is_proper_nontrivial_idx(subset, self.n, self.e, self.z)

    def values(self, subset: frozenset[int]) -> frozenset:
        elems = self.magma.elements()
        return frozenset(elems[i] for i in subset)


def _closed_subsets(scan: _ComponentScan, include_whole: bool) -> list[frozenset[int]]:
    """Distinct closures of seeds of size <= 2; full power set when n <= 12."""
    T, n = scan.T, scan.n
    found: set[frozenset[int]] = set()
    for i in range(n):
        found.add(close_indices(T, {i}))
    for i in range(n):
        for j in range(i + 1, n):
            found.add(close_indices(T, {i, j}))
    if n <= 12:
        universe = list(range(n))
        for r in range(1, n + 1):
            for combo in itertools.combinations(universe, r):
                s = frozenset(combo)
                arr = np.array(combo, dtype=np.int64)
                if frozenset(T[np.ix_(arr, arr)].ravel().tolist()) <= s:
                    found.add(s)
    if not include_whole:
        found = {s for s in found if len(s) < n}
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


# -- public operations -----------------------------------------------------------


def closure(structure: Structure, seed) -> Substructure:
    """Least superset of the seed closed under the operation."""
    mag = structure.magma
    comps = structure.component_magmas()
    seed = list(seed)
    if not seed:
        raise ValueError("closure needs a nonempty seed")
    if len(comps) == 1:
        scan = _ComponentScan(comps[0])
        idx = frozenset(comps[0].index(v) for v in seed)
        closed = close_indices(scan.T, idx)
        return Substructure(
            structure,
            (scan.values(closed),),
            scan.induced_class(closed),
            scan.proper_nontrivial(closed),
        )
    # Value-based closure for products (the closed set need not be a cross).
    cur = set(seed)
    frontier = set(seed)
    rule = mag.rule
    while frontier:
        new = set()
        for a in cur:
            for b in frontier:
                new.add(rule.apply(a, b))
                new.add(rule.apply(b, a))
        for a in frontier:
            for b in frontier:
                new.add(rule.apply(a, b))
        new -= cur
        cur |= new
        frontier = new
    members = sorted(cur)
    pos = {v: i for i, v in enumerate(members)}
    T = np.array(
        [[pos[rule.apply(a, b)] for b in members] for a in members],
        dtype=np.int64,
    )
    projections = tuple(
        frozenset(v[k] for v in cur) for k in range(len(comps))
    )
    sub = Substructure(
        structure,
        projections,
        classify_index_table(T),
        members_set=frozenset(cur),
    )
    # Proper nontrivial under the single-set convention.
    e = mag.identity_value()
    z = mag.absorbing_value()
    total = structure.order_of()
    sub.proper_nontrivial = (
        0 < len(cur) < total
        and not (len(cur) == 1 and (next(iter(cur)) == e or next(iter(cur)) == z))
    )
    return sub


def enumerate_substructures(
    structure: Structure,
    class_filter: str | None = None,
    max_size: int | None = None,
    include_whole: bool = False,
) -> list[Substructure]:
    comps = structure.component_magmas()
    pred = class_predicate(class_filter) if class_filter is not None else None
    out: list[Substructure] = []
    if len(comps) == 1:
        scan = _ComponentScan(comps[0])
        for subset in _closed_subsets(scan, include_whole):
            if max_size is not None and len(subset) > max_size:
                continue
            cls = scan.induced_class(subset)
            if pred is not None and not pred(cls):
                continue
            out.append(
                Substructure(
                    structure,
                    (scan.values(subset),),
                    cls,
                    scan.proper_nontrivial(subset),
                )
            )
    else:
        scans = [_ComponentScan(m) for m in comps]
        per = [
            _closed_subsets(scan, include_whole=True) for scan in scans
        ]
        for combo in itertools.product(*per):
            size = math.prod(len(s) for s in combo)
            if max_size is not None and size > max_size:
                continue
            whole = all(len(s) == scan.n for s, scan in zip(combo, scans))
            if whole and not include_whole:
                continue
            classes = [scan.induced_class(s) for scan, s in zip(scans, combo)]
            cls = _and_classes(classes)
            if pred is not None and not pred(cls):
                continue
            out.append(
                Substructure(
                    structure,
                    tuple(
                        scan.values(s) for scan, s in zip(scans, combo)
                    ),
                    cls,
                    all(
                        scan.proper_nontrivial(s)
                        for scan, s in zip(scans, combo)
                    ),
                )
            )
    out.sort(key=Substructure.sort_key)
    return out


def _and_classes(classes: list[StructureClass]) -> StructureClass:
    return StructureClass.from_flags(
        closed=all(c.closed for c in classes),
        associative=all(c.associative for c in classes),
        has_identity=all(c.has_identity for c in classes),
        all_invertible=all(c.all_invertible for c in classes),
        latin_square=all(c.latin_square for c in classes),
        commutative=all(c.commutative for c in classes),
    )


def _principal_reach(T: np.ndarray, p: int, side: str) -> frozenset[int]:
    cur = {p}
    frontier = {p}
    while frontier:
        arr = np.array(sorted(frontier), dtype=np.int64)
        new = set()
        if side in ("left", "two"):
            new |= set(T[:, arr].ravel().tolist())
        if side in ("right", "two"):
            new |= set(T[arr, :].ravel().tolist())
        new -= cur
        cur |= new
        frontier = new
    return frozenset(cur)


def enumerate_ideals(structure: Structure, side: str = "two") -> list[Substructure]:
    """Principal one/two-sided ideal reaches, per component for products."""
    if side not in ("left", "right", "two"):
        raise ValueError(f"side must be left, right, or two, got {side!r}")
    comps = structure.component_magmas()
    scans = [_ComponentScan(m) for m in comps]
    per: list[list[frozenset[int]]] = []
    for scan in scans:
        reaches = {
            _principal_reach(scan.T, p, side) for p in range(scan.n)
        }
        per.append(sorted(reaches, key=lambda s: (len(s), tuple(sorted(s)))))
    out: list[Substructure] = []
    if len(comps) == 1:
        scan = scans[0]
        for subset in per[0]:
            out.append(
                Substructure(
                    structure,
                    (scan.values(subset),),
                    scan.induced_class(subset),
                    scan.proper_nontrivial(subset),
                )
            )
    else:
        for combo in itertools.product(*per):
            out.append(
                Substructure(
                    structure,
                    tuple(scan.values(s) for scan, s in zip(scans, combo)),
                    None,
                    all(
                        scan.proper_nontrivial(s)
                        for scan, s in zip(scans, combo)
                    ),
                )
            )
    out.sort(key=Substructure.sort_key)
    return out


# -- Smarandache witnesses ---------------------------------------------------------


@dataclass
class SmarandacheWitness:
    grade: str  # "smarandache" | "quasi-smarandache"
    components: tuple[frozenset | None, ...]
    witness_classes: tuple[str, ...]

    @property
    def active_mask(self) -> tuple[bool, ...]:
        return tuple(c is not None for c in self.components)


def _witness_class_for(cls: StructureClass) -> str:
    if cls.associative or (cls.latin_square and cls.has_identity):
        return GROUP
    return SEMIGROUP


def _witness_in_component(scan: _ComponentScan, want: str) -> frozenset[int] | None:
    """Descending singleton seeds, then descending pairs; first proper
    nontrivial closure whose induced class satisfies the witness class."""
    pred = class_predicate(want)
    T, n = scan.T, scan.n
    seen: set[frozenset[int]] = set()

    def check(seed) -> frozenset[int] | None:
        sub = close_indices(T, seed)
        if sub in seen:
            return None
        seen.add(sub)
        if not scan.proper_nontrivial(sub):
            return None
        return sub if pred(scan.induced_class(sub)) else None

    for i in range(n - 1, -1, -1):
        hit = check({i})
        if hit is not None:
            return hit
    for i in range(n - 1, -1, -1):
        for j in range(i - 1, -1, -1):
            hit = check({i, j})
            if hit is not None:
                return hit
    return None


def smarandache_witness(structure: Structure) -> SmarandacheWitness | None:
    comps = structure.component_magmas()
    scans = [_ComponentScan(m) for m in comps]
    wants = [_witness_class_for(m.classify()) for m in comps]
    hits = [
        _witness_in_component(scan, want) for scan, want in zip(scans, wants)
    ]
    if all(h is None for h in hits):
        return None
    values = tuple(
        scan.values(h) if h is not None else None
        for scan, h in zip(scans, hits)
    )
    grade = "smarandache" if all(h is not None for h in hits) else "quasi-smarandache"
    return SmarandacheWitness(grade, values, tuple(wants))


def is_simple(structure: Structure, mode: str = "substructure") -> bool:
    """True iff no proper nontrivial substructure (or ideal) exists."""
    if mode not in ("substructure", "ideal"):
        raise ValueError(f"mode must be substructure or ideal, got {mode!r}")
    comps = structure.component_magmas()
    scans = [_ComponentScan(m) for m in comps]
    # A product substructure/ideal is proper nontrivial only when every
    # component part is, so one component without any kills existence.
    for scan in scans:
        if mode == "ideal":
            has = any(
                scan.proper_nontrivial(_principal_reach(scan.T, p, "two"))
                for p in range(scan.n)
            )
        else:
            has = _has_proper_nontrivial_subset(scan)
        if not has:
            return True
    return False


def _has_proper_nontrivial_subset(scan: _ComponentScan) -> bool:
    T, n = scan.T, scan.n
    for i in range(n):
        if scan.proper_nontrivial(close_indices(T, {i})):
            return True
    for i in range(n):
        for j in range(i + 1, n):
            if scan.proper_nontrivial(close_indices(T, {i, j})):
                return True
    return False


# -- loop machinery -----------------------------------------------------------------


def _loop_magma(loop: Structure) -> Magma:
    if len(loop.components) != 1 or not isinstance(
        loop.components[0].carrier, LoopSet
    ):
        raise ValueError(f"{loop.name} is not a single-component loop structure")
    return loop.magma


@dataclass(frozen=True)
class LoopSubloopFamily:
    t: int
    base: int
    elements: frozenset
    closed: bool
    sclass: StructureClass | None

    @property
    def is_subloop(self) -> bool:
        return bool(
            self.closed
            and self.sclass is not None
            and self.sclass.latin_square
            and self.sclass.has_identity
        )


def loop_subloop_family(loop: Structure) -> list[LoopSubloopFamily]:
    """H_i(t) = {e, i, i+t, ..., i+(n/t-1)t} for every divisor 1 < t < n
    and base 1 <= i <= t, each verified closed and graded."""
    mag = _loop_magma(loop)
    n = loop.components[0].carrier.n
    T = mag.table()
    out = []
    for t in range(2, n):
        if n % t != 0:
            continue
        for i in range(1, t + 1):
            members = frozenset({0} | {i + k * t for k in range(n // t)})
            idx = frozenset(members)  # loop values are their own indices
            arr = np.array(sorted(idx), dtype=np.int64)
            closed = bool(
                frozenset(T[np.ix_(arr, arr)].ravel().tolist()) <= idx
            )
            cls = (
                classify_index_table(sub_table(T, sorted(idx)))
                if closed
                else None
            )
            out.append(LoopSubloopFamily(t, i, members, closed, cls))
    return out


def _setwise(T: np.ndarray, rows, cols) -> frozenset[int]:
    return frozenset(T[np.ix_(np.atleast_1d(rows), np.atleast_1d(cols))].ravel().tolist())


def normalizers(loop: Structure, H) -> dict:
    """First normalizer {j : jH = Hj} and second {j : (jH)j = H}, setwise."""
    mag = _loop_magma(loop)
    T = mag.table()
    n = T.shape[0]
    Hidx = np.array(sorted(mag.index(v) for v in H), dtype=np.int64)
    Hset = frozenset(Hidx.tolist())
    first, second = [], []
    for j in range(n):
        jH = _setwise(T, j, Hidx)
        Hj = _setwise(T, Hidx, j)
        if jH == Hj:
            first.append(j)
        jH_arr = np.array(sorted(jH), dtype=np.int64)
        if _setwise(T, jH_arr, j) == Hset:
            second.append(j)
    elems = mag.elements()
    f = frozenset(elems[i] for i in first)
    s = frozenset(elems[i] for i in second)
    return {"first": f, "second": s, "equal": f == s}


def loop_centers(loop: Structure) -> dict:
    mag = _loop_magma(loop)
    T = mag.table()
    n = T.shape[0]
    commutant = [a for a in range(n) if np.array_equal(T[a, :], T[:, a])]
    left_n = [a for a in range(n) if np.array_equal(T[T[a, :], :], T[a, T])]
    middle_n = [
        a for a in range(n) if np.array_equal(T[T[:, a], :], T[:, T[a, :]])
    ]
    right_n = [a for a in range(n) if np.array_equal(T[T, a], T[:, T[:, a]])]
    nucleus = sorted(set(left_n) & set(middle_n) & set(right_n))
    center = sorted(set(commutant) & set(nucleus))
    moufang = [
        a
        for a in range(n)
        if np.array_equal(T[T[a, a], T], T[np.ix_(T[a, :], T[a, :])])
    ]
    elems = mag.elements()

    def vals(idx):
        return frozenset(elems[i] for i in idx)

    return {
        "commutant": vals(commutant),
        "left_nucleus": vals(left_n),
        "middle_nucleus": vals(middle_n),
        "right_nucleus": vals(right_n),
        "nucleus": vals(nucleus),
        "center": vals(center),
        "moufang_center": vals(moufang),
    }


def _right_division(T: np.ndarray) -> np.ndarray:
    """rd[v, w] = the unique c with T[v, c] = w; NotLatin when rows repeat."""
    n = T.shape[0]
    rd = np.full((n, n), -1, dtype=np.int64)
    for v in range(n):
        row = T[v, :]
        if len(set(row.tolist())) != n:
            raise NotLatin(f"row {v} is not a permutation; right division fails")
        rd[v, row] = np.arange(n)
    return rd


def derived_subloops(loop: Structure, within=None) -> dict:
    """Commutator subloop (closure of {e} and all commutators) and associator
    subloop (closure of {e} and all associators), drawn from `within`."""
    mag = _loop_magma(loop)
    T = mag.table()
    n = T.shape[0]
    rd = _right_division(T)
    e = mag.identity_index()
    if within is None:
        dom = np.arange(n)
    else:
        dom = np.array(sorted(mag.index(v) for v in within), dtype=np.int64)
    # commutator c(x,y): x.y = (y.x).c  =>  c = rd[y.x, x.y]
    xy = T[np.ix_(dom, dom)]
    yx = xy.T
    commutators = set(rd[yx.ravel(), xy.ravel()].tolist())
    # associator a(x,y,z): (x.y).z = (x.(y.z)).a
    assoc = set()
    for xi in dom:
        lhs = T[T[xi, dom][:, None], dom]          # (x.y).z
        rhs_base = T[xi, T[np.ix_(dom, dom)]]       # x.(y.z)
        assoc |= set(rd[rhs_base.ravel(), lhs.ravel()].tolist())
    elems = mag.elements()
    comm_sub = close_indices(T, commutators | {e})
    assoc_sub = close_indices(T, assoc | {e})
    return {
        "commutator_subloop": frozenset(elems[i] for i in comm_sub),
        "associator_subloop": frozenset(elems[i] for i in assoc_sub),
        "commutators": frozenset(elems[i] for i in commutators),
        "associators": frozenset(elems[i] for i in assoc),
    }


def principal_isotope(loop: Structure, a, b) -> Magma:
    """x o y = R_b^{-1}(x) . L_a^{-1}(y); the identity is a.b."""
    mag = _loop_magma(loop)
    T = mag.table()
    n = T.shape[0]
    ai = mag.index(a)
    bi = mag.index(b)
    col = T[:, bi]
    row = T[ai, :]
    if len(set(col.tolist())) != n or len(set(row.tolist())) != n:
        raise NotLatin("translation maps are not bijective; no isotope")
    rb_inv = np.empty(n, dtype=np.int64)
    rb_inv[col] = np.arange(n)
    la_inv = np.empty(n, dtype=np.int64)
    la_inv[row] = np.arange(n)
    iso = T[rb_inv[:, None], la_inv[None, :]]
    return Magma(
        mag.carrier,
        FromTable(mag.carrier, iso, note=f"principal isotope a={a}, b={b}"),
    )


def is_normal_subloop(loop: Structure, H) -> bool:
    """x.H = H.x, (x.y).H = x.(y.H), (H.x).y = H.(x.y) for all x, y."""
    mag = _loop_magma(loop)
    T = mag.table()
    n = T.shape[0]
    Hidx = np.array(sorted(mag.index(v) for v in H), dtype=np.int64)
    sets = [_setwise(T, j, Hidx) for j in range(n)]       # j.H
    sets_r = [_setwise(T, Hidx, j) for j in range(n)]     # H.j
    for x in range(n):
        if sets[x] != sets_r[x]:
            return False
    for x in range(n):
        for y in range(n):
            xy = int(T[x, y])
            yH = np.array(sorted(sets[y]), dtype=np.int64)
            if sets[xy] != _setwise(T, x, yH):
                return False
            Hx = np.array(sorted(sets_r[x]), dtype=np.int64)
            if _setwise(T, Hx, y) != sets_r[xy]:
                return False
    return True


# -- Lagrange / Sylow ------------------------------------------------------------------


def lagrange_audit(
    structure: Structure,
    class_filter: str | None = None,
    extra_seeds: list | None = None,
) -> dict:
    """Grade substructure orders against the structure order.

    `extra_seeds` lets callers grade closures the seed budget cannot reach
    (each seed is closed and appended to the enumerated list).
    """
    total = structure.order_of()
    subs = enumerate_substructures(structure, class_filter=class_filter)
    if extra_seeds:
        subs = subs + [closure(structure, seed) for seed in extra_seeds]
    entries = []
    divides_all = True
    divides_any = False
    for s in subs:
        if not s.proper_nontrivial:
            continue
        ok = total % s.size == 0
        entries.append(
            {
                "members": substructure_to_dict(s)["members"],
                "size": s.size,
                "divides": ok,
            }
        )
        divides_all &= ok
        divides_any |= ok
    if not entries:
        grade = "Lagrange"
    elif divides_all:
        grade = "Lagrange"
    elif divides_any:
        grade = "WeaklyLagrange"
    else:
        grade = "Neither"
    return {"order": total, "grade": grade, "substructures": entries}


def sylow_audit(structure: Structure, p: int) -> dict:
    if p < 2:
        raise ValueError("p must be at least 2")
    total = structure.order_of()
    subs = enumerate_substructures(structure)
    found = []
    max_k = 0
    for s in subs:
        size = s.size
        if size < p:
            continue
        k = 0
        m = size
        while m % p == 0:
            m //= p
            k += 1
        if m == 1 and k >= 1:
            found.append(
                {
                    "members": _component_labels(structure, s.subsets),
                    "size": size,
                    "k": k,
                }
            )
            max_k = max(max_k, k)
    return {
        "order": total,
        "p": p,
        "subgroups": found,
        "max_k": max_k,
        "pk_divides_order": max_k > 0 and total % (p**max_k) == 0,
        "pk1_divides_order": max_k > 0 and total % (p ** (max_k + 1)) == 0,
    }
