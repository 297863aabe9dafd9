"""The finite-magma engine: element enumeration, Cayley tables, powers,
and structural classification.

Classification tiers
--------------------
1. Componentwise rules on tuple carriers: classify each component and AND
   the flags (every flag here — closure, associativity, commutativity,
   identity, invertibility, latin property — holds in a direct product
   exactly when it holds in every factor).
2. Entrywise matrix rules: the magma is a direct power of the base magma,
   so its flags equal the base's.
3. Small carriers: everything is checked exhaustively from the Cayley table
   (associativity over all |S|^3 triples, chunked row by row).
4. Large non-product carriers (matrix multiplication, big map monoids):
   flags follow from the algebra (see the inline notes); anything not
   provable structurally raises BudgetExceeded rather than guessing.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .carriers import Carrier, Maps, MatrixOf, TupleOf
from .errors import BudgetExceeded, CarrierMismatch, NoIdentity
from .rules import (
    Componentwise,
    Compose,
    EntrywiseOf,
    MatrixMulMod,
    OpRule,
    generic_index_table,
)

DEFAULT_MAX_ORDER = 10**6

# Above this carrier size, full |S|^3 associativity scans are not attempted;
# structural arguments (tiers 1/2/4) must apply instead.
EXHAUSTIVE_CAP = 4096
ASSOC_SCAN_CAP = 1024


def max_order() -> int:
    raw = os.environ.get("IALG_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class StructureClass:
    closed: bool
    associative: bool
    has_identity: bool
    all_invertible: bool
    latin_square: bool
    commutative: bool
    label: str

    @staticmethod
    def from_flags(
        *,
        closed: bool,
        associative: bool,
        has_identity: bool,
        all_invertible: bool,
        latin_square: bool,
        commutative: bool,
    ) -> "StructureClass":
        if associative:
            if has_identity and all_invertible:
                label = "group"
            elif has_identity:
                label = "monoid"
            else:
                label = "semigroup"
        elif latin_square and has_identity:
            label = "loop"
        elif latin_square:
            label = "quasigroup"
        else:
            label = "groupoid"
        return StructureClass(
            closed=closed,
            associative=associative,
            has_identity=has_identity,
            all_invertible=all_invertible,
            latin_square=latin_square,
            commutative=commutative,
            label=label,
        )

    def to_dict(self) -> dict:
        return {
            "closed": self.closed,
            "associative": self.associative,
            "has_identity": self.has_identity,
            "all_invertible": self.all_invertible,
            "latin_square": self.latin_square,
            "commutative": self.commutative,
            "label": self.label,
        }


def _and_flags(parts: list[StructureClass]) -> StructureClass:
    return StructureClass.from_flags(
        closed=all(p.closed for p in parts),
        associative=all(p.associative for p in parts),
        has_identity=all(p.has_identity for p in parts),
        all_invertible=all(p.all_invertible for p in parts),
        latin_square=all(p.latin_square for p in parts),
        commutative=all(p.commutative for p in parts),
    )


class Magma:
    """A carrier together with a binary operation over it."""

    def __init__(self, carrier: Carrier, rule: OpRule):
        self.carrier = carrier
        self.rule = rule
        self._elements: list | None = None
        self._index: dict | None = None
        self._table: np.ndarray | None = None
        self._class: StructureClass | None = None

    # -- enumeration ------------------------------------------------------

    def size(self) -> int:
        return self.carrier.size()

    def ensure_enumerable(self, what: str) -> None:
        n = self.carrier.size()  # raises InfiniteCarrier when unbounded
        cap = max_order()
        if n > cap:
            raise BudgetExceeded(
                f"{what} needs all {n} elements; cap is {cap} "
                f"(set IALG_MAX_ORDER to raise it)"
            )

    def elements(self) -> list:
        if self._elements is None:
            self.ensure_enumerable("enumeration")
            self._elements = list(self.carrier.values())
            self._index = {v: i for i, v in enumerate(self._elements)}
        return self._elements

    def index(self, v) -> int:
        self.elements()
        assert self._index is not None
        try:
            return self._index[v]
        except KeyError:
            raise CarrierMismatch(f"{v!r} is not in the carrier") from None

    def label(self, v) -> str:
        return self.carrier.label(v)

    def labels(self) -> list[str]:
        return [self.carrier.label(v) for v in self.elements()]

    # -- the operation ----------------------------------------------------

    def apply(self, a, b):
        if not self.carrier.contains(a):
            raise CarrierMismatch(f"{a!r} is not in the carrier")
        if not self.carrier.contains(b):
            raise CarrierMismatch(f"{b!r} is not in the carrier")
        return self.rule.apply(a, b)

    def table(self) -> np.ndarray:
        """Cayley table as an |S| x |S| array of element indices."""
        if self._table is None:
            self.ensure_enumerable("a Cayley table")
            fast = self.rule.index_table(self.carrier)
            self._table = (
                fast if fast is not None else generic_index_table(self.carrier, self.rule)
            )
        return self._table

    # -- distinguished elements --------------------------------------------

    def component_magmas(self) -> list["Magma"] | None:
        if isinstance(self.carrier, TupleOf) and isinstance(self.rule, Componentwise):
            return [
                Magma(c, r) for c, r in zip(self.carrier.parts, self.rule.parts)
            ]
        return None

    def identity_value(self):
        """The unique two-sided identity, or None."""
        comps = self.component_magmas()
        if comps is not None:
            ids = [m.identity_value() for m in comps]
            return None if any(i is None for i in ids) else tuple(ids)
        if isinstance(self.rule, EntrywiseOf) and isinstance(self.carrier, MatrixOf):
            base = Magma(self.carrier.inner, self.rule.inner)
            e = base.identity_value()
            if e is None:
                return None
            return tuple(
                tuple(e for _ in range(self.carrier.cols))
                for _ in range(self.carrier.rows)
            )
        if isinstance(self.rule, MatrixMulMod):
            k = self.rule.size
            return tuple(
                tuple(1 if r == c else 0 for c in range(k)) for r in range(k)
            )
        if isinstance(self.rule, Compose):
            return tuple(range(1, self.rule.k + 1))
        i = self.identity_index()
        return None if i is None else self.elements()[i]

    def identity_index(self) -> int | None:
        T = self.table()
        n = T.shape[0]
        ar = np.arange(n)
        rows = np.all(T == ar[None, :], axis=1)
        cols = np.all(T == ar[:, None], axis=0)
        hits = np.nonzero(rows & cols)[0]
        return int(hits[0]) if hits.size else None

    def absorbing_value(self):
        """The unique two-sided absorbing element, or None."""
        comps = self.component_magmas()
        if comps is not None:
            zs = [m.absorbing_value() for m in comps]
            return None if any(z is None for z in zs) else tuple(zs)
        i = self.absorbing_index()
        return None if i is None else self.elements()[i]

    def absorbing_index(self) -> int | None:
        T = self.table()
        n = T.shape[0]
        ar = np.arange(n)
        rows = np.all(T == ar[:, None], axis=1)
        cols = np.all(T == ar[None, :], axis=0)
        hits = np.nonzero(rows & cols)[0]
        return int(hits[0]) if hits.size else None

    # -- powers and orders --------------------------------------------------

    def power(self, x, k: int):
        """Left power: x^1 = x, x^(k+1) = x . x^k."""
        if k < 1:
            raise ValueError("power exponent must be >= 1")
        acc = x
        for _ in range(k - 1):
            acc = self.rule.apply(x, acc)
        return acc

    def element_order(self, x) -> int | None:
        if not self.carrier.contains(x):
            raise CarrierMismatch(f"{x!r} is not in the carrier")
        comps = self.component_magmas()
        if comps is not None:
            orders = []
            for m, part in zip(comps, x):
                orders.append(m.element_order(part))
            if any(o is None for o in orders):
                return None
            return math.lcm(*orders)
        e = self.identity_value()
        if e is None:
            raise NoIdentity("element_order needs an identity element")
        limit = self.carrier.size()
        acc = x
        for k in range(1, limit + 1):
            if acc == e:
                return k
            acc = self.rule.apply(x, acc)
        return None

    # -- classification -----------------------------------------------------

    def classify(self) -> StructureClass:
        if self._class is None:
            self._class = self._classify()
        return self._class

    def _classify(self) -> StructureClass:
        comps = self.component_magmas()
        if comps is not None:
            return _and_flags([m.classify() for m in comps])
        if isinstance(self.rule, EntrywiseOf) and isinstance(self.carrier, MatrixOf):
            return Magma(self.carrier.inner, self.rule.inner).classify()
        n = self.carrier.size()
        if n <= EXHAUSTIVE_CAP:
            return self._classify_exhaustive()
        return self._classify_structural()

    def _classify_exhaustive(self) -> StructureClass:
        return classify_index_table(
            self.table(),
            associative_hint=(
                True if self.rule.associative_by_construction else None
            ),
        )

    def _classify_structural(self) -> StructureClass:
        rule = self.rule
        if isinstance(rule, MatrixMulMod):
            # k >= 2 and n >= 2 here (otherwise the carrier is small).
            # Commutativity fails on elementary matrices (E11.E12 = E12,
            # E12.E11 = 0); the zero matrix kills invertibility and the
            # latin property.
            return StructureClass.from_flags(
                closed=True,
                associative=True,
                has_identity=True,
                all_invertible=False,
                latin_square=False,
                commutative=False,
            )
        if isinstance(rule, Compose) and isinstance(self.carrier, Maps):
            k = self.carrier.k
            if self.carrier.bijective:
                # The symmetric group; nonabelian exactly when k >= 3.
                return StructureClass.from_flags(
                    closed=True,
                    associative=True,
                    has_identity=True,
                    all_invertible=True,
                    latin_square=True,
                    commutative=k <= 2,
                )
            # The full transformation monoid; constant maps are not
            # invertible and give non-latin rows for k >= 2.
            return StructureClass.from_flags(
                closed=True,
                associative=True,
                has_identity=True,
                all_invertible=k <= 1,
                latin_square=k <= 1,
                commutative=k <= 1,
            )
        raise BudgetExceeded(
            f"cannot classify a carrier of size {self.carrier.size()} "
            "without an exhaustive scan"
        )


def close_indices(T: np.ndarray, seed) -> frozenset[int]:
    """Closure of a seed index set under the table's operation."""
    cur = set(seed)
    frontier = set(seed)
    while frontier:
        arr = np.array(sorted(cur), dtype=np.int64)
        prod = set(T[np.ix_(arr, arr)].ravel().tolist())
        new = prod - cur
        cur |= new
        frontier = new
    return frozenset(cur)


def sub_table(T: np.ndarray, subset: list[int]) -> np.ndarray:
    """The induced table of a closed index subset, reindexed 0..len-1."""
    arr = np.array(subset, dtype=np.int64)
    remap = np.full(T.shape[0], -1, dtype=np.int64)
    remap[arr] = np.arange(len(subset))
    return remap[T[np.ix_(arr, arr)]]


def assoc_scan(T: np.ndarray) -> tuple[int, int, int] | None:
    """First (a,b,c) index triple with (a.b).c != a.(b.c), or None."""
    n = T.shape[0]
    for a in range(n):
        lhs = T[T[a, :], :]      # lhs[b, c] = (a.b).c
        rhs = T[a, T]            # rhs[b, c] = a.(b.c)
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            return (a, int(b), int(c))
    return None


def table_identity_index(T: np.ndarray) -> int | None:
    n = T.shape[0]
    ar = np.arange(n)
    rows = np.all(T == ar[None, :], axis=1)
    cols = np.all(T == ar[:, None], axis=0)
    hits = np.nonzero(rows & cols)[0]
    return int(hits[0]) if hits.size else None


def classify_index_table(
    T: np.ndarray, associative_hint: bool | None = None
) -> StructureClass:
    """Exhaustive classification of a Cayley table of element indices."""
    n = T.shape[0]
    ar = np.arange(n)
    commutative = bool(np.array_equal(T, T.T))
    latin = bool(
        np.all(np.sort(T, axis=1) == ar[None, :])
        and np.all(np.sort(T, axis=0) == ar[:, None])
    )
    e = table_identity_index(T)
    has_identity = e is not None
    if has_identity:
        inv = (T == e) & (T == e).T
        all_invertible = bool(np.all(inv.any(axis=1)))
    else:
        all_invertible = False
    if associative_hint is not None:
        associative = associative_hint
    elif n <= ASSOC_SCAN_CAP:
        associative = assoc_scan(T) is None
    else:
        raise BudgetExceeded(
            f"associativity scan over {n}^3 triples exceeds the exhaustive cap"
        )
    return StructureClass.from_flags(
        closed=True,
        associative=associative,
        has_identity=has_identity,
        all_invertible=all_invertible,
        latin_square=latin,
        commutative=commutative,
    )


class CayleyTable:
    """A rendered Cayley table with the export formats the CLI serves."""

    def __init__(self, magma: Magma):
        self.magma = magma
        self.indices = magma.table()
        self.labels = magma.labels()

    def rows(self) -> list[list[str]]:
        lab = self.labels
        return [[lab[j] for j in row] for row in self.indices]

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.labels)
        for row in self.rows():
            w.writerow(row)
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "elements": self.labels,
            "table": [[int(j) for j in row] for row in self.indices],
        }

    def to_json(self) -> str:
        import json

        return json.dumps(self.to_json_obj(), ensure_ascii=False)


def cayley_table(magma: Magma) -> CayleyTable:
    return CayleyTable(magma)


def identity_of(magma: Magma):
    """The unique two-sided identity element, or None if there is none."""
    return magma.identity_value()


def element_order(magma: Magma, x) -> int | None:
    return magma.element_order(x)


def classify(magma: Magma) -> StructureClass:
    return magma.classify()
