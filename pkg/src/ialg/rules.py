"""Operation rules: the binary operations structures realize.

A rule works on raw element values (see carriers). Rules that admit a fast
vectorized Cayley-table build provide ``index_table``; the generic fallback in
the magma layer loops over ``apply``.

``associative_by_construction`` marks rules whose associativity is a theorem
of ordinary algebra (modular +/x, function composition, matrix multiplication
over Z_n, and entrywise/componentwise lifts of such rules). The classifier
uses this as a proof only when the carrier is too large to scan exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .carriers import Carrier, LoopSet, Maps, Zmod, ZmodSubset


class OpRule:
    associative_by_construction: bool = False

    def apply(self, a, b):
        raise NotImplementedError

    def index_table(self, carrier: Carrier) -> np.ndarray | None:
        """N x N array of element indices, or None if no fast path."""
        return None

    def describe(self) -> str:
        raise NotImplementedError


def _mod_grid(carrier) -> np.ndarray:
    """Column vector of the carrier's residues (Zmod or ZmodSubset)."""
    return np.array(list(carrier.values()), dtype=np.int64)


def _residue_index_map(carrier, n: int) -> np.ndarray:
    """residue -> element index (or -1) lookup for subset carriers."""
    lut = np.full(n, -1, dtype=np.int64)
    for i, v in enumerate(carrier.values()):
        lut[v] = i
    return lut


@dataclass(frozen=True)
class AddMod(OpRule):
    n: int
    associative_by_construction = True

    def apply(self, a, b):
        return (a + b) % self.n

    def index_table(self, carrier):
        if isinstance(carrier, (Zmod, ZmodSubset)):
            vals = _mod_grid(carrier)
            res = (vals[:, None] + vals[None, :]) % self.n
            return _residue_index_map(carrier, self.n)[res]
        return None

    def describe(self):
        return f"add mod {self.n}"


@dataclass(frozen=True)
class MulMod(OpRule):
    n: int
    associative_by_construction = True

    def apply(self, a, b):
        return (a * b) % self.n

    def index_table(self, carrier):
        if isinstance(carrier, (Zmod, ZmodSubset)):
            vals = _mod_grid(carrier)
            res = (vals[:, None] * vals[None, :]) % self.n
            return _residue_index_map(carrier, self.n)[res]
        return None

    def describe(self):
        return f"mul mod {self.n}"


@dataclass(frozen=True)
class GroupoidPair(OpRule):
    """a*b = (t*a + u*b) mod n; with n=None the arithmetic is unreduced
    (the unbounded-carrier case: element-level apply only)."""

    n: int | None
    t: int
    u: int

    def apply(self, a, b):
        v = self.t * a + self.u * b
        return v % self.n if self.n is not None else v

    def index_table(self, carrier):
        if self.n is not None and isinstance(carrier, (Zmod, ZmodSubset)):
            vals = _mod_grid(carrier)
            res = (self.t * vals[:, None] + self.u * vals[None, :]) % self.n
            return _residue_index_map(carrier, self.n)[res]
        return None

    def describe(self):
        base = f"Z_{self.n}" if self.n is not None else "unbounded"
        return f"{base} groupoid ({self.t},{self.u})"


@dataclass(frozen=True)
class LoopRule(OpRule):
    """The L_n(m) operation on {e=0, 1..n}:

    i*j = (m*j - (m-1)*i) mod n with representative 0 mapped to n,
    i*i = e, and e a two-sided identity.
    """

    n: int
    m: int

    def apply(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        if a == b:
            return 0
        v = (self.m * b - (self.m - 1) * a) % self.n
        return self.n if v == 0 else v

    def index_table(self, carrier):
        if isinstance(carrier, LoopSet):
            n = self.n
            pts = np.arange(1, n + 1, dtype=np.int64)
            core = (self.m * pts[None, :] - (self.m - 1) * pts[:, None]) % n
            core[core == 0] = n
            np.fill_diagonal(core, 0)
            full = np.empty((n + 1, n + 1), dtype=np.int64)
            full[0, :] = np.arange(n + 1)
            full[:, 0] = np.arange(n + 1)
            full[1:, 1:] = core
            return full
        return None

    def describe(self):
        return f"L_{self.n}({self.m})"


@dataclass(frozen=True)
class Compose(OpRule):
    """Map composition, applied left to right: (x.y)(i) = y(x(i))."""

    k: int
    associative_by_construction = True

    def apply(self, a, b):
        return tuple(b[a[i] - 1] for i in range(self.k))

    def index_table(self, carrier):
        if isinstance(carrier, Maps) and carrier.size() <= 6000:
            elems = list(carrier.values())
            idx = {v: i for i, v in enumerate(elems)}
            arr = np.array(elems, dtype=np.int64) - 1  # rows: maps, 0-based
            n = len(elems)
            table = np.empty((n, n), dtype=np.int64)
            for j, y in enumerate(arr):
                composed = y[arr]  # composed[i] = y ∘ (after) x_i
                table[:, j] = [idx[tuple(int(t) + 1 for t in row)] for row in composed]
            return table
        return None

    def describe(self):
        return f"composition on {self.k} points"


@dataclass(frozen=True)
class EntrywiseOf(OpRule):
    """Cellwise lift of a base rule to r x c matrices."""

    inner: OpRule
    rows: int
    cols: int

    @property
    def associative_by_construction(self):  # type: ignore[override]
        return self.inner.associative_by_construction

    def apply(self, a, b):
        return tuple(
            tuple(self.inner.apply(a[r][c], b[r][c]) for c in range(self.cols))
            for r in range(self.rows)
        )

    def describe(self):
        return f"entrywise {self.inner.describe()}"


@dataclass(frozen=True)
class MatrixMulMod(OpRule):
    """Ordinary matrix multiplication with entries reduced mod n."""

    n: int
    size: int
    associative_by_construction = True

    def apply(self, a, b):
        k = self.size
        return tuple(
            tuple(
                sum(a[r][i] * b[i][c] for i in range(k)) % self.n
                for c in range(k)
            )
            for r in range(k)
        )

    def describe(self):
        return f"matrix mul mod {self.n}"


@dataclass(frozen=True)
class RowByMatrixMod(OpRule):
    """1 x k row times k x k matrix, entries mod n (when n is given).

    Provided for row-vector-by-matrix products; with n=None the dot
    products are left unreduced.
    """

    n: int | None
    size: int

    def apply(self, a, b):
        # a: 1 x k row (tuple of one tuple); b: k x k matrix
        k = self.size
        row = a[0]
        out = []
        for c in range(k):
            v = sum(row[i] * b[i][c] for i in range(k))
            out.append(v % self.n if self.n is not None else v)
        return (tuple(out),)

    def describe(self):
        return f"row-by-matrix mod {self.n}"


@dataclass(frozen=True)
class Componentwise(OpRule):
    parts: tuple[OpRule, ...]

    @property
    def associative_by_construction(self):  # type: ignore[override]
        return all(p.associative_by_construction for p in self.parts)

    def apply(self, a, b):
        return tuple(p.apply(x, y) for p, x, y in zip(self.parts, a, b))

    def describe(self):
        return " x ".join(p.describe() for p in self.parts)


class FromTable(OpRule):
    """A rule backed by an explicit index table (principal isotopes and
    other table-level constructions)."""

    def __init__(self, carrier: Carrier, table: np.ndarray, note: str = "table"):
        self.carrier = carrier
        self._table = np.asarray(table, dtype=np.int64)
        self.note = note

    def apply(self, a, b):
        i = self.carrier.index(a)
        j = self.carrier.index(b)
        return self.carrier.value_at(int(self._table[i, j]))

    def index_table(self, carrier):
        return self._table

    def describe(self):
        return self.note


def generic_index_table(carrier: Carrier, rule: OpRule) -> np.ndarray:
    """Fallback Cayley-table build: O(N^2) apply calls."""
    elems = list(carrier.values())
    idx = {v: i for i, v in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        row = table[i]
        for j, b in enumerate(elems):
            row[j] = idx[rule.apply(a, b)]
    return table
