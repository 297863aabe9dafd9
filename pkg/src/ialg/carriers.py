"""Carriers: the element domains structures are built over.

Element values are plain hashable Python data, one shape per carrier kind:

- ``Zmod(n)`` / ``ZmodSubset``: ``int`` residues.
- ``LoopSet(n)``: ``int`` with ``0`` standing for the identity ``e`` and
  ``1..n`` the points (so the natural int order is the table order e,1,..,n).
- ``Maps(k)``: a ``tuple`` of k images, each in ``1..k``.
- ``MatrixOf(r,c,inner)``: a tuple of r row-tuples of inner values.
- ``TupleOf(...)``: a tuple with one entry per component.
- ``UnboundedNonneg``: plain nonnegative numbers; enumeration is refused.

Every finite carrier provides a stable total element order (``values`` /
``index`` / ``value_at``) so tables, witnesses and reports are reproducible
bit-for-bit across runs.

Flavor ("interval" or "plain") is metadata: it changes labels ("[0,a]" vs
"a") and classification names, never the algebra.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InfiniteCarrier

INTERVAL = "interval"
PLAIN = "plain"


class Carrier:
    """Base class; concrete carriers implement the element protocol."""

    flavor: str = INTERVAL

    @property
    def is_finite(self) -> bool:
        return True

    def size(self) -> int:
        raise NotImplementedError

    def values(self) -> Iterator:
        raise NotImplementedError

    def contains(self, v) -> bool:
        raise NotImplementedError

    def index(self, v) -> int:
        raise NotImplementedError

    def value_at(self, i: int):
        raise NotImplementedError

    def label(self, v) -> str:
        raise NotImplementedError

    def labels(self) -> list[str]:
        return [self.label(v) for v in self.values()]


def _wrap(flavor: str, v) -> str:
    return f"[0,{v}]" if flavor == INTERVAL else str(v)


@dataclass(frozen=True)
class Zmod(Carrier):
    """Residues 0..n-1, ascending."""

    n: int
    flavor: str = INTERVAL

    def size(self) -> int:
        return self.n

    def values(self):
        return iter(range(self.n))

    def contains(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def index(self, v) -> int:
        return v

    def value_at(self, i: int):
        return i

    def label(self, v) -> str:
        return _wrap(self.flavor, v)


@dataclass(frozen=True)
class ZmodSubset(Carrier):
    """A fixed subset of Z_n (e.g. the units, or Z_p without 0), ascending."""

    n: int
    members: tuple[int, ...]
    flavor: str = INTERVAL

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def size(self) -> int:
        return len(self.members)

    def values(self):
        return iter(self.members)

    def contains(self, v) -> bool:
        return v in self.members

    def index(self, v) -> int:
        return self.members.index(v)

    def value_at(self, i: int):
        return self.members[i]

    def label(self, v) -> str:
        return _wrap(self.flavor, v)


@dataclass(frozen=True)
class LoopSet(Carrier):
    """The loop carrier {e, 1, .., n}; e is encoded as 0."""

    n: int
    flavor: str = INTERVAL

    def size(self) -> int:
        return self.n + 1

    def values(self):
        return iter(range(self.n + 1))

    def contains(self, v) -> bool:
        return isinstance(v, int) and 0 <= v <= self.n

    def index(self, v) -> int:
        return v

    def value_at(self, i: int):
        return i

    def label(self, v) -> str:
        return "e" if v == 0 else _wrap(self.flavor, v)


@dataclass(frozen=True)
class Maps(Carrier):
    """Self-maps of {1..k}: all k^k maps, or the k! bijections.

    Elements are image tuples; enumeration is lexicographic by image list.
    """

    k: int
    bijective: bool = False
    flavor: str = PLAIN

    def size(self) -> int:
        return math.factorial(self.k) if self.bijective else self.k**self.k

    def values(self):
        rng = range(1, self.k + 1)
        if self.bijective:
            return iter(itertools.permutations(rng))
        return iter(itertools.product(rng, repeat=self.k))

    def contains(self, v) -> bool:
        if not (isinstance(v, tuple) and len(v) == self.k):
            return False
        if not all(isinstance(x, int) and 1 <= x <= self.k for x in v):
            return False
        return len(set(v)) == self.k if self.bijective else True

    def index(self, v) -> int:
        if self.bijective:
            # Lehmer code: rank of v among lexicographic permutations.
            rank, pool = 0, sorted(range(1, self.k + 1))
            for pos, x in enumerate(v):
                rank += pool.index(x) * math.factorial(self.k - pos - 1)
                pool.remove(x)
            return rank
        rank = 0
        for x in v:
            rank = rank * self.k + (x - 1)
        return rank

    def value_at(self, i: int):
        if self.bijective:
            pool = list(range(1, self.k + 1))
            out = []
            for pos in range(self.k):
                f = math.factorial(self.k - pos - 1)
                out.append(pool.pop(i // f))
                i %= f
            return tuple(out)
        digits = []
        for _ in range(self.k):
            digits.append(i % self.k + 1)
            i //= self.k
        return tuple(reversed(digits))

    def label(self, v) -> str:
        return "(" + " ".join(str(x) for x in v) + ")"


@dataclass(frozen=True)
class MatrixOf(Carrier):
    """r x c matrices over an inner carrier; row-major enumeration."""

    rows: int
    cols: int
    inner: Carrier

    @property
    def flavor(self) -> str:  # type: ignore[override]
        return self.inner.flavor

    def size(self) -> int:
        return self.inner.size() ** (self.rows * self.cols)

    def values(self):
        cells = list(self.inner.values())
        for flat in itertools.product(cells, repeat=self.rows * self.cols):
            yield tuple(
                tuple(flat[r * self.cols + c] for c in range(self.cols))
                for r in range(self.rows)
            )

    def contains(self, v) -> bool:
        return (
            isinstance(v, tuple)
            and len(v) == self.rows
            and all(
                isinstance(row, tuple)
                and len(row) == self.cols
                and all(self.inner.contains(x) for x in row)
                for row in v
            )
        )

    def index(self, v) -> int:
        base = self.inner.size()
        rank = 0
        for row in v:
            for x in row:
                rank = rank * base + self.inner.index(x)
        return rank

    def value_at(self, i: int):
        base = self.inner.size()
        ncells = self.rows * self.cols
        digits = []
        for _ in range(ncells):
            digits.append(i % base)
            i //= base
        digits.reverse()
        flat = [self.inner.value_at(d) for d in digits]
        return tuple(
            tuple(flat[r * self.cols + c] for c in range(self.cols))
            for r in range(self.rows)
        )

    def label(self, v) -> str:
        return "[" + ",".join(
            "[" + ",".join(str(x) for x in row) + "]" for row in v
        ) + "]"


@dataclass(frozen=True)
class TupleOf(Carrier):
    """Product carrier: tuples, lexicographic by component."""

    parts: tuple[Carrier, ...]

    @property
    def is_finite(self) -> bool:
        return all(p.is_finite for p in self.parts)

    def size(self) -> int:
        if not self.is_finite:
            raise InfiniteCarrier("product contains an unbounded component")
        return math.prod(p.size() for p in self.parts)

    def values(self):
        if not self.is_finite:
            raise InfiniteCarrier("product contains an unbounded component")
        return itertools.product(*(list(p.values()) for p in self.parts))

    def contains(self, v) -> bool:
        return (
            isinstance(v, tuple)
            and len(v) == len(self.parts)
            and all(p.contains(x) for p, x in zip(self.parts, v))
        )

    def index(self, v) -> int:
        rank = 0
        for p, x in zip(self.parts, v):
            rank = rank * p.size() + p.index(x)
        return rank

    def value_at(self, i: int):
        sizes = [p.size() for p in self.parts]
        digits = []
        for s in reversed(sizes):
            digits.append(i % s)
            i //= s
        digits.reverse()
        return tuple(p.value_at(d) for p, d in zip(self.parts, digits))

    def label(self, v) -> str:
        return " ∪ ".join(p.label(x) for p, x in zip(self.parts, v))


@dataclass(frozen=True)
class UnboundedNonneg(Carrier):
    """Z+∪{0}, Q+∪{0} or R+∪{0}: element arithmetic only, no enumeration."""

    domain: str = "integers"  # integers | rationals | reals
    flavor: str = INTERVAL

    @property
    def is_finite(self) -> bool:
        return False

    def size(self) -> int:
        raise InfiniteCarrier(f"nonnegative {self.domain} are not enumerable")

    def values(self):
        raise InfiniteCarrier(f"nonnegative {self.domain} are not enumerable")

    def contains(self, v) -> bool:
        if self.domain == "integers":
            ok = isinstance(v, int)
        elif self.domain == "rationals":
            ok = isinstance(v, (int, Fraction))
        else:
            ok = isinstance(v, (int, float, Fraction))
        return ok and v >= 0

    def index(self, v) -> int:
        raise InfiniteCarrier(f"nonnegative {self.domain} are not enumerable")

    def value_at(self, i: int):
        raise InfiniteCarrier(f"nonnegative {self.domain} are not enumerable")

    def label(self, v) -> str:
        return _wrap(self.flavor, v)
