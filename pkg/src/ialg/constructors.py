"""Builders for every structure family, with parameter validation, plus the
n-fold componentwise product."""

from __future__ import annotations

import math

from .carriers import (
    INTERVAL,
    LoopSet,
    Maps,
    MatrixOf,
    UnboundedNonneg,
    Zmod,
    ZmodSubset,
)
from .errors import (
    BadLoopParams,
    BadN,
    DegreeTooLarge,
    NonResiduePair,
    NonSquareMul,
    UnsupportedBase,
)
from .rules import (
    AddMod,
    Compose,
    EntrywiseOf,
    GroupoidPair,
    LoopRule,
    MatrixMulMod,
    MulMod,
)
from .structures import Component, Structure

MAX_SYM_DEGREE = 7


def zn_semigroup(n: int, op: str = "mul", flavor: str = INTERVAL,
                 name: str | None = None) -> Structure:
    if n < 1:
        raise BadN(f"modulus must be >= 1, got {n}")
    if op not in ("add", "mul"):
        raise ValueError(f"op must be 'add' or 'mul', got {op!r}")
    rule = AddMod(n) if op == "add" else MulMod(n)
    return Structure(
        name or f"Z{n}_{op}",
        [Component(Zmod(n, flavor), rule, kind_claim="semigroup")],
    )


def zn_groupoid(n: int, t, u, flavor: str = INTERVAL,
                name: str | None = None) -> Structure:
    if n < 2:
        raise BadN(f"groupoid modulus must be >= 2, got {n}")
    if not isinstance(t, int) or not isinstance(u, int):
        raise NonResiduePair(
            f"(t, u) must be integer residues mod {n}, got ({t!r}, {u!r})"
        )
    t %= n
    u %= n
    return Structure(
        name or f"Z{n}({t},{u})",
        [Component(Zmod(n, flavor), GroupoidPair(n, t, u), kind_claim="groupoid")],
    )


def unbounded_groupoid(t: int, u: int, domain: str = "integers",
                       flavor: str = INTERVAL, name: str | None = None) -> Structure:
    """Groupoid a*b = t*a + u*b on an unbounded nonnegative carrier.

    Element-level apply only; every enumeration query raises InfiniteCarrier.
    """
    if not isinstance(t, int) or not isinstance(u, int):
        raise NonResiduePair(f"(t, u) must be integers, got ({t!r}, {u!r})")
    return Structure(
        name or f"Nonneg({t},{u})",
        [Component(UnboundedNonneg(domain, flavor), GroupoidPair(None, t, u),
                   kind_claim="groupoid")],
    )


def new_loop(n: int, m: int, flavor: str = INTERVAL, name: str | None = None,
             check: bool = True) -> Structure:
    """The loop L_n(m) on {e, 1, ..., n}.

    With check=False the parameter constraints are skipped and the formula
    table is built as-is; the result need not be a loop (the latin property
    can fail), which is exactly what the audit layer needs to replay printed
    parameter slips. Every structural claim about such a table must be
    re-verified, never assumed.
    """
    if check:
        if n <= 3:
            raise BadLoopParams(f"n must exceed 3, got {n}")
        if n % 2 == 0:
            raise BadLoopParams(f"n must be odd, got {n}")
        if not (1 < m < n):
            raise BadLoopParams(f"m must satisfy 1 < m < n, got m={m}, n={n}")
        if math.gcd(m, n) != 1:
            raise BadLoopParams(f"gcd(m, n) = gcd({m}, {n}) = {math.gcd(m, n)} != 1")
        if math.gcd(m - 1, n) != 1:
            raise BadLoopParams(
                f"gcd(m - 1, n) = gcd({m - 1}, {n}) = {math.gcd(m - 1, n)} != 1"
            )
    else:
        if n < 1 or not (0 < m < n):
            raise BadLoopParams(
                f"even unchecked loops need n >= 1 and 0 < m < n, got n={n}, m={m}"
            )
    return Structure(
        name or f"L{n}({m})",
        [Component(LoopSet(n, flavor), LoopRule(n, m), kind_claim="loop")],
    )


def zn_group(n: int, flavor: str = INTERVAL, name: str | None = None) -> Structure:
    if n < 1:
        raise BadN(f"modulus must be >= 1, got {n}")
    return Structure(
        name or f"Z{n}_add",
        [Component(Zmod(n, flavor), AddMod(n), kind_claim="group")],
    )


def units_group(n: int, flavor: str = INTERVAL, name: str | None = None) -> Structure:
    if n < 2:
        raise BadN(f"units group needs modulus >= 2, got {n}")
    members = tuple(a for a in range(n) if math.gcd(a, n) == 1)
    return Structure(
        name or f"U{n}",
        [Component(ZmodSubset(n, members, flavor), MulMod(n), kind_claim="group")],
    )


def sym_structure(k: int, bijective: bool, flavor: str = "plain",
                  name: str | None = None) -> Structure:
    if not (1 <= k <= MAX_SYM_DEGREE):
        raise DegreeTooLarge(
            f"degree must be between 1 and {MAX_SYM_DEGREE}, got {k}"
        )
    kind = "group" if bijective else "monoid"
    return Structure(
        name or (f"S{k}" if bijective else f"T{k}"),
        [Component(Maps(k, bijective, flavor), Compose(k), kind_claim=kind)],
    )


def matrix_structure(r: int, c: int, base: Structure, mode: str = "entrywise",
                     name: str | None = None) -> Structure:
    if len(base.components) != 1:
        raise UnsupportedBase("matrix base must be a one-component structure")
    comp = base.components[0]
    if mode == "mul":
        if r != c:
            raise NonSquareMul(f"matrix mul needs a square shape, got {r}x{c}")
        if not isinstance(comp.carrier, Zmod):
            raise UnsupportedBase("matrix mul needs a Zmod carrier (ring ops)")
        rule = MatrixMulMod(comp.carrier.n, r)
    elif mode == "entrywise":
        if not isinstance(comp.carrier, Zmod):
            raise UnsupportedBase("entrywise matrices need a Zmod carrier")
        rule = EntrywiseOf(comp.rule, r, c)
    else:
        raise ValueError(f"mode must be 'entrywise' or 'mul', got {mode!r}")
    return Structure(
        name or f"M{r}x{c}[{base.name}]",
        [Component(MatrixOf(r, c, comp.carrier), rule, kind_claim=None)],
    )


def product(*structures: Structure, name: str | None = None) -> Structure:
    if len(structures) == 1 and isinstance(structures[0], (list, tuple)):
        structures = tuple(structures[0])
    if len(structures) < 2:
        raise ValueError("a product needs at least two components")
    comps: list[Component] = []
    for s in structures:
        if len(s.components) != 1:
            raise ValueError(
                f"product factors must be single-component structures; "
                f"{s.name} has {len(s.components)}"
            )
        comps.append(s.components[0])
    return Structure(name or " ∪ ".join(s.name for s in structures), comps)
