"""Exhaustive finders for special elements — zero divisors, units,
idempotents, nilpotents, Cauchy elements — and their quasi variants in
product structures.

Products are scanned componentwise (a product element is a unit/idempotent/
nilpotent exactly when every component is; it is a left zero-divisor factor
exactly when some component admits a non-absorber partner, the remaining
components being paired with their absorbers). This avoids materializing
product Cayley tables while reporting the same sets a direct scan would.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoAbsorber, NoAbsorberInComponent, NoIdentity
from .magma import Magma
from .structures import Structure

ZERO_DIVISOR = "ZeroDivisor"
UNIT = "Unit"
IDEMPOTENT = "Idempotent"
NILPOTENT = "Nilpotent"
CAUCHY = "Cauchy"

KIND_ALIASES = {
    "zero-divisors": ZERO_DIVISOR,
    "units": UNIT,
    "idempotents": IDEMPOTENT,
    "nilpotents": NILPOTENT,
    "cauchy": CAUCHY,
}


def normalize_kind(kind: str) -> str:
    if kind in KIND_ALIASES.values():
        return kind
    try:
        return KIND_ALIASES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown special-element kind {kind!r}") from None


@dataclass(frozen=True)
class SpecialEntry:
    element: object
    certificate: object  # partner element, power k, order k, or None
    trivial: bool = False
    active_mask: tuple[bool, ...] | None = None


@dataclass
class SpecialElementReport:
    kind: str
    elements: list[SpecialEntry] = field(default_factory=list)

    def values(self) -> list:
        return [e.element for e in self.elements]

    def to_dict(self, labeler=None) -> dict:
        lab = labeler if labeler is not None else repr
        out = []
        for e in self.elements:
            row = {
                "element": lab(e.element),
                "certificate": (
                    e.certificate
                    if isinstance(e.certificate, (int, type(None)))
                    else lab(e.certificate)
                ),
                "trivial": e.trivial,
            }
            if e.active_mask is not None:
                row["active_mask"] = list(e.active_mask)
            out.append(row)
        return {"kind": self.kind, "elements": out}


def absorbing_element(magma: Magma):
    """The unique two-sided absorber, or None."""
    return magma.absorbing_value()


# -- single-component scans ----------------------------------------------------


def _zero_partners(m: Magma) -> tuple[int | None, list[int | None]]:
    """(absorber index, per-element first non-absorber partner index)."""
    z = m.absorbing_index()
    if z is None:
        return None, []
    T = m.table()
    n = T.shape[0]
    partners: list[int | None] = []
    for i in range(n):
        hits = np.nonzero(T[i] == z)[0]
        hits = hits[hits != z]
        partners.append(int(hits[0]) if hits.size else None)
    return z, partners


def _unit_partners(m: Magma) -> tuple[int | None, list[int | None]]:
    """(identity index, per-element first two-sided inverse index)."""
    e = m.identity_index()
    if e is None:
        return None, []
    T = m.table()
    inv = (T == e) & (T == e).T
    partners = []
    for i in range(T.shape[0]):
        hits = np.nonzero(inv[i])[0]
        partners.append(int(hits[0]) if hits.size else None)
    return e, partners


def _idempotent_indices(m: Magma) -> list[int]:
    T = m.table()
    n = T.shape[0]
    d = np.diagonal(T)
    return [i for i in range(n) if d[i] == i]


def _nilpotency(m: Magma, z: int) -> list[int | None]:
    """Per-element minimal k with x^k = absorber (left powers), else None."""
    T = m.table()
    n = T.shape[0]
    out: list[int | None] = []
    for i in range(n):
        acc = i
        k = None
        for step in range(1, n + 1):
            if acc == z:
                k = step
                break
            acc = int(T[i, acc])
        out.append(k)
    return out


# -- find_special ---------------------------------------------------------------


def find_special(structure: Structure, kind: str) -> SpecialElementReport:
    kind = normalize_kind(kind)
    comps = structure.component_magmas()
    mag = structure.magma
    ident = mag.identity_value()
    absb = mag.absorbing_value()

    if kind in (ZERO_DIVISOR, NILPOTENT) and absb is None:
        raise NoAbsorber(f"{structure.name} has no absorbing element")
    if kind in (UNIT, CAUCHY) and ident is None:
        raise NoIdentity(f"{structure.name} has no identity element")

    single = len(comps) == 1
    entries: list[SpecialEntry] = []

    def trivial(v) -> bool:
        return v == ident or v == absb

    if kind == ZERO_DIVISOR:
        per = [_zero_partners(m) for m in comps]
        if single:
            z, partners = per[0]
            elems = comps[0].elements()
            for i, p in enumerate(partners):
                if i == z or p is None:
                    continue
                entries.append(SpecialEntry(elems[i], elems[p], False))
        else:
            zs = [z for z, _ in per]
            for xv in mag.elements():
                if xv == absb:
                    continue
                partner = None
                for ci, (m, (z, partners)) in enumerate(zip(comps, per)):
                    xi = m.index(xv[ci])
                    p = partners[xi]
                    if p is not None:
                        partner = tuple(
                            comps[cj].elements()[p] if cj == ci
                            else comps[cj].elements()[zs[cj]]
                            for cj in range(len(comps))
                        )
                        break
                if partner is not None:
                    entries.append(SpecialEntry(xv, partner, False))

    elif kind == UNIT:
        per = [_unit_partners(m) for m in comps]
        if single:
            _, partners = per[0]
            elems = comps[0].elements()
            for i, p in enumerate(partners):
                if p is None:
                    continue
                entries.append(SpecialEntry(elems[i], elems[p], trivial(elems[i])))
        else:
            for xv in mag.elements():
                invs = []
                for ci, m in enumerate(comps):
                    p = per[ci][1][m.index(xv[ci])]
                    if p is None:
                        break
                    invs.append(m.elements()[p])
                else:
                    entries.append(SpecialEntry(xv, tuple(invs), trivial(xv)))

    elif kind == IDEMPOTENT:
        if single:
            elems = comps[0].elements()
            for i in _idempotent_indices(comps[0]):
                entries.append(SpecialEntry(elems[i], None, trivial(elems[i])))
        else:
            per = [set(_idempotent_indices(m)) for m in comps]
            for xv in mag.elements():
                if all(m.index(xv[ci]) in per[ci] for ci, m in enumerate(comps)):
                    entries.append(SpecialEntry(xv, None, trivial(xv)))

    elif kind == NILPOTENT:
        per = []
        for m in comps:
            z = m.absorbing_index()
            per.append(_nilpotency(m, z) if z is not None else None)
        if single:
            elems = comps[0].elements()
            for i, k in enumerate(per[0]):
                if k is not None:
                    entries.append(SpecialEntry(elems[i], k, trivial(elems[i])))
        else:
            for xv in mag.elements():
                ks = []
                for ci, m in enumerate(comps):
                    k = per[ci][m.index(xv[ci])]
                    if k is None:
                        break
                    ks.append(k)
                else:
                    entries.append(SpecialEntry(xv, max(ks), trivial(xv)))

    elif kind == CAUCHY:
        total = structure.order_of()
        for xv in mag.elements():
            k = mag.element_order(xv)
            if k is not None and k > 1 and total % k == 0:
                entries.append(SpecialEntry(xv, k, False))

    return SpecialElementReport(kind, entries)


# -- quasi variants ----------------------------------------------------------------


def find_quasi_special(
    structure: Structure, kind: str, mask: tuple[bool, ...] | None = None
) -> SpecialElementReport:
    """Special elements of a product whose active components satisfy the kind
    within their component and whose inactive components sit at that
    component's absorber. The active set must be proper and nonempty."""
    kind = normalize_kind(kind)
    comps = structure.component_magmas()
    k = len(comps)
    if k < 2:
        raise ValueError("quasi special elements need a product structure")

    absorbers: list[object | None] = [m.absorbing_value() for m in comps]
    report_cache: dict[int, SpecialElementReport] = {}

    def component_report(ci: int) -> SpecialElementReport:
        if ci not in report_cache:
            report_cache[ci] = find_special(
                Structure(f"{structure.name}[{ci}]", [structure.components[ci]]),
                kind,
            )
        return report_cache[ci]

    masks: list[tuple[bool, ...]]
    if mask is not None:
        if len(mask) != k or not any(mask) or all(mask):
            raise ValueError(
                "active mask must be a proper nonempty component subset"
            )
        masks = [tuple(mask)]
    else:
        masks = [
            tuple(bool(bits >> i & 1) for i in range(k))
            for bits in range(1, 2**k - 1)
        ]
        masks.sort(key=lambda t: tuple(0 if b else 1 for b in t))

    entries: list[SpecialEntry] = []
    for mk in masks:
        for ci, active in enumerate(mk):
            if not active and absorbers[ci] is None:
                raise NoAbsorberInComponent(ci)
        active_lists = [
            component_report(ci).elements if active else None
            for ci, active in enumerate(mk)
        ]
        combos: list[list[SpecialEntry | None]] = [[]]
        for ci, lst in enumerate(active_lists):
            nxt = []
            options = lst if lst is not None else [None]
            for pre in combos:
                for opt in options:
                    nxt.append(pre + [opt])
            combos = nxt
        for combo in combos:
            element = tuple(
                combo[ci].element if combo[ci] is not None else absorbers[ci]
                for ci in range(k)
            )
            cert = _assemble_quasi_certificate(kind, combo, absorbers)
            entries.append(
                SpecialEntry(element, cert, element == tuple(absorbers), mk)
            )
    return SpecialElementReport(kind, entries)


def _assemble_quasi_certificate(kind, combo, absorbers):
    if kind in (ZERO_DIVISOR, UNIT):
        return tuple(
            c.certificate if c is not None else absorbers[ci]
            for ci, c in enumerate(combo)
        )
    if kind in (NILPOTENT, CAUCHY):
        ks = [c.certificate for c in combo if c is not None]
        return max(ks) if kind == NILPOTENT else math.lcm(*ks)
    return None


# -- Cauchy audit ------------------------------------------------------------------


def cauchy_audit(structure: Structure) -> dict:
    """Two gradings of element orders in a finite product.

    standard: lcm of component orders exceeds 1 and divides the structure
    order. book: every component order exceeds 1 and the product of the
    component orders divides the structure order; elements whose component
    orders all exceed 1 but whose product does not divide are listed as
    book_failures (the negative demonstrations)."""
    comps = structure.component_magmas()
    mag = structure.magma
    if mag.identity_value() is None:
        raise NoIdentity(f"{structure.name} has no identity element")
    total = structure.order_of()

    standard, book, failures = [], [], []
    for xv in mag.elements():
        parts = xv if len(comps) > 1 else (xv,)
        orders = []
        for m, v in zip(comps, parts):
            orders.append(m.element_order(v))
        if any(o is None for o in orders):
            continue
        rec = {"element": xv, "orders": orders}
        lc = math.lcm(*orders)
        if lc > 1 and total % lc == 0:
            standard.append({**rec, "order": lc})
        if all(o > 1 for o in orders):
            p = math.prod(orders)
            if total % p == 0:
                book.append({**rec, "order": p})
            else:
                failures.append({**rec, "order": p})
    return {"standard": standard, "book": book, "book_failures": failures}
