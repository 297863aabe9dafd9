"""Structures: named carriers-with-rules, one component per union factor.

A one-component structure is a plain algebraic object; two components make a
bistructure, n components an n-structure. The realized magma of a product is
the tuple carrier under the componentwise rule — same elements, same algebra.
Flavor (interval vs plain) never changes the algebra; it drives labels and
printing only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .carriers import INTERVAL, Carrier, TupleOf
from .errors import InfiniteCarrier
from .magma import Magma, StructureClass
from .rules import Componentwise, OpRule


@dataclass(frozen=True)
class Component:
    carrier: Carrier
    rule: OpRule
    kind_claim: str | None = None

    @property
    def flavor(self) -> str:
        return self.carrier.flavor


@dataclass
class Structure:
    name: str
    components: list[Component] = field(default_factory=list)

    def __post_init__(self):
        if not self.components:
            raise ValueError("a structure needs at least one component")
        self._magma: Magma | None = None

    # -- realized magma -----------------------------------------------------

    @property
    def magma(self) -> Magma:
        if self._magma is None:
            if len(self.components) == 1:
                c = self.components[0]
                self._magma = Magma(c.carrier, c.rule)
            else:
                self._magma = Magma(
                    TupleOf(tuple(c.carrier for c in self.components)),
                    Componentwise(tuple(c.rule for c in self.components)),
                )
        return self._magma

    def component_magmas(self) -> list[Magma]:
        return [Magma(c.carrier, c.rule) for c in self.components]

    # -- sizes ---------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return all(c.carrier.is_finite for c in self.components)

    def order_of(self) -> int:
        total = 1
        for c in self.components:
            if not c.carrier.is_finite:
                raise InfiniteCarrier(
                    f"{self.name}: component carrier is unbounded"
                )
            total *= c.carrier.size()
        return total

    # -- classification -------------------------------------------------------

    def classify_components(self) -> list[StructureClass]:
        return [m.classify() for m in self.component_magmas()]

    def classify(self) -> StructureClass:
        return self.magma.classify()

    def classify_label(self) -> str:
        return " × ".join(c.label for c in self.classify_components())

    def family_label(self) -> str:
        comps = self.components
        k = len(comps)
        flavors = {c.flavor for c in comps}
        mixed_flavor = len(flavors) > 1
        flavor_word = "interval" if INTERVAL in flavors else "plain"
        quasi = "quasi " if mixed_flavor else ""
        labels = [c.label for c in self.classify_components()]
        distinct: list[str] = []
        for lab in labels:
            if lab not in distinct:
                distinct.append(lab)
        if k == 1:
            return f"{flavor_word} {labels[0]}"
        if len(distinct) >= 3:
            return f"{quasi}mixed {k}-interval structure"
        body = distinct[0] if len(distinct) == 1 else "-".join(distinct)
        if k == 2:
            head = f"bi{body}" if len(distinct) == 1 else body
            return f"{quasi}{flavor_word} {head}"
        return f"{quasi}{k}-interval {body}"

    # -- elements -------------------------------------------------------------

    def element_of(self, parts):
        """Assemble a structure element from per-component raw values."""
        if len(self.components) == 1:
            return parts[0] if isinstance(parts, (list, tuple)) else parts
        return tuple(parts)

    def label_element(self, v) -> str:
        return self.magma.carrier.label(v)


def order_of(structure: Structure) -> int:
    return structure.order_of()
