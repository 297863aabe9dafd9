"""Exception hierarchy for the workbench.

Every operation-contract error is a distinct class so callers (and the CLI)
can branch on type. All inherit from IalgError.
"""

from __future__ import annotations


class IalgError(Exception):
    """Base class for all workbench errors."""


class InfiniteCarrier(IalgError):
    """An enumerative operation was asked of a carrier containing an
    unbounded component. Element-level arithmetic is still available."""


class CarrierMismatch(IalgError):
    """An element does not belong to the carrier it was used with."""


class NoIdentity(IalgError):
    """The operation requires a two-sided identity and none exists."""


class NoAbsorber(IalgError):
    """The operation requires an absorbing element and none exists."""


class NoAbsorberInComponent(IalgError):
    """A quasi-element query needs an absorber in an inactive component."""

    def __init__(self, component: int):
        self.component = component
        super().__init__(f"component {component} has no absorbing element")


class NonResiduePair(IalgError):
    """Groupoid parameters (t, u) must be integer residues mod n."""


class BadLoopParams(IalgError):
    """Loop parameters violate a constraint; the message names it."""


class BadN(IalgError):
    """n is outside the domain of the requested counting formula."""


class DegreeTooLarge(IalgError):
    """Symmetric-structure degree exceeds the enumeration guard."""


class NonSquareMul(IalgError):
    """Matrix multiplication requires a square shape."""


class UnsupportedBase(IalgError):
    """Matrix construction over an unsupported base structure."""


class NotLatin(IalgError):
    """Right/left division is unavailable because the table is not latin."""


class BudgetExceeded(IalgError):
    """An enumerative scan exceeded its budget.

    Carries whatever partial results were gathered, flagged incomplete.
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class UnknownClaim(IalgError):
    """Audit requested for a claim id not in the registry."""


class RangeTooLarge(IalgError):
    """Audit range exceeds the claim's feasibility bounds."""


class ArityMismatch(IalgError):
    """A homomorphism assignment leaves a source component unmapped."""


class ParseError(IalgError):
    """Script syntax error with position information."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UndefinedName(IalgError):
    """A script command referenced a name that was never defined."""


class IoError(IalgError):
    """A file export failed."""
