"""ialg — a finite-algebra workbench.

Construct interval semigroups, groupoids Z_n(t, u), loops L_n(m), groups,
and n-fold componentwise products; classify them; hunt special elements and
substructures; and brute-force-audit a registry of structural claims,
reporting confirmations, refutations, and known printed errata.
"""

from .audit import (
    ERRATA,
    AuditReport,
    Erratum,
    HomResult,
    TheoremClaim,
    audit,
    check_homomorphism,
    errata_for,
    erratum,
    jsonable,
    lookup_claim,
    registry,
    replay_refutation,
    strict_noncommutative_count,
)
from .constructors import (
    matrix_structure,
    new_loop,
    product,
    sym_structure,
    unbounded_groupoid,
    units_group,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)
from .dsl import Command, Let, Script, parse_script, render
from .engine import RunResult, execute, export_table, max_order_cap
from .errors import (
    ArityMismatch,
    BadLoopParams,
    BadN,
    BudgetExceeded,
    CarrierMismatch,
    DegreeTooLarge,
    IalgError,
    InfiniteCarrier,
    IoError,
    NoAbsorber,
    NoAbsorberInComponent,
    NoIdentity,
    NonResiduePair,
    NonSquareMul,
    NotLatin,
    ParseError,
    RangeTooLarge,
    UndefinedName,
    UnknownClaim,
    UnsupportedBase,
)
from .identities import (
    FAILS,
    QUASI_SMARANDACHE,
    SMARANDACHE,
    STRONG,
    Identity,
    IdentityVerdict,
    catalog,
    check_identity,
    lookup,
    predict_zn,
    s_check_identity,
)
from .magma import Magma, StructureClass, classify_index_table
from .special import (
    SpecialElementReport,
    cauchy_audit,
    find_quasi_special,
    find_special,
)
from .structures import Structure, order_of
from .substructures import (
    SmarandacheWitness,
    Substructure,
    closure,
    derived_subloops,
    enumerate_ideals,
    enumerate_substructures,
    is_normal_subloop,
    is_simple,
    lagrange_audit,
    loop_centers,
    loop_subloop_family,
    normalizers,
    principal_isotope,
    smarandache_witness,
    substructure_to_dict,
    sylow_audit,
)

__version__ = "0.1.0"

__all__ = [
    "ERRATA",
    "AuditReport",
    "Erratum",
    "HomResult",
    "TheoremClaim",
    "audit",
    "check_homomorphism",
    "errata_for",
    "erratum",
    "jsonable",
    "lookup_claim",
    "registry",
    "replay_refutation",
    "strict_noncommutative_count",
    "matrix_structure",
    "new_loop",
    "product",
    "sym_structure",
    "unbounded_groupoid",
    "units_group",
    "zn_group",
    "zn_groupoid",
    "zn_semigroup",
    "Command",
    "Let",
    "Script",
    "parse_script",
    "render",
    "RunResult",
    "execute",
    "export_table",
    "max_order_cap",
    "ArityMismatch",
    "BadLoopParams",
    "BadN",
    "BudgetExceeded",
    "CarrierMismatch",
    "DegreeTooLarge",
    "IalgError",
    "InfiniteCarrier",
    "IoError",
    "NoAbsorber",
    "NoAbsorberInComponent",
    "NoIdentity",
    "NonResiduePair",
    "NonSquareMul",
    "NotLatin",
    "ParseError",
    "RangeTooLarge",
    "UndefinedName",
    "UnknownClaim",
    "UnsupportedBase",
    "FAILS",
    "QUASI_SMARANDACHE",
    "SMARANDACHE",
    "STRONG",
    "Identity",
    "IdentityVerdict",
    "catalog",
    "check_identity",
    "lookup",
    "predict_zn",
    "s_check_identity",
    "Magma",
    "StructureClass",
    "classify_index_table",
    "SpecialElementReport",
    "cauchy_audit",
    "find_quasi_special",
    "find_special",
    "Structure",
    "order_of",
    "SmarandacheWitness",
    "Substructure",
    "closure",
    "derived_subloops",
    "enumerate_ideals",
    "enumerate_substructures",
    "is_normal_subloop",
    "is_simple",
    "lagrange_audit",
    "loop_centers",
    "loop_subloop_family",
    "normalizers",
    "principal_isotope",
    "smarandache_witness",
    "substructure_to_dict",
    "sylow_audit",
]
