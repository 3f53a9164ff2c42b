"""Classification of connected monodromy groups of Kodaira fibrations.

The engine enumerates endomorphism-algebra classes and Hodge decompositions
of the fibre homology, applies the known exclusion rules, decides general
complete intersection realizability from codimension data, and reports the
possible connected monodromy groups.
"""

__version__ = "0.1.0"

from .albert import AlbertClass, AlbertType, SignatureIV, enumerate_albert_classes, enumerate_signatures
from .domains import DomainSpec, IrreducibleDomain, domain_dimension, domain_spec, is_cm
from .errors import DomainError, InconsistencyError, UnresolvedError, UsageError
from .hodge import (
    GroupDescriptor,
    HodgeDecomposition,
    SimpleSummandClass,
    enumerate_decompositions,
    hodge_group,
    monodromy_group,
)
from .isogeny import FormalSimple, PolarizedProduct, is_isogenous, mixing_exists, verify_inclusion_Y_in_Z
from .obstructions import (
    RULES,
    FeasibilityStatus,
    FeasibilityVerdict,
    KnowledgeBase,
    LocusRecord,
    apply_exclusions,
    assess,
    builtin_locus_records,
    decomposable_codim,
    gci_feasible,
)
from .report import ClassificationReport, classify

__all__ = [
    "AlbertClass", "AlbertType", "SignatureIV", "enumerate_albert_classes", "enumerate_signatures",
    "DomainSpec", "IrreducibleDomain", "domain_dimension", "domain_spec", "is_cm",
    "DomainError", "InconsistencyError", "UnresolvedError", "UsageError",
    "GroupDescriptor", "HodgeDecomposition", "SimpleSummandClass", "enumerate_decompositions",
    "hodge_group", "monodromy_group",
    "FormalSimple", "PolarizedProduct", "is_isogenous", "mixing_exists", "verify_inclusion_Y_in_Z",
    "RULES", "FeasibilityStatus", "FeasibilityVerdict", "KnowledgeBase", "LocusRecord",
    "apply_exclusions", "assess", "builtin_locus_records", "decomposable_codim", "gci_feasible",
    "ClassificationReport", "classify",
]
