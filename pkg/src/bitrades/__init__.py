"""Separated latin bitrades as triples of fixed-point-free permutations.

The library models a bitrade by the three permutations acting on its
entries, one per coordinate, whose product is the identity.  On top of
that sit the slide moves that grow and shrink a bitrade one point at a
time, a breadth-first canonical form, and an isomorph-free enumeration
of the spherical (genus zero) classes.
"""

from .canon import (
    AutGroup,
    Relabelling,
    automorphisms,
    canonical_form,
    canonical_parent,
    is_canonical_augmentation,
    triple_from_code,
)
from .enumerator import (
    CensusTable,
    RunConfig,
    SearchTask,
    bicyclic_roots,
    canaug_spherical,
    children,
    enumerate_all,
    split_tasks,
)
from .errors import (
    BitradeError,
    BoundExceeded,
    InvalidSite,
    InvalidSize,
    NoParent,
    NonIntegralGenus,
    NotABitrade,
    NotSeparated,
)
from .model import (
    TauTriple,
    TradePair,
    ValidationReport,
    as_triple,
    format_tau,
    format_trade,
    from_pair,
    genus,
    inverse,
    loads,
    parse_tau,
    parse_trade,
    to_pair,
    validate,
)
from .moves import (
    SlideSite,
    contraction_sites,
    expansion_sites,
    has_contraction_site,
    slide_contract,
    slide_expand,
)
from .oracle import ClassStore, naive_enumerate, verify_class_invariants

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "BitradeError",
    "BoundExceeded",
    "CensusTable",
    "ClassStore",
    "InvalidSite",
    "InvalidSize",
    "NoParent",
    "NonIntegralGenus",
    "NotABitrade",
    "NotSeparated",
    "Relabelling",
    "RunConfig",
    "SearchTask",
    "SlideSite",
    "TauTriple",
    "TradePair",
    "ValidationReport",
    "as_triple",
    "automorphisms",
    "bicyclic_roots",
    "canaug_spherical",
    "canonical_form",
    "canonical_parent",
    "children",
    "contraction_sites",
    "enumerate_all",
    "expansion_sites",
    "format_tau",
    "format_trade",
    "from_pair",
    "genus",
    "has_contraction_site",
    "inverse",
    "is_canonical_augmentation",
    "loads",
    "naive_enumerate",
    "parse_tau",
    "parse_trade",
    "slide_contract",
    "slide_expand",
    "split_tasks",
    "to_pair",
    "triple_from_code",
    "validate",
    "verify_class_invariants",
]
