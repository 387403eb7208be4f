"""Finite executable models of quasi-set theory.

Collections here may hold m-atoms: elements that can be
indistinguishable without being identical, so that asking "is this one
equal to that one" is not merely false but ill-formed.  The package
provides the canonical qset representation, the indistinguishability and
extensional-equality relations, axiom-backed constructors, a labelling
loop that tags indiscernible elements with integers without conferring
individuality, microstate counting for quantum statistics, a textual
notation, and a seeded property battery.
"""

from .algebra import (
    OrderedPair,
    StrongSingleton,
    decode_pair,
    difference,
    distinguishable_subqsets,
    ordered_pair,
    power_qc,
    separation,
    strong_pair,
    strong_singleton_of,
    sub_qset_of_card,
    union,
    weak_pair,
)
from .core import (
    EMPTY,
    Entity,
    MAtom,
    MacroAtom,
    MAX_DEPTH,
    NatLabel,
    QSet,
    is_set,
    member,
    member_species,
    qc,
)
from .errors import (
    CardinalTooLarge,
    CountZero,
    DepthExceeded,
    EmptyQset,
    IllFormedFormula,
    MalformedPair,
    NotAMember,
    NotPure,
    Overflow,
    QsetError,
    QsetSyntaxError,
    ScaleExceeded,
    UniverseMiss,
)
from .labelling import LabelledWarehouse, label, verify_weak_labelling
from .notation import parse, print_canonical
from .relations import QuotientView, ext_eq, indist, qsim, quotient, sim, weak_ext_indist
from .stats import (
    CARDINAL_LIMIT,
    ENUMERATION_LIMIT,
    OccupancyVector,
    StatKind,
    enumerate_occupancies,
    mb_weight,
    microstate_count,
    quasi_function_count,
)
from .suite import GenConfig, SuiteReport, generate, run_suite

__version__ = "0.1.0"

__all__ = [
    "CARDINAL_LIMIT",
    "CardinalTooLarge",
    "CountZero",
    "DepthExceeded",
    "EMPTY",
    "ENUMERATION_LIMIT",
    "EmptyQset",
    "Entity",
    "GenConfig",
    "IllFormedFormula",
    "LabelledWarehouse",
    "MAX_DEPTH",
    "MAtom",
    "MacroAtom",
    "MalformedPair",
    "NatLabel",
    "NotAMember",
    "NotPure",
    "OccupancyVector",
    "OrderedPair",
    "Overflow",
    "QSet",
    "QsetError",
    "QsetSyntaxError",
    "QuotientView",
    "ScaleExceeded",
    "StatKind",
    "StrongSingleton",
    "SuiteReport",
    "UniverseMiss",
    "decode_pair",
    "difference",
    "distinguishable_subqsets",
    "enumerate_occupancies",
    "ext_eq",
    "generate",
    "indist",
    "is_set",
    "label",
    "mb_weight",
    "member",
    "member_species",
    "microstate_count",
    "ordered_pair",
    "parse",
    "power_qc",
    "print_canonical",
    "qc",
    "qsim",
    "quasi_function_count",
    "quotient",
    "run_suite",
    "separation",
    "sim",
    "strong_pair",
    "strong_singleton_of",
    "sub_qset_of_card",
    "union",
    "verify_weak_labelling",
    "weak_ext_indist",
    "weak_pair",
]
