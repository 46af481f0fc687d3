"""Subgroup counting for small finite groups.

Thin Python surface over the compiled core: evaluate group expressions
(``"Z(4) x D(8)"``), count subgroups, enumerate abelian similarity
classes, query order-shape bounds, and re-verify the classification
tables.  See ``help(subcount._core)`` for per-function documentation.
"""

from ._core import (
    ArgumentError,
    Error,
    GeneratorError,
    ParseError,
    PresentationError,
    SizeError,
    VerificationError,
    abelian_class_count,
    abelian_classes,
    bound,
    candidate_families,
    count,
    lattice,
    nonabelian_class_count,
    order,
    run,
    sequence,
    verify_tables,
)

__all__ = [
    "ArgumentError",
    "Error",
    "GeneratorError",
    "ParseError",
    "PresentationError",
    "SizeError",
    "VerificationError",
    "abelian_class_count",
    "abelian_classes",
    "bound",
    "candidate_families",
    "count",
    "lattice",
    "nonabelian_class_count",
    "order",
    "run",
    "sequence",
    "verify_tables",
]

__version__ = "1.0.0"
