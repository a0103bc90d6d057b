"""String attractors of bi-infinite words."""

from ._strattr import (
    Error,
    InvariantViolation,
    ParseError,
    PreconditionError,
    ResourceError,
    Spec,
    SymbolicError,
    check_attractor,
    classify,
    complexity,
    extract,
    min_size,
    min_span,
    modulo_recurrent,
    occ_mod,
    sparse_attractor,
    verify_span1,
)

__all__ = [
    "Error",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "Spec",
    "SymbolicError",
    "check_attractor",
    "classify",
    "complexity",
    "extract",
    "min_size",
    "min_span",
    "modulo_recurrent",
    "occ_mod",
    "sparse_attractor",
    "verify_span1",
]
