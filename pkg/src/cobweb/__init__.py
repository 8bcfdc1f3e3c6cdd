"""Cobweb posets: Möbius functions, Whitney numbers and characteristic polynomials."""

from .charpoly import (
    ClosedFormTables,
    VerificationReport,
    charpoly_by_method,
    charpoly_closed,
    charpoly_recurrence,
    mobius_closed,
    verify,
    whitney_closed,
)
from .errors import CobwebError, DomainError, InconsistencyError, RangeError, ResourceError, SpecParseError
from .oracle import (
    MobiusTable,
    WhitneyTable,
    charpoly_bruteforce,
    mobius_bruteforce,
    mobius_table_bruteforce,
    whitney_bruteforce,
)
from .polynomial import IntPolynomial, poly_add, poly_eval, poly_shift_mul
from .poset import CobwebPoset, Vertex, build, export_dot
from .sequence import Kind, SequenceSpec, evaluate, parse_spec, render

__version__ = "0.1.0"
