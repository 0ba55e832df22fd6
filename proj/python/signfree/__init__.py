"""Sign-free number systems: unsigned pairs, cyclic triples and 3x3 cyclic matrices."""

from ._signfree import (
    DivisionByZero,
    EvalError,
    Matrix,
    NegativeValue,
    Pair,
    ParseError,
    RowSelector,
    Scalar,
    Triple,
    absolute_zero,
    evaluate,
    evaluate_text,
    identify_unit,
    roots_report,
    rotation_zero,
    run_properties,
    unit,
    unit_labels,
    verify_tables,
)

__all__ = [
    "DivisionByZero",
    "EvalError",
    "Matrix",
    "NegativeValue",
    "Pair",
    "ParseError",
    "RowSelector",
    "Scalar",
    "Triple",
    "absolute_zero",
    "evaluate",
    "evaluate_text",
    "identify_unit",
    "roots_report",
    "rotation_zero",
    "run_properties",
    "unit",
    "unit_labels",
    "verify_tables",
]
