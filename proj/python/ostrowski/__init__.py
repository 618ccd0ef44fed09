"""Ostrowski numeration for quadratic irrationals."""

from ._core import (
    DigitSeq,
    OstrowskiError,
    OstrowskiInt,
    QuadraticNumber,
    System,
    add,
    cmp,
    decode,
    encode,
    f_map,
    mul_phi,
    neg_beta_digits,
    real_cmp,
    real_decode,
    real_encode,
    run_cli,
    succ,
    validate,
    verify_all,
)

__all__ = [
    "DigitSeq",
    "OstrowskiError",
    "OstrowskiInt",
    "QuadraticNumber",
    "System",
    "add",
    "cmp",
    "decode",
    "encode",
    "f_map",
    "mul_phi",
    "neg_beta_digits",
    "real_cmp",
    "real_decode",
    "real_encode",
    "run_cli",
    "succ",
    "validate",
    "verify_all",
]
