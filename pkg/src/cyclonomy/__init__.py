"""Exact arithmetic toolkit for the p-th cyclotomic field.

Cyclotomic integers, units and Kummer-style checks, ideal lattices and
class-number-one certificates, Bernoulli regularity, pieces of the Fermat
descent, and a constructive Hilbert 90.
"""

from .errors import CyclonomyError
from .field import (
    CycInt,
    CycRat,
    FieldContext,
    ctx_new,
    discriminant,
    divide_exact,
    galois_apply,
    lambda_valuation,
    norm,
    parse_element,
    pth_power_residue,
    reduce,
    reduce_mod_lambda,
    trace,
)

__version__ = "0.1.0"

__all__ = [
    "CyclonomyError",
    "CycInt",
    "CycRat",
    "FieldContext",
    "ctx_new",
    "discriminant",
    "divide_exact",
    "galois_apply",
    "lambda_valuation",
    "norm",
    "parse_element",
    "pth_power_residue",
    "reduce",
    "reduce_mod_lambda",
    "trace",
]
