"""Checkable pieces of the Fermat descent over Z[zeta_p].

Case split of integer triples, a brute-force search for a^n + b^n = c^n,
the quotient map eta -> (x + eta y)/lambda and its residues mod lambda,
the norm-product factorization of x^p + y^p, and a checker for instances of
x^p + y^p = eps * lambda^(p(m+1)) * z^p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .arith import iroot
from .errors import HypothesisFailed, InternalInconsistency, NonUniqueZero
from .field import CycInt, divide_exact, reduce_mod_lambda
from .units import UnitElem


class Case(enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class FermatTriple:
    a: int
    b: int
    c: int
    exponent: int

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]


@dataclass(frozen=True)
class DescentInstance:
    x: CycInt
    y: CycInt
    z: CycInt
    epsilon: UnitElem
    m: int


class QEntry(NamedTuple):
    m: int
    quotient: CycInt
    residue: int


@dataclass(frozen=True)
class Eq1Verdict:
    valid: bool
    clause: str | None = None
    reason: str | None = None

    def __bool__(self):
        return self.valid


def classify_case(t: FermatTriple, p: int) -> Case:
    if t.exponent != p:
        raise HypothesisFailed(f"triple exponent {t.exponent} differs from p={p}")
    a, b, c = t.a, t.b, t.c
    if a * b * c == 0 or gcd(gcd(a, b), c) != 1:
        return Case.DEGENERATE
    return Case.CASE_II if (a * b * c) % p == 0 else Case.CASE_I


def flt_search(p: int, bound: int) -> list[FermatTriple]:
    """All 1 <= a <= b < c <= bound with a^p + b^p = c^p."""
    if p < 2:
        raise ValueError("exponent must be >= 2")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    found = []
    for a in range(1, bound + 1):
        ap = a**p
        for b in range(a, bound + 1):
            c, exact = iroot(ap + b**p, p)
            if c > bound:
                break
            if exact:
                found.append(FermatTriple(a, b, c, p))
    return found


def _check_hypothesis(x: CycInt, y: CycInt):
    if reduce_mod_lambda(x + y) != 0:
        raise HypothesisFailed("lambda does not divide x + y")


def q_table(x: CycInt, y: CycInt) -> list[QEntry]:
    """For each eta = zeta^m: q = (x + eta y)/lambda and q mod lambda."""
    _check_hypothesis(x, y)
    ctx = x.ctx
    lam = ctx.lam()
    rows = []
    for m in range(ctx.p):
        q = divide_exact(x + ctx.zeta(m) * y, lam)
        rows.append(QEntry(m, q, reduce_mod_lambda(q)))
    return rows


def eta_zero(x: CycInt, y: CycInt) -> int:
    """The unique m with (x + zeta^m y)/lambda = 0 mod lambda.

    Besides lambda | x + y this needs lambda not dividing y; otherwise all
    residues coincide.
    """
    _check_hypothesis(x, y)
    if reduce_mod_lambda(y) == 0:
        raise HypothesisFailed("lambda divides y; the residue map is constant")
    zeros = [row.m for row in q_table(x, y) if row.residue == 0]
    if len(zeros) != 1:
        raise NonUniqueZero(f"residue 0 attained at m in {zeros}")
    return zeros[0]


def product_identity_check(x: CycInt, y: CycInt) -> bool:
    """prod_m (x + zeta^m y) == x^p + y^p."""
    ctx = x.ctx
    acc = ctx.one()
    for m in range(ctx.p):
        acc = acc * (x + ctx.zeta(m) * y)
    if acc != x**ctx.p + y**ctx.p:
        raise InternalInconsistency("product over p-th roots of unity differs from x^p + y^p")
    return True


def verify_eq1(d: DescentInstance) -> Eq1Verdict:
    ctx = d.x.ctx
    p = ctx.p
    if reduce_mod_lambda(d.y) == 0:
        return Eq1Verdict(False, "y", "y is divisible by lambda")
    if reduce_mod_lambda(d.z) == 0:
        return Eq1Verdict(False, "z", "z is divisible by lambda")
    lhs = d.x**p + d.y**p
    rhs = d.epsilon.value * ctx.lam() ** (p * (d.m + 1)) * d.z**p
    if lhs != rhs:
        return Eq1Verdict(False, "equation", f"{lhs} != {rhs}")
    return Eq1Verdict(True)
