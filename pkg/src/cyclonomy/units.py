"""Units of Z[zeta_p]: recognition, inversion, torsion splitting, Kummer checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Sequence

from .errors import (
    HypothesisFailed,
    InternalInconsistency,
    MinusSignCase,
    NoTorsionMatch,
    NotAUnit,
    NotDivisible,
    OutOfRange,
)
from .field import CycInt, FieldContext, divide_exact, galois_apply, lambda_valuation, norm


@dataclass(frozen=True)
class UnitElem:
    value: CycInt
    norm_witness: int = 1

    def __post_init__(self):
        if self.norm_witness != 1:
            raise NotAUnit(self.norm_witness)

    @property
    def ctx(self) -> FieldContext:
        return self.value.ctx

    def __mul__(self, other: UnitElem) -> UnitElem:
        return UnitElem(self.value * other.value)

    def __pow__(self, e: int) -> UnitElem:
        if e < 0:
            return unit_inverse(self) ** (-e)
        return UnitElem(self.value**e)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with Z[zeta_p] coefficients; ``coefficients[i]`` multiplies X^i."""

    coefficients: tuple[CycInt, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1].is_zero:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1


def as_unit(a: CycInt) -> UnitElem:
    n = norm(a)
    if n != 1:
        raise NotAUnit(n)
    return UnitElem(a, n)


def unit_inverse(u: UnitElem) -> UnitElem:
    inv = u.value.conjugate_cofactor()
    if u.value * inv != 1:
        raise InternalInconsistency("conjugate cofactor is not the inverse of a norm-one element")
    return UnitElem(inv)


def cyclotomic_unit(ctx: FieldContext, k: int) -> UnitElem:
    """(1 - zeta^k)/(1 - zeta) = 1 + zeta + ... + zeta^(k-1)."""
    if not 2 <= k <= ctx.p - 1:
        raise OutOfRange(f"k must lie in 2..{ctx.p - 1}, got {k}")
    value = ctx.zero()
    for i in range(k):
        value = value + ctx.zeta(i)
    return as_unit(value)


def torsion_index(t: CycInt) -> tuple[int, int]:
    """Return (sign, m) with t = sign * zeta^m, by comparing all 2p candidates."""
    ctx = t.ctx
    for m in range(ctx.p):
        z = ctx.zeta(m)
        if t == z:
            return 1, m
        if t == -z:
            return -1, m
    raise NoTorsionMatch(f"{t} is not of the form +-zeta^m")


def decompose_real(u: UnitElem) -> tuple[int, CycInt]:
    """Write u = zeta^n * x with x fixed by complex conjugation."""
    ctx = u.ctx
    p = ctx.p
    conj = UnitElem(galois_apply(p - 1, u.value))
    t = u.value * unit_inverse(conj).value
    sign, m = torsion_index(t)
    if sign < 0:
        raise MinusSignCase(f"u / conj(u) = -zeta^{m}")
    n = m * (p + 1) // 2 % p
    x = ctx.zeta(-n) * u.value
    if galois_apply(p - 1, x) != x or ctx.zeta(n) * x != u.value:
        raise InternalInconsistency("real decomposition failed to verify")
    return n, x


def congruent_integer_mod_p(u: UnitElem) -> int | None:
    """The n in 0..p-1 with p | u - n, or None when no such integer exists."""
    p = u.ctx.p
    c = u.value.coeffs
    if any(ci % p for ci in c[1:]):
        return None
    return c[0] % p


def kummer_search(u: UnitElem, generators: Sequence[UnitElem], bound: int) -> UnitElem | None:
    """Look for v = +-zeta^a * prod g_i^b_i (|b_i| <= bound) with v^p = u.

    None means nothing was found inside the box; it does not prove u is
    not a p-th power.
    """
    if not generators:
        raise ValueError("generators must be nonempty")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ctx = u.ctx
    p = ctx.p
    # v^p = (+-1)^p zeta^(ap) prod g^(b p) = +-prod (g^p)^b, so search on p-th powers
    gp = [g.value**p for g in generators]
    gp_inv = [unit_inverse(UnitElem(x)).value for x in gp]
    target = u.value
    exps = range(-bound, bound + 1)
    for bs in sorted(product(exps, repeat=len(generators)), key=lambda b: (sum(map(abs, b)), b)):
        acc = ctx.one()
        for b, fwd, back in zip(bs, gp, gp_inv):
            acc = acc * (fwd**b if b >= 0 else back ** (-b))
        for sign in (1, -1):
            if acc * sign == target:
                v = ctx.one() * sign
                for b, g in zip(bs, generators):
                    v = v * (g**b).value
                v_unit = UnitElem(v)
                if v_unit.value**p != target:
                    raise InternalInconsistency("kummer_search witness fails to verify")
                return v_unit
    return None


def build_Pu(u: UnitElem) -> IntPolynomial:
    """((lambda X - 1)^p + u) / lambda^p, coefficientwise."""
    ctx = u.ctx
    p = ctx.p
    lam = ctx.lam()
    if not (u.value - 1).is_zero and lambda_valuation(u.value - 1) < p:
        raise HypothesisFailed("lambda^p does not divide u - 1")
    lam_p = lam**p
    coeffs = []
    for k in range(p + 1):
        # coefficient of X^k in (lambda X - 1)^p
        c = lam**k * (comb(p, k) * (-1) ** (p - k))
        if k == 0:
            c = c + u.value
        try:
            coeffs.append(divide_exact(c, lam_p))
        except NotDivisible as exc:
            raise InternalInconsistency(f"coefficient of X^{k} not divisible by lambda^p") from exc
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return IntPolynomial(tuple(coeffs))


def default_generators(ctx: FieldContext) -> list[UnitElem]:
    """Cyclotomic units 1 + zeta + ... + zeta^(k-1), k = 2..(p-1)/2, or zeta for p = 3."""
    p = ctx.p
    if p == 3:
        return [UnitElem(ctx.zeta())]
    return [cyclotomic_unit(ctx, k) for k in range(2, (p + 1) // 2)]
