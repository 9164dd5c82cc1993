"""Ideals of Z[zeta_p] as integer lattices in row Hermite normal form.

Also: splitting of rational primes, an interval enclosure of the Minkowski
bound, class-number-one certification for p in {3, 5, 7}, and the
coprime-power principality lemma on a finite abelian group model.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial, gcd, isqrt, prod
from typing import Sequence

from . import gfpoly
from .arith import is_prime, multiplicative_order, primes_upto
from .errors import (
    CertificationFailed,
    ContextMismatch,
    InternalInconsistency,
    NotCoprime,
    NotPrime,
    UnsupportedPrime,
    ZeroIdeal,
)
from .field import CycInt, FieldContext, discriminant, norm, reduce

# q^f at or below this uses exhaustive search for the degree-f factors
EXHAUSTIVE_LIMIT = 10**4
SPLIT_SEED = 20240101

PI_LO = Fraction("3.14159265358979")
PI_HI = Fraction("3.14159265358980")


def hermite_normal_form(rows: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Row HNF of a full-rank integer lattice in Z^n.

    Upper triangular, positive diagonal, entries above each pivot in [0, pivot).
    Raises ValueError if the rows do not span a rank-n lattice.
    """
    pending = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    for j in range(n):
        while True:
            nz = [r for r in pending if r[j] != 0]
            if len(nz) <= 1:
                break
            pivot = min(nz, key=lambda r: abs(r[j]))
            for r in nz:
                if r is not pivot:
                    qt = r[j] // pivot[j]
                    for k in range(j, n):
                        r[k] -= qt * pivot[k]
            pending = [r for r in pending if any(r)]
        nz = [r for r in pending if r[j] != 0]
        if not nz:
            raise ValueError("lattice is not of full rank")
        pivot = nz[0]
        pending.remove(pivot)
        if pivot[j] < 0:
            pivot = [-c for c in pivot]
        out.append(pivot)
    for i in range(n):
        d = out[i][i]
        for k in range(i):
            qt = out[k][i] // d
            if qt:
                out[k] = [a - qt * b for a, b in zip(out[k], out[i])]
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class CycIdeal:
    ctx: FieldContext
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.ctx.degree
        if len(self.basis) != n or any(len(r) != n for r in self.basis):
            raise ValueError(f"basis must be {n}x{n}")
        for i, row in enumerate(self.basis):
            if row[i] <= 0 or any(row[:i]):
                raise ValueError("basis is not in Hermite normal form")
            for k in range(i):
                if not 0 <= self.basis[k][i] < row[i]:
                    raise ValueError("basis is not in Hermite normal form")
        zeta = self.ctx.zeta()
        for row in self.basis:
            if not self.contains(CycInt(self.ctx, row) * zeta):
                raise InternalInconsistency("lattice is not closed under multiplication by zeta")

    @property
    def norm(self) -> int:
        return prod(self.basis[i][i] for i in range(self.ctx.degree))

    def contains(self, a: CycInt) -> bool:
        v = list(a.coeffs)
        for i, row in enumerate(self.basis):
            if v[i] % row[i]:
                return False
            qt = v[i] // row[i]
            if qt:
                v = [x - qt * y for x, y in zip(v, row)]
        return not any(v)

    def generators(self) -> list[CycInt]:
        return [CycInt(self.ctx, row) for row in self.basis]


def ideal_from_generators(gens: Sequence[CycInt]) -> CycIdeal:
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ZeroIdeal("all generators are zero")
    ctx = gens[0].ctx
    if any(g.ctx != ctx for g in gens):
        raise ContextMismatch("generators from different fields")
    rows = []
    for g in gens:
        x = g
        for _ in range(ctx.degree):
            rows.append(x.coeffs)
            x = x * ctx.zeta()
    return CycIdeal(ctx, hermite_normal_form(rows, ctx.degree))


def _same_ctx(I: CycIdeal, J: CycIdeal):
    if I.ctx != J.ctx:
        raise ContextMismatch(f"p={I.ctx.p} vs p={J.ctx.p}")


def ideal_mul(I: CycIdeal, J: CycIdeal) -> CycIdeal:
    _same_ctx(I, J)
    rows = [(a * b).coeffs for a in I.generators() for b in J.generators()]
    return CycIdeal(I.ctx, hermite_normal_form(rows, I.ctx.degree))


def ideal_sum(I: CycIdeal, J: CycIdeal) -> CycIdeal:
    _same_ctx(I, J)
    return CycIdeal(I.ctx, hermite_normal_form(I.basis + J.basis, I.ctx.degree))


def ideal_norm(I: CycIdeal) -> int:
    return I.norm


@dataclass(frozen=True)
class SplittingData:
    q: int
    e: int
    f: int
    g: int
    primes: tuple[CycIdeal, ...]

    def __post_init__(self):
        if self.e * self.f * self.g != self.primes[0].ctx.degree:
            raise InternalInconsistency("e*f*g != p-1")


def factor_cyclotomic_mod(ctx: FieldContext, q: int, seed: int = SPLIT_SEED) -> list[list[int]]:
    """Monic irreducible factors of Phi_p over F_q (q != p), sorted."""
    f = multiplicative_order(q, ctx.p)
    phi = list(ctx.modulus)
    if q**f <= EXHAUSTIVE_LIMIT:
        factors = gfpoly.factor_equal_degree_exhaustive(phi, f, q)
    else:
        factors = gfpoly.factor_equal_degree_cz(phi, f, q, random.Random(seed))
    if len(factors) != ctx.degree // f:
        raise InternalInconsistency(f"found {len(factors)} factors of Phi_{ctx.p} mod {q}")
    return sorted(factors, key=lambda h: h[::-1])


def prime_split(ctx: FieldContext, q: int, seed: int = SPLIT_SEED) -> SplittingData:
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q == ctx.p:
        return SplittingData(q, ctx.degree, 1, 1, (ideal_from_generators([ctx.lam()]),))
    f = multiplicative_order(q, ctx.p)
    primes = tuple(
        ideal_from_generators([ctx.from_int(q), reduce(ctx, h)])
        for h in factor_cyclotomic_mod(ctx, q, seed)
    )
    return SplittingData(q, 1, f, ctx.degree // f, primes)


def _sqrt_bounds(n: Fraction, digits: int = 30) -> tuple[Fraction, Fraction]:
    scale = 10**digits
    num = n.numerator * n.denominator * scale * scale
    r = isqrt(num)
    lo = Fraction(r, n.denominator * scale)
    hi = lo if r * r == num else Fraction(r + 1, n.denominator * scale)
    return lo, hi


def minkowski_bound(ctx: FieldContext) -> tuple[Fraction, Fraction]:
    """Rational enclosure of sqrt|d| (4/pi)^r2 n!/n^n, with n = p-1, r2 = n/2."""
    n = ctx.degree
    r2 = n // 2
    s_lo, s_hi = _sqrt_bounds(Fraction(abs(discriminant(ctx))))
    shape = Fraction(factorial(n), n**n)
    lo = s_lo * (4 / PI_HI) ** r2 * shape
    hi = s_hi * (4 / PI_LO) ** r2 * shape
    return lo, hi


def _box(n: int, height: int):
    for h in range(1, height + 1):
        for v in product(range(-h, h + 1), repeat=n):
            if max(map(abs, v)) == h:
                yield v


def is_principal_bounded(I: CycIdeal, height: int) -> CycInt | None:
    """Search the coefficient box of the given height for a generator of I."""
    target = I.norm
    if target == 1:
        return I.ctx.one()
    for v in _box(I.ctx.degree, height):
        a = CycInt(I.ctx, v)
        if I.contains(a) and abs(norm(a)) == target:
            return a
    return None


@dataclass
class ClassNumberCertificate:
    p: int
    minkowski: tuple[Fraction, Fraction]
    primes_checked: list[dict] = field(default_factory=list)
    class_number: int = 1


def certify_class_number_one(ctx: FieldContext, height: int = 2) -> ClassNumberCertificate:
    """Show every prime ideal of norm <= the Minkowski bound is principal."""
    if ctx.p not in (3, 5, 7):
        raise UnsupportedPrime(f"class number certification supports p in 3, 5, 7; got {ctx.p}")
    lo, hi = minkowski_bound(ctx)
    cert = ClassNumberCertificate(ctx.p, (lo, hi))
    for q in primes_upto(int(hi)):
        split = prime_split(ctx, q)
        witnesses = []
        for P in split.primes:
            if P.norm > hi:
                continue
            gen = is_principal_bounded(P, height)
            if gen is None:
                raise CertificationFailed(f"no generator of height <= {height} for a prime above {q}")
            witnesses.append(gen)
        cert.primes_checked.append({"q": q, "f": split.f, "g": split.g, "principal_witness": witnesses})
    return cert


def class_number_small(ctx: FieldContext) -> int:
    return certify_class_number_one(ctx).class_number


@dataclass(frozen=True)
class ClassGroupModel:
    """Finite abelian group Z/d1 x Z/d2 x ... with d1 | d2 | ..."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        ds = self.invariant_factors
        if any(d < 1 for d in ds) or any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"invalid invariant factors {ds}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def power(self, x: Sequence[int], n: int) -> tuple[int, ...]:
        return tuple(n * xi % d for xi, d in zip(x, self.invariant_factors))

    def is_identity(self, x: Sequence[int]) -> bool:
        return all(xi % d == 0 for xi, d in zip(x, self.invariant_factors))


def coprime_power_trivial(G: ClassGroupModel, x: Sequence[int], n: int) -> bool:
    """Check the lemma instance: gcd(n, |G|) = 1 and x^n = e imply x = e."""
    if gcd(n, G.order) != 1:
        raise NotCoprime(f"gcd({n}, {G.order}) != 1")
    if len(x) != len(G.invariant_factors):
        raise ValueError("exponent vector has the wrong length")
    y = G.power(x, n)
    # n is invertible modulo the exponent, so x is recovered from x^n
    recovered = G.power(y, pow(n, -1, G.exponent)) if G.exponent > 1 else y
    if not G.is_identity([a - b for a, b in zip(recovered, x)]):
        raise InternalInconsistency("failed to recover x from x^n")
    return not G.is_identity(y) or G.is_identity(x)
