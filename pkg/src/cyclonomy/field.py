"""Exact arithmetic in Z[zeta_p] and Q(zeta_p).

Elements are coefficient vectors on the power basis 1, zeta, ..., zeta^(p-2),
little-endian. ``CycInt`` holds Python ints, ``CycRat`` holds ``Fraction``s.
Both are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence, Union

from .arith import is_prime
from .errors import (
    ContextMismatch,
    ElementFormatError,
    InternalInconsistency,
    NotAnOddPrime,
    NotCoprime,
    NotDivisible,
    ZeroDivisor,
    ZeroInput,
)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class FieldContext:
    """The p-th cyclotomic field for an odd prime p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not is_prime(self.p):
            raise NotAnOddPrime(f"p must be an odd prime, got {self.p!r}")

    @property
    def degree(self) -> int:
        return self.p - 1

    @property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients of Phi_p = 1 + X + ... + X^(p-1)."""
        return (1,) * self.p

    def element(self, coeffs: Iterable[Number]) -> CycInt | CycRat:
        return _make(self, tuple(coeffs))

    def from_int(self, n: int) -> CycInt:
        return CycInt(self, (n,) + (0,) * (self.p - 2))

    def zero(self) -> CycInt:
        return self.from_int(0)

    def one(self) -> CycInt:
        return self.from_int(1)

    def zeta(self, k: int = 1) -> CycInt:
        """zeta^k, any integer k."""
        raw = [0] * self.p
        raw[k % self.p] = 1
        return CycInt(self, _fold(raw))

    def lam(self) -> CycInt:
        """lambda = zeta - 1."""
        return self.zeta() - 1


def ctx_new(p: int) -> FieldContext:
    return FieldContext(p)


def _fold(raw: Sequence[Number]) -> tuple:
    """Reduce a length-p vector (coefficients of 1..X^(p-1)) modulo Phi_p."""
    top = raw[-1]
    if top == 0:
        return tuple(raw[:-1])
    return tuple(c - top for c in raw[:-1])


def _make(ctx: FieldContext, coeffs: tuple) -> CycInt | CycRat:
    if all(type(c) is int for c in coeffs):
        return CycInt(ctx, coeffs)
    return CycRat(ctx, coeffs)


class _CycElement:
    def __init__(self, ctx: FieldContext, coeffs: Sequence[Number]):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.p - 1:
            raise ElementFormatError(
                f"expected {ctx.p - 1} coefficients for p={ctx.p}, got {len(coeffs)}"
            )
        self.ctx = ctx
        self.coeffs = self._normalize(coeffs)

    @staticmethod
    def _normalize(coeffs):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(p={self.ctx.p}, {list(map(str, self.coeffs))})"

    def __str__(self):
        return format_element(self)

    def __eq__(self, other):
        if isinstance(other, _CycElement):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _other(self, other) -> _CycElement:
        if isinstance(other, _CycElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"p={self.ctx.p} vs p={other.ctx.p}")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if isinstance(other, Fraction):
            return CycRat(self.ctx, (other,) + (0,) * (self.ctx.p - 2))
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _result(self, other: _CycElement, coeffs) -> CycInt | CycRat:
        if isinstance(self, CycRat) or isinstance(other, CycRat):
            return CycRat(self.ctx, coeffs)
        return CycInt(self.ctx, coeffs)

    def __add__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self._result(o, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self._result(o, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return type(self)(self.ctx, (-c for c in self.coeffs))

    def __mul__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        if not isinstance(other, _CycElement):
            return self._result(o, (c * other for c in self.coeffs))
        return self._result(o, _cyclic_mul(self.coeffs, o.coeffs, self.ctx.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one() if isinstance(self, CycInt) else CycRat(self.ctx, self.ctx.one().coeffs)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        o = self._other(other)
        if o.is_zero:
            raise ZeroDivisor("division by zero")
        return to_rat(self) * o.inverse()

    def __rtruediv__(self, other):
        return self._other(other) / self

    def conjugate_cofactor(self) -> CycInt | CycRat:
        """Product of sigma_k(self) over k = 2..p-1."""
        acc = self.ctx.one()
        for k in range(2, self.ctx.p):
            acc = acc * galois_apply(k, self)
        return acc

    def inverse(self) -> CycRat:
        if self.is_zero:
            raise ZeroDivisor("zero has no inverse")
        cof = self.conjugate_cofactor()
        n = self * cof
        if any(n.coeffs[1:]):
            raise InternalInconsistency("conjugate product is not rational")
        return CycRat(self.ctx, (Fraction(c) / n.coeffs[0] for c in cof.coeffs))

    def poly(self) -> list[Number]:
        """Coefficients as a plain list, trailing zeros stripped."""
        out = list(self.coeffs)
        while out and out[-1] == 0:
            out.pop()
        return out


class CycInt(_CycElement):
    """Element of Z[zeta_p]."""

    @staticmethod
    def _normalize(coeffs):
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ElementFormatError(f"non-integral coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise ElementFormatError(f"bad coefficient {c!r}")
            out.append(int(c))
        return tuple(out)

    @property
    def is_integral(self) -> bool:
        return True


class CycRat(_CycElement):
    """Element of Q(zeta_p)."""

    @staticmethod
    def _normalize(coeffs):
        return tuple(Fraction(c) for c in coeffs)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    @cached_property
    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs))

    def to_int(self) -> CycInt:
        if not self.is_integral:
            raise NotDivisible(f"{self} is not integral")
        return CycInt(self.ctx, (c.numerator for c in self.coeffs))


def to_rat(a: _CycElement) -> CycRat:
    return a if isinstance(a, CycRat) else CycRat(a.ctx, a.coeffs)


def _cyclic_mul(a: Sequence[Number], b: Sequence[Number], p: int) -> tuple:
    # multiply modulo X^p - 1, then fold the X^(p-1) term using Phi_p
    raw = [0] * p
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                k = i + j
                if k >= p:
                    k -= p
                raw[k] += ai * bj
    return _fold(raw)


def reduce(ctx: FieldContext, raw: Sequence[Number]) -> CycInt | CycRat:
    """Reduce a polynomial in zeta of any degree to the power basis."""
    acc = [0] * ctx.p
    for i, c in enumerate(raw):
        acc[i % ctx.p] += c
    return _make(ctx, _fold(acc))


def mul(a: _CycElement, b: _CycElement):
    return a * b


def add(a: _CycElement, b: _CycElement):
    return a + b


def sub(a: _CycElement, b: _CycElement):
    return a - b


def neg(a: _CycElement):
    return -a


def galois_apply(k: int, a: _CycElement):
    """Apply sigma_k: zeta -> zeta^k."""
    p = a.ctx.p
    if k % p == 0:
        raise NotCoprime(f"{k} is divisible by p={p}")
    raw = [0] * p
    for i, c in enumerate(a.coeffs):
        raw[i * k % p] += c
    return type(a)(a.ctx, _fold(raw))


def _poly_divmod(f: list, g: list) -> tuple[list, list]:
    """Division of Fraction polynomials (little-endian, g nonzero, stripped)."""
    r = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lc = Fraction(g[-1])
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        t = r[-1] / lc
        q[shift] = t
        for i, gi in enumerate(g):
            r[shift + i] -= t * gi
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return q, r


def resultant(f: Sequence[Number], g: Sequence[Number]) -> Fraction:
    """Res(f, g) of two univariate polynomials via the Euclidean algorithm.

    Coefficients little-endian. Zero polynomials give 0.
    """
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    if not f or not g:
        return Fraction(0)
    acc = Fraction(1)
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return acc * g[0] ** m
        if m == 0:
            return acc * f[0] ** n
        if m < n:
            f, g = g, f
            if (m * n) % 2:
                acc = -acc
            continue
        _, r = _poly_divmod(f, g)
        if not r:
            return Fraction(0)
        # Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)
        if (m * n) % 2:
            acc = -acc
        acc *= g[-1] ** (m - (len(r) - 1))
        f, g = g, r


def norm(a: _CycElement) -> Number:
    """N(a) = Res(Phi_p, a). An int for CycInt input."""
    value = resultant(a.ctx.modulus, a.poly())
    if isinstance(a, CycInt):
        if value.denominator != 1:
            raise InternalInconsistency(f"norm of an integral element is {value}")
        return value.numerator
    return value


def norm_by_conjugates(a: _CycElement) -> Number:
    """Norm as the product of all p-1 Galois conjugates."""
    prod = a * a.conjugate_cofactor()
    if any(prod.coeffs[1:]):
        raise InternalInconsistency("conjugate product is not rational")
    return prod.coeffs[0]


def trace(a: _CycElement) -> Number:
    # Tr(zeta^i) = -1 for 0 < i < p, Tr(1) = p - 1
    c = a.coeffs
    return (a.ctx.p - 1) * c[0] - sum(c[1:])


def lambda_valuation(a: CycInt) -> int:
    if a.is_zero:
        raise ZeroInput("valuation of zero is undefined")
    lam = a.ctx.lam()
    t = 0
    while True:
        try:
            a = divide_exact(a, lam)
        except NotDivisible:
            return t
        t += 1


def reduce_mod_lambda(a: CycInt) -> int:
    """Image in Z[zeta]/(lambda) = Z/p (zeta -> 1)."""
    return sum(a.coeffs) % a.ctx.p


def divide_exact(a: CycInt, b: CycInt) -> CycInt:
    """c with b*c = a, or NotDivisible if a/b is not integral."""
    if b.ctx != a.ctx:
        raise ContextMismatch(f"p={a.ctx.p} vs p={b.ctx.p}")
    if b.is_zero:
        raise ZeroDivisor("divisor is zero")
    cof = b.conjugate_cofactor()
    n = norm(b)
    numer = a * cof
    if any(c % n for c in numer.coeffs):
        raise NotDivisible(f"{a} is not divisible by {b}")
    quotient = CycInt(a.ctx, (c // n for c in numer.coeffs))
    if quotient * b != a:
        raise InternalInconsistency("exact quotient fails to re-multiply")
    return quotient


def discriminant(p: int | FieldContext) -> int:
    """Discriminant of Q(zeta_p), as disc(Phi_p) via Res(Phi_p, Phi_p')."""
    ctx = p if isinstance(p, FieldContext) else FieldContext(p)
    phi = ctx.modulus
    deriv = [i * c for i, c in enumerate(phi)][1:]
    n = ctx.degree
    value = resultant(phi, deriv)
    if (n * (n - 1) // 2) % 2:
        value = -value
    return value.numerator


def pth_power_residue(a: CycInt) -> int:
    """n in 0..p-1 with p | a^p - n."""
    p = a.ctx.p
    power = a**p
    if any(c % p for c in power.coeffs[1:]):
        raise InternalInconsistency(f"{a}^p is not congruent to an integer mod p")
    return power.coeffs[0] % p


def parse_element(ctx: FieldContext, text: str) -> CycInt | CycRat:
    """Parse "c0,c1,...,c_{p-2}"; coefficients are integers or "a/b"."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != ctx.p - 1:
        raise ElementFormatError(
            f"element {text!r} has {len(parts)} coefficients; expected p-1 = {ctx.p - 1}"
        )
    coeffs = []
    for s in parts:
        try:
            c = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ElementFormatError(f"bad coefficient {s!r} in {text!r}") from exc
        if "." in s or "e" in s.lower():
            raise ElementFormatError(f"coefficient {s!r} must be an integer or a/b")
        coeffs.append(c.numerator if c.denominator == 1 else c)
    return _make(ctx, tuple(coeffs))


def format_element(a: _CycElement) -> str:
    return ",".join(str(c) for c in a.coeffs)
