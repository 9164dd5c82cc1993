"""Constructive Hilbert 90 for the cyclic extension Q(zeta_p)/Q.

The Galois group is generated by sigma: zeta -> zeta^g, g the least
primitive root mod p. Given eta of norm 1, the resolvent
b = sum_i c(sigma^i) sigma^i(theta) of the associated cocycle satisfies
eta * sigma(b) = b whenever it is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .arith import primitive_root
from .errors import ExhaustedBasis, InternalInconsistency, NormNotOne, NotIntegralEta
from .field import CycInt, CycRat, FieldContext, galois_apply, norm, to_rat


@dataclass(frozen=True)
class GaloisGroup:
    ctx: FieldContext

    @cached_property
    def generator(self) -> int:
        return primitive_root(self.ctx.p)

    @property
    def order(self) -> int:
        return self.ctx.p - 1

    def exponent(self, i: int) -> int:
        """k with sigma^i = sigma_k."""
        return pow(self.generator, i % self.order, self.ctx.p)

    def apply(self, i: int, a):
        return galois_apply(self.exponent(i), a)


@dataclass(frozen=True)
class Cocycle:
    group: GaloisGroup
    values: tuple[CycRat, ...]


def _require_norm_one(eta) -> Fraction:
    n = norm(eta)
    if n != 1:
        raise NormNotOne(n)
    return n


def cocycle_from_eta(eta) -> Cocycle:
    """c(sigma^n) = prod_{i<n} sigma^i(eta)."""
    _require_norm_one(eta)
    G = GaloisGroup(eta.ctx)
    eta = to_rat(eta)
    values = [to_rat(eta.ctx.one())]
    for i in range(G.order - 1):
        values.append(values[-1] * G.apply(i, eta))
    c = Cocycle(G, tuple(values))
    if not verify_cocycle(c):
        raise InternalInconsistency("constructed map fails the cocycle identity")
    return c


def verify_cocycle(c: Cocycle) -> bool:
    """c(sigma^(i+j)) == sigma^i(c(sigma^j)) * c(sigma^i) for all i, j."""
    G, vals = c.group, c.values
    d = G.order
    if len(vals) != d:
        return False
    for i in range(d):
        for j in range(d):
            if vals[(i + j) % d] != G.apply(i, vals[j]) * vals[i]:
                return False
    return True


def resolvent(c: Cocycle, theta) -> CycRat:
    G = c.group
    acc = to_rat(G.ctx.zero())
    for i, ci in enumerate(c.values):
        acc = acc + ci * G.apply(i, theta)
    return acc


def hilbert90_witness(eta) -> CycRat:
    """Nonzero eps with eta * sigma(eps) == eps."""
    c = cocycle_from_eta(eta)
    G = c.group
    for j in range(G.order):
        b = resolvent(c, G.ctx.zeta(j))
        if not b.is_zero:
            if eta * G.apply(1, b) != b:
                raise InternalInconsistency("resolvent does not satisfy eta * sigma(b) = b")
            return b
    raise ExhaustedBasis("every resolvent on the power basis vanished")


def hilbert90_integral(eta) -> CycInt:
    """Integral version: scale the witness by the lcm of its denominators."""
    if isinstance(eta, CycRat) and not eta.is_integral:
        raise NotIntegralEta(f"{eta} is not in Z[zeta_p]")
    eps = hilbert90_witness(eta)
    return (eps * eps.denominator).to_int()
