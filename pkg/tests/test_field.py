from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclonomy.errors import (
    ContextMismatch,
    ElementFormatError,
    NotAnOddPrime,
    NotCoprime,
    NotDivisible,
    ZeroDivisor,
    ZeroInput,
)
from cyclonomy.field import (
    CycInt,
    CycRat,
    FieldContext,
    ctx_new,
    discriminant,
    divide_exact,
    galois_apply,
    lambda_valuation,
    norm,
    norm_by_conjugates,
    parse_element,
    pth_power_residue,
    reduce,
    reduce_mod_lambda,
    resultant,
    trace,
)

from conftest import cycint_pairs, cycints

X = sympy.symbols("X")


def sympy_reduce(p, raw):
    """Schoolbook remainder modulo Phi_p, independent of the cyclic folding."""
    phi = sympy.Poly(sum(X**i for i in range(p)), X)
    r = sympy.Poly(sum(c * X**i for i, c in enumerate(raw)), X).rem(phi)
    coeffs = [int(c) for c in reversed(r.all_coeffs())]
    return coeffs + [0] * (p - 1 - len(coeffs))


def elt(p, coeffs):
    return CycInt(FieldContext(p), coeffs)


# -- context -------------------------------------------------------------


def test_ctx_new_degree():
    c = ctx_new(5)
    assert c.degree == 4
    assert c.modulus == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("bad", [4, 2, 1, 0, -3, 9, 15])
def test_ctx_new_rejects(bad):
    with pytest.raises(NotAnOddPrime):
        ctx_new(bad)


# -- reduce / mul ----------------------------------------------------------


def test_reduce_examples():
    assert reduce(ctx_new(3), [0, 0, 1]).coeffs == (-1, -1)
    assert reduce(ctx_new(5), [0, 0, 0, 0, 0, 1]).coeffs == (1, 0, 0, 0)
    assert reduce(ctx_new(3), [0, 1, 0, 1]).coeffs == (1, 1)
    assert sympy_reduce(3, [0, 1, 0, 1]) == [1, 1]


@given(st.sampled_from([3, 5, 7, 11]), st.lists(st.integers(-50, 50), max_size=30))
@settings(max_examples=60, deadline=None)
def test_reduce_matches_polynomial_division(p, raw):
    assert list(reduce(ctx_new(p), raw).coeffs) == sympy_reduce(p, raw)


def test_mul_examples():
    assert (elt(3, [1, 1]) * elt(3, [1, 1])).coeffs == (0, 1)
    # zeta^4 = -1 - zeta - zeta^2 - zeta^3 on the power basis
    assert elt(5, [0, 1, 0, 0]) * elt(5, [-1, -1, -1, -1]) == 1
    assert elt(5, [0, 1, 0, 0]) * elt(5, [0, 0, 0, 1]) == ctx_new(5).zeta(4)
    a = elt(7, [3, -1, 4, 1, -5, 9])
    assert a * ctx_new(7).one() == a


@given(cycint_pairs())
@settings(max_examples=60, deadline=None)
def test_mul_matches_multiply_then_reduce(pair):
    a, b = pair
    p = a.ctx.p
    raw = [0] * (2 * p)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            raw[i + j] += x * y
    assert list((a * b).coeffs) == sympy_reduce(p, raw)


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_ring_axioms(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    a, b, c = (data.draw(cycints(p)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a and a * 1 == a
    assert a - a == 0


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        elt(3, [1, 0]) * elt(5, [1, 0, 0, 0])


def test_scalar_and_rational_mixing():
    a = elt(5, [1, 2, 0, 0])
    assert isinstance(a * 3, CycInt)
    r = a * Fraction(1, 2)
    assert isinstance(r, CycRat) and not r.is_integral
    assert (r * 2).to_int() == a


# -- Galois action -------------------------------------------------------


def test_galois_examples():
    c5 = ctx_new(5)
    assert galois_apply(2, c5.zeta()) == c5.zeta(2)
    a = elt(5, [4, -1, 7, 2])
    assert galois_apply(4, galois_apply(4, a)) == a
    assert galois_apply(1, a) == a
    assert galois_apply(2, elt(3, [1, 1])).coeffs == (0, -1)


def test_galois_rejects_multiple_of_p():
    with pytest.raises(NotCoprime):
        galois_apply(10, elt(5, [1, 0, 0, 0]))


@given(cycints(), st.integers(1, 200), st.integers(1, 200))
@settings(max_examples=60, deadline=None)
def test_galois_composition_and_norm(a, k, l):
    p = a.ctx.p
    k = k if k % p else k + 1
    l = l if l % p else l + 1
    assert galois_apply(k, galois_apply(l, a)) == galois_apply(k * l % p, a)
    assert norm(galois_apply(k, a)) == norm(a)


def test_galois_is_ring_hom():
    a, b = elt(7, [1, -2, 3, 0, 5, 1]), elt(7, [0, 4, -1, 2, 2, -3])
    for k in range(1, 7):
        assert galois_apply(k, a * b) == galois_apply(k, a) * galois_apply(k, b)


# -- norm / trace -------------------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_norm_of_lambda(p):
    assert norm(ctx_new(p).lam()) == p


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_trace_of_zeta(p):
    assert trace(ctx_new(p).zeta()) == -1


def test_norm_of_zeta_p3():
    assert norm(ctx_new(3).zeta()) == 1


@given(cycints())
@settings(max_examples=80, deadline=None)
def test_norm_resultant_matches_conjugate_product(a):
    assert norm(a) == norm_by_conjugates(a)


@given(cycints())
@settings(max_examples=40, deadline=None)
def test_norm_matches_sympy_resultant(a):
    p = a.ctx.p
    phi = sum(X**i for i in range(p))
    poly = sum(c * X**i for i, c in enumerate(a.coeffs))
    assert norm(a) == int(sympy.resultant(phi, poly, X))


@given(cycint_pairs())
@settings(max_examples=60, deadline=None)
def test_norm_multiplicative_trace_additive(pair):
    a, b = pair
    assert norm(a * b) == norm(a) * norm(b)
    assert trace(a + b) == trace(a) + trace(b)


@given(cycints())
@settings(max_examples=40, deadline=None)
def test_trace_is_sum_of_conjugates(a):
    p = a.ctx.p
    total = a.ctx.zero()
    for k in range(1, p):
        total = total + galois_apply(k, a)
    assert total == trace(a)


def test_resultant_small_cases():
    assert resultant([1, 1], [2, 1]) == 1  # Res(X+1, X+2)
    assert resultant([-1, 0, 1], [0, 1]) == -1
    assert resultant([], [1, 1]) == 0


def test_rational_norm():
    a = CycRat(ctx_new(5), [Fraction(1, 2), 0, 0, 0])
    assert norm(a) == Fraction(1, 16)


# -- lambda ----------------------------------------------------------------


def test_lambda_valuation_examples():
    c3 = ctx_new(3)
    assert lambda_valuation(c3.from_int(3)) == 2
    for p in (3, 5, 7):
        c = ctx_new(p)
        assert lambda_valuation(c.lam()) == 1
        assert lambda_valuation(c.one()) == 0
        assert lambda_valuation(c.from_int(p)) == p - 1


def test_lambda_valuation_zero():
    with pytest.raises(ZeroInput):
        lambda_valuation(ctx_new(3).zero())


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lambda_divisibility_transfer_on_integers(p):
    c = ctx_new(p)
    for n in range(-100, 101):
        if n == 0:
            continue
        assert (lambda_valuation(c.from_int(n)) >= 1) == (n % p == 0)


def test_reduce_mod_lambda_examples():
    assert reduce_mod_lambda(elt(5, [1, 2, 0, 3])) == 1
    assert reduce_mod_lambda(ctx_new(5).lam()) == 0
    assert reduce_mod_lambda(ctx_new(7).from_int(-20)) == -20 % 7


@given(cycint_pairs())
@settings(max_examples=60, deadline=None)
def test_reduce_mod_lambda_is_ring_hom(pair):
    a, b = pair
    p = a.ctx.p
    assert reduce_mod_lambda(a + b) == (reduce_mod_lambda(a) + reduce_mod_lambda(b)) % p
    assert reduce_mod_lambda(a * b) == reduce_mod_lambda(a) * reduce_mod_lambda(b) % p


# -- exact division --------------------------------------------------------


def test_divide_exact_examples():
    c3 = ctx_new(3)
    q = divide_exact(c3.from_int(3), c3.lam())
    assert q.coeffs == (-2, -1)
    assert c3.lam() * q == 3
    a = elt(3, [5, -7])
    assert divide_exact(a, c3.one()) == a
    with pytest.raises(NotDivisible):
        divide_exact(c3.one(), c3.lam())


def test_divide_exact_by_zero():
    c3 = ctx_new(3)
    with pytest.raises(ZeroDivisor):
        divide_exact(c3.one(), c3.zero())


@given(cycint_pairs())
@settings(max_examples=60, deadline=None)
def test_divide_exact_recovers_factor(pair):
    a, b = pair
    if b.is_zero:
        return
    assert divide_exact(a * b, b) == a


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_p_is_lambda_power_times_unit(p):
    c = ctx_new(p)
    eps = divide_exact(c.from_int(p), c.lam() ** (p - 1))
    assert abs(norm(eps)) == 1


def test_rational_inverse():
    a = elt(5, [2, 1, 0, 3])
    inv = a.inverse()
    assert a * inv == 1
    assert (a / a) == 1


# -- discriminant ----------------------------------------------------------


@pytest.mark.parametrize("p,expected", [(3, -3), (5, 125), (7, -16807)])
def test_discriminant_examples(p, expected):
    phi = sum(X**i for i in range(p))
    assert int(sympy.discriminant(phi, X)) == expected
    assert discriminant(p) == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_discriminant_closed_form(p):
    assert discriminant(p) == (-1) ** ((p - 1) // 2) * p ** (p - 2)


# -- p-th power residue -------------------------------------------------


def test_pth_power_residue_examples():
    c3 = ctx_new(3)
    assert pth_power_residue(c3.zeta()) == 1
    assert pth_power_residue(elt(3, [1, 1])) == 2
    assert (elt(3, [1, 1]) ** 3) == -1
    assert pth_power_residue(c3.from_int(2)) == 2


@given(cycints())
@settings(max_examples=80, deadline=None)
def test_pth_power_residue_equals_lambda_residue(a):
    assert pth_power_residue(a) == reduce_mod_lambda(a)


# -- element text format --------------------------------------------------


def test_parse_element():
    c = ctx_new(3)
    assert parse_element(c, "-1,1") == c.lam()
    r = parse_element(c, "1/2, -3/4")
    assert isinstance(r, CycRat) and r.coeffs == (Fraction(1, 2), Fraction(-3, 4))
    with pytest.raises(ElementFormatError, match="expected p-1 = 2"):
        parse_element(c, "1,2,3")
    with pytest.raises(ElementFormatError):
        parse_element(c, "1.5,2")
    with pytest.raises(ElementFormatError):
        parse_element(c, "x,2")
