import random

import pytest
from hypothesis import strategies as st

from cyclonomy.field import CycInt, FieldContext

SMALL_PRIMES = (3, 5, 7)


@st.composite
def cycints(draw, p=None, lo=-20, hi=20, nonzero=False):
    if p is None:
        p = draw(st.sampled_from(SMALL_PRIMES))
    ctx = FieldContext(p)
    coeffs = draw(st.lists(st.integers(lo, hi), min_size=p - 1, max_size=p - 1))
    if nonzero and not any(coeffs):
        coeffs[0] = 1
    return CycInt(ctx, coeffs)


@st.composite
def cycint_pairs(draw, lo=-20, hi=20):
    p = draw(st.sampled_from(SMALL_PRIMES))
    return draw(cycints(p, lo, hi)), draw(cycints(p, lo, hi))


def random_cycint(rng: random.Random, ctx: FieldContext, lo=-20, hi=20) -> CycInt:
    return CycInt(ctx, [rng.randint(lo, hi) for _ in range(ctx.degree)])


@pytest.fixture(params=SMALL_PRIMES)
def ctx(request):
    return FieldContext(request.param)


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
