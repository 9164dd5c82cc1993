"""Dense polynomials over F_q, little-endian lists of ints in [0, q)."""

from __future__ import annotations

import random
from itertools import product


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f, g, q):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % q for i in range(n)])


def sub(f, g, q):
    return add(f, [-c % q for c in g], q)


def mul(f, g, q):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % q for c in out])


def divmod_(f, g, q):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [c % q for c in f]
    trim(r)
    inv = pow(g[-1], -1, q)
    quo = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        t = r[-1] * inv % q
        quo[shift] = t
        for i, c in enumerate(g):
            r[shift + i] = (r[shift + i] - t * c) % q
        trim(r)
    return trim(quo), r


def rem(f, g, q):
    return divmod_(f, g, q)[1]


def monic(f, q):
    if not f:
        return f
    inv = pow(f[-1], -1, q)
    return [c * inv % q for c in f]


def gcd(f, g, q):
    f, g = trim(list(f)), trim(list(g))
    while g:
        f, g = g, rem(f, g, q)
    return monic(f, q)


def powmod(f, e, h, q):
    result, base = [1], rem(f, h, q)
    while e:
        if e & 1:
            result = rem(mul(result, base, q), h, q)
        base = rem(mul(base, base, q), h, q)
        e >>= 1
    return result


def monic_polys(degree: int, q: int):
    """All monic polynomials of the given degree, in lexicographic order."""
    for low in product(range(q), repeat=degree):
        yield list(low) + [1]


def factor_equal_degree_exhaustive(h: list[int], f: int, q: int) -> list[list[int]]:
    """Monic degree-f factors of h, assuming every irreducible factor has degree f."""
    found, cofactor = [], list(h)
    target = (len(h) - 1) // f
    for cand in monic_polys(f, q):
        quo, r = divmod_(cofactor, cand, q)
        if not r:
            found.append(cand)
            cofactor = quo
            if len(found) == target:
                break
    return found


def factor_equal_degree_cz(h: list[int], f: int, q: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus equal-degree splitting of a squarefree monic h."""
    n = len(h) - 1
    if n == f:
        return [monic(h, q)]
    while True:
        a = trim([rng.randrange(q) for _ in range(n)])
        if len(a) < 2:
            continue
        if q == 2:
            # trace map a + a^2 + ... + a^(2^(f-1))
            b, t = [], rem(a, h, q)
            for _ in range(f):
                b = add(b, t, q)
                t = rem(mul(t, t, q), h, q)
        else:
            b = sub(powmod(a, (q**f - 1) // 2, h, q), [1], q)
        d = gcd(h, b, q)
        if 0 < len(d) - 1 < n:
            e, r = divmod_(h, d, q)
            assert not r
            return factor_equal_degree_cz(d, f, q, rng) + factor_equal_degree_cz(monic(e, q), f, q, rng)
