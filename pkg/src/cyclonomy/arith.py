"""Small rational-integer helpers shared across modules."""

from math import gcd


def is_prime(n: int) -> bool:
    """Trial division; intended for desk-scale inputs."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def primitive_root(p: int) -> int:
    """Least primitive root modulo the prime ``p``."""
    for g in range(1, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise ValueError(f"no primitive root modulo {p}")


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Integer k-th root of n >= 0: returns (floor(n**(1/k)), exact)."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n < 2:
        return n, True
    # Newton from an upper bound
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n
