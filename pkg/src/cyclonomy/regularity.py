"""Exact Bernoulli numbers and the Bernoulli-numerator regularity test."""

from __future__ import annotations

import json
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from pathlib import Path

from .arith import is_prime, primes_upto
from .errors import NotAnOddPrime, OddIndex

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BernoulliValue:
    n: int
    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass
class RegularityReport:
    p: int
    regular: bool
    irregular_pairs: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"p": self.p, "regular": self.regular, "irregular_pairs": [list(t) for t in self.irregular_pairs]}


class BernoulliTable:
    """Memoized B_0, B_1, ... with B_1 = -1/2. Growth is serialized by a lock."""

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n >= len(self._values):
            with self._lock:
                while len(self._values) <= n:
                    self._values.append(self._next())
        return self._values[n]

    def _next(self) -> Fraction:
        m = len(self._values)
        if m >= 3 and m % 2:
            return Fraction(0)
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        s = sum(comb(m + 1, k) * b for k, b in enumerate(self._values) if b)
        return -s / (m + 1)

    def load(self, entries: list) -> int:
        """Adopt cached [n, numerator, denominator] rows after re-verifying them.

        Only a contiguous prefix from n = 0 that satisfies the recurrence is
        kept; returns the number of entries adopted.
        """
        by_index = {}
        for row in entries:
            n, num, den = int(row[0]), int(row[1]), int(row[2])
            by_index[n] = Fraction(num, den)
        values = [Fraction(1)]
        while len(values) in by_index:
            m = len(values)
            candidate = by_index[m]
            s = sum(comb(m + 1, k) * b for k, b in enumerate(values) if b)
            if s + (m + 1) * candidate != 0:
                log.warning("bernoulli cache entry %d fails the recurrence; ignoring the rest", m)
                break
            values.append(candidate)
        with self._lock:
            if len(values) > len(self._values):
                self._values = values
        return len(values) - 1

    def dump(self) -> list[list]:
        return [[n, str(b.numerator), str(b.denominator)] for n, b in enumerate(self._values)]


_TABLE = BernoulliTable()


def bernoulli(n: int) -> BernoulliValue:
    b = _TABLE.get(n)
    return BernoulliValue(n, b.numerator, b.denominator)


def vsc_denominator(n: int) -> int:
    """Product of primes q with (q - 1) | n, for even n >= 2."""
    if n < 2 or n % 2:
        raise OddIndex(f"index must be even and >= 2, got {n}")
    return prod(q for q in primes_upto(n + 1) if n % (q - 1) == 0)


def is_regular(p: int) -> RegularityReport:
    if p < 3 or not is_prime(p):
        raise NotAnOddPrime(f"p must be an odd prime, got {p}")
    pairs = [(p, n) for n in range(2, p - 2, 2) if _TABLE.get(n).numerator % p == 0]
    return RegularityReport(p, not pairs, pairs)


def regularity_range(a: int, b: int) -> list[RegularityReport]:
    primes = [q for q in primes_upto(b) if q >= max(a, 3)]
    if primes:
        _TABLE.get(max(primes[-1] - 3, 0))
    return [is_regular(q) for q in primes]


def irregular_primes_upto(N: int) -> list[int]:
    return [r.p for r in regularity_range(3, N) if not r.regular]


def load_cache(path: str | Path) -> int:
    path = Path(path)
    if not path.exists():
        return 0
    try:
        entries = json.loads(path.read_text())
        return _TABLE.load(entries)
    except (ValueError, TypeError, IndexError) as exc:
        log.warning("ignoring unreadable bernoulli cache %s: %s", path, exc)
        return 0


def save_cache(path: str | Path) -> None:
    Path(path).write_text(json.dumps(_TABLE.dump()))
