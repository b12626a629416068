"""Seeded exact sampling from rational distributions.

A draw takes ``K = getrandbits(64)`` from a Mersenne Twister seeded with the
user's seed and returns the smallest index whose cumulative probability exceeds
``K / 2^64``. Comparisons are done on integers, so no floating point is involved.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from collections.abc import Sequence
from fractions import Fraction
from numbers import Rational

from .errors import InvalidParameterRange

GENERATOR = "python-random-mt19937/getrandbits64"


def check_parameters(qv: Rational, tv: Rational) -> tuple[Fraction, Fraction]:
    """Both in ``[0, 1)`` or both in ``(1, oo)``, so that every entry is a probability."""
    qv, tv = Fraction(qv), Fraction(tv)
    if (0 <= qv < 1 and 0 <= tv < 1) or (qv > 1 and tv > 1):
        return qv, tv
    raise InvalidParameterRange(f"q={qv}, t={tv}: need both in [0,1) or both in (1,oo)")


def cumulative_thresholds(probs: Sequence[Fraction]) -> tuple[int, ...]:
    """``ceil(2^64 * (p_0 + ... + p_k))``; ``K < x`` iff ``K < ceil(x)`` for integer ``K``."""
    out, acc = [], Fraction(0)
    for p in probs:
        acc += p
        out.append(-((-(acc.numerator << 64)) // acc.denominator))
    return tuple(out)


class ExactSampler:
    """Owns one generator; not meant to be shared between threads."""

    def __init__(self, seed: int) -> None:
        self.seed = int(seed)
        self._rng = random.Random(self.seed)

    def uniform_numerator(self) -> int:
        return self._rng.getrandbits(64)

    def choose(self, probs: Sequence[Fraction]) -> int:
        """Smallest ``k`` with ``K / 2^64 < p_0 + ... + p_k``."""
        return self.choose_threshold(cumulative_thresholds(probs))

    def choose_threshold(self, thresholds: Sequence[int]) -> int:
        idx = bisect_right(thresholds, self.uniform_numerator())
        if idx == len(thresholds):
            raise ValueError("probabilities sum to less than 1")
        return idx


def as_sampler(seed_or_sampler: int | ExactSampler) -> ExactSampler:
    return seed_or_sampler if isinstance(seed_or_sampler, ExactSampler) else ExactSampler(seed_or_sampler)
