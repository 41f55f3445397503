"""Richness statistics, recurrence estimates, and baselines.

This module measures how densely abelian squares sit inside a word:

* :func:`richness_report` — per-length average/minimum abelian-square
  content of the distinct factors of a prefix, with fitted quadratic
  constants and a recurrence-index table;
* :func:`triple_block` — the a^n b a^n b a^n construction whose
  abelian-square count is provably quadratic;
* :func:`random_baseline` — seeded uniform-random binary words, whose
  expected total sits near n^1.5 and therefore well below the rich
  examples.

Prefixes stand in for infinite words, so every entry point checks (or
lets the caller check) factor-count stabilization before trusting the
numbers; see :class:`InadequatePrefixError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import FactorIndex, asf_profile, factor_counts_stable
from .words import BINARY_AB, Word

__all__ = [
    "InadequatePrefixError",
    "RichnessReport",
    "TripleBlockReport",
    "RandomBaselineReport",
    "richness_report",
    "recurrence_index_estimate",
    "triple_block",
    "random_baseline",
    "fit_exponent",
    "fit_quadratic_constant",
]


class InadequatePrefixError(ValueError):
    """The prefix is too short to speak for the infinite word."""


def _require_adequate(prefix: Word, lengths) -> None:
    bad = [n for n in lengths if not factor_counts_stable(prefix, [n])]
    if bad:
        raise InadequatePrefixError(
            f"factor counts not stabilized for lengths {bad}; "
            f"supply a longer prefix (got {len(prefix)} letters)"
        )


def fit_exponent(lengths, values) -> float:
    """Least-squares slope of log(value) against log(length)."""
    xs = np.log(np.asarray(lengths, dtype=float))
    ys = np.log(np.asarray(values, dtype=float))
    if np.any(~np.isfinite(ys)):
        raise ValueError("values must be positive for a log-log fit")
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def fit_quadratic_constant(per_length: dict) -> float:
    """Conservative constant C with value >= C * n^2 across the grid."""
    return float(min(Fraction(v) / (n * n) for n, v in per_length.items()))


@dataclass(frozen=True)
class RichnessReport:
    """Abelian-square content of the distinct factors of a prefix.

    ``avg_per_n`` is an exact rational (sum of per-factor totals over the
    number of distinct factors); ``min_per_n`` the worst factor.  The
    fitted constants divide by n^2, so a positive, stable ``c_min`` is
    finite-data evidence of uniform quadratic richness.
    """

    lengths: tuple
    avg_per_n: dict  # n -> Fraction
    min_per_n: dict  # n -> int
    c_avg: float
    c_min: float
    recurrence_table: dict  # n -> estimated least covering window
    recurrence_quotient_estimate: float

    def rows(self):
        for n in self.lengths:
            yield {
                "n": n,
                "avg": self.avg_per_n[n],
                "min": self.min_per_n[n],
                "avg_over_n2": self.avg_per_n[n] / (n * n),
                "min_over_n2": Fraction(self.min_per_n[n], n * n),
                "recurrence_index": self.recurrence_table[n],
            }


def richness_report(prefix: Word, lengths, check_adequacy: bool = True) -> RichnessReport:
    """Average/minimum abelian-square totals over distinct length-n factors."""
    lengths = tuple(sorted(set(int(n) for n in lengths)))
    if not lengths or lengths[0] < 2:
        raise ValueError("lengths must be >= 2")
    if lengths[-1] > len(prefix):
        raise ValueError("length grid exceeds the prefix")
    if check_adequacy:
        _require_adequate(prefix, lengths)
    index = FactorIndex(prefix)
    avg_per_n: dict = {}
    min_per_n: dict = {}
    recurrence_table: dict = {}
    for n in lengths:
        totals = [
            _asf_total(factor) for factor in index.distinct_factors(n)
        ]
        avg_per_n[n] = Fraction(sum(totals), len(totals))
        min_per_n[n] = min(totals)
        recurrence_table[n] = recurrence_index_estimate(prefix, n, index=index)
    quotient = max(recurrence_table[n] / n for n in lengths)
    return RichnessReport(
        lengths,
        avg_per_n,
        min_per_n,
        c_avg=fit_quadratic_constant(avg_per_n),
        c_min=fit_quadratic_constant(min_per_n),
        recurrence_table=recurrence_table,
        recurrence_quotient_estimate=quotient,
    )


def recurrence_index_estimate(
    prefix: Word, length: int, index: FactorIndex | None = None
) -> int:
    """Least m such that every length-m window of the prefix contains
    every distinct length-n factor of the prefix.

    An estimate from finite data: the true recurrence index of the
    infinite word needs the whole tail, but for linearly recurrent words
    the prefix estimate settles quickly.  A factor with sorted occurrence
    starts o_1 < ... < o_k forces m >= o_1 + n (the leading window),
    m >= N - o_k (the trailing one) and m >= gap + n - 1 for each gap
    between consecutive starts.
    """
    if not 1 <= length <= len(prefix):
        raise ValueError("length out of range")
    if index is None:
        index = FactorIndex(prefix)
    total = len(prefix)
    needed = length
    for block in index.occurrence_blocks(length):
        occ = np.sort(block)
        needed = max(needed, int(occ[0]) + length, total - int(occ[-1]))
        if len(occ) > 1:
            gap = int(np.diff(occ).max())
            needed = max(needed, gap + length - 1)
    return needed


@dataclass(frozen=True)
class TripleBlockReport:
    """The a^n b a^n b a^n construction and its provable floor."""

    n: int
    word: Word
    asf_total: int
    lower_bound: int


def triple_block(n: int) -> TripleBlockReport:
    """Build a^n b a^n b a^n and count its abelian-square factors.

    Every factor a^i b a^n b a^j with i + j + n even is an abelian
    square, which already yields ceil((n+1)^2 / 2) distinct ones; the
    exact count is obtained by the counting engine.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    block = "a" * n
    word = Word.from_text(block + "b" + block + "b" + block, BINARY_AB)
    total = _asf_total(word)
    bound = ((n + 1) ** 2 + 1) // 2
    if total < bound:
        raise AssertionError(
            f"construction bound violated at n={n}: {total} < {bound}"
        )
    return TripleBlockReport(n, word, total, bound)


@dataclass(frozen=True)
class RandomBaselineReport:
    """Total abelian-square content of uniform random binary words."""

    lengths: tuple
    trials: int | None  # None means exhaustive enumeration
    seed: int | None
    means: tuple  # per length; Fractions when exhaustive, floats otherwise
    stddevs: tuple
    exponent: float | None  # log-log slope across lengths, needs >= 2 points

    def rows(self):
        for n, mean, std in zip(self.lengths, self.means, self.stddevs):
            yield {"n": n, "mean": mean, "stddev": std}


def _asf_total(word: Word) -> int:
    return asf_profile(word, len(word) - (len(word) % 2)).total


def random_baseline(
    lengths, trials: int | None = 100, seed: int | None = 0
) -> RandomBaselineReport:
    """Mean/stddev of total distinct abelian-square factors.

    ``trials=None`` enumerates all binary words of each length instead of
    sampling (exact, only sensible for small lengths); otherwise words
    are drawn from ``numpy.random.default_rng(seed)`` so reports are
    reproducible bit for bit.
    """
    lengths = tuple(sorted(set(int(n) for n in lengths)))
    if not lengths or lengths[0] < 1:
        raise ValueError("lengths must be positive")
    means = []
    stds = []
    if trials is None:
        for n in lengths:
            if n > 20:
                raise ValueError("exhaustive mode is for small lengths")
            totals = []
            for bits in range(1 << n):
                text = format(bits, f"0{n}b").translate(
                    str.maketrans("01", "ab")
                )
                totals.append(_asf_total(Word.from_text(text, BINARY_AB)))
            mean = Fraction(sum(totals), len(totals))
            var = Fraction(
                sum((t - mean) ** 2 for t in totals), len(totals)
            )
            means.append(mean)
            stds.append(float(math.sqrt(var)))
    else:
        if trials < 1:
            raise ValueError("trials must be >= 1")
        rng = np.random.default_rng(seed)
        for n in lengths:
            totals = np.empty(trials, dtype=np.int64)
            for t in range(trials):
                letters = rng.integers(0, 2, size=n, dtype=np.uint8)
                word = Word(BINARY_AB, letters.tobytes())
                totals[t] = _asf_total(word)
            means.append(float(totals.mean()))
            stds.append(float(totals.std()))
    exponent = None
    if len(lengths) >= 2 and all(m > 0 for m in means):
        exponent = fit_exponent(lengths, [float(m) for m in means])
    return RandomBaselineReport(
        lengths, trials, None if trials is None else seed,
        tuple(means), tuple(stds), exponent,
    )
