"""Equidistribution diagnostics for rotation orbits.

The quantities here connect the arithmetic side of the project (rotation
orbits ({n*angle}) on the torus) with the counting side: how evenly the
orbit fills [0,1) controls how many abelian-square factors a rotation
coding accumulates.  Everything is computed on exact points
(:class:`~absquares.quadratic.QuadraticIrrational` or `Fraction`); floats
appear only when a caller formats a report.

Two independent routes for the discrepancy itself:

* :func:`discrepancy` — the classical closed form on sorted points,
  O(N log N);
* :func:`discrepancy_bruteforce` — enumerates candidate intervals with
  endpoints at the sample points, each side open or closed, O(N^2).

They must agree exactly; the test suite holds them to that.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .quadratic import QuadraticIrrational, cf_expand
from .sturmian import sturmian_asf_range

__all__ = [
    "PointSequence",
    "DiscrepancyReport",
    "CertificateReport",
    "rotation_orbit",
    "count_in_interval",
    "discrepancy",
    "discrepancy_bruteforce",
    "kn2_bound",
    "rotation_discrepancy",
    "check_kn2",
    "growth_certificate",
    "certificate_sweep",
]

# Exact values we can sort and subtract: quadratic irrationals, Fractions,
# ints.  (Floats are accepted for ad-hoc use but then the "exactness" is
# whatever binary64 gives you.)
ExactValue = object


def _as_exact(x):
    if isinstance(x, (QuadraticIrrational, Fraction, int)):
        return x
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"unsupported point type {type(x).__name__}")


@dataclass(frozen=True)
class PointSequence:
    """A finite list of torus points with a human-readable origin tag."""

    points: tuple
    origin: str = "adhoc"

    def __post_init__(self):
        pts = tuple(_as_exact(x) for x in self.points)
        for x in pts:
            if not (0 <= x < 1):
                raise ValueError("points must lie in [0,1)")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def rotation_orbit(angle: QuadraticIrrational, count: int) -> PointSequence:
    """The orbit ({n*angle}) for n = 1..count, computed incrementally."""
    if count < 1:
        raise ValueError("count must be >= 1")
    pts = []
    x = QuadraticIrrational.from_rational(0)
    for _ in range(count):
        x = (x + angle).frac()
        pts.append(x)
    return PointSequence(tuple(pts), origin=f"orbit({count})")


def count_in_interval(seq: PointSequence, gamma, delta) -> int:
    """Number of points falling in [gamma, delta) — exact comparisons."""
    gamma = _as_exact(gamma)
    delta = _as_exact(delta)
    if not (0 <= gamma < delta <= 1):
        raise ValueError("need 0 <= gamma < delta <= 1")
    return sum(1 for x in seq.points if gamma <= x < delta)


@dataclass(frozen=True)
class DiscrepancyReport:
    """Exact discrepancy of a point set, with optional bound check.

    ``value`` is sup over intervals [g, d) of |count/N - (d-g)|; the sup
    may be approached rather than attained (single points witness it in
    the limit), which is why ``witness`` carries explicit interval sides.
    """

    n_points: int
    value: object  # exact: Fraction or QuadraticIrrational
    surplus: object  # max_i (i/N - y_i)      -- under-filled interval side
    deficit: object  # max_i (y_i - (i-1)/N)  -- over-filled interval side
    witness: tuple | None = None  # (gamma, gamma_closed, delta, delta_closed)
    bound: float | None = None  # right-hand side of the log bound, if checked
    quotient_bound: int | None = None  # K used for the bound

    @property
    def within_bound(self) -> bool:
        if self.bound is None:
            raise ValueError("no bound attached to this report")
        # Compare exactly: the float bound converts to an exact Fraction.
        return self.n_points * self.value <= Fraction(self.bound)

    def scaled(self) -> object:
        """N * D_N, the quantity the log bound speaks about."""
        return self.n_points * self.value


def _sorted_points(points) -> list:
    return sorted(_as_exact(x) for x in points)


def discrepancy(seq, witness_limit: int = 256) -> DiscrepancyReport:
    """Closed-form discrepancy over sorted points.

    D_N = max_i (i/N - y_i) + max_i (y_i - (i-1)/N) on the sorted sample;
    both maxima are nonnegative (the i = N term forces the first, i = 1
    the second).  For N <= witness_limit a witness interval is located by
    the same enumeration the brute-force oracle uses.
    """
    points = seq.points if isinstance(seq, PointSequence) else tuple(seq)
    ys = _sorted_points(points)
    n = len(ys)
    if n == 0:
        raise ValueError("discrepancy of an empty point set")
    surplus = max(Fraction(i + 1, n) - y for i, y in enumerate(ys))
    deficit = max(y - Fraction(i, n) for i, y in enumerate(ys))
    value = surplus + deficit
    witness = None
    if n <= witness_limit:
        _, witness = _bruteforce_on_sorted(ys)
    return DiscrepancyReport(n, value, surplus, deficit, witness)


def _bruteforce_on_sorted(ys: list):
    """Max |count/N - length| over intervals with endpoints at sample
    points (or 0/1), each side independently open or closed.  A closed
    right end / open left end stands for the half-open interval shaved
    by an infinitesimal: it changes the count, not the length."""
    n = len(ys)
    starts = [(Fraction(0), True)]
    ends = [(Fraction(1), False)]
    for y in ys:
        starts.append((y, True))   # [y, ...
        starts.append((y, False))  # (y, ...
        ends.append((y, False))    # ..., y)
        ends.append((y, True))     # ..., y]
    best = None
    best_witness = None
    for g, g_closed in starts:
        lo = bisect_left(ys, g) if g_closed else bisect_right(ys, g)
        for d, d_closed in ends:
            if d < g or (d == g and not (g_closed and d_closed)):
                continue
            hi = bisect_right(ys, d) if d_closed else bisect_left(ys, d)
            if hi < lo:
                continue
            err = abs(Fraction(hi - lo, n) - (d - g))
            if best is None or err > best:
                best = err
                best_witness = (g, g_closed, d, d_closed)
    return best, best_witness


def discrepancy_bruteforce(seq):
    """Oracle twin of :func:`discrepancy` (value only)."""
    points = seq.points if isinstance(seq, PointSequence) else tuple(seq)
    ys = _sorted_points(points)
    if not ys:
        raise ValueError("discrepancy of an empty point set")
    best, _ = _bruteforce_on_sorted(ys)
    return best


_LOG_PHI = math.log((1 + math.sqrt(5)) / 2)


def kn2_bound(n_points: int, quotient_bound: int) -> float:
    """3 + (1/log phi + K/log(K+1)) * log N, natural logs.

    Valid for rotation orbits whose angle has partial quotients bounded
    by K; the exact discrepancy must sit below it after scaling by N.
    """
    if n_points < 1:
        raise ValueError("need at least one point")
    if quotient_bound < 1:
        raise ValueError("partial-quotient bound must be >= 1")
    k = quotient_bound
    return 3.0 + (1.0 / _LOG_PHI + k / math.log(k + 1)) * math.log(n_points)


def rotation_discrepancy(
    angle: QuadraticIrrational,
    n_points: int,
    quotient_bound: int | None = None,
    witness_limit: int = 256,
) -> DiscrepancyReport:
    """Discrepancy of ({n*angle}), n = 1..N, with the log bound attached."""
    if quotient_bound is None:
        cf = cf_expand(angle)
        quotient_bound = cf.quotient_bound
    seq = rotation_orbit(angle, n_points)
    rep = discrepancy(seq, witness_limit=witness_limit)
    return DiscrepancyReport(
        rep.n_points,
        rep.value,
        rep.surplus,
        rep.deficit,
        rep.witness,
        bound=kn2_bound(n_points, quotient_bound),
        quotient_bound=quotient_bound,
    )


def check_kn2(
    angle: QuadraticIrrational, n_points: int, quotient_bound: int | None = None
) -> bool:
    """Does N * D_N stay below the log bound for this angle?"""
    return rotation_discrepancy(
        angle, n_points, quotient_bound, witness_limit=0
    ).within_bound


# -- growth certificate ------------------------------------------------


@dataclass(frozen=True)
class CertificateReport:
    """Arithmetic lower-bound certificate for cumulative counts.

    ``count_a`` counts i <= n/2 with {i*angle/2} in [1/4, 1/2);
    ``count_b`` counts even m in [n/2, n] with {m*angle/2} <= 1/4.
    Each (i, m) pair manufactures a distinct abelian-square factor of
    length 2m' <= 2n in the rotation coding, so the product is a lower
    bound for the cumulative abelian-square-factor count asf_sum.
    """

    n: int
    count_a: int
    count_b: int
    asf_sum: int

    @property
    def product(self) -> int:
        return self.count_a * self.count_b


_QUARTER = Fraction(1, 4)
_HALF = Fraction(1, 2)


def _half_angle_flags(angle: QuadraticIrrational, max_i: int):
    """For i = 1..max_i: ({i*angle/2} in [1/4,1/2), {i*angle/2} <= 1/4)."""
    half = angle / 2
    x = QuadraticIrrational.from_rational(0)
    in_band = []
    in_quarter = []
    for _ in range(max_i):
        x = (x + half).frac()
        in_band.append(_QUARTER <= x < _HALF)
        in_quarter.append(x <= _QUARTER)
    return in_band, in_quarter


def growth_certificate(angle: QuadraticIrrational, n: int) -> CertificateReport:
    """Certificate at a single even n (asf_sum computed from scratch)."""
    if n < 2 or n % 2:
        raise ValueError("certificate is defined for even n >= 2")
    in_band, in_quarter = _half_angle_flags(angle, n)
    count_a = sum(in_band[: n // 2])
    count_b = sum(
        in_quarter[m - 1] for m in range(n // 2, n + 1) if m % 2 == 0
    )
    asf_sum = sum(sturmian_asf_range(angle, n).values())
    report = CertificateReport(n, count_a, count_b, asf_sum)
    if report.product > report.asf_sum:
        raise AssertionError(
            f"certificate violated at n={n}: "
            f"{report.product} > {report.asf_sum}"
        )
    return report


def certificate_sweep(
    angle: QuadraticIrrational, max_n: int
) -> list[CertificateReport]:
    """Certificates for every even n <= max_n, sharing all arithmetic.

    One pass of half-angle flags gives both counts via prefix sums; one
    incremental ASF sweep gives the cumulative sums.
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    max_n -= max_n % 2
    in_band, in_quarter = _half_angle_flags(angle, max_n)
    band_prefix = [0]
    quarter_even_prefix = [0]  # over even indices only
    for i in range(1, max_n + 1):
        band_prefix.append(band_prefix[-1] + in_band[i - 1])
        gain = in_quarter[i - 1] if i % 2 == 0 else 0
        quarter_even_prefix.append(quarter_even_prefix[-1] + gain)

    asf = sturmian_asf_range(angle, max_n)
    reports = []
    running = 0
    for n in range(2, max_n + 1, 2):
        running += asf[n]
        count_a = band_prefix[n // 2]
        lo = n // 2 - 1  # count even m with n/2 <= m <= n
        count_b = quarter_even_prefix[n] - quarter_even_prefix[lo]
        report = CertificateReport(n, count_a, count_b, running)
        if report.product > report.asf_sum:
            raise AssertionError(
                f"certificate violated at n={n}: "
                f"{report.product} > {report.asf_sum}"
            )
        reports.append(report)
    return reports
