"""Sturmian words as exact rotation codings, and their abelian-square counts.

A Sturmian word with irrational angle alpha and initial point rho reads, for
each n, the letter coded by the interval containing {rho + n*alpha}:

* left convention:  letter b on [0, 1-alpha),   a on [1-alpha, 1)
* right convention: letter b on (0, 1-alpha],   a on (1-alpha, 1]
  (the orbit point 0 is identified with 1)

All point arithmetic is exact (`quadratic.QuadraticIrrational`), so interval
membership at the discontinuities is decided correctly.  The number of
distinct abelian-square factors of each even length n has a purely arithmetic
expression over the orbit points {-i*alpha}, i <= n (`sturmian_asf`), which
the combinatorial counting engine must reproduce on prefixes.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass

from .quadratic import GOLDEN_ANGLE, QuadraticIrrational
from .words import BINARY_AB, ParikhVector, Word

CONVENTIONS = ("left", "right")

_A, _B = 0, 1  # letter indices in the display alphabet "ab"


def _as_point(value) -> QuadraticIrrational:
    if isinstance(value, QuadraticIrrational):
        return value
    return QuadraticIrrational.from_rational(value)


@dataclass(frozen=True)
class SturmianSpec:
    """Angle, initial point and interval convention of a rotation coding."""

    angle: QuadraticIrrational
    rho: QuadraticIrrational
    convention: str = "left"

    def __post_init__(self):
        object.__setattr__(self, "angle", _as_point(self.angle))
        object.__setattr__(self, "rho", _as_point(self.rho))
        if self.angle.is_rational:
            raise ValueError("angle must be irrational")
        if not (0 < self.angle < 1):
            raise ValueError("angle must lie in (0, 1)")
        if not (0 <= self.rho < 1):
            raise ValueError("initial point must lie in [0, 1)")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"convention must be one of {CONVENTIONS}")


def sturmian_prefix(spec: SturmianSpec, length: int) -> Word:
    """First `length` letters of the rotation coding, over the alphabet ab."""
    if length < 0:
        raise ValueError("length must be >= 0")
    alpha = spec.angle
    cut = 1 - alpha
    right = spec.convention == "right"
    x = spec.rho
    out = bytearray()
    for _ in range(length):
        if right:
            # x == 0 plays the role of 1, which lies in the 'a' interval
            is_b = x != 0 and x <= cut
        else:
            is_b = x < cut
        out.append(_B if is_b else _A)
        x = x + alpha
        if x >= 1:
            x = x - 1
    return Word(BINARY_AB, bytes(out))


def fibonacci_word(length: int) -> Word:
    """Characteristic Sturmian word with the golden angle."""
    return sturmian_prefix(SturmianSpec(GOLDEN_ANGLE, GOLDEN_ANGLE), length)


# -- interval partition -----------------------------------------------------


def _negative_orbit(alpha: QuadraticIrrational, n: int) -> list[QuadraticIrrational]:
    """Points {-i*alpha} for i = 1..n, in orbit order."""
    points = []
    x = QuadraticIrrational.from_rational(0)
    for _ in range(n):
        x = x - alpha
        if x < 0:
            x = x + 1
        points.append(x)
    return points


@dataclass(frozen=True)
class IntervalEntry:
    """One cell [lo, hi) of the partition, the length-n factor its points
    generate, and whether that factor is heavy (ceil(n*alpha) letters a)."""

    lo: QuadraticIrrational
    hi: QuadraticIrrational
    factor: Word
    heavy: bool


@dataclass(frozen=True)
class IntervalPartition:
    n: int
    points: tuple[QuadraticIrrational, ...]  # 0, interior points sorted, 1
    entries: tuple[IntervalEntry, ...]


def interval_partition(alpha, n: int, convention: str = "left") -> IntervalPartition:
    """Partition of [0, 1) by the points {-i*alpha}, i = 1..n.

    Each of the n+1 cells is constant for the length-n coding map; the factor
    attached to a cell is read from its midpoint (which never sits on a
    discontinuity, so both conventions agree on it).  A cell is heavy exactly
    when it lies right of {-n*alpha}.
    """
    alpha = _as_point(alpha)
    if alpha.is_rational or not (0 < alpha < 1):
        raise ValueError("angle must be irrational in (0, 1)")
    if n < 1:
        raise ValueError("n must be >= 1")
    orbit = _negative_orbit(alpha, n)
    threshold = orbit[-1]  # {-n*alpha}
    zero = QuadraticIrrational.from_rational(0)
    one = QuadraticIrrational.from_rational(1)
    points = [zero] + sorted(orbit) + [one]
    entries = []
    for lo, hi in zip(points, points[1:]):
        mid = (lo + hi) / 2
        factor = sturmian_prefix(SturmianSpec(alpha, mid, convention), n)
        entries.append(IntervalEntry(lo, hi, factor, heavy=lo >= threshold))
    return IntervalPartition(n, tuple(points), tuple(entries))


def classify_parikh(alpha, n: int) -> list[tuple[Word, ParikhVector]]:
    """Parikh vector of each length-n factor, derived from its heavy/light
    class: light factors contain floor(n*alpha) letters a, heavy factors one
    more."""
    alpha = _as_point(alpha)
    partition = interval_partition(alpha, n)
    light_a = (alpha * n).floor()
    out = []
    for entry in partition.entries:
        a_count = light_a + 1 if entry.heavy else light_a
        out.append((entry.factor, ParikhVector((a_count, n - a_count))))
    return out


# -- arithmetic abelian-square counts ----------------------------------------


def sturmian_asf(alpha, n: int) -> int:
    """Number of distinct abelian-square factors of length n (n even) of any
    Sturmian word with the given angle, computed arithmetically: among the
    points {-i*alpha}, i = 1..n, count those <= {-n*alpha} when floor(n*alpha)
    is even, and those >= {-n*alpha} otherwise."""
    alpha = _as_point(alpha)
    if alpha.is_rational or not (0 < alpha < 1):
        raise ValueError("angle must be irrational in (0, 1)")
    if n < 0 or n % 2 != 0:
        raise ValueError(f"length must be even and >= 0, got {n}")
    if n == 0:
        return 0
    orbit = _negative_orbit(alpha, n)
    threshold = orbit[-1]
    if (alpha * n).floor() % 2 == 0:
        return sum(1 for x in orbit if x <= threshold)
    return sum(1 for x in orbit if x >= threshold)


def sturmian_asf_range(alpha, max_n: int) -> dict[int, int]:
    """sturmian_asf for every even n <= max_n, sharing one sorted orbit.

    Incremental version: inserting {-i*alpha} one at a time keeps the orbit
    sorted, and each even step is answered with a binary search.
    """
    alpha = _as_point(alpha)
    if alpha.is_rational or not (0 < alpha < 1):
        raise ValueError("angle must be irrational in (0, 1)")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    counts: dict[int, int] = {}
    sorted_orbit: list[QuadraticIrrational] = []
    x = QuadraticIrrational.from_rational(0)
    for i in range(1, max_n + 1):
        x = x - alpha
        if x < 0:
            x = x + 1
        insort(sorted_orbit, x)
        if i % 2 == 0:
            if (alpha * i).floor() % 2 == 0:
                counts[i] = bisect_right(sorted_orbit, x)
            else:
                counts[i] = len(sorted_orbit) - bisect_left(sorted_orbit, x)
    return counts
