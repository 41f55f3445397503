"""Exact arithmetic in real quadratic fields, plus periodic continued fractions.

A value is (p + q*sqrt(d)) / r with integers p, q, r and squarefree d; all
comparisons, floors and fractional parts are decided by integer sign tests,
never by floating point.  Rationals are the q = 0 case (canonically d = 0),
so mixed rational/irrational arithmetic stays in one type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import cycle, islice
from math import gcd, isqrt


def _split_square(d: int) -> tuple[int, int]:
    """d = s**2 * d0 with d0 squarefree; returns (s, d0)."""
    if d < 0:
        raise ValueError("negative radicand")
    s, d0 = 1, d
    f = 2
    while f * f <= d0:
        while d0 % (f * f) == 0:
            d0 //= f * f
            s *= f
        f += 1
    return s, d0


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """(p + q*sqrt(d)) / r in canonical form: r > 0, gcd(p, q, r) = 1,
    d squarefree, and d = 0 exactly when the value is rational."""

    p: int
    q: int
    r: int
    d: int

    def __post_init__(self):
        p, q, r, d = self.p, self.q, self.r, self.d
        if r == 0:
            raise ValueError("zero denominator")
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if q != 0:
            s, d = _split_square(d)
            q *= s
            if d == 1:  # the radicand was a perfect square
                p, q = p + q, 0
        if q == 0:
            d = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)

    # -- construction --------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "QuadraticIrrational":
        frac = Fraction(value)
        return cls(frac.numerator, 0, frac.denominator, 0)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticIrrational":
        return cls(0, 1, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational value")
        return Fraction(self.p, self.r)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.d)

    # -- arithmetic ----------------------------------------------------

    def _coerced(self, other) -> "QuadraticIrrational | None":
        if isinstance(other, QuadraticIrrational):
            if other.q != 0 and self.q != 0 and other.d != self.d:
                raise ValueError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) exactly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticIrrational.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticIrrational(
            self.p * o.r + o.p * self.r,
            self.q * o.r + o.q * self.r,
            self.r * o.r,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        d = self.d if self.q != 0 else o.d
        return QuadraticIrrational(
            self.p * o.p + self.q * o.q * d,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticIrrational":
        if self.p == 0 and self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        norm = self.p * self.p - self.q * self.q * self.d
        return QuadraticIrrational(self.r * self.p, -self.r * self.q, norm, self.d)

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- ordering ------------------------------------------------------

    def _numerator_sign(self) -> int:
        """Sign of p + q*sqrt(d) by integer comparisons."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return _sign(p)
        if p == 0:
            return _sign(q)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        if p > 0:  # q < 0: compare p with |q|*sqrt(d)
            return _sign(p * p - q * q * d)
        return _sign(q * q * d - p * p)

    def sign(self) -> int:
        return self._numerator_sign()

    def _cmp(self, other) -> int:
        o = self._coerced(other)
        if o is None:
            raise TypeError(f"cannot compare QuadraticIrrational with {type(other)}")
        d = self.d if self.q != 0 else o.d
        diff = QuadraticIrrational(
            self.p * o.r - o.p * self.r,
            self.q * o.r - o.q * self.r,
            self.r * o.r,
            d,
        )
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (QuadraticIrrational, int, Fraction)):
            return self._cmp(other) == 0
        return NotImplemented

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.d))

    # -- floor / frac ----------------------------------------------------

    def floor(self) -> int:
        if self.q == 0:
            return self.p // self.r
        s = isqrt(self.q * self.q * self.d)
        low = self.p + (s if self.q > 0 else -s - 1)
        k = low // self.r
        while self >= k + 1:
            k += 1
        while self < k:
            k -= 1
        return k

    def frac(self) -> "QuadraticIrrational":
        return self - self.floor()

    def __float__(self) -> float:
        return (self.p + self.q * self.d**0.5) / self.r

    def __repr__(self):
        if self.is_rational:
            return f"QI({self.p}/{self.r})"
        return f"QI(({self.p}+{self.q}*sqrt({self.d}))/{self.r})"


QI = QuadraticIrrational

PHI = QI(1, 1, 2, 5)  # golden ratio
GOLDEN_ANGLE = PHI - 1  # (sqrt(5) - 1) / 2
SILVER_ANGLE = QI.sqrt(2) - 1


# -- continued fractions ----------------------------------------------------


@dataclass(frozen=True)
class ContinuedFraction:
    """Eventually periodic continued fraction [a0; preperiod, period repeating]."""

    a0: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.preperiod + self.period):
            raise ValueError("partial quotients after a0 must be >= 1")

    def quotients(self, count: int) -> list[int]:
        """First `count` partial quotients a0, a1, ..."""
        if count < 1:
            raise ValueError("count must be >= 1")
        tail: list[int] = list(self.preperiod)
        if self.period:
            tail.extend(islice(cycle(self.period), max(0, count - 1 - len(tail))))
        if len(tail) < count - 1:
            raise ValueError("finite continued fraction is too short")
        return [self.a0] + tail[: count - 1]

    @property
    def quotient_bound(self) -> int:
        """K with a_i <= K for all i >= 1."""
        if not (self.preperiod or self.period):
            raise ValueError("no partial quotients after a0")
        return max(self.preperiod + self.period)

    def __str__(self):
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"[{self.a0};{pre}|{per}]"


def cf_expand(x: QuadraticIrrational, max_steps: int = 512) -> ContinuedFraction:
    """Continued fraction of a quadratic irrational, with the (eventual)
    period detected by repetition of the complete quotient."""
    if x.is_rational:
        raise ValueError("continued-fraction expansion here requires an irrational")
    a0 = x.floor()
    y = (x - a0).inverse()
    seen: dict[QuadraticIrrational, int] = {}
    terms: list[int] = []
    for _ in range(max_steps):
        key = y
        if key in seen:
            j = seen[key]
            return ContinuedFraction(a0, tuple(terms[:j]), tuple(terms[j:]))
        seen[key] = len(terms)
        a = y.floor()
        terms.append(a)
        y = (y - a).inverse()
    raise ValueError(f"no period found within {max_steps} steps")


def cf_value(cf: ContinuedFraction) -> QuadraticIrrational:
    """Exact value of an eventually periodic continued fraction."""
    if not cf.period:
        raise ValueError("period must be non-empty for an irrational value")
    a, b, c, e = 1, 0, 0, 1  # matrix [[a, b], [c, e]]
    for quotient in cf.period:
        a, b, c, e = a * quotient + b, a, c * quotient + e, c
    disc = (a - e) * (a - e) + 4 * b * c
    y = QuadraticIrrational(a - e, 1, 2 * c, disc)
    value = y
    for quotient in reversed(cf.preperiod):
        value = quotient + value.inverse()
    return cf.a0 + value.inverse()


def convergents(cf: ContinuedFraction, count: int) -> list[Fraction]:
    """First `count` convergents via the standard three-term recurrence."""
    nums = (1, cf.a0)  # h_{-1}, h_0
    dens = (0, 1)
    out = [Fraction(cf.a0, 1)]
    for a in cf.quotients(count)[1:]:
        nums = (nums[1], a * nums[1] + nums[0])
        dens = (dens[1], a * dens[1] + dens[0])
        out.append(Fraction(nums[1], dens[1]))
    return out


# -- angle parsing ----------------------------------------------------------
#
# "qi:(p,q,r,d)"  explicit quadratic irrational
# "cf:[a0;p1,p2|b1,b2]"  continued fraction, "|" separates preperiod/period

_QI_RE = re.compile(r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*\)?$")


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def parse_cf(text: str) -> ContinuedFraction:
    body = text.strip()
    if body.startswith("cf:"):
        body = body[3:]
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed continued fraction: {text!r}")
    body = body[1:-1]
    if ";" not in body:
        raise ValueError(f"malformed continued fraction (missing ';'): {text!r}")
    head, tail = body.split(";", 1)
    if "|" in tail:
        pre_text, per_text = tail.split("|", 1)
    else:
        pre_text, per_text = tail, ""
    return ContinuedFraction(int(head), _parse_int_list(pre_text), _parse_int_list(per_text))


def parse_angle(text: str) -> QuadraticIrrational:
    """Parse "qi:(p,q,r,d)" or "cf:[a0;pre|period]" into an exact value."""
    body = text.strip()
    if body.startswith("qi:"):
        match = _QI_RE.match(body[3:].strip())
        if not match:
            raise ValueError(f"malformed quadratic irrational: {text!r}")
        p, q, r, d = (int(g) for g in match.groups())
        return QuadraticIrrational(p, q, r, d)
    if body.startswith("cf:") or body.startswith("["):
        return cf_value(parse_cf(body))
    match = _QI_RE.match(body)
    if match:
        p, q, r, d = (int(g) for g in match.groups())
        return QuadraticIrrational(p, q, r, d)
    raise ValueError(f"unrecognized angle syntax: {text!r}")
