"""Exact scalars: arbitrary-precision rationals and one quadratic extension.

Rational is whichever kernel backend is active (fractions.Fraction or the
compiled equivalent); both expose numerator/denominator and the full dunder
set.  QuadExt adds values a + b*sqrt(d) over a fixed non-square radicand d.
Everything here is exact; nothing rounds.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from ._kernel import Rational
from .errors import RadicandMismatch

Scalar = "Rational | QuadExt"  # informal union used in signatures


def rat(x) -> Rational:
    """Coerce x (int, str 'p/q', rational-like, rational QuadExt) to Rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, str)):
        return Rational(x)
    if isinstance(x, QuadExt):
        if x.b == 0:
            return x.a
        raise ValueError(f"{x} is irrational, cannot coerce to Rational")
    if isinstance(x, float):
        raise TypeError("floats are not exact; convert explicitly")
    num = getattr(x, "numerator", None)
    den = getattr(x, "denominator", None)
    if num is not None and den is not None:
        return Rational(int(num), int(den))
    raise TypeError(f"cannot coerce {type(x).__name__} to Rational")


def sqrt_exact(x):
    """Exact square root of a non-negative rational, or None.

    Checks exactness by squaring integer square roots of numerator and
    denominator, so it is safe at any magnitude.
    """
    q = rat(x)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Rational(rn, rd)


def is_square(x) -> bool:
    return sqrt_exact(x) is not None


_SQUARE_TRIAL_BOUND = 1000


@lru_cache(maxsize=4096)
def _canonical_radicand(num: int, den: int):
    """Reduce sqrt(num/den) to scale * sqrt(d) with d a canonical integer.

    Clears the denominator, then pulls out square factors whose prime part
    is below a fixed trial-division bound; rare radicands with a larger
    square prime factor stay as they come, which costs canonicality but
    never exactness.  Cached because arithmetic re-normalizes the same
    radicand over and over.
    """
    m = num * den
    sign = -1 if m < 0 else 1
    m = abs(m)
    scale = 1
    for p in range(2, _SQUARE_TRIAL_BOUND):
        if p * p > m:
            break
        sq = p * p
        while m % sq == 0:
            m //= sq
            scale *= p
    return sign * m, Rational(scale, den)


class QuadExt:
    """Element a + b*sqrt(d) of a quadratic extension of the rationals.

    The radicand d must be a non-square nonzero rational.  It is stored in
    canonical form: an integer with small square factors removed (the
    rescaling is absorbed into b), so equal values built from different
    presentations of the same extension compare equal.  Two irrational
    values only interoperate when their radicands agree; a value with
    b == 0 is rational and mixes with anything.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        a, b, d = rat(a), rat(b), rat(d)
        if d == 0 or is_square(d):
            raise ValueError(f"radicand {d} is a perfect square; use a Rational")
        canon, mul = _canonical_radicand(int(d.numerator), int(d.denominator))
        self.a, self.b, self.d = a, b * mul, Rational(canon)

    # --- structure ---

    def is_rational(self) -> bool:
        return self.b == 0

    def conj(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Rational:
        """Field norm a^2 - b^2 d; zero only for the zero element."""
        return self.a * self.a - self.b * self.b * self.d

    def _coerce(self, other):
        """Return other as (a, b) over self's radicand, or None."""
        if isinstance(other, QuadExt):
            if other.d == self.d or other.b == 0:
                return other.a, other.b
            if self.b == 0:
                return other.a, other.b  # harmless: self is rational
            raise RadicandMismatch(f"sqrt({self.d}) vs sqrt({other.d})")
        try:
            return rat(other), Rational(0)
        except TypeError:
            return None

    # --- arithmetic ---

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        d = self.d if self.b != 0 or not isinstance(other, QuadExt) else other.d
        return _make(self.a + oa, self.b + ob, d)

    __radd__ = __add__

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        d = self.d if self.b != 0 or not isinstance(other, QuadExt) else other.d
        return _make(self.a - oa, self.b - ob, d)

    def __rsub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _make(oa - self.a, ob - self.b, self.d)

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        d = self.d if self.b != 0 or not isinstance(other, QuadExt) else other.d
        return _make(self.a * oa + self.b * ob * d,
                     self.a * ob + self.b * oa, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        d = self.d if self.b != 0 or not isinstance(other, QuadExt) else other.d
        n = oa * oa - ob * ob * d
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        # multiply by the conjugate of the divisor
        return _make((self.a * oa - self.b * ob * d) / n,
                     (self.b * oa - self.a * ob) / n, d)

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        return _make((oa * self.a - ob * self.b * self.d) / n,
                     (ob * self.a - oa * self.b) / n, self.d)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (Rational(1) / self) ** (-k)
        out = Rational(1)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    # --- comparisons ---

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.d == other.d:
                return self.a == other.a and self.b == other.b
            return self.b == 0 and other.b == 0 and self.a == other.a
        try:
            q = rat(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.b == 0 and self.a == q

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        """Exact sign for real embeddings (d > 0 uses the positive root)."""
        if self.d < 0 and self.b != 0:
            raise ValueError("no real sign for a negative radicand")
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0  # cannot happen for non-square d, kept for safety
        bigger_rational = lhs > rhs
        return (1 if bigger_rational else -1) if a > 0 else (-1 if bigger_rational else 1)

    def _cmp_sign(self, other) -> int:
        diff = self - other
        if isinstance(diff, QuadExt):
            return diff.sign()
        return -1 if diff < 0 else (0 if diff == 0 else 1)

    def __lt__(self, other):
        return self._cmp_sign(other) < 0

    def __le__(self, other):
        return self._cmp_sign(other) <= 0

    def __gt__(self, other):
        return self._cmp_sign(other) > 0

    def __ge__(self, other):
        return self._cmp_sign(other) >= 0

    # --- conversions ---

    def __float__(self):
        if self.d < 0 and self.b != 0:
            raise ValueError("complex value; use complex()")
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __complex__(self):
        if self.d >= 0:
            return complex(float(self))
        return complex(float(self.a), float(self.b) * float(-self.d) ** 0.5)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


def _make(a, b, d):
    """Build a QuadExt, collapsing to Rational when the radical part is zero."""
    if b == 0:
        return a
    return QuadExt(a, b, d)


def collapse(x):
    """Rationalize x when possible: QuadExt with zero radical part -> Rational."""
    if isinstance(x, QuadExt) and x.b == 0:
        return x.a
    return x


def sqrt_in_field(x):
    """Exact square root of x inside its own field, or None.

    Rational input gives a Rational (or None); QuadExt input gives a root in
    the same quadratic extension when one exists there.
    """
    if not isinstance(x, QuadExt):
        return sqrt_exact(x)
    if x.b == 0:
        r = sqrt_exact(x.a)
        return r
    A, B, D = x.a, x.b, x.d
    s = sqrt_exact(A * A - B * B * D)
    if s is None:
        return None
    for t in ((A + s) / 2, (A - s) / 2):
        p = sqrt_exact(t)
        if p is not None and p != 0:
            q = B / (2 * p)
            if p * p + q * q * D == A:
                return _make(p, q, D)
    return None


def scalar_to_complex(x) -> complex:
    """Numeric value of an exact scalar, for the numeric oracle only."""
    if isinstance(x, QuadExt):
        return complex(x)
    return complex(float(rat(x)))
