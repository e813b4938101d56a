"""Univariate polynomials over exact scalars, plus root finding.

Coefficients are stored ascending (coeffs[i] multiplies X^i) and may be
Rational, QuadExt, or Poly (for the bivariate elimination used by the
involution search: a Poly whose coefficients are themselves Poly values).
All arithmetic is exact.  Root finding is split three ways:

  rational_roots        exact rational roots, complete at any height
  quad_irrational_roots roots in degree <= 2 extensions, numerically
                        discovered and exactly certified
  numeric_roots         double-precision roots for the numeric oracle

The resultant uses the fraction-free subresultant remainder sequence, which
keeps intermediate coefficient growth polynomial and works verbatim when the
coefficients are themselves polynomials.
"""

from __future__ import annotations

import cmath

from ._kernel import Rational, durand_kerner
from .errors import (BothZero, ConstantInput, NonConvergence,
                     ReconstructionInconclusive, ZeroInput)
from .exact import QuadExt, rat, sqrt_exact

NEG_INF = float("-inf")


def _coerce_coeff(c):
    if isinstance(c, (Poly, QuadExt, Rational)):
        return c
    if isinstance(c, (int, str)):
        return rat(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not exact")
    return rat(c)


class Poly:
    """Immutable univariate polynomial, ascending exact coefficients.

    When coefficients are themselves Poly values the instance represents a
    bivariate polynomial; arithmetic between two Poly operands always works
    at the outermost level, so scalar multiplication by an inner-level Poly
    must go through scale().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # --- basic structure ---

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        """Degree as an int; the zero polynomial reports -inf."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Rational(0)

    # --- ring operations ---

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Rational(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        """Multiply every coefficient by the scalar s (inner level for nested polys)."""
        s = _coerce_coeff(s)
        return Poly([c * s for c in self.coeffs])

    def shift(self, k: int):
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return Poly((Rational(0),) * k + self.coeffs)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Poly([Rational(1)])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- division ---

    def divrem(self, other: "Poly"):
        """Quotient and remainder; coefficients must form a field."""
        if not isinstance(other, Poly):
            other = Poly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree() < other.degree():
            return Poly(), self
        rem = list(self.coeffs)
        db = other.degree()
        lb = other.lead()
        q = [Rational(0)] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            f = c / lb
            q[k] = f
            for i, bc in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * bc
        return Poly(q), Poly(rem)

    def __divmod__(self, other):
        return self.divrem(other)

    def __truediv__(self, other):
        """Exact division; raises if the division leaves a remainder."""
        if isinstance(other, Poly):
            q, r = self.divrem(other)
            if not r.is_zero():
                raise ValueError("inexact polynomial division")
            return q
        s = _coerce_coeff(other)
        return Poly([c / s for c in self.coeffs])

    def __mod__(self, other):
        return self.divrem(other)[1]

    # --- calculus and evaluation ---

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        """Horner evaluation at an exact scalar (or a Poly, for composition)."""
        if not self.coeffs:
            return Rational(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.eval(x)

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + _to_complex(c)
        return acc

    # --- normalization helpers ---

    def monic(self):
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.lead()
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    def integer_model(self):
        """(list of ints, content) with the ints coprime overall.

        Requires Rational coefficients.  self = content * (integer poly),
        and the integer model has positive leading coefficient.
        """
        if self.is_zero():
            return [], Rational(0)
        from math import gcd, lcm
        cs = [rat(c) for c in self.coeffs]
        den = 1
        for c in cs:
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in cs]
        g = 0
        for v in nums:
            g = gcd(g, v)
        nums = [v // g for v in nums]
        sign = 1
        if nums[-1] < 0:
            nums = [-v for v in nums]
            sign = -1
        return nums, Rational(sign * g, den)

    def reverse(self):
        """Coefficient reversal X^deg * p(1/X)."""
        return Poly(tuple(reversed(self.coeffs)))

    # --- comparisons ---

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            other = _coerce_coeff(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == Poly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append("X" if c == 1 else f"{c}*X")
            else:
                parts.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
        return " + ".join(parts)


def variable():
    """The monomial X."""
    return Poly([0, 1])


def constant(c):
    return Poly([c])


def _to_complex(c) -> complex:
    if isinstance(c, QuadExt):
        return complex(c)
    return complex(float(c))


# --- gcd, resultant, discriminant ---

def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor over a coefficient field."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a reduced mod b."""
    db = b.degree()
    lb = b.lead()
    r = a
    e = a.degree() - db + 1
    while not r.is_zero() and r.degree() >= db:
        shift = r.degree() - db
        r = r.scale(lb) - b.scale(r.lead()).shift(shift)
        e -= 1
    if e > 0:
        r = r.scale(_scalar_pow(lb, e))
    return r


def _scalar_pow(s, k: int):
    if k < 1:
        raise ValueError("power must be positive here")
    out = s
    for _ in range(k - 1):
        out = out * s
    return out


def resultant(p: Poly, q: Poly):
    """Resultant of p and q by the subresultant remainder sequence.

    Sign and scaling follow the convention
    Res(p, q) = lead(p)^deg(q) * lead(q)^deg(p) * prod(alpha_i - beta_j)
    over the root multisets.  Works over any coefficient ring with exact
    division, in particular when coefficients are themselves Poly values.
    """
    if p.is_zero() or q.is_zero():
        raise ZeroInput("resultant of the zero polynomial")
    a, b = p, q
    sign = 1
    if a.degree() < b.degree():
        if (a.degree() * b.degree()) % 2 == 1:
            sign = -1
        a, b = b, a
    if b.degree() == 0:
        if a.degree() == 0:
            return _one_like(a.lead())
        out = _scalar_pow(b.lead(), a.degree())
        return -out if sign < 0 else out
    g, h = Rational(1), Rational(1)
    while True:
        d = a.degree() - b.degree()
        if (a.degree() % 2 == 1) and (b.degree() % 2 == 1):
            sign = -sign
        r = _prem(a, b)
        if r.is_zero():
            return _zero_like(p.lead()) if b.degree() > 0 else _finish_resultant(sign, a, b, h)
        a = b
        divisor = g * _scalar_pow(h, d) if d > 0 else g
        b = Poly([_exact_scalar_div(c, divisor) for c in r.coeffs])
        g = a.lead()
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = _exact_scalar_div(_scalar_pow(g, d), _scalar_pow(h, d - 1))
        if b.degree() <= 0:
            if b.is_zero():
                return _zero_like(p.lead())
            return _finish_resultant(sign, a, b, h)


def _finish_resultant(sign, a, b, h):
    da = a.degree()
    res = _scalar_pow(b.lead(), da)
    if da > 1:
        res = _exact_scalar_div(res, _scalar_pow(h, da - 1))
    return -res if sign < 0 else res


def _exact_scalar_div(x, y):
    if isinstance(x, Poly) or isinstance(y, Poly):
        if not isinstance(x, Poly):
            x = Poly([x])
        return x / y
    return x / y


def _zero_like(sample):
    return Poly() if isinstance(sample, Poly) else Rational(0)


def _one_like(sample):
    return Poly([1]) if isinstance(sample, Poly) else Rational(1)


def discriminant(p: Poly):
    """Discriminant via Res(p, p') with the usual degree-dependent sign."""
    n = p.degree()
    if p.is_zero() or n < 1:
        raise ConstantInput("discriminant needs degree >= 1")
    res = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * _exact_scalar_div(res, p.lead())


def is_square_free(p: Poly) -> bool:
    if p.degree() < 1:
        return not p.is_zero()
    return gcd(p, p.derivative()).degree() == 0


# --- exact determinant (used by the invariants jacobian) ---

def det_bareiss(rows):
    """Exact determinant by fraction-free Bareiss elimination.

    Entries may be Rational, QuadExt, or Poly; intermediate divisions are
    exact by construction.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return Rational(1)
    sign = 1
    prev = Rational(1)
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot is None:
                return _zero_like(m[0][0])
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_scalar_div(num, prev)
            m[i][k] = Rational(0)
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


# --- root finding ---

_DIVISOR_LIMIT = 10 ** 6


def _small_divisors(n: int):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(p: Poly):
    """All rational roots of p with multiplicity, ascending.

    Small integer models are handled by divisor candidates; models whose end
    coefficients are too large to factor go through certified high-precision
    approximation and rational reconstruction bounded by the leading
    coefficient.  Every candidate is verified by exact evaluation, and
    multiplicities come from repeated exact division.
    """
    if p.is_zero():
        raise ZeroInput("root finding needs a nonzero polynomial")
    if p.degree() < 1:
        return []
    ints, _ = p.integer_model()
    zeros = 0
    while ints[0] == 0:
        ints.pop(0)
        zeros += 1
    roots = [Rational(0)] * zeros
    if len(ints) > 1:
        if abs(ints[0]) <= _DIVISOR_LIMIT and abs(ints[-1]) <= _DIVISOR_LIMIT:
            candidates = set()
            for num in _small_divisors(ints[0]):
                for den in _small_divisors(ints[-1]):
                    candidates.add(Rational(num, den))
                    candidates.add(Rational(-num, den))
        else:
            candidates = _reconstructed_candidates(ints)
        work = Poly(ints)
        for cand in sorted(candidates):
            if work.eval(cand) != 0:
                continue
            factor = Poly([-cand, 1])
            while True:
                q, r = work.divrem(factor)
                if not r.is_zero():
                    break
                roots.append(cand)
                work = q
    roots.sort()
    return roots


def _mpf_to_rational(x):
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Rational(0)
    v = Rational(man) * (Rational(2) ** exp if exp >= 0 else Rational(1, 2 ** (-exp)))
    return -v if sign else v


def _limit_denominator(x, bound: int):
    from fractions import Fraction
    f = Fraction(x.numerator, x.denominator).limit_denominator(bound)
    return Rational(f.numerator, f.denominator)


def _certified_roots(ints, extra_digits=0):
    """High-precision complex roots of an integer square-free polynomial.

    Returns (roots, err_bound) as mpmath values; precision is chosen so the
    error bound allows exact rational reconstruction with denominators up to
    the leading coefficient.
    """
    import mpmath

    lead = abs(ints[-1])
    cauchy = 1 + max(abs(c) for c in ints) // lead
    digits = 2 * len(str(lead)) + len(str(cauchy + 1)) + 30 + extra_digits
    target = mpmath.mpf(10) ** (-digits + 10)
    # ints stay exact; polyroots converts them under the working precision
    coeffs_desc = [int(c) for c in reversed(ints)]
    last_exc = None
    for attempt in range(4):
        with mpmath.workdps(digits * (attempt + 1) + 20):
            try:
                # The iteration stalls once update noise (working eps times
                # the evaluation condition number) exceeds the target eps, so
                # retries must grow the extra working precision, not just the
                # step budget.
                roots, err = mpmath.polyroots(
                    coeffs_desc, maxsteps=100 * (attempt + 1),
                    extraprec=50 * 4 ** attempt, error=True)
            except mpmath.libmp.NoConvergence as exc:
                last_exc = exc
                continue
            if err <= target:
                return [mpmath.mpc(r) for r in roots], err
    raise ReconstructionInconclusive(
        f"high-precision root refinement failed: {last_exc}")


def _reconstructed_candidates(ints):
    """Rational root candidates from certified numeric roots."""
    p = Poly(ints)
    g = gcd(p, p.derivative())
    sf = p if g.degree() == 0 else (p / g)
    sints, _ = sf.integer_model()
    roots, err = _certified_roots(sints)
    bound = abs(sints[-1])
    out = set()
    for r in roots:
        if abs(r.imag) > 10 * err + 1e-30:
            continue
        approx = _mpf_to_rational(r.real)
        out.add(_limit_denominator(approx, bound))
    return out


def quad_irrational_roots(p: Poly):
    """Roots of p lying in degree <= 2 extensions, with multiplicity.

    Rational roots are included (a perfect-square discriminant is still a
    quadratic root).  Irrational roots come back as QuadExt pairs.  The
    search runs numerically at certified precision and every quadratic
    factor is verified by exact division, so nothing unverified is ever
    reported; a numeric failure raises ReconstructionInconclusive.
    """
    if p.is_zero():
        raise ZeroInput("root finding needs a nonzero polynomial")
    out = list(rational_roots(p))
    work = p
    for r in out:
        work = work / Poly([-r, 1])
    if work.degree() < 2:
        return out
    g = gcd(work, work.derivative())
    sf = work if g.degree() == 0 else (work / g)
    sints, _ = sf.integer_model()
    roots, err = _certified_roots(sints)
    bound = abs(sints[-1])
    seen = set()
    quads = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            tr = roots[i] + roots[j]
            nr = roots[i] * roots[j]
            if abs(tr.imag) > 10 * err + 1e-30 or abs(nr.imag) > 10 * err + 1e-30:
                continue
            t = _limit_denominator(_mpf_to_rational(tr.real), bound)
            n = _limit_denominator(_mpf_to_rational(nr.real), bound)
            if (t, n) in seen:
                continue
            seen.add((t, n))
            factor = Poly([n, -t, 1])
            q, rem = work.divrem(factor)
            if not rem.is_zero():
                continue
            disc = t * t - 4 * n
            if sqrt_exact(disc) is not None:
                continue  # rational pair, already collected
            mult = 1
            while True:
                q2, rem2 = q.divrem(factor)
                if not rem2.is_zero():
                    break
                mult += 1
                q = q2
            half_t, half = t / 2, Rational(1, 2)
            for _ in range(mult):
                quads.append(QuadExt(half_t, half, disc))
                quads.append(QuadExt(half_t, -half, disc))
    quads.sort(key=lambda z: (z.d, z.a, z.b))
    return out + quads


def numeric_roots(p: Poly, tol: float = 1e-9):
    """All complex roots in double precision, deterministically ordered.

    Thin wrapper over the kernel iteration: strips zero roots, normalizes
    to monic, iterates, and checks residuals against tol scaled by the
    largest coefficient magnitude.  Raises NonConvergence at the cap.
    """
    if p.is_zero() or p.degree() < 1:
        raise ZeroInput("numeric_roots needs degree >= 1")
    coeffs = [_to_complex(c) for c in p.coeffs]
    scale = max(abs(c) for c in coeffs)
    zeros = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    roots = [0j] * zeros
    if len(coeffs) > 1:
        lead = coeffs[-1]
        monic = [c / lead for c in coeffs]
        monic[-1] = 1
        try:
            found = durand_kerner(monic, tol, 200)
        except RuntimeError as exc:
            raise NonConvergence(str(exc)) from exc
        for r in found:
            residual = abs(p.eval_complex(r))
            if residual > tol * scale:
                raise NonConvergence(
                    f"residual {residual:.3e} above tolerance at root {r}")
        roots.extend(found)
    roots.sort(key=lambda z: (abs(z), cmath.phase(z)))
    return roots
