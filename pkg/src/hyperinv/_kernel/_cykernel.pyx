# cython: language_level=3
"""Compiled kernel: exact rational scalar and the simultaneous root iteration.

Rational stores a normalized numerator/denominator pair of Python ints and
matches fractions.Fraction in arithmetic, comparisons and hashing, so values
from either backend interoperate inside one process.  durand_kerner mirrors
the pure-Python version bit for bit: complex multiplication, division and
integer powers are spelled out exactly the way the interpreter evaluates
them, and the extension is compiled with floating-point contraction off.
"""

import numbers
import sys
from fractions import Fraction as _Fraction
from math import gcd as _gcd

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.math cimport INFINITY, fabs, hypot

_HASH_MODULUS = sys.hash_info.modulus
_HASH_INF = sys.hash_info.inf


# --------------------------------------------------------------------------
# exact rational scalar
# --------------------------------------------------------------------------

cdef class Rational:
    """Exact rational number, normalized with a positive denominator.

    Accepts the same constructor inputs as fractions.Fraction (ints, an
    int pair, numeric strings, rational-valued objects); unusual inputs are
    delegated to Fraction itself for parsing.
    """

    cdef object _num
    cdef object _den

    def __cinit__(self, numerator=0, denominator=None):
        cdef object g
        if denominator is None:
            if type(numerator) is int:
                self._num = numerator
                self._den = 1
                return
            if type(numerator) is Rational:
                self._num = (<Rational> numerator)._num
                self._den = (<Rational> numerator)._den
                return
            f = _Fraction(numerator)
            # int() strips foreign integer types (gmpy2.mpz via mpmath)
            self._num = int(f.numerator)
            self._den = int(f.denominator)
            return
        if type(numerator) is int and type(denominator) is int:
            if denominator == 0:
                raise ZeroDivisionError(f"Rational({numerator}, 0)")
            g = _gcd(numerator, denominator)
            if denominator < 0:
                g = -g
            self._num = numerator // g
            self._den = denominator // g
            return
        f = _Fraction(numerator, denominator)
        self._num = int(f.numerator)
        self._den = int(f.denominator)

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    @property
    def real(self):
        return self

    @property
    def imag(self):
        return 0

    def conjugate(self):
        return self

    def as_integer_ratio(self):
        return (self._num, self._den)

    # --- arithmetic ---

    def __add__(self, other):
        t = _ratio(other)
        if t is not None:
            return _add(self._num, self._den, t[0], t[1])
        if isinstance(other, float):
            return _as_float(self) + other
        if isinstance(other, complex):
            return _as_complex(self) + other
        return NotImplemented

    def __radd__(self, other):
        t = _ratio(other)
        if t is not None:
            return _add(t[0], t[1], self._num, self._den)
        if isinstance(other, float):
            return other + _as_float(self)
        if isinstance(other, complex):
            return other + _as_complex(self)
        return NotImplemented

    def __sub__(self, other):
        t = _ratio(other)
        if t is not None:
            return _add(self._num, self._den, -t[0], t[1])
        if isinstance(other, float):
            return _as_float(self) - other
        if isinstance(other, complex):
            return _as_complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        t = _ratio(other)
        if t is not None:
            return _add(t[0], t[1], -self._num, self._den)
        if isinstance(other, float):
            return other - _as_float(self)
        if isinstance(other, complex):
            return other - _as_complex(self)
        return NotImplemented

    def __mul__(self, other):
        t = _ratio(other)
        if t is not None:
            return _mul(self._num, self._den, t[0], t[1])
        if isinstance(other, float):
            return _as_float(self) * other
        if isinstance(other, complex):
            return _as_complex(self) * other
        return NotImplemented

    def __rmul__(self, other):
        t = _ratio(other)
        if t is not None:
            return _mul(t[0], t[1], self._num, self._den)
        if isinstance(other, float):
            return other * _as_float(self)
        if isinstance(other, complex):
            return other * _as_complex(self)
        return NotImplemented

    def __truediv__(self, other):
        t = _ratio(other)
        if t is not None:
            return _div(self._num, self._den, t[0], t[1])
        if isinstance(other, float):
            return _as_float(self) / other
        if isinstance(other, complex):
            return _as_complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        t = _ratio(other)
        if t is not None:
            return _div(t[0], t[1], self._num, self._den)
        if isinstance(other, float):
            return other / _as_float(self)
        if isinstance(other, complex):
            return other / _as_complex(self)
        return NotImplemented

    def __floordiv__(self, other):
        t = _ratio(other)
        if t is not None:
            return (self._num * t[1]) // (self._den * t[0])
        if isinstance(other, float):
            return _as_float(self) // other
        return NotImplemented

    def __rfloordiv__(self, other):
        t = _ratio(other)
        if t is not None:
            return (t[0] * self._den) // (t[1] * self._num)
        if isinstance(other, float):
            return other // _as_float(self)
        return NotImplemented

    def __mod__(self, other):
        t = _ratio(other)
        if t is not None:
            return _build_norm((self._num * t[1]) % (t[0] * self._den),
                               self._den * t[1])
        if isinstance(other, float):
            return _as_float(self) % other
        return NotImplemented

    def __rmod__(self, other):
        t = _ratio(other)
        if t is not None:
            return _build_norm((t[0] * self._den) % (self._num * t[1]),
                               t[1] * self._den)
        if isinstance(other, float):
            return other % _as_float(self)
        return NotImplemented

    def __divmod__(self, other):
        q = self.__floordiv__(other)
        if q is NotImplemented:
            return NotImplemented
        return (q, self.__mod__(other))

    def __rdivmod__(self, other):
        q = self.__rfloordiv__(other)
        if q is NotImplemented:
            return NotImplemented
        return (q, self.__rmod__(other))

    def __pow__(self, other, mod):
        if mod is not None:
            return NotImplemented
        t = _ratio(other)
        if t is not None:
            if t[1] == 1:
                return _int_pow(self._num, self._den, t[0])
            return _as_float(self) ** (t[0] / t[1])
        if isinstance(other, (float, complex)):
            return _as_float(self) ** other
        return NotImplemented

    def __rpow__(self, other, mod):
        if mod is not None:
            return NotImplemented
        if self._den == 1 and self._num >= 0:
            return other ** self._num
        t = _ratio(other)
        if t is not None:
            if self._den == 1:
                return _int_pow(t[0], t[1], self._num)
            return (t[0] / t[1]) ** _as_float(self)
        if self._den == 1:
            return other ** self._num
        return other ** _as_float(self)

    def __neg__(self):
        return _build(-self._num, self._den)

    def __pos__(self):
        return self

    def __abs__(self):
        return _build(-self._num, self._den) if self._num < 0 else self

    # --- comparisons and hashing ---

    def __hash__(self):
        try:
            dinv = pow(self._den, -1, _HASH_MODULUS)
        except ValueError:
            h = _HASH_INF
        else:
            h = hash(hash(abs(self._num)) * dinv)
        result = h if self._num >= 0 else -h
        return -2 if result == -1 else result

    def __eq__(self, other):
        t = _ratio(other)
        if t is not None:
            return self._num * t[1] == t[0] * self._den
        if isinstance(other, complex):
            if other.imag != 0:
                return NotImplemented
            other = other.real
        if isinstance(other, float):
            if other != other or other in (_POS_INF, _NEG_INF):
                return False
            m, e = other.as_integer_ratio()
            return self._num * e == m * self._den
        return NotImplemented

    def __lt__(self, other):
        r = _cmp(self, other)
        if r is None:
            return NotImplemented
        return False if r == 2 else r < 0

    def __le__(self, other):
        r = _cmp(self, other)
        if r is None:
            return NotImplemented
        return False if r == 2 else r <= 0

    def __gt__(self, other):
        r = _cmp(self, other)
        if r is None:
            return NotImplemented
        return False if r == 2 else r > 0

    def __ge__(self, other):
        r = _cmp(self, other)
        if r is None:
            return NotImplemented
        return False if r == 2 else r >= 0

    def __bool__(self):
        return self._num != 0

    # --- conversions ---

    def __float__(self):
        return self._num / self._den

    def __int__(self):
        if self._num >= 0:
            return self._num // self._den
        return -((-self._num) // self._den)

    def __trunc__(self):
        return self.__int__()

    def __floor__(self):
        return self._num // self._den

    def __ceil__(self):
        return -((-self._num) // self._den)

    def __round__(self, ndigits=None):
        if ndigits is None:
            floor_, remainder = divmod(self._num, self._den)
            if remainder * 2 < self._den:
                return floor_
            if remainder * 2 > self._den:
                return floor_ + 1
            return floor_ if floor_ % 2 == 0 else floor_ + 1
        f = round(_Fraction(self._num, self._den), ndigits)
        return _build(f.numerator, f.denominator)

    def __str__(self):
        if self._den == 1:
            return str(self._num)
        return f"{self._num}/{self._den}"

    def __repr__(self):
        return f"Rational({self._num}, {self._den})"

    def __reduce__(self):
        return (type(self), (self._num, self._den))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


cdef double _POS_INF = INFINITY
cdef double _NEG_INF = -INFINITY


cdef inline Rational _build(object num, object den):
    # num/den must already be coprime with den > 0
    cdef Rational r = Rational.__new__(Rational)
    r._num = num
    r._den = den
    return r


cdef inline Rational _build_norm(object num, object den):
    cdef object g = _gcd(num, den)
    if den < 0:
        g = -g
    if g != 1:
        num = num // g
        den = den // g
    return _build(num, den)


cdef inline object _ratio(object x):
    """(numerator, denominator) of an exact operand, else None."""
    if type(x) is Rational:
        return ((<Rational> x)._num, (<Rational> x)._den)
    if type(x) is int:
        return (x, 1)
    if type(x) is _Fraction:
        return (x.numerator, x.denominator)
    if isinstance(x, int):
        return (x, 1)
    if isinstance(x, numbers.Rational):
        return (int(x.numerator), int(x.denominator))
    return None


cdef inline object _add(object na, object da, object nb, object db):
    cdef object g = _gcd(da, db)
    cdef object s, t, x, g2
    if g == 1:
        return _build(na * db + nb * da, da * db)
    s = da // g
    t = db // g
    x = na * t + nb * s
    g2 = _gcd(x, g)
    if g2 == 1:
        return _build(x, s * db)
    return _build(x // g2, (s * db) // g2)


cdef inline object _mul(object na, object da, object nb, object db):
    cdef object g1 = _gcd(na, db)
    cdef object g2 = _gcd(nb, da)
    if g1 != 1:
        na = na // g1
        db = db // g1
    if g2 != 1:
        nb = nb // g2
        da = da // g2
    return _build(na * nb, db * da)


cdef inline object _div(object na, object da, object nb, object db):
    cdef object g1, g2, n, d
    if nb == 0:
        raise ZeroDivisionError(f"Rational({na}, 0)")
    g1 = _gcd(na, nb)
    if g1 != 1:
        na = na // g1
        nb = nb // g1
    g2 = _gcd(db, da)
    if g2 != 1:
        da = da // g2
        db = db // g2
    n = na * db
    d = nb * da
    if d < 0:
        return _build(-n, -d)
    return _build(n, d)


cdef inline object _int_pow(object num, object den, object e):
    cdef object n2, d2
    if e >= 0:
        return _build(num ** e, den ** e)
    if num == 0:
        raise ZeroDivisionError(f"Rational(0, {den})")
    e = -e
    n2 = den ** e
    d2 = num ** e
    if d2 < 0:
        return _build(-n2, -d2)
    return _build(n2, d2)


cdef inline double _as_float(Rational x):
    return x._num / x._den


cdef inline object _as_complex(Rational x):
    return complex(x._num / x._den)


cdef inline object _cmp(Rational a, object other):
    """Sign of (a - other) as -1/0/1, 2 for NaN, None when not comparable."""
    cdef object t = _ratio(other)
    cdef object lhs, rhs
    if t is not None:
        lhs = a._num * t[1]
        rhs = t[0] * a._den
    elif isinstance(other, float):
        if other != other:
            return 2  # NaN: every ordering comparison is False
        if other == _POS_INF:
            return -1
        if other == _NEG_INF:
            return 1
        m, e = other.as_integer_ratio()
        lhs = a._num * e
        rhs = m * a._den
    else:
        return None
    if lhs == rhs:
        return 0
    return -1 if lhs < rhs else 1


numbers.Rational.register(Rational)


# --------------------------------------------------------------------------
# simultaneous root iteration
# --------------------------------------------------------------------------

ctypedef struct dcplx:
    double re
    double im


cdef inline dcplx c_mul(dcplx a, dcplx b):
    cdef dcplx r
    r.re = a.re * b.re - a.im * b.im
    r.im = a.re * b.im + a.im * b.re
    return r


cdef inline dcplx c_sum(dcplx a, dcplx b):
    cdef dcplx r
    r.re = a.re + b.re
    r.im = a.im + b.im
    return r


cdef inline dcplx c_quot(dcplx a, dcplx b):
    # scaled division, the same form the interpreter uses for complex
    cdef dcplx r
    cdef double ratio, denom
    if fabs(b.re) >= fabs(b.im):
        ratio = b.im / b.re
        denom = b.re + b.im * ratio
        r.re = (a.re + a.im * ratio) / denom
        r.im = (a.im - a.re * ratio) / denom
    else:
        ratio = b.re / b.im
        denom = b.re * ratio + b.im
        r.re = (a.re * ratio + a.im) / denom
        r.im = (a.im * ratio - a.re) / denom
    return r


cdef inline dcplx c_powu(dcplx x, long n):
    # binary powering in the same multiplication order as complex.__pow__
    cdef dcplx r, p
    cdef long mask = 1
    r.re = 1.0
    r.im = 0.0
    p = x
    while mask > 0 and n >= mask:
        if n & mask:
            r = c_mul(r, p)
        mask <<= 1
        p = c_mul(p, p)
    return r


cdef inline double c_abs(dcplx z):
    return hypot(z.re, z.im)


def durand_kerner(coeffs, tol=1e-9, max_iter=200):
    """All complex roots of a monic polynomial by simultaneous iteration.

    coeffs -- ascending complex coefficients, last entry 1, nonzero constant
    term (strip zero roots first).  Raises RuntimeError at the iteration cap.
    """
    cdef Py_ssize_t n = len(coeffs) - 1
    if n < 1:
        return []
    if coeffs[-1] != 1:
        raise ValueError("coefficients must be monic")
    if n == 1:
        return [-coeffs[0]]

    cdef double c_tol = tol
    cdef long cap = max_iter
    cdef Py_ssize_t i, j, k
    cdef long it
    cdef dcplx base, r, val, den, delta, diff
    cdef double biggest, step, mag, scale
    cdef dcplx* cc = <dcplx*> PyMem_Malloc(n * sizeof(dcplx))
    cdef dcplx* roots = NULL
    if cc == NULL:
        raise MemoryError()
    roots = <dcplx*> PyMem_Malloc(n * sizeof(dcplx))
    if roots == NULL:
        PyMem_Free(cc)
        raise MemoryError()

    try:
        for i in range(n):
            w = complex(coeffs[i])
            cc[i].re = w.real
            cc[i].im = w.imag

        base.re = 0.4
        base.im = 0.9
        for k in range(n):
            roots[k] = c_powu(base, k + 1)

        for it in range(cap):
            biggest = 0.0
            for k in range(n):
                r = roots[k]
                # Horner evaluation of the monic polynomial at r.
                val.re = 1.0
                val.im = 0.0
                for i in range(n - 1, -1, -1):
                    val = c_sum(c_mul(val, r), cc[i])
                den.re = 1.0
                den.im = 0.0
                for j in range(n):
                    if j != k:
                        diff.re = r.re - roots[j].re
                        diff.im = r.im - roots[j].im
                        den = c_mul(den, diff)
                if den.re == 0.0 and den.im == 0.0:
                    scale = 1.0 + 1e-10
                    roots[k].re = (r.re * scale - r.im * 0.0) + 1e-10
                    roots[k].im = (r.re * 0.0 + r.im * scale) + 0.0
                    biggest = INFINITY
                    continue
                delta = c_quot(val, den)
                roots[k].re = r.re - delta.re
                roots[k].im = r.im - delta.im
                mag = c_abs(roots[k])
                if not (mag > 1.0):
                    mag = 1.0  # mirrors max(1.0, abs(...)) including NaN
                step = c_abs(delta) / mag
                if step > biggest:
                    biggest = step
            if biggest <= c_tol:
                return [complex(roots[k].re, roots[k].im) for k in range(n)]
        raise RuntimeError(f"no convergence after {max_iter} iterations")
    finally:
        PyMem_Free(cc)
        PyMem_Free(roots)
