"""Dense polynomial arithmetic, resultants, and exact root finding."""

import random
from fractions import Fraction

import pytest

from hyperinv.errors import ConstantInput, ZeroInput
from hyperinv.exact import QuadExt
from hyperinv.poly import (
    Poly,
    constant,
    det_bareiss,
    discriminant,
    gcd,
    is_square_free,
    numeric_roots,
    quad_irrational_roots,
    rational_roots,
    resultant,
    variable,
)
from hyperinv._kernel import Rational


def _random_poly(rng, max_deg=6, lo=-9, hi=9):
    deg = rng.randint(0, max_deg)
    coeffs = [Rational(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(deg + 1)]
    return Poly(coeffs)


def sylvester_resultant(p, q):
    """Independent check: resultant as the Sylvester matrix determinant.

    Built over Fraction with plain Gaussian elimination, sharing no code
    with the subresultant implementation under test.
    """
    n, m = p.degree(), q.degree()
    if n < 0 or m < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(p.coeff(0)) ** m
    if m == 0:
        return Fraction(q.coeff(0)) ** n
    size = n + m
    rows = []
    pc = [Fraction(p.coeff(n - i)) for i in range(n + 1)]  # descending
    qc = [Fraction(q.coeff(m - i)) for i in range(m + 1)]
    for i in range(m):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - m - 1 - i))
    # fraction-free is unnecessary here; exact Gaussian elimination suffices
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def cofactor_det(rows):
    """Independent determinant by cofactor expansion (fine for small sizes)."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


class TestArithmetic:
    def test_construction_strips_leading_zeros(self):
        assert Poly([1, 2, 0, 0]).degree() == 1
        assert Poly([0, 0]).is_zero()
        assert Poly([]).degree() == float("-inf")

    def test_ring_axioms_random(self):
        rng = random.Random(11)
        for _ in range(60):
            a, b, c = (_random_poly(rng, 4) for _ in range(3))
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + Poly([]) == a
            assert a * Poly([1]) == a
            assert a - a == Poly([])

    def test_scalar_mixing(self):
        x = variable()
        p = 3 * x**2 + Rational(1, 2) * x - 4
        assert p.coeff(2) == 3
        assert p.coeff(1) == Rational(1, 2)
        assert p.coeff(0) == -4
        assert (p - p).is_zero()
        assert constant(5).degree() == 0

    def test_eval_and_call(self):
        p = Poly([1, 0, 1])  # 1 + X^2
        assert p(2) == 5
        assert p.eval(Rational(1, 2)) == Rational(5, 4)
        assert p.eval_complex(1j) == pytest.approx(0)

    def test_shift_and_reverse(self):
        p = Poly([1, 2])
        assert p.shift(2) == Poly([0, 0, 1, 2])
        assert Poly([1, 2, 3]).reverse() == Poly([3, 2, 1])

    def test_pow(self):
        x = variable()
        assert (x + 1) ** 3 == Poly([1, 3, 3, 1])
        assert (x + 1) ** 0 == Poly([1])

    def test_divrem_property_random(self):
        rng = random.Random(13)
        for _ in range(60):
            a = _random_poly(rng, 7)
            b = _random_poly(rng, 4)
            if b.is_zero():
                continue
            q, r = a.divrem(b)
            assert a == q * b + r
            assert r.degree() < b.degree()

    def test_divrem_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Poly([1, 1]).divrem(Poly([]))

    def test_derivative(self):
        p = Poly([5, 4, 3, 2])  # 5 + 4X + 3X^2 + 2X^3
        assert p.derivative() == Poly([4, 6, 6])
        assert constant(3).derivative().is_zero()

    def test_monic(self):
        p = Poly([2, 0, 4])
        assert p.monic() == Poly([Rational(1, 2), 0, 1])

    def test_str(self):
        assert str(Poly([1, 0, 1])) == "X^2 + 1"
        assert str(Poly([])) == "0"


class TestIntegerModel:
    def test_contract(self):
        p = Poly([Rational(1, 2), Rational(3, 4), Rational(-5, 6)])
        ints, content = p.integer_model()
        assert p == Poly(ints).scale(content)
        from math import gcd as igcd
        from functools import reduce

        assert reduce(igcd, (abs(c) for c in ints)) == 1
        assert ints[-1] > 0

    def test_negative_lead_flips(self):
        ints, content = Poly([1, -2]).integer_model()
        assert ints[-1] > 0
        assert Poly(ints).scale(content) == Poly([1, -2])


class TestGcd:
    def test_common_factor_recovered(self):
        rng = random.Random(17)
        for _ in range(25):
            h = _random_poly(rng, 3)
            if h.degree() < 1:
                continue
            p = _random_poly(rng, 3)
            q = _random_poly(rng, 3)
            g = gcd(h * p, h * q)
            # gcd is monic and divisible by h up to the gcd of p, q
            _, r = (h.monic()).divrem(g) if g.degree() > h.degree() else g.divrem(h.monic())
            del r
            qt, rem = (h * p).divrem(g)
            assert rem.is_zero()
            qt, rem = (h * q).divrem(g)
            assert rem.is_zero()
            assert g.lead() == 1

    def test_coprime(self):
        assert gcd(Poly([1, 1]), Poly([2, 1])).degree() == 0


class TestResultant:
    def test_against_sylvester_oracle(self):
        rng = random.Random(19)
        checked = 0
        while checked < 40:
            p = _random_poly(rng, 5)
            q = _random_poly(rng, 5)
            if p.degree() < 1 or q.degree() < 1:
                continue
            r = resultant(p, q)
            assert Fraction(int(r.numerator), int(r.denominator)) == sylvester_resultant(p, q)
            checked += 1

    def test_shared_root_gives_zero(self):
        x = variable()
        assert resultant((x - 2) * (x + 1), (x - 2) * (x + 5)) == 0

    def test_product_of_evaluations(self):
        # res(p, q) = lc(p)^deg(q) * prod q(root of p)
        x = variable()
        p = (x - 1) * (x - 2)
        q = x**2 + 1
        assert resultant(p, q) == q(1) * q(2)


class TestDiscriminant:
    def test_quadratic(self):
        rng = random.Random(23)
        for _ in range(20):
            b = Rational(rng.randint(-9, 9))
            c = Rational(rng.randint(-9, 9))
            assert discriminant(Poly([c, b, 1])) == b * b - 4 * c

    def test_depressed_cubic(self):
        rng = random.Random(29)
        for _ in range(20):
            p = Rational(rng.randint(-9, 9))
            q = Rational(rng.randint(-9, 9))
            assert discriminant(Poly([q, p, 0, 1])) == -4 * p**3 - 27 * q**2

    def test_constant_rejected(self):
        with pytest.raises(ConstantInput):
            discriminant(Poly([3]))

    def test_square_free(self):
        x = variable()
        assert is_square_free((x - 1) * (x + 2))
        assert not is_square_free((x - 1) ** 2 * (x + 2))


class TestDetBareiss:
    def test_against_cofactor_oracle(self):
        rng = random.Random(31)
        for size in (1, 2, 3, 4):
            for _ in range(10):
                rows = [
                    [Rational(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(size)]
                    for _ in range(size)
                ]
                assert det_bareiss(rows) == cofactor_det(rows)

    def test_polynomial_entries(self):
        x = variable()
        rows = [[x + 1, constant(2)], [constant(3), x - 1]]
        assert det_bareiss(rows) == (x + 1) * (x - 1) - 6

    def test_singular(self):
        rows = [[Rational(1), Rational(2)], [Rational(2), Rational(4)]]
        assert det_bareiss(rows) == 0


class TestRationalRoots:
    def test_planted_roots_with_multiplicity(self):
        x = variable()
        p = (x - 2) ** 2 * (2 * x + 1) * (x**2 + 1)
        roots = rational_roots(p)
        assert roots == sorted([Rational(-1, 2), Rational(2), Rational(2)])

    def test_no_rational_roots(self):
        assert rational_roots(Poly([1, 0, 1])) == []
        assert rational_roots(Poly([2, 0, 0, 1])) == []  # X^3 + 2

    def test_large_coefficients_certified_path(self):
        # end coefficients past the trial-division limit
        big_prime = 2 ** 61 - 1
        x = variable()
        p = (big_prime * x - 3) * (x - 7) * (x**2 + x + 1)
        roots = rational_roots(p)
        assert roots == sorted([Rational(3, big_prime), Rational(7)])

        q = 10 ** 9 + 7
        p2 = (q * x - 1) * (q * x + 2) * (x - 11)
        assert rational_roots(p2) == sorted(
            [Rational(1, q), Rational(-2, q), Rational(11)]
        )

    def test_extreme_magnitude_spread_recovered_exactly(self):
        # roots 1/big and big span 52 orders of magnitude; the certified
        # path must keep raising its working precision until both resolve
        big = 2 ** 64 * 3 ** 20
        x = variable()
        p = (big * x - 1) * (x - big) * (x**2 + x + 1)
        assert rational_roots(p) == sorted([Rational(1, big), Rational(big)])

    def test_fractional_coefficients(self):
        x = variable()
        p = (x - Rational(3, 7)) * (x + Rational(5, 2))
        assert rational_roots(p) == sorted([Rational(3, 7), Rational(-5, 2)])


class TestQuadIrrationalRoots:
    def test_planted_pairs(self):
        x = variable()
        p = (x**2 - 2) * (x**2 - 3) * (2 * x - 1)
        roots = quad_irrational_roots(p)
        rationals = [r for r in roots if isinstance(r, Rational)]
        quads = [r for r in roots if isinstance(r, QuadExt)]
        assert rationals == [Rational(1, 2)]
        assert set(quads) == {
            QuadExt(0, 1, 2),
            QuadExt(0, -1, 2),
            QuadExt(0, 1, 3),
            QuadExt(0, -1, 3),
        }
        for r in roots:
            assert p(r) == 0

    def test_shifted_pair(self):
        x = variable()
        p = x**2 - 2 * x - 1  # roots 1 +- sqrt(2)
        roots = quad_irrational_roots(p)
        assert set(roots) == {QuadExt(1, 1, 2), QuadExt(1, -1, 2)}

    def test_cubic_irrational_factor_ignored(self):
        x = variable()
        p = (x**3 - 2) * (x - 5)
        roots = quad_irrational_roots(p)
        assert roots == [Rational(5)]


class TestNumericRoots:
    def test_ordering_and_residuals(self):
        x = variable()
        p = (x - 1) * (x + 1) * (x - 3) * (x**2 + 4)
        roots = numeric_roots(p)
        assert len(roots) == 5
        keys = [(abs(z), 0) for z in roots]
        assert keys == sorted(keys)
        for z in roots:
            assert abs(p.eval_complex(z)) < 1e-6

    def test_zero_roots_stripped_then_reported(self):
        p = Poly([0, 0, -1, 0, 0, 0, 1])  # X^2 (X^4 - 1)... actually X^6 - X^2
        roots = numeric_roots(p)
        zeros = [z for z in roots if z == 0]
        assert len(zeros) == 2

    def test_constant_rejected(self):
        with pytest.raises(ZeroInput):
            numeric_roots(Poly([5]))
        with pytest.raises(ZeroInput):
            numeric_roots(Poly([]))
