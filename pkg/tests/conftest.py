"""Shared helpers for the test suite: fixture curves and random generators."""

from hyperinv.curve import HyperellipticCurve
from hyperinv.errors import HyperinvError
from hyperinv.poly import Poly

# Ascending coefficient lists of the recurring example curves.
SEXTIC_PLUS_ONE = [1, 0, 0, 0, 0, 0, 1]          # Y^2 = X^6 + 1
SLICE_15 = [1, 0, 15, 0, 15, 0, 1]               # normal form a = (15, 15)
SLICE_MINUS_5 = [1, 0, -5, 0, -5, 0, 1]          # normal form a = (-5, -5)
QUINTIC = [0, -1, 0, 0, 0, 1]                    # Y^2 = X^5 - X
SEXTIC_MINUS_X = [0, -1, 0, 0, 0, 0, 1]          # Y^2 = X^6 - X
CUBIC_MIDDLE = [1, 0, 0, 4, 0, 0, 1]             # Y^2 = X^6 + 4X^3 + 1
EVEN_CHAIN = [1, 0, 2, 0, 2, 0, 1]               # Y^2 = X^6 + 2X^4 + 2X^2 + 1

FIXTURES = {
    "sextic_plus_one": SEXTIC_PLUS_ONE,
    "slice_15": SLICE_15,
    "slice_minus_5": SLICE_MINUS_5,
    "quintic": QUINTIC,
    "cubic_middle": CUBIC_MIDDLE,
}


def curve(coeffs) -> HyperellipticCurve:
    return HyperellipticCurve(Poly(list(coeffs)))


def random_normal_form(rng, g, lo=-9, hi=9, symmetric=False):
    """Random smooth normal-form curve X^(2g+2) + sum a_i X^(2i) + 1.

    Returns (curve, a) or None when the draw is singular.  With symmetric
    the ends are tied (a_1 = a_g), which puts the curve on the locus where
    reduced involutions lift to involutions.
    """
    a = [rng.randint(lo, hi) for _ in range(g)]
    if symmetric:
        a[-1] = a[0]
    coeffs = [1] + [v for x in a for v in (0, x)] + [0, 1]
    try:
        return curve(coeffs), tuple(a)
    except HyperinvError:
        return None


def random_moebius(rng, lo=-5, hi=5):
    """Random invertible fractional linear map with small integer entries."""
    from hyperinv.moebius import MoebiusMap

    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c != 0:
            return MoebiusMap(a, b, c, d)
