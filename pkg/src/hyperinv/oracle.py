"""Floating-point cross-check of the reduced symmetry group.

The reduced symmetries of Y^2 = F(X) are the fractional linear maps that
permute the branch points (the roots of F, plus infinity when the degree
is odd).  A fractional linear map is pinned down by three points, so every
symmetry appears among the maps sending one fixed triple of branch points
to some ordered triple of branch points.  This module enumerates those
candidates numerically, keeps the ones that permute the branch set within
tolerance, and then works with the induced permutations, which are exact
objects: closure, inverses, and element orders are checked combinatorially
rather than in floating point.

The result is independent of the exact machinery and serves as an oracle
for it: group orders and element orders can be compared against labels
derived from invariants without sharing any code path.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Tuple

from .errors import ToleranceAmbiguity, UnknownSignature
from .invariants import GroupLabel
from .moebius import INFINITY
from .poly import numeric_roots
from ._kernel import Rational

_GENUS2_LABELS = {
    1: "Z2",
    2: "V4",
    4: "D8",
    5: "Z10",
    6: "D12",
    12: "Z3⋊D8",
    24: "GL2(3)",
}


@dataclass(frozen=True)
class NumericGroup:
    """Reduced symmetry group recovered from branch-point permutations.

    ``elements`` holds one permutation per group element, acting on the
    branch points in their deterministic sorted order.  ``element_orders``
    is the sorted multiset of element orders.
    """

    elements: Tuple[Tuple[int, ...], ...]
    order: int
    element_orders: Tuple[int, ...]


def _chordal(z, w) -> float:
    """Distance on the Riemann sphere; finite even when a point is infinite."""
    if z is INFINITY and w is INFINITY:
        return 0.0
    if z is INFINITY:
        return 2.0 / math.sqrt(1.0 + abs(w) ** 2)
    if w is INFINITY:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    return 2.0 * abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


def _to_zero_one_inf(z1, z2, z3):
    """Matrix of the map sending (z1, z2, z3) to (0, 1, infinity)."""
    if z1 is INFINITY:
        return (0j, z2 - z3, 1 + 0j, -z3)
    if z2 is INFINITY:
        return (1 + 0j, -z1, 1 + 0j, -z3)
    if z3 is INFINITY:
        return (1 + 0j, -z1, 0j, z2 - z1)
    return (z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def _triple_map(src, dst):
    """Matrix of the map sending the source triple to the target triple."""
    a, b, c, d = _to_zero_one_inf(*src)
    p, q, r, s = _to_zero_one_inf(*dst)
    m = (s * a - q * c, s * b - q * d, p * c - r * a, p * d - r * b)
    scale = max(abs(x) for x in m)
    return tuple(x / scale for x in m)


def _apply(m, z):
    a, b, c, d = m
    if z is INFINITY:
        if abs(c) < 1e-14:
            return INFINITY
        return a / c
    num = a * z + b
    den = c * z + d
    if abs(den) <= 1e-14 * (1.0 + abs(num)):
        return INFINITY
    return num / den


def _match_permutation(m, branch, tol):
    """Permutation induced on ``branch`` by ``m``, or None if it is not one.

    Raises ToleranceAmbiguity when an image point sits within tol of two
    different branch points, since accepting either would be arbitrary.
    """
    perm = []
    for z in branch:
        w = _apply(m, z)
        best, best_j, second = None, None, None
        for j, target in enumerate(branch):
            dist = _chordal(w, target)
            if best is None or dist < best:
                best, second, best_j = dist, best, j
            elif second is None or dist < second:
                second = dist
        if best > tol:
            return None
        if second is not None and second <= tol:
            raise ToleranceAmbiguity(
                f"image point {w} matches two branch points within {tol}"
            )
        perm.append(best_j)
    if len(set(perm)) != len(perm):
        return None
    return tuple(perm)


def _perm_order(perm) -> int:
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def _exact_eval(coeffs, zr, zi):
    """Horner evaluation over exact complex rationals; returns (re, im)."""
    re = im = Fraction(0)
    for c in reversed(coeffs):
        re, im = re * zr - im * zi, re * zi + im * zr
        re += Fraction(int(c.numerator), int(c.denominator))
    return re, im


def _check_root_accuracy(F, roots, tol):
    """Reject root lists whose Newton correction exceeds the tolerance.

    The correction must be computed against the exact coefficients: a
    converged iterate is a near-exact root of the float-rounded polynomial,
    so a floating re-evaluation cannot see the gap to the true roots.
    """
    if not all(isinstance(c, Rational) for c in F.coeffs):
        return  # exact re-evaluation is only defined for rational models
    dcoeffs = F.derivative().coeffs
    for z in roots:
        zr, zi = Fraction(z.real), Fraction(z.imag)
        fr, fi = _exact_eval(F.coeffs, zr, zi)
        gr, gi = _exact_eval(dcoeffs, zr, zi)
        fmag = math.hypot(float(fr), float(fi))
        gmag = math.hypot(float(gr), float(gi))
        if gmag == 0.0 or fmag > tol * gmag:
            raise ToleranceAmbiguity(
                "branch points are not resolved at this tolerance"
            )


def reduced_group(curve, tol: float = 1e-9) -> NumericGroup:
    """Numerically recover the group of branch-set symmetries.

    ``tol`` bounds the chordal distance allowed when matching image points
    to branch points; it must lie in (0, 1e-4] so that matches stay well
    below typical branch-point separations.  Raises ToleranceAmbiguity when
    the branch points themselves are not resolved at this tolerance, when a
    match is ambiguous, or when the accepted permutations fail to form a
    group (a sign the tolerance clipped or admitted a spurious symmetry).
    """
    if not 0.0 < tol <= 1e-4:
        raise ValueError("tol must lie in (0, 1e-4]")
    branch = list(numeric_roots(curve.F))
    _check_root_accuracy(curve.F, branch, tol)
    if curve.infinite_branch:
        branch.append(INFINITY)
    n = len(branch)
    for i in range(n):
        for j in range(i + 1, n):
            if _chordal(branch[i], branch[j]) <= 10.0 * tol:
                raise ToleranceAmbiguity(
                    "branch points are not resolved at this tolerance"
                )

    src = tuple(branch[:3])
    found = {}
    for dst in permutations(range(n), 3):
        m = _triple_map(src, tuple(branch[k] for k in dst))
        perm = _match_permutation(m, branch, tol)
        if perm is not None:
            found[perm] = m

    perms = set(found)
    identity = tuple(range(n))
    if identity not in perms:
        raise ToleranceAmbiguity("identity symmetry not recovered")
    for p in perms:
        if tuple(p.index(i) for i in range(n)) not in perms:
            raise ToleranceAmbiguity("permutation set is not closed under inverse")
        for q in perms:
            if tuple(p[q[i]] for i in range(n)) not in perms:
                raise ToleranceAmbiguity(
                    "permutation set is not closed under composition"
                )

    elements = tuple(sorted(perms))
    orders = tuple(sorted(_perm_order(p) for p in elements))
    return NumericGroup(elements=elements, order=len(elements), element_orders=orders)


def has_klein_subgroup(group: NumericGroup) -> bool:
    """True when two distinct commuting involutions exist in the group."""
    invs = [p for p in group.elements if _perm_order(p) == 2]
    for i, p in enumerate(invs):
        for q in invs[i + 1:]:
            pq = tuple(p[q[k]] for k in range(len(p)))
            qp = tuple(q[p[k]] for k in range(len(p)))
            if pq == qp:
                return True
    return False


def label_from_signature(genus: int, group: NumericGroup) -> GroupLabel:
    """Name the full symmetry group from the reduced group's signature.

    For genus 2 the reduced order determines the full group.  For other
    genera only unambiguous cases are named: the trivial reduced group
    (hyperelliptic involution only) and odd-order cyclic reduced groups,
    whose extension by the central involution splits.  Everything else
    raises UnknownSignature.
    """
    n = group.order
    if n == 1:
        return GroupLabel("Z2", reduced_order=1)
    if genus == 2:
        if n in _GENUS2_LABELS:
            return GroupLabel(_GENUS2_LABELS[n], reduced_order=n)
        raise UnknownSignature(f"no genus-2 group of reduced order {n}")
    if n % 2 == 1 and max(group.element_orders) == n:
        return GroupLabel(f"Z2N({n})", reduced_order=n)
    raise UnknownSignature(
        f"reduced order {n} is not named outside genus 2"
    )
