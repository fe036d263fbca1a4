"""The symplectic torus R^2/Z^2: affine maps, marked points, and the
triangle-counting oracle.

Lines of slope ``3k`` through lattice points are the Lagrangians of
interest; products of their intersection-point morphisms count
holomorphic triangles, and each triangle of symplectic area ``A*tau``
contributes ``y**(144*A)`` (so that, e.g., the minimal triangle of area
``tau/12`` contributes ``y**12``).  The oracle below enumerates those
triangles directly from plane geometry with exact rational arithmetic;
it shares nothing with the theta series it is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from torusmirror.series import LaurentSeries
from torusmirror.theta import family_series


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class TorusPoint:
    """A point of R^2/Z^2 with rational coordinates, stored in [0, 1)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x) % 1)
        object.__setattr__(self, "y", _frac(self.y) % 1)


def point_X(i: int) -> TorusPoint:
    """Intersection point ``X_i = (i/3, 0)`` of the base section with the
    slope-3 line family."""
    return TorusPoint(Fraction(i, 3), Fraction(0))


def point_Y(i: int) -> TorusPoint:
    """``Y_i = (i/6, 0)``, base section meets slope 6."""
    return TorusPoint(Fraction(i, 6), Fraction(0))


def point_Z(i: int) -> TorusPoint:
    """``Z_i = (i/9, 0)``, base section meets slope 9."""
    return TorusPoint(Fraction(i, 9), Fraction(0))


@dataclass(frozen=True)
class AffineMap:
    """An affine self-map of the torus, ``v -> linear @ v + translation``."""

    linear: Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]
    translation: Tuple[Fraction, Fraction]

    def __post_init__(self):
        lin = tuple(tuple(_frac(e) for e in row) for row in self.linear)
        tr = tuple(_frac(e) for e in self.translation)
        if len(lin) != 2 or any(len(r) != 2 for r in lin) or len(tr) != 2:
            raise ValueError("affine maps act on the plane")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tr)

    def apply_lift(self, x, y) -> Tuple[Fraction, Fraction]:
        """Image of a point of the universal cover (no reduction)."""
        (a, b), (c, d) = self.linear
        tx, ty = self.translation
        return (a * x + b * y + tx, c * x + d * y + ty)

    def apply(self, p: TorusPoint) -> TorusPoint:
        u, v = self.apply_lift(p.x, p.y)
        return TorusPoint(u, v)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """``self`` after ``other``."""
        (a, b), (c, d) = self.linear
        (e, f), (g, h) = other.linear
        lin = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        tr = self.apply_lift(*other.translation)
        return AffineMap(lin, tr)

    @property
    def determinant(self) -> Fraction:
        (a, b), (c, d) = self.linear
        return a * d - b * c


def shear(s) -> AffineMap:
    """The shear ``(x, y) -> (x, y + s*x)``."""
    return AffineMap(((1, 0), (s, 1)), (0, 0))


#: Minimal Dehn twist along the base direction.
GAMMA = shear(1)

#: Large-complex-structure monodromy: the cube of the minimal twist.
RHO = shear(3)


def phi(k: int) -> AffineMap:
    """The orientation-reversing map
    ``(x, y) -> (x/2 - 7y/18 + k/9, -2y)`` exchanging the triangle
    vertex roles; its existence is what forces the products to commute.
    """
    return AffineMap(((Fraction(1, 2), Fraction(-7, 18)), (0, -2)),
                     (Fraction(k, 9), 0))


def symplectic_character(m: AffineMap) -> int:
    """+1 for area-preserving maps, -1 for area-reversing ones."""
    det = m.determinant
    if det == 1:
        return 1
    if det == -1:
        return -1
    raise ValueError("not area-preserving")


def phi_vertex_check(k: int) -> bool:
    """Check the three vertex exchanges of ``phi(k)``:
    ``X_0 -> Z_k``, ``rho(Y_k) -> X_0``, ``Z_k -> Y_k`` on the torus."""
    f = phi(k)
    rho_yk = RHO.apply(point_Y(k))
    return (f.apply(point_X(0)) == point_Z(k)
            and f.apply(rho_yk) == point_X(0)
            and f.apply(point_Z(k)) == point_Y(k))


def triangle_exponent(base_x: Fraction, s1: Fraction, s2: Fraction, m: int) -> Fraction:
    """Exponent ``144 * area`` of the triangle cut out by the base line
    ``y = 0``, the slope-``s1`` line through ``(base_x, 0)``, and the
    slope-``s2`` line ``y = s2*x + m``."""
    return 72 * s1 * (m + s2 * base_x) ** 2 / (s2 * (s2 - s1))


def triangle_oracle(base_x, s1, s2, truncation: int
                    ) -> Dict[Tuple[Fraction, Fraction], LaurentSeries]:
    """Count triangles below a given area, binned by endpoint classes.

    The base vertex ``V1 = (base_x, 0)`` sits on both the base line
    ``y = 0`` and the slope-``s1`` line through it; the third side runs
    over every lift ``y = s2*x + m`` of the slope-``s2`` lattice family.
    Each integer ``m`` closes a triangle ``V1, V2, V3`` (``V2`` on the
    two sloped lines, ``V3`` back on the base) and contributes
    ``y**(144*area)`` to the bin keyed by the x-classes of ``V2`` and
    ``V3`` mod 1.  The degenerate ``m`` (all three vertices equal)
    contributes the constant 1 to its bin.

    Returns a mapping from ``(mid_class, end_class)`` to the exact
    series of all contributions with exponent below ``truncation``.
    """
    base_x, s1, s2 = _frac(base_x), _frac(s1), _frac(s2)
    if s1 <= 0 or s2 <= s1:
        raise ValueError("need slopes 0 < s1 < s2")
    bins: Dict[Tuple[Fraction, Fraction], dict] = {}

    def visit(m: int) -> bool:
        e = triangle_exponent(base_x, s1, s2, m)
        if e >= truncation:
            return False
        if e.denominator != 1:
            raise ValueError("area not commensurate with base")
        mid = ((m + s1 * base_x) / (s1 - s2)) % 1
        end = (Fraction(-m) / s2) % 1
        exps = bins.setdefault((mid, end), {})
        exps[int(e)] = exps.get(int(e), 0) + 1
        return True

    # the exponent is a parabola in m: walk out of its vertex both ways
    m0 = math.floor(-s2 * base_x)
    m = m0
    while visit(m):
        m -= 1
    m = m0 + 1
    while visit(m):
        m += 1
    return {key: LaurentSeries.from_terms(exps, truncation)
            for key, exps in sorted(bins.items())}


def _oracle_matches(bins, expected, truncation: int) -> bool:
    if not set(bins) <= set(expected):
        return False
    for key, series in expected.items():
        got = bins.get(key, LaurentSeries.zero(truncation))
        if not got.eq_to_order(series, min(got.truncation, series.truncation)):
            return False
    return True


def oracle_vs_theta(truncation: int) -> bool:
    """Replay every structure constant geometrically.

    Slopes (0, 3, 6) over the ``X`` base points must reproduce the
    A-family coefficients, slopes (0, 6, 9) over the ``Y`` base points
    the B-family coefficients, and the mixed slopes (0, 3, 9) over the
    ``X`` base points the same B-coefficients again, which is the
    commutativity of the mixed products made geometric.
    """
    for i in range(3):
        bins = triangle_oracle(Fraction(i, 3), 3, 6, truncation)
        expected = {}
        for j in range(3):
            for k in range(2):
                key = (Fraction(j, 3) % 1, Fraction(i + j + 3 * k, 6) % 1)
                expected[key] = family_series("A", i - j + 3 * k, truncation)
        if not _oracle_matches(bins, expected, truncation):
            return False
    for i in range(6):
        bins = triangle_oracle(Fraction(i, 6), 6, 9, truncation)
        expected = {}
        for j in range(3):
            for k in range(3):
                key = (Fraction(j, 3) % 1, Fraction(i + j + 3 * k, 9) % 1)
                expected[key] = family_series("B", 2 * j - i + 6 * k, truncation)
        if not _oracle_matches(bins, expected, truncation):
            return False
    for j in range(3):
        bins = triangle_oracle(Fraction(j, 3), 3, 9, truncation)
        expected = {}
        for i in range(6):
            for k in range(3):
                key = (Fraction(i, 6) % 1, Fraction(i + j + 3 * k, 9) % 1)
                expected[key] = family_series("B", 2 * j - i + 6 * k, truncation)
        if not _oracle_matches(bins, expected, truncation):
            return False
    return True
