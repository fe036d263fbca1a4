"""Structure constants of the graded ring built from the line morphisms.

The ring is generated by the three degree-one morphisms ``X_i``; its
degree-two piece is spanned by the six ``Y_i`` and the degree-three
piece by the nine ``Z_i``.  The two product rules

* ``X_i * X_j = sum_{k=0,1}  A_{i-j+3k} * Y_{i+j+3k}``
* ``Y_i * X_j = sum_{k=0..2} B_{2j-i+6k} * Z_{i+j+3k}``

carry all the structure; everything else here is bookkeeping on top of
them (commutativity, associativity, cubic monomial expansion, and the
degree-two change of basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from torusmirror import linalg
from torusmirror.series import LaurentSeries, PrecisionError
from torusmirror.theta import family_series

LEVEL_PERIOD = {"X": 3, "Y": 6, "Z": 9}

#: Ordered basis of the ten cubic monomials, as index triples.
MONOMIAL_BASIS: Tuple[Tuple[int, int, int], ...] = (
    (0, 0, 0), (1, 1, 1), (2, 2, 2),
    (0, 0, 1), (1, 1, 2), (2, 2, 0),
    (0, 0, 2), (1, 1, 0), (2, 2, 1),
    (0, 1, 2),
)

#: Ordered basis of the six quadratic monomials.
QUADRATIC_BASIS: Tuple[Tuple[int, int], ...] = (
    (0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2),
)


@dataclass(frozen=True)
class MorphismIndex:
    """A basis morphism ``X_i``, ``Y_i`` or ``Z_i`` with reduced index."""

    level: str
    index: int

    def __post_init__(self):
        if self.level not in LEVEL_PERIOD:
            raise ValueError(f"unknown level {self.level!r}")
        object.__setattr__(self, "index", self.index % LEVEL_PERIOD[self.level])


@dataclass(frozen=True)
class ProductExpansion:
    """A product written in the target basis: series per target index."""

    target_level: str
    coefficients: Dict[int, LaurentSeries]


def product_XX(i: int, j: int, truncation: int) -> ProductExpansion:
    """``X_i * X_j`` in the ``Y`` basis."""
    coeffs = {}
    for k in range(2):
        coeffs[(i + j + 3 * k) % 6] = family_series("A", i - j + 3 * k, truncation)
    return ProductExpansion("Y", coeffs)


def product_YX(i: int, j: int, truncation: int) -> ProductExpansion:
    """``Y_i * X_j`` in the ``Z`` basis."""
    coeffs = {}
    for k in range(3):
        coeffs[(i + j + 3 * k) % 9] = family_series("B", 2 * j - i + 6 * k, truncation)
    return ProductExpansion("Z", coeffs)


def commutativity_check_XX(truncation: int) -> bool:
    """``X_i X_j = X_j X_i`` for all index pairs, as series."""
    for i in range(3):
        for j in range(3):
            left = product_XX(i, j, truncation)
            right = product_XX(j, i, truncation)
            if set(left.coefficients) != set(right.coefficients):
                return False
            for idx, series in left.coefficients.items():
                other = right.coefficients[idx]
                if not series.eq_to_order(other, min(series.truncation,
                                                     other.truncation)):
                    return False
    return True


def _expand_triple(i: int, j: int, k: int, truncation: int
                   ) -> Dict[int, LaurentSeries]:
    """Z-coefficients of ``(X_i X_j) X_k``, expanded left to right."""
    out: Dict[int, LaurentSeries] = {}
    first = product_XX(i, j, truncation)
    for y_idx, a_series in first.coefficients.items():
        second = product_YX(y_idx, k, truncation)
        for z_idx, b_series in second.coefficients.items():
            term = a_series * b_series
            out[z_idx] = out[z_idx] + term if z_idx in out else term
    return out


def _z_vectors_equal(lhs: Dict[int, LaurentSeries],
                     rhs: Dict[int, LaurentSeries]) -> bool:
    fallback = min(s.truncation for s in list(lhs.values()) + list(rhs.values()))
    for z in range(9):
        a = lhs.get(z, LaurentSeries.zero(fallback))
        b = rhs.get(z, LaurentSeries.zero(fallback))
        if not a.eq_to_order(b, min(a.truncation, b.truncation)):
            return False
    return True


def associativity_check(i: int, j: int, k: int, truncation: int) -> bool:
    """``(X_i X_j) X_k = X_i (X_j X_k)``, the right side commuted through
    the mixed products so both reduce to the two product rules."""
    lhs = _expand_triple(i, j, k, truncation)
    rhs: Dict[int, LaurentSeries] = {}
    inner = product_XX(j, k, truncation)
    for y_idx, a_series in inner.coefficients.items():
        outer = product_YX(y_idx, i, truncation)
        for z_idx, b_series in outer.coefficients.items():
            term = a_series * b_series
            rhs[z_idx] = rhs[z_idx] + term if z_idx in rhs else term
    return _z_vectors_equal(lhs, rhs)


def assoc_coefficient_identities(truncation: int):
    """The three A/B identities equivalent to ``(X_0^2)X_1 = X_0(X_0 X_1)``,
    returned as labelled verdicts."""
    A = lambda k: family_series("A", k, truncation)
    B = lambda k: family_series("B", k, truncation)
    pairs = [
        ("A0*B2 + A3*B7 == A1*B1 + A2*B8",
         A(0) * B(2) + A(3) * B(7), A(1) * B(1) + A(2) * B(8)),
        ("A0*B8 + A3*B1 == A1*B5 + A2*B4",
         A(0) * B(8) + A(3) * B(1), A(1) * B(5) + A(2) * B(4)),
        ("A0*B4 + A3*B5 == A1*B7 + A2*B2",
         A(0) * B(4) + A(3) * B(5), A(1) * B(7) + A(2) * B(2)),
    ]
    out = []
    for label, lhs, rhs in pairs:
        out.append((label, lhs.eq_to_order(rhs, min(lhs.truncation, rhs.truncation))))
    return out


def cubic_expand(monomial: Tuple[int, int, int], truncation: int
                 ) -> Dict[int, LaurentSeries]:
    """Z-coefficient vector of a cubic monomial from the ordered basis.

    Expansion is left-associated; associativity (checked separately)
    makes the result independent of the association order.  All nine
    Z-indices are present, the six off the support carrying exact zero
    series.
    """
    if tuple(monomial) not in MONOMIAL_BASIS:
        raise ValueError("monomial outside the ten-element cubic basis")
    i, j, k = monomial
    out = _expand_triple(i, j, k, truncation)
    floor = min(s.truncation for s in out.values())
    return {z: out.get(z, LaurentSeries.zero(floor)) for z in range(9)}


def degree2_invertibility(truncation: int) -> bool:
    """Certify that the six quadratic monomials span the ``Y`` basis.

    Builds the 6x6 matrix of their Y-coefficients and requires its
    determinant, as well as ``A_0*A_1 - A_2*A_3``, to have a nonzero
    leading coefficient inside the known window.
    """
    rows = []
    for y in range(6):
        row = []
        for (i, j) in QUADRATIC_BASIS:
            exp = product_XX(i, j, truncation)
            row.append(exp.coefficients.get(y, LaurentSeries.zero(truncation)))
        rows.append(row)
    det = linalg.det(rows)
    if det.is_zero:
        raise PrecisionError("precision exhausted")
    witness = (family_series("A", 0, truncation) * family_series("A", 1, truncation)
               - family_series("A", 2, truncation) * family_series("A", 3, truncation))
    if witness.is_zero:
        raise PrecisionError("precision exhausted")
    return True
