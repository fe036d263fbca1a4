"""Theta constants with rational characteristics, as exact series.

``theta[a,0](N*tau, 0) = sum_n exp(i*pi*N*tau*(n+a)^2)`` expands in the
nome ``y = exp(i*pi*tau/72)`` with the summand of index ``n`` sitting at
exponent ``72*N*(n+a)^2``.  Four named families drive everything else:

= ====================== ======== ==============================
A  theta[k/6,  0](6 tau)  mod  6  x-exponents ``3*(6n+k)^2``
B  theta[k/18, 0](18 tau) mod 18  x-exponents ``(18n+k)^2``
C  theta[c/24, 0](24 tau) mod 24  y-exponents ``3*(24n+c)^2``
D  theta[d/72, 0](72 tau) mod 72  y-exponents ``(72n+d)^2``
= ====================== ======== ==============================

The y-base exists precisely so that all four families (odd C/D indices
included) live in one integer-exponent ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from torusmirror.series import LaurentSeries

#: index period and modular scale per family (they coincide here).
FAMILY_PERIOD = {"A": 6, "B": 18, "C": 24, "D": 72}


@dataclass(frozen=True)
class ThetaChar:
    """A characteristic ``a = a_num/a_den`` naming ``theta[a,0](scale*tau, 0)``.

    Construction verifies that every summand exponent ``72*scale*(n+a)^2``
    is an integer in y-units, which is what makes the series
    representable here at all.
    """

    a_num: int
    a_den: int
    scale: int

    def __post_init__(self):
        if self.a_den <= 0 or self.scale <= 0:
            raise ValueError("characteristic denominator and scale must be positive")
        g = math.gcd(self.a_num, self.a_den)
        if g > 1:
            object.__setattr__(self, "a_num", self.a_num // g)
            object.__setattr__(self, "a_den", self.a_den // g)
        # exponent(n) = 72*N*n^2 + 144*N*a*n + 72*N*a^2 must be integral for all n
        num, den, scale = self.a_num, self.a_den, self.scale
        linear = Fraction(144 * scale * num, den)
        const = Fraction(72 * scale * num * num, den * den)
        if linear.denominator != 1 or const.denominator != 1:
            raise ValueError("unsupported characteristic")

    @property
    def characteristic(self) -> Fraction:
        return Fraction(self.a_num, self.a_den)


@dataclass(frozen=True)
class FamilyIndex:
    """One of the A/B/C/D theta constants; the index reduces mod the period."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in FAMILY_PERIOD:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "index", self.index % FAMILY_PERIOD[self.family])

    def char(self) -> ThetaChar:
        period = FAMILY_PERIOD[self.family]
        return ThetaChar(self.index, period, period)


def theta_series(char: ThetaChar, truncation: int) -> LaurentSeries:
    """The q-expansion of ``theta[a,0](scale*tau, 0)`` up to ``truncation``.

    Enumerates exactly the integers ``n`` whose exponent falls inside
    the window; the exponent is a parabola in ``n``, so walking outward
    from its vertex in both directions is an exact enumeration.
    Colliding exponents accumulate (integer coefficients).
    """
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    a = char.characteristic
    weight = 72 * char.scale

    def exponent(n: int) -> Fraction:
        return weight * (n + a) ** 2

    terms: dict = {}
    start = math.floor(-a)
    n = start
    while True:
        e = exponent(n)
        if e >= truncation:
            break
        terms[int(e)] = terms.get(int(e), 0) + 1
        n -= 1
    n = start + 1
    while True:
        e = exponent(n)
        if e >= truncation:
            break
        terms[int(e)] = terms.get(int(e), 0) + 1
        n += 1
    return LaurentSeries.from_terms(terms, truncation)


@lru_cache(maxsize=None)
def family_series(family: str, index: int, truncation: int) -> LaurentSeries:
    """Series of the named family member, e.g. ``family_series("A", 1, 700)``.

    Indices reduce mod the family period; the defining sum over all
    integers makes the symmetries ``A_k = A_{6-k}`` (and the analogues
    for B, C, D) hold on the nose.
    """
    fi = FamilyIndex(family, index)
    return theta_series(fi.char(), truncation)


def mumford_identity_check(a: int, b: int, n: int, k: int, truncation: int) -> bool:
    """Verify one instance of the theta addition formula.

    ``theta[a/n](n tau) * theta[b/(nk)](nk tau)`` must equal the sum over
    ``eps = 0..k`` of
    ``theta[(b-ka+kn*eps)/(k(k+1)n)](k(k+1)n tau)
      * theta[(a+b+kn*eps)/((k+1)n)]((k+1)n tau)``.
    Both sides are compared exactly on their joint known window, which
    contains ``[0, truncation)``.
    """
    if n <= 0 or k <= 0:
        raise ValueError("modular scales must be positive")
    lhs = (theta_series(ThetaChar(a, n, n), truncation)
           * theta_series(ThetaChar(b, n * k, n * k), truncation))
    rhs = None
    for eps in range(k + 1):
        left = theta_series(
            ThetaChar(b - k * a + k * n * eps, k * (k + 1) * n, k * (k + 1) * n),
            truncation)
        right = theta_series(
            ThetaChar(a + b + k * n * eps, (k + 1) * n, (k + 1) * n), truncation)
        term = left * right
        rhs = term if rhs is None else rhs + term
    order = min(lhs.truncation, rhs.truncation)
    return lhs.eq_to_order(rhs, order)


class DecompositionCheck(NamedTuple):
    """Both sides of ``A_a * B_b = sum_eps C_{a+b+18eps} * D_{b-3a+18eps}``."""

    lhs: LaurentSeries
    rhs: LaurentSeries
    equal: bool


def ab_decomposition(a: int, b: int, truncation: int) -> DecompositionCheck:
    """Decompose ``A_a*B_b`` through the C and D families and compare."""
    lhs = family_series("A", a, truncation) * family_series("B", b, truncation)
    rhs = None
    for eps in range(4):
        term = (family_series("C", a + b + 18 * eps, truncation)
                * family_series("D", b - 3 * a + 18 * eps, truncation))
        rhs = term if rhs is None else rhs + term
    order = min(lhs.truncation, rhs.truncation)
    return DecompositionCheck(lhs, rhs, lhs.eq_to_order(rhs, order))
