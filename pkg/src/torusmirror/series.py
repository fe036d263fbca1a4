"""Exact truncated Laurent series over the rationals in one variable.

Every quantity in this package is a series in the nome
``y = exp(i*pi*tau/72)`` with integer exponents and exact coefficients
(Python ints, or :class:`fractions.Fraction` once division enters).
A series knows three things:

* ``valuation``   -- exponent of its first (potentially) nonzero term,
* ``coefficients`` -- one exact coefficient per exponent in the window,
* ``truncation``  -- exclusive bound: every exponent ``e`` with
  ``valuation <= e < truncation`` is exactly known; coefficients below
  the valuation are exactly zero; above the truncation nothing is
  claimed.

Operations propagate the conservative precision rules

* ``a + b``: truncation ``min(a.truncation, b.truncation)``,
* ``a * b``: truncation ``min(a.truncation + b.valuation,
  b.truncation + a.valuation)``,
* ``a.inverse()``: valuation ``-a.valuation`` and truncation
  ``a.truncation - 2*a.valuation``,

so no result ever claims a coefficient that the inputs could still
perturb.  All values are immutable and all operations are pure, hence
safe for unrestricted concurrent use.

The coarser display variable is ``x = exp(i*pi*tau/18) = y**4``; series
supported on exponents divisible by four can be rebased to it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from torusmirror.kernels import conv_trunc, inv_trunc

#: Exact coefficient scalar: arbitrary-precision rational, stored in
#: lowest terms with positive denominator (integers stay plain ints).
Rational = Fraction

Scalar = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """A value is not known far enough for the requested operation."""


def _exact(c: Scalar) -> Scalar:
    """Canonical scalar: Fractions with denominator one become ints."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class LaurentSeries:
    """A truncated Laurent series with exact rational coefficients.

    Canonical form: either ``coefficients`` is empty (the series is zero
    to its known precision and ``valuation == truncation``) or its first
    entry is nonzero.  Instances are immutable by convention.
    """

    __slots__ = ("valuation", "coefficients", "truncation")

    valuation: int
    coefficients: tuple
    truncation: int

    def __init__(self, valuation: int, coefficients: Sequence[Scalar], truncation: int):
        if truncation < valuation:
            raise ValueError("truncation below valuation")
        if len(coefficients) != truncation - valuation:
            raise ValueError("coefficient window does not match valuation/truncation")
        coeffs = [_exact(c) for c in coefficients]
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        if lead == len(coeffs):
            self.valuation = truncation
            self.coefficients = ()
        else:
            self.valuation = valuation + lead
            self.coefficients = tuple(coeffs[lead:])
        self.truncation = truncation

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, truncation: int) -> "LaurentSeries":
        """The zero series, known up to ``truncation``."""
        return cls(truncation, (), truncation)

    @classmethod
    def constant(cls, value: Scalar, truncation: int) -> "LaurentSeries":
        return cls.from_terms({0: value}, truncation)

    @classmethod
    def one(cls, truncation: int) -> "LaurentSeries":
        return cls.constant(1, truncation)

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar, truncation: int) -> "LaurentSeries":
        return cls.from_terms({exponent: coefficient}, truncation)

    @classmethod
    def from_terms(cls, terms: Union[Mapping[int, Scalar], Iterable[tuple]],
                   truncation: int) -> "LaurentSeries":
        """Build a series from ``exponent -> coefficient`` data.

        Repeated exponents accumulate; terms at or beyond ``truncation``
        are outside the known window and are dropped.
        """
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if e < truncation and c:
                acc[e] = acc.get(e, 0) + c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls.zero(truncation)
        val = min(acc)
        coeffs = [acc.get(e, 0) for e in range(val, truncation)]
        return cls(val, coeffs, truncation)

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coefficients

    def leading(self):
        """``(valuation, coefficient)`` of the first nonzero term, or None."""
        if not self.coefficients:
            return None
        return (self.valuation, self.coefficients[0])

    def coeff(self, exponent: int) -> Scalar:
        """Exact coefficient at ``exponent``; the exponent must lie in
        the known window ``[valuation, truncation)``."""
        if exponent < self.valuation or exponent >= self.truncation:
            raise PrecisionError("exponent outside precision")
        return self.coefficients[exponent - self.valuation]

    def _coeff_known(self, exponent: int) -> Scalar:
        # window-aware accessor: below the valuation is exactly zero
        if exponent >= self.truncation:
            raise PrecisionError("exponent outside precision")
        if exponent < self.valuation:
            return 0
        return self.coefficients[exponent - self.valuation]

    def terms(self):
        """Nonzero ``(exponent, coefficient)`` pairs, ascending."""
        return [(self.valuation + i, c)
                for i, c in enumerate(self.coefficients) if c]

    def eq_to_order(self, other: "LaurentSeries", order: int) -> bool:
        """Exact comparison of all coefficients at exponents below ``order``.

        Both operands must be known at least that far.
        """
        if self.truncation < order or other.truncation < order:
            raise PrecisionError(
                f"comparison to order {order} exceeds known precision "
                f"({self.truncation}, {other.truncation})")
        lo = min(self.valuation, other.valuation)
        for e in range(lo, order):
            if self._coeff_known(e) != other._coeff_known(e):
                return False
        return True

    def restrict(self, order: int) -> "LaurentSeries":
        """The same series with the known window clipped to ``order``."""
        if order > self.truncation:
            raise PrecisionError("cannot extend a known window")
        if order <= self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries(self.valuation,
                             self.coefficients[:order - self.valuation], order)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.truncation)
        elif not isinstance(other, LaurentSeries):
            return NotImplemented
        hi = min(self.truncation, other.truncation)
        lo = min(self.valuation, other.valuation, hi)
        coeffs = [self._coeff_known(e) + other._coeff_known(e) for e in range(lo, hi)]
        return LaurentSeries(lo, coeffs, hi)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.valuation, [-c for c in self.coefficients],
                             self.truncation)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self.truncation + other.valuation,
                    other.truncation + self.valuation)
        if not self.coefficients or not other.coefficients:
            return LaurentSeries.zero(trunc)
        val = self.valuation + other.valuation
        out = conv_trunc(list(self.coefficients), list(other.coefficients),
                         trunc - val)
        return LaurentSeries(val, out, trunc)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "LaurentSeries":
        """Multiply by an exact scalar; the known window is unchanged."""
        c = _exact(c)
        if c == 0:
            return LaurentSeries.zero(self.truncation)
        return LaurentSeries(self.valuation, [c * a for a in self.coefficients],
                             self.truncation)

    def __pow__(self, n: int) -> "LaurentSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        if n == 0:
            return LaurentSeries.one(self.truncation - self.valuation)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def inverse(self) -> "LaurentSeries":
        """Multiplicative inverse.

        Requires a nonzero leading coefficient; the result is known up
        to ``truncation - 2*valuation``.
        """
        if not self.coefficients:
            raise PrecisionError("zero leading coefficient")
        n = self.truncation - self.valuation
        out = inv_trunc(list(self.coefficients), n)
        return LaurentSeries(-self.valuation, out, self.truncation - 2 * self.valuation)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self.scale(1 / Fraction(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse().scale(other)
        return NotImplemented

    # -- rebasing ------------------------------------------------------

    def rebase_to_x(self) -> "LaurentSeries":
        """Divide all exponents by four (y**4 = x).

        Every nonzero coefficient must sit at an exponent divisible by
        four; the truncation becomes ``floor(truncation / 4)``.
        """
        for e, c in zip(range(self.valuation, self.truncation), self.coefficients):
            if c and e % 4:
                raise ValueError("series not expressible in x")
        trunc = self.truncation // 4
        return LaurentSeries.from_terms(
            {e // 4: c for e, c in self.terms()}, trunc)

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation == other.valuation
                and self.coefficients == other.coefficients
                and self.truncation == other.truncation)

    def __hash__(self):
        return hash((self.valuation, self.coefficients, self.truncation))

    def __repr__(self):
        return f"LaurentSeries({format_series(self, 'y')})"


def format_series(s: LaurentSeries, var: str = "y", max_terms: int = 0) -> str:
    """Human-readable polynomial form, e.g. ``y^12 + 2*y^432 + O(y^700)``."""
    parts = []
    shown = s.terms()
    truncated_list = False
    if max_terms and len(shown) > max_terms:
        shown = shown[:max_terms]
        truncated_list = True
    for e, c in shown:
        if c == 1 and e != 0:
            term = ""
        elif c == -1 and e != 0:
            term = "-"
        else:
            term = str(c)
        if e != 0:
            if term not in ("", "-"):
                term += "*"
            term += var if e == 1 else f"{var}^{e}"
        parts.append(term)
    if truncated_list:
        parts.append("...")
    parts.append(f"O({var}^{s.truncation})")
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def to_record(s: LaurentSeries, base: str = "y") -> dict:
    """Serialize a series as a plain record.

    Coefficients are ``"num/den"`` strings so arbitrary precision
    survives any transport.
    """
    if base not in ("x", "y"):
        raise ValueError("base must be 'x' or 'y'")
    return {
        "base": base,
        "valuation": s.valuation,
        "truncation": s.truncation,
        "coefficients": [
            f"{Fraction(c).numerator}/{Fraction(c).denominator}"
            for c in s.coefficients
        ],
    }


def from_record(record: Mapping) -> tuple:
    """Inverse of :func:`to_record`; returns ``(series, base)``."""
    base = record["base"]
    if base not in ("x", "y"):
        raise ValueError("base must be 'x' or 'y'")
    coeffs = [Fraction(c) for c in record["coefficients"]]
    s = LaurentSeries(record["valuation"], coeffs, record["truncation"])
    return s, base
