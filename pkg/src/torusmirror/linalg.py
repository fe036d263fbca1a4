"""Determinants of matrices over the truncated-series field.

Gaussian elimination with pivoting on minimal valuation: dividing by a
pivot of valuation ``v`` costs ``2v`` of known window, so the cheapest
pivot is the one of smallest valuation.  Precision tracking rides on
the series operations themselves; when a whole pivot column is zero to
its known precision the determinant is returned as a zero series whose
truncation is the sound bound obtainable from the column windows.
"""

from __future__ import annotations

from typing import List, Sequence

from torusmirror.series import LaurentSeries


def mat_vec(rows: Sequence[Sequence[LaurentSeries]],
            vec: Sequence[LaurentSeries]) -> List[LaurentSeries]:
    """Matrix times vector over the series ring."""
    out = []
    for row in rows:
        acc = None
        for entry, coeff in zip(row, vec):
            term = entry * coeff
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def _window_floor(entry: LaurentSeries) -> int:
    # every contribution through this entry is O(y^bound)
    return entry.valuation if not entry.is_zero else entry.truncation


def det(rows: Sequence[Sequence[LaurentSeries]]) -> LaurentSeries:
    """Determinant of a square matrix of truncated series.

    The result is exact within its tracked window.  A matrix that is
    singular to working precision yields a zero series whose truncation
    says how far the vanishing is certified.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and nonempty")
    m = [list(r) for r in rows]
    sign = 1
    pivot_product = None

    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            e = m[r][col]
            if e.is_zero:
                continue
            if pivot_row is None or e.valuation < m[pivot_row][col].valuation:
                pivot_row = r
        if pivot_row is None:
            # dead column: every expansion term passes through it
            bound = min(m[r][col].truncation for r in range(col, n))
            for c in range(col + 1, n):
                bound += min(_window_floor(m[r][c]) for r in range(col, n))
            tail = LaurentSeries.zero(bound)
            result = tail if pivot_product is None else pivot_product * tail
            return result.scale(sign)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        pivot_product = pivot if pivot_product is None else pivot_product * pivot
        if col == n - 1:
            break
        pivot_inv = pivot.inverse()
        for r in range(col + 1, n):
            head = m[r][col]
            if head.is_zero and head.truncation >= pivot.truncation:
                continue
            factor = head * pivot_inv
            for c in range(col + 1, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return pivot_product.scale(sign)
