"""Pure-Python arithmetic kernels.

Fallback for :mod:`torusmirror._kernels` (the Cython build of the same
two routines), selected by :mod:`torusmirror.kernels` at import time.
Coefficients are exact Python ints or :class:`fractions.Fraction`; both
implementations must produce identical output lists.
"""

from fractions import Fraction


def _exact(c):
    # keep integers as ints: int arithmetic is much faster than Fraction
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def conv_trunc(a, b, n_out):
    """First ``n_out`` coefficients of the product of coefficient lists.

    ``out[k] = sum(a[i] * b[j] for i + j == k)``.  Zero coefficients are
    skipped, so sparse operands multiply in time proportional to the
    product of their support sizes.
    """
    out = [0] * n_out
    if n_out <= 0:
        return out
    b_support = [(j, bj) for j, bj in enumerate(b) if bj and j < n_out]
    for i, ai in enumerate(a):
        if i >= n_out:
            break
        if not ai:
            continue
        limit = n_out - i
        for j, bj in b_support:
            if j >= limit:
                break
            out[i + j] += ai * bj
    return out


def inv_trunc(a, n_out):
    """First ``n_out`` coefficients of the reciprocal of ``a``.

    Requires ``a[0]`` nonzero.  Uses the standard recurrence
    ``c[k] = -a[0]^-1 * sum(a[i] * c[k-i] for 1 <= i <= k)``.
    """
    if n_out <= 0:
        return []
    recip = _exact(1 / Fraction(a[0]))
    out = [0] * n_out
    out[0] = recip
    a_support = [(i, ai) for i, ai in enumerate(a) if 1 <= i < n_out and ai]
    for k in range(1, n_out):
        acc = 0
        for i, ai in a_support:
            if i > k:
                break
            cj = out[k - i]
            if cj:
                acc += ai * cj
        if acc:
            out[k] = _exact(-recip * acc)
    return out
