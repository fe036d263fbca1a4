# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels: truncated convolution and reciprocal.

Same contract as torusmirror._kernels_py; coefficients stay exact
Python objects (int / Fraction), the win is the typed inner loops.
"""

from fractions import Fraction


cdef inline object _exact(object c):
    if isinstance(c, Fraction) and (<object>c).denominator == 1:
        return (<object>c).numerator
    return c


def conv_trunc(list a, list b, Py_ssize_t n_out):
    """out[k] = sum(a[i]*b[j] for i+j == k), k < n_out."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t i, j, limit, nsup, s
    cdef list out = [0] * (n_out if n_out > 0 else 0)
    if n_out <= 0:
        return out
    cdef list sup_idx = []
    cdef list sup_val = []
    for j in range(min(len(b), n_out)):
        bj = b[j]
        if bj:
            sup_idx.append(j)
            sup_val.append(bj)
    nsup = len(sup_idx)
    if na > n_out:
        na = n_out
    cdef object ai, bj2, cur
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        limit = n_out - i
        for s in range(nsup):
            j = <Py_ssize_t> sup_idx[s]
            if j >= limit:
                break
            bj2 = sup_val[s]
            cur = out[i + j]
            out[i + j] = cur + ai * bj2
    return out


def inv_trunc(list a, Py_ssize_t n_out):
    """First n_out coefficients of 1/a; requires a[0] nonzero."""
    if n_out <= 0:
        return []
    cdef object recip = _exact(1 / Fraction(a[0]))
    cdef list out = [0] * n_out
    out[0] = recip
    cdef list sup_idx = []
    cdef list sup_val = []
    cdef Py_ssize_t i, k, s, nsup
    for i in range(1, min(len(a), n_out)):
        ai = a[i]
        if ai:
            sup_idx.append(i)
            sup_val.append(ai)
    nsup = len(sup_idx)
    cdef object acc, cj
    for k in range(1, n_out):
        acc = 0
        for s in range(nsup):
            i = <Py_ssize_t> sup_idx[s]
            if i > k:
                break
            cj = out[k - i]
            if cj:
                acc = acc + sup_val[s] * cj
        if acc:
            out[k] = _exact(-recip * acc)
    return out
