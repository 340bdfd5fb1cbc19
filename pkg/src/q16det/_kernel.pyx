# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops: fraction-free 16x16 determinant,
factored-form terms, and coefficient-support scans.

Mirrors the interface of q16det._pykernel.  The determinant runs its early
elimination stages (essentially all of the work) in 128-bit integers under
a dynamic size guard and finishes with Python object arithmetic on the rare
matrices whose late-stage minors outgrow the guard, so results are exact
for any input that fits the initial conversion; calls that do not fit
return None and the caller falls back to the pure lane.
"""

LANE = "compiled"

cdef extern from *:
    ctypedef long long int128 "__int128"
    ctypedef unsigned long long uint128 "unsigned __int128"

cdef long long LL_MAX = 9223372036854775807
cdef long long LL_MIN = -9223372036854775807 - 1

# Entries at or below GUARD multiply safely in 128 bits:
# 2 * GUARD**2 = 9.5e37 < 2**127 - 1.
cdef int128 GUARD = (<int128>3) << 61

# DET_IDX[16*g + h] = index of the group element g * h**-1 under the
# convention 0..7 = X**j, 8..15 = Y*X**(j-8).
cdef int DET_IDX[256]


cdef int _mod8(int x):
    cdef int r = x % 8
    if r < 0:
        r += 8
    return r


cdef int _mul_idx(int i, int j):
    if i < 8:
        if j < 8:
            return _mod8(i + j)
        return 8 + _mod8(j - 8 - i)
    if j < 8:
        return 8 + _mod8(i - 8 + j)
    return _mod8(4 + (j - 8) - (i - 8))


cdef int _inv_idx(int i):
    if i < 8:
        return _mod8(-i)
    return 8 + _mod8(i - 8 + 4)


cdef void _init_det_idx():
    cdef int g, h
    for g in range(16):
        for h in range(16):
            DET_IDX[16 * g + h] = _mul_idx(g, _inv_idx(h))


_init_det_idx()


cdef object _i128_to_py(int128 v):
    cdef bint neg
    cdef uint128 u
    cdef unsigned long long hi, lo
    if LL_MIN <= v and v <= LL_MAX:
        return <long long> v
    neg = v < 0
    if neg:
        u = <uint128> (-v)
    else:
        u = <uint128> v
    hi = <unsigned long long> (u >> 64)
    lo = <unsigned long long> (u & <uint128> 0xFFFFFFFFFFFFFFFFULL)
    res = ((<object> hi) << 64) | (<object> lo)
    if neg:
        return -res
    return res


cdef object _finish_obj(int128 m[16][16], int k0, int sign, object prev):
    """Continue Bareiss elimination from stage k0 in Python arithmetic."""
    rows = [[_i128_to_py(m[i][j]) for j in range(16)] for i in range(16)]
    cdef int i, j, k, r
    for k in range(k0, 15):
        if rows[k][k] == 0:
            r = -1
            for i in range(k + 1, 16):
                if rows[i][k] != 0:
                    r = i
                    break
            if r < 0:
                return 0
            rows[k], rows[r] = rows[r], rows[k]
            sign = -sign
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, 16):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, 16):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    det = rows[15][15]
    if sign < 0:
        det = -det
    return det


cdef object _det_from_m(int128 m[16][16]):
    """Exact determinant: 128-bit stages under the guard, Python finish."""
    cdef int i, j, k, r, sign = 1
    cdef int128 pivot, prev, lead, t, mx, av
    mx = 0
    for i in range(16):
        for j in range(16):
            av = m[i][j]
            if av < 0:
                av = -av
            if av > mx:
                mx = av
    prev = 1
    for k in range(15):
        if mx > GUARD:
            return _finish_obj(m, k, sign, _i128_to_py(prev))
        if m[k][k] == 0:
            r = -1
            for i in range(k + 1, 16):
                if m[i][k] != 0:
                    r = i
                    break
            if r < 0:
                return 0
            for j in range(k, 16):
                t = m[k][j]
                m[k][j] = m[r][j]
                m[r][j] = t
            sign = -sign
        pivot = m[k][k]
        mx = 0
        for i in range(k + 1, 16):
            lead = m[i][k]
            for j in range(k + 1, 16):
                t = (m[i][j] * pivot - lead * m[k][j]) / prev
                m[i][j] = t
                if t < 0:
                    t = -t
                if t > mx:
                    mx = t
        prev = pivot
    t = m[15][15]
    if sign < 0:
        t = -t
    return _i128_to_py(t)


cdef object _group_det_ll(long long *c):
    cdef int128 m[16][16]
    cdef int i, j
    for i in range(16):
        for j in range(16):
            m[i][j] = <int128> c[DET_IDX[16 * i + j]]
    return _det_from_m(m)


def group_det(a, b):
    """Group determinant of the element with coefficient blocks a, b, or
    None when a coefficient does not fit the compiled entry type."""
    cdef long long c[16]
    cdef int i
    try:
        for i in range(8):
            c[i] = a[i]
            c[8 + i] = b[i]
    except OverflowError:
        return None
    return _group_det_ll(c)


cdef void _terms_ll(long long *c, int128 *A, int128 *B, int128 *C,
                    int128 *X, int128 *Y):
    cdef int128 f1, g1, fm1, gm1, fre, fim, gre, gim
    cdef int128 u0, u1, u2, u3, v0, v1, v2, v3
    f1 = c[0] + c[1] + c[2] + c[3] + c[4] + c[5] + c[6] + c[7]
    g1 = c[8] + c[9] + c[10] + c[11] + c[12] + c[13] + c[14] + c[15]
    fm1 = c[0] - c[1] + c[2] - c[3] + c[4] - c[5] + c[6] - c[7]
    gm1 = c[8] - c[9] + c[10] - c[11] + c[12] - c[13] + c[14] - c[15]
    A[0] = f1 * f1 - g1 * g1
    B[0] = fm1 * fm1 - gm1 * gm1
    fre = c[0] - c[2] + c[4] - c[6]
    fim = c[1] - c[3] + c[5] - c[7]
    gre = c[8] - c[10] + c[12] - c[14]
    gim = c[9] - c[11] + c[13] - c[15]
    C[0] = fre * fre + fim * fim - gre * gre - gim * gim
    u0 = c[0] - c[4]
    u1 = c[1] - c[5]
    u2 = c[2] - c[6]
    u3 = c[3] - c[7]
    v0 = c[8] - c[12]
    v1 = c[9] - c[13]
    v2 = c[10] - c[14]
    v3 = c[11] - c[15]
    X[0] = (u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3
            + v0 * v0 + v1 * v1 + v2 * v2 + v3 * v3)
    Y[0] = (u0 * u1 - u0 * u3 + u1 * u2 + u2 * u3
            + v0 * v1 - v0 * v3 + v1 * v2 + v2 * v3)


def factored_terms(a, b):
    """(A, B, C, X, Y) of the factorization, or None if coefficients are
    too large for the 128-bit intermediate bounds."""
    cdef long long c[16]
    cdef long long lim = (<long long>1) << 59
    cdef int i
    cdef int128 A, B, C, X, Y
    try:
        for i in range(8):
            c[i] = a[i]
            c[8 + i] = b[i]
    except OverflowError:
        return None
    for i in range(16):
        if c[i] > lim or c[i] < -lim:
            return None
    _terms_ll(c, &A, &B, &C, &X, &Y)
    return (_i128_to_py(A), _i128_to_py(B), _i128_to_py(C),
            _i128_to_py(X), _i128_to_py(Y))


cdef int _pmod(int128 v, int m):
    cdef int r = <int> (v % m)
    if r < 0:
        r += m
    return r


def scan_range(values, start, stop, direct=False, sample_abs_limit=1 << 20):
    """Scan elements start..stop of the space values^16; see the pure twin
    for the report format.  Returns None for parameters outside the
    compiled fast path (support values beyond |8|, > 16 support values)."""
    cdef int base = len(values)
    cdef long long vals[16]
    cdef int i, k, r8
    if base < 1 or base > 16:
        return None
    for i in range(base):
        vals[i] = values[i]
        if vals[i] > 8 or vals[i] < -8:
            return None
    cdef long long lo, hi, sal
    try:
        lo = start
        hi = stop
        sal = sample_abs_limit
    except OverflowError:
        return None
    if lo < 0 or hi < lo or hi > (<long long>1) << 62:
        return None
    cdef bint want_direct = bool(direct)

    cdef int digits[16]
    cdef long long c[16]
    cdef long long idx = lo
    for k in range(16):
        digits[k] = <int> (idx % base)
        c[k] = vals[digits[k]]
        idx //= base

    cdef long long n_zero = 0, n_even = 0, n_even_1024 = 0, n_odd = 0
    cdef long long h1 = 0, h3 = 0, h5 = 0, h7 = 0
    even_violations = set()
    odd3_violations = set()
    five_mod8 = set()
    sample = set()
    direct_mismatches = set()

    cdef int top = base - 1
    cdef long long v0 = vals[0]
    cdef long long count = hi - lo
    cdef long long n
    cdef int128 A, B, C, X, Y, D, det
    for n in range(count):
        _terms_ll(c, &A, &B, &C, &X, &Y)
        D = X * X - 2 * Y * Y
        det = (A * B) * (C * C) * (D * D)
        if want_direct:
            if _group_det_ll(c) != _i128_to_py(det):
                direct_mismatches.add(_i128_to_py(det))

        if det == 0:
            n_zero += 1
            n_even += 1
            n_even_1024 += 1
        elif _pmod(det, 2) == 0:
            n_even += 1
            if _pmod(det, 1024) == 0:
                n_even_1024 += 1
            else:
                even_violations.add(_i128_to_py(det))
        else:
            n_odd += 1
            r8 = _pmod(det, 8)
            if r8 == 1:
                h1 += 1
            elif r8 == 3:
                h3 += 1
                odd3_violations.add(_i128_to_py(det))
            elif r8 == 5:
                h5 += 1
                five_mod8.add(_i128_to_py(det))
            else:
                h7 += 1
                odd3_violations.add(_i128_to_py(det))
        if -(<int128>sal) <= det and det <= (<int128>sal):
            sample.add(_i128_to_py(det))

        k = 0
        while k < 16 and digits[k] == top:
            digits[k] = 0
            c[k] = v0
            k += 1
        if k < 16:
            digits[k] += 1
            c[k] = vals[digits[k]]

    return {
        "count": count,
        "zero": n_zero,
        "even": n_even,
        "even_mult_1024": n_even_1024,
        "odd": n_odd,
        "odd_mod8": {1: h1, 3: h3, 5: h5, 7: h7},
        "even_violations": even_violations,
        "odd3_violations": odd3_violations,
        "five_mod8": five_mod8,
        "sample": sample,
        "direct_mismatches": direct_mismatches,
    }
