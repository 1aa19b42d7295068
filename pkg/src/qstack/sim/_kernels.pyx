# Compiled gate-application kernels. Semantics must match kernels_py exactly:
# in-place updates, qubit k = bit k of the state index, first listed qubit of a
# two-qubit gate = more significant bit of the 4x4 matrix index.

from libc.math cimport sqrt

NAME = "native"


def apply_1q(double complex[::1] state, m, Py_ssize_t q):
    cdef double complex m00 = m[0, 0], m01 = m[0, 1], m10 = m[1, 0], m11 = m[1, 1]
    cdef Py_ssize_t stride = 1 << q
    cdef Py_ssize_t pairs = state.shape[0] >> 1
    cdef Py_ssize_t k, i0, i1
    cdef double complex a0, a1
    with nogil:
        for k in range(pairs):
            i0 = ((k >> q) << (q + 1)) | (k & (stride - 1))
            i1 = i0 + stride
            a0 = state[i0]
            a1 = state[i1]
            state[i0] = m00 * a0 + m01 * a1
            state[i1] = m10 * a0 + m11 * a1


def apply_2q(double complex[::1] state, m, Py_ssize_t qa, Py_ssize_t qb):
    cdef double complex g[4][4]
    cdef Py_ssize_t r, c
    for r in range(4):
        for c in range(4):
            g[r][c] = m[r, c]
    cdef Py_ssize_t pa = 1 << qa, pb = 1 << qb
    cdef Py_ssize_t lo = qa if qa < qb else qb
    cdef Py_ssize_t hi = qb if qa < qb else qa
    cdef Py_ssize_t mask_lo = (1 << lo) - 1
    cdef Py_ssize_t mask_mid = ((1 << (hi - 1)) - 1) ^ mask_lo
    cdef Py_ssize_t count = state.shape[0] >> 2
    cdef Py_ssize_t k, base, i0, i1, i2, i3
    cdef double complex a0, a1, a2, a3
    with nogil:
        for k in range(count):
            base = (k & mask_lo) | ((k & mask_mid) << 1) | ((k >> (hi - 1)) << (hi + 1))
            i0 = base            # qa=0, qb=0
            i1 = base + pb       # qa=0, qb=1
            i2 = base + pa       # qa=1, qb=0
            i3 = base + pa + pb  # qa=1, qb=1
            a0 = state[i0]
            a1 = state[i1]
            a2 = state[i2]
            a3 = state[i3]
            state[i0] = g[0][0] * a0 + g[0][1] * a1 + g[0][2] * a2 + g[0][3] * a3
            state[i1] = g[1][0] * a0 + g[1][1] * a1 + g[1][2] * a2 + g[1][3] * a3
            state[i2] = g[2][0] * a0 + g[2][1] * a1 + g[2][2] * a2 + g[2][3] * a3
            state[i3] = g[3][0] * a0 + g[3][1] * a1 + g[3][2] * a2 + g[3][3] * a3


def apply_cnot(double complex[::1] state, Py_ssize_t c, Py_ssize_t t):
    cdef Py_ssize_t pc = 1 << c, pt = 1 << t
    cdef Py_ssize_t lo = c if c < t else t
    cdef Py_ssize_t hi = t if c < t else c
    cdef Py_ssize_t mask_lo = (1 << lo) - 1
    cdef Py_ssize_t mask_mid = ((1 << (hi - 1)) - 1) ^ mask_lo
    cdef Py_ssize_t count = state.shape[0] >> 2
    cdef Py_ssize_t k, base, i0, i1
    cdef double complex tmp
    with nogil:
        for k in range(count):
            base = (k & mask_lo) | ((k & mask_mid) << 1) | ((k >> (hi - 1)) << (hi + 1))
            i0 = base + pc
            i1 = base + pc + pt
            tmp = state[i0]
            state[i0] = state[i1]
            state[i1] = tmp


def apply_cz(double complex[::1] state, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t pa = 1 << a, pb = 1 << b
    cdef Py_ssize_t lo = a if a < b else b
    cdef Py_ssize_t hi = b if a < b else a
    cdef Py_ssize_t mask_lo = (1 << lo) - 1
    cdef Py_ssize_t mask_mid = ((1 << (hi - 1)) - 1) ^ mask_lo
    cdef Py_ssize_t count = state.shape[0] >> 2
    cdef Py_ssize_t k, i
    with nogil:
        for k in range(count):
            i = (k & mask_lo) | ((k & mask_mid) << 1) | ((k >> (hi - 1)) << (hi + 1))
            i += pa + pb
            state[i] = -state[i]


def apply_swap(double complex[::1] state, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t pa = 1 << a, pb = 1 << b
    cdef Py_ssize_t lo = a if a < b else b
    cdef Py_ssize_t hi = b if a < b else a
    cdef Py_ssize_t mask_lo = (1 << lo) - 1
    cdef Py_ssize_t mask_mid = ((1 << (hi - 1)) - 1) ^ mask_lo
    cdef Py_ssize_t count = state.shape[0] >> 2
    cdef Py_ssize_t k, base, i0, i1
    cdef double complex tmp
    with nogil:
        for k in range(count):
            base = (k & mask_lo) | ((k & mask_mid) << 1) | ((k >> (hi - 1)) << (hi + 1))
            i0 = base + pb  # a=0, b=1
            i1 = base + pa  # a=1, b=0
            tmp = state[i0]
            state[i0] = state[i1]
            state[i1] = tmp


def prob_one(double complex[::1] state, Py_ssize_t q):
    cdef Py_ssize_t stride = 1 << q
    cdef Py_ssize_t pairs = state.shape[0] >> 1
    cdef Py_ssize_t k, i
    cdef double p = 0.0
    cdef double complex a
    with nogil:
        for k in range(pairs):
            i = (((k >> q) << (q + 1)) | (k & (stride - 1))) + stride
            a = state[i]
            p += a.real * a.real + a.imag * a.imag
    return p


def collapse(double complex[::1] state, Py_ssize_t q, int outcome, double prob):
    cdef Py_ssize_t stride = 1 << q
    cdef Py_ssize_t pairs = state.shape[0] >> 1
    cdef Py_ssize_t keep_off = stride if outcome == 1 else 0
    cdef double scale = 1.0 / sqrt(prob)
    cdef Py_ssize_t k, base, ikeep, izero
    with nogil:
        for k in range(pairs):
            base = ((k >> q) << (q + 1)) | (k & (stride - 1))
            ikeep = base + keep_off
            izero = base + (stride - keep_off)
            state[ikeep] = state[ikeep] * scale
            state[izero] = 0.0
