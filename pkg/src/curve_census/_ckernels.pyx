# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled counting kernels.  Same contracts as ``_pykernels``."""

import numpy as np

from .field import ADD_CHUNK, NEG_CHUNK

NAME = "cython"

cdef int[:, ::1] _ADD = np.ascontiguousarray(ADD_CHUNK, dtype=np.int32)
cdef int[::1] _NEG = np.ascontiguousarray(NEG_CHUNK, dtype=np.int32)


cdef struct Field:
    long q
    long e
    long n          # q - 1
    long inv3
    long nchunks
    const long* exp
    const long* log
    const signed char* chi
    const signed char* tr
    const int* add
    const int* neg


cdef class _Tables:
    """Keeps the numpy buffers alive while a kernel runs."""
    cdef long[::1] exp
    cdef long[::1] log
    cdef signed char[::1] chi
    cdef signed char[::1] tr
    cdef Field f

    def __init__(self, ctx):
        self.exp = np.ascontiguousarray(ctx.exp, dtype=np.int64)
        self.log = np.ascontiguousarray(ctx.log, dtype=np.int64)
        self.chi = np.ascontiguousarray(ctx.chi, dtype=np.int8)
        self.tr = np.ascontiguousarray(ctx.trace_table, dtype=np.int8)
        self.f.q = ctx.q
        self.f.e = ctx.e
        self.f.n = ctx.q - 1
        self.f.inv3 = ctx.inv3
        self.f.nchunks = (ctx.e + 4) // 5
        self.f.exp = &self.exp[0]
        self.f.log = &self.log[0]
        self.f.chi = &self.chi[0]
        self.f.tr = &self.tr[0]
        self.f.add = &_ADD[0, 0]
        self.f.neg = &_NEG[0]


cdef inline long fadd(const Field* F, long a, long b) nogil:
    cdef long out = 0, scale = 1
    cdef int i
    if F.q <= 243:
        return F.add[a * 243 + b]
    for i in range(F.nchunks):
        out += F.add[(a % 243) * 243 + (b % 243)] * scale
        a //= 243
        b //= 243
        scale *= 243
    return out


cdef inline long fneg(const Field* F, long a) nogil:
    cdef long out = 0, scale = 1
    cdef int i
    if F.q <= 243:
        return F.neg[a]
    for i in range(F.nchunks):
        out += F.neg[a % 243] * scale
        a //= 243
        scale *= 243
    return out


cdef inline long fmul(const Field* F, long a, long b) nogil:
    if a == 0 or b == 0:
        return 0
    return F.exp[F.log[a] + F.log[b]]


cdef inline long finv(const Field* F, long a) nogil:
    return F.exp[(F.n - F.log[a]) % F.n]


cdef inline long fscale(const Field* F, long c, long a) nogil:
    if c == 0:
        return 0
    if c == 1:
        return a
    return fneg(F, a)


cdef inline long depressed_roots(const Field* F, long c, long d) nogil:
    # roots of z^3 + c z + d
    cdef long negc, lg, s, s3, w
    if c == 0:
        return 1
    negc = fneg(F, c)
    lg = F.log[negc]
    if lg % 2:
        return 1
    s = F.exp[lg // 2]
    s3 = fmul(F, fmul(F, s, s), s)
    w = fmul(F, d, finv(F, s3))
    return 3 if F.tr[w] == 0 else 0


cdef long cubic_roots(const Field* F, long a3, long a2, long a1, long a0) nogil:
    cdef long inv, b, c, d, t, t2, dp, dinv, disc
    if a3 == 0:
        if a2 != 0:
            disc = fadd(F, fmul(F, a1, a1), fneg(F, fmul(F, a2, a0)))
            return 1 + F.chi[disc]
        if a1 != 0:
            return 1
        if a0 != 0:
            return 0
        return F.q
    inv = finv(F, a3)
    b = fmul(F, a2, inv)
    c = fmul(F, a1, inv)
    d = fmul(F, a0, inv)
    if b == 0:
        return depressed_roots(F, c, d)
    t = fmul(F, c, finv(F, b))
    t2 = fmul(F, t, t)
    dp = fadd(F, fadd(F, fmul(F, t2, t), fmul(F, b, t2)), fadd(F, fmul(F, c, t), d))
    if dp == 0:
        return 2
    dinv = finv(F, dp)
    return depressed_roots(F, fmul(F, b, dinv), dinv)


def cubic_root_counts(ctx, a3, a2, a1, a0):
    cdef _Tables T = _Tables(ctx)
    shape = np.broadcast(a3, a2, a1, a0).shape
    cdef long[::1] x3 = np.array(np.broadcast_to(a3, shape), dtype=np.int64).ravel()
    cdef long[::1] x2 = np.array(np.broadcast_to(a2, shape), dtype=np.int64).ravel()
    cdef long[::1] x1 = np.array(np.broadcast_to(a1, shape), dtype=np.int64).ravel()
    cdef long[::1] x0 = np.array(np.broadcast_to(a0, shape), dtype=np.int64).ravel()
    out = np.empty(x3.shape[0], dtype=np.int64)
    cdef long[::1] o = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(x3.shape[0]):
            o[i] = cubic_roots(&T.f, x3[i], x2[i], x1[i], x0[i])
    return out.reshape(shape)


cdef unsigned short[::1] _PAIR = np.array(
    [(a % 3) + 3 * (b % 3) for b in range(256) for a in range(256)], dtype=np.uint16)


def _packed_powers(ctx, deg):
    """x^i for every x, base-3 digits packed into the bytes of a uint64."""
    pw = ctx.power_table(deg)
    packed = np.zeros(pw.shape, dtype=np.uint64)
    for j in range(ctx.e):
        packed |= ((pw // 3**j) % 3).astype(np.uint64) << np.uint64(8 * j)
    return packed


def hyper_charsums(coeffs, ctx):
    """Sum over x in GF(q) of chi(f(x)) for rows of F_3 coefficients.

    For e <= 8 the digits of each x^i sit in separate bytes, so sum c_i x^i is
    a plain integer combination (each byte stays below 4 * 13 < 256) that is
    reduced mod 3 bytewise only once per point.
    """
    cdef _Tables T = _Tables(ctx)
    cdef long[:, ::1] C = np.ascontiguousarray(coeffs, dtype=np.int64) % 3
    cdef Py_ssize_t n = C.shape[0], w = C.shape[1]
    out = np.zeros(n, dtype=np.int64)
    cdef long[::1] o = out
    cdef Py_ssize_t r, i, k, npairs = (ctx.e + 1) // 2
    cdef long x, v, s, q = ctx.q, scale
    cdef unsigned long long acc, c
    cdef const Field* F = &T.f
    cdef long[:, ::1] pw
    cdef unsigned long long[:, ::1] P
    cdef const unsigned short* pair = &_PAIR[0]
    if ctx.e <= 8 and w <= 63:
        P = np.ascontiguousarray(_packed_powers(ctx, w - 1).T)  # (q, w)
        with nogil:
            for r in range(n):
                s = 0
                for x in range(q):
                    acc = 0
                    for i in range(w):
                        c = <unsigned long long>C[r, i]
                        acc += c * P[x, i]
                    v = 0
                    scale = 1
                    for k in range(npairs):
                        v += pair[(acc >> (16 * k)) & 0xFFFF] * scale
                        scale *= 9
                    s += F.chi[v]
                o[r] = s
        return out
    pw = np.ascontiguousarray(ctx.power_table(w - 1), dtype=np.int64)
    with nogil:
        for r in range(n):
            s = 0
            for x in range(q):
                v = 0
                for i in range(w):
                    if C[r, i]:
                        v = fadd(F, v, fscale(F, C[r, i], pw[i, x]))
                s += F.chi[v]
            o[r] = s
    return out


cdef int sqfree3(const long* f, int w) nogil:
    cdef long a[16]
    cdef long b[16]
    cdef long tmp[16]
    cdef int la = w, lb = 0, i, s, lt
    cdef long c
    for i in range(w):
        a[i] = f[i] % 3
    while la > 0 and a[la - 1] == 0:
        la -= 1
    for i in range(1, la):
        b[i - 1] = (i * a[i]) % 3
    lb = la - 1 if la > 0 else 0
    while lb > 0 and b[lb - 1] == 0:
        lb -= 1
    if lb == 0:
        return 0
    while lb > 0:
        # a <- a mod b
        while la >= lb:
            c = (a[la - 1] * b[lb - 1]) % 3
            s = la - lb
            for i in range(lb):
                a[s + i] = (a[s + i] - c * b[i] + 9) % 3
            while la > 0 and a[la - 1] == 0:
                la -= 1
        for i in range(la):
            tmp[i] = a[i]
        lt = la
        for i in range(lb):
            a[i] = b[i]
        la = lb
        for i in range(lt):
            b[i] = tmp[i]
        lb = lt
    return 1 if la == 1 else 0


def squarefree_mask(coeffs):
    cdef long[:, ::1] C = np.array(coeffs, dtype=np.int64, order="C")
    cdef Py_ssize_t n = C.shape[0], r
    cdef int w = C.shape[1]
    if w > 16:
        raise ValueError("degree too large for the compiled square-free test")
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    with nogil:
        for r in range(n):
            o[r] = sqfree3(&C[r, 0], w)
    return out.astype(bool)


# quintic monomial order: z-degree descending, then x-degree descending
cdef int MI[21]
cdef int MJ[21]
cdef int MK[21]


def _init_monomials():
    from .forms import MONOMIALS
    for n, (i, j, k) in enumerate(MONOMIALS):
        MI[n] = i
        MJ[n] = j
        MK[n] = k


_init_monomials()


cdef inline void line_layers(const Field* F, const long* c, const long[:, ::1] pw,
                             long t, int vertical, long* g) nogil:
    # z-layers g[0..3] of F restricted to the line (1:t), or (0:1) if vertical
    cdef int m, k
    for k in range(4):
        g[k] = 0
    for m in range(21):
        k = MK[m]
        if k > 3 or c[m] == 0:
            continue
        if vertical:
            if MI[m] == 0:
                g[k] = fadd(F, g[k], c[m])
        else:
            g[k] = fadd(F, g[k], fscale(F, c[m], pw[MJ[m], t]))


def quintic_fiber_sums(coeffs, ctx):
    cdef _Tables T = _Tables(ctx)
    cdef long[:, ::1] C = np.ascontiguousarray(coeffs, dtype=np.int64) % 3
    cdef long[:, ::1] pw = np.array(ctx.power_table(5), dtype=np.int64, order="C")
    cdef Py_ssize_t n = C.shape[0], r
    out = np.zeros(n, dtype=np.int64)
    cdef long[::1] o = out
    cdef long g[4]
    cdef long t, s, q = ctx.q
    cdef const Field* F = &T.f
    with nogil:
        for r in range(n):
            s = 0
            for t in range(q + 1):
                line_layers(F, &C[r, 0], pw, t, t == q, g)
                s += cubic_roots(F, g[3], g[2], g[1], g[0])
            o[r] = s
    return out


cdef inline long fpow(const Field* F, long a, int k) nogil:
    cdef long v = 1
    cdef int i
    for i in range(k):
        v = fmul(F, v, a)
    return v


cdef long eval_partial(const Field* F, const long* c, int var, long x, long y, long z) nogil:
    cdef long v = 0, term
    cdef int m, ex[3], mult
    for m in range(21):
        if c[m] == 0:
            continue
        ex[0] = MI[m]
        ex[1] = MJ[m]
        ex[2] = MK[m]
        mult = ex[var] % 3
        if mult == 0:
            continue
        ex[var] -= 1
        term = fmul(F, fmul(F, fpow(F, x, ex[0]), fpow(F, y, ex[1])), fpow(F, z, ex[2]))
        v = fadd(F, v, fscale(F, (mult * c[m]) % 3, term))
    return v


def quintic_singular_mask(coeffs, ctx):
    """True where V(F) has a rational singular point besides (0:0:1) or
    contains a line through it (see the numpy version for the argument)."""
    cdef _Tables T = _Tables(ctx)
    cdef long[:, ::1] C = np.ascontiguousarray(coeffs, dtype=np.int64) % 3
    cdef long[:, ::1] pw = np.array(ctx.power_table(5), dtype=np.int64, order="C")
    cdef Py_ssize_t n = C.shape[0], r
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    cdef long g[4]
    cdef long t, z0, x, y, v, ratio, q = ctx.q
    cdef int k
    cdef const Field* F = &T.f
    with nogil:
        for r in range(n):
            for t in range(q + 1):
                line_layers(F, &C[r, 0], pw, t, t == q, g)
                if g[0] == 0 and g[1] == 0 and g[2] == 0 and g[3] == 0:
                    o[r] = 1
                    break
                if g[2] != 0:
                    z0 = fmul(F, g[1], finv(F, g[2]))
                elif g[1] == 0 and g[3] != 0:
                    ratio = fmul(F, fneg(F, g[0]), finv(F, g[3]))
                    z0 = 0 if ratio == 0 else F.exp[(F.log[ratio] * F.inv3) % F.n]
                else:
                    continue
                v = 0
                for k in range(3, -1, -1):
                    v = fadd(F, fmul(F, v, z0), g[k])
                if v != 0:
                    continue
                if t == q:
                    x = 0
                    y = 1
                else:
                    x = 1
                    y = t
                if eval_partial(F, &C[r, 0], 0, x, y, z0) == 0 and \
                        eval_partial(F, &C[r, 0], 1, x, y, z0) == 0:
                    o[r] = 1
                    break
    return out.astype(bool)
