"""Pure numpy implementation of the counting kernels.

Every curve coefficient lies in F_3, so evaluating a family of forms at a
fixed set of field points is F_3-linear in the coefficients: the base-3
digits of the values are ``(coeffs @ W) % 3`` for a precomputed digit
matrix ``W``.  The kernels below lean on that and then finish with table
lookups.
"""

from __future__ import annotations

import functools

import numpy as np

from .field import FieldCtx, build_field
from .forms import MONOMIALS

NAME = "numpy"

_BUDGET = 1 << 22  # int64 entries per intermediate block


@functools.lru_cache(maxsize=None)
def _digit_table(e):
    ctx = build_field(e)
    v = np.arange(ctx.q, dtype=np.int64)
    return np.stack([(v // 3**i) % 3 for i in range(e)], axis=1)


def _weights(e):
    return 3 ** np.arange(e, dtype=np.int64)


def _chunks(n, per_row):
    step = max(1, _BUDGET // max(per_row, 1))
    for start in range(0, n, step):
        yield start, min(n, start + step)


# -- hyperelliptic ---------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _hyper_matrix(e, deg):
    ctx = build_field(e)
    pw = ctx.power_table(deg)  # (deg+1, q)
    return _digit_table(e)[pw].reshape(deg + 1, -1)  # (deg+1, q*e)


def hyper_charsums(coeffs, ctx: FieldCtx) -> np.ndarray:
    """Sum over x in GF(q) of chi(f(x)) for each row of F_3 coefficients."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    n, width = coeffs.shape
    W = _hyper_matrix(ctx.e, width - 1)
    wts = _weights(ctx.e)
    out = np.empty(n, dtype=np.int64)
    for a, b in _chunks(n, W.shape[1]):
        vals = ((coeffs[a:b] @ W) % 3).reshape(b - a, ctx.q, ctx.e) @ wts
        out[a:b] = ctx.chi[vals].sum(axis=1, dtype=np.int64)
    return out


def _sqfree_one(f):
    f = [int(c) % 3 for c in f]
    while f and f[-1] == 0:
        f.pop()
    df = [(i * c) % 3 for i, c in enumerate(f)][1:]
    while df and df[-1] == 0:
        df.pop()
    if not df:
        return False
    a, b = f, df
    while b:
        a = list(a)
        inv = b[-1]  # 1 and 2 are their own inverses mod 3
        while len(a) >= len(b):
            c = (a[-1] * inv) % 3
            s = len(a) - len(b)
            for i, bc in enumerate(b):
                a[s + i] = (a[s + i] - c * bc) % 3
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) == 1


def squarefree_mask(coeffs) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=np.int64)
    return np.fromiter((_sqfree_one(row) for row in coeffs.tolist()), dtype=bool, count=len(coeffs))


# -- cubic root counting ---------------------------------------------------------

def _depressed_roots(ctx, c, d):
    """Roots of z^3 + c z + d (vectorised)."""
    negc = ctx.vneg(c)
    lg = ctx.log[negc]
    square = (negc != 0) & (lg % 2 == 0)
    s = ctx.exp[np.where(square, lg // 2, 0)]
    s3 = ctx.vmul(ctx.vmul(s, s), s)
    w = ctx.vmul(d, ctx.vinv(s3))
    three = np.where(ctx.trace_table[w] == 0, 3, 0)
    return np.where(square, three, 1)


def cubic_root_counts(ctx: FieldCtx, a3, a2, a1, a0) -> np.ndarray:
    """Distinct roots of a3 z^3 + a2 z^2 + a1 z + a0 in the field.

    Closed form for characteristic 3: the z^2 term cannot be removed by a
    shift, but the z term can, and z -> 1/z then reduces to z^3 + c z + d,
    whose roots come from the Artin-Schreier map u^3 - u.
    """
    a3, a2, a1, a0 = (np.asarray(v, dtype=np.int64) for v in (a3, a2, a1, a0))
    inv3 = ctx.vinv(a3)
    b = ctx.vmul(a2, inv3)
    c = ctx.vmul(a1, inv3)
    d = ctx.vmul(a0, inv3)
    t = ctx.vmul(c, ctx.vinv(b))
    t2 = ctx.vmul(t, t)
    dprime = ctx.vadd(ctx.vadd(ctx.vmul(t2, t), ctx.vmul(b, t2)), ctx.vadd(ctx.vmul(c, t), d))
    dinv = ctx.vinv(dprime)
    shifted = np.where(dprime == 0, 2, _depressed_roots(ctx, ctx.vmul(b, dinv), dinv))
    cubic = np.where(b != 0, shifted, _depressed_roots(ctx, c, d))

    disc = ctx.vadd(ctx.vmul(a1, a1), ctx.vneg(ctx.vmul(a2, a0)))
    quad = 1 + ctx.chi[disc].astype(np.int64)
    lower = np.where(a2 != 0, quad, np.where(a1 != 0, 1, np.where(a0 != 0, 0, ctx.q)))
    return np.where(a3 != 0, cubic, lower)


# -- trigonal --------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _line_matrix(e, monos, layers):
    """Digit matrix mapping coefficients of ``monos`` to the z-layers of the
    form restricted to each line through (0:0:1).

    Lines are (1:t) for t in GF(q) followed by (0:1).  Result has shape
    (len(monos), (q+1) * layers * e).
    """
    ctx = build_field(e)
    q = ctx.q
    dig = _digit_table(e)
    pw = ctx.power_table(5)
    W = np.zeros((len(monos), q + 1, layers, e), dtype=np.int64)
    for m, (i, j, k) in enumerate(monos):
        if k >= layers:
            continue
        W[m, :q, k, :] = dig[pw[j]]
        if i == 0:
            W[m, q, k, 0] = 1
    return W.reshape(len(monos), -1)


def _layers(coeffs, ctx, monos, layers):
    W = _line_matrix(ctx.e, monos, layers)
    vals = ((coeffs @ W) % 3).reshape(len(coeffs), ctx.q + 1, layers, ctx.e)
    return vals @ _weights(ctx.e)


def quintic_fiber_sums(coeffs, ctx: FieldCtx) -> np.ndarray:
    """Sum over the q+1 lines through (0:0:1) of the number of affine roots
    of the restricted cubic in z (a zero restriction counts q)."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    n = len(coeffs)
    out = np.empty(n, dtype=np.int64)
    for a, b in _chunks(n, (ctx.q + 1) * 4 * ctx.e * 3):
        g = _layers(coeffs[a:b], ctx, MONOMIALS, 4)
        roots = cubic_root_counts(ctx, g[..., 3], g[..., 2], g[..., 1], g[..., 0])
        out[a:b] = roots.sum(axis=1)
    return out


@functools.lru_cache(maxsize=None)
def _partial_plan():
    """Columns and multipliers turning quintic coefficients into those of
    d/dx and d/dy (quartics, listed in the same monomial order)."""
    from .forms import _tern_monomials

    quartic = _tern_monomials(4)
    idx = {m: n for n, m in enumerate(MONOMIALS)}
    plans = []
    for var in (0, 1):
        src, mult = [], []
        for (i, j, k) in quartic:
            up = [i, j, k]
            up[var] += 1
            src.append(idx[tuple(up)])
            mult.append(up[var] % 3)
        plans.append((np.array(src), np.array(mult)))
    return quartic, plans


def _horner(ctx, layers, z):
    v = np.zeros(z.shape, dtype=np.int64)
    for k in range(layers.shape[-1] - 1, -1, -1):
        v = ctx.vadd(ctx.vmul(v, z), layers[..., k])
    return v


def quintic_singular_mask(coeffs, ctx: FieldCtx) -> np.ndarray:
    """True where V(F) has a GF(q)-rational singular point other than
    (0:0:1), or contains a line through (0:0:1).

    Off (0:0:1) a point is singular only if z is a multiple root of the
    restriction g(z) to its line, i.e. g = g' = 0; in characteristic 3,
    g' = 2 a2 z + a1, so each line has at most one candidate.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    quartic, plans = _partial_plan()
    n = len(coeffs)
    out = np.empty(n, dtype=bool)
    for a, b in _chunks(n, (ctx.q + 1) * 4 * ctx.e * 8):
        c = coeffs[a:b]
        g = _layers(c, ctx, MONOMIALS, 4)
        a3, a2, a1, a0 = g[..., 3], g[..., 2], g[..., 1], g[..., 0]
        zero = (a3 == 0) & (a2 == 0) & (a1 == 0) & (a0 == 0)
        z_lin = ctx.vmul(a1, ctx.vinv(a2))
        ratio = ctx.vmul(ctx.vneg(a0), ctx.vinv(a3))
        lg = ctx.log[ratio]
        z_cube = np.where(ratio == 0, 0, ctx.exp[np.where(ratio == 0, 0, lg * ctx.inv3 % (ctx.q - 1))])
        cube_case = (a2 == 0) & (a1 == 0) & (a3 != 0)
        has = (a2 != 0) | cube_case
        z0 = np.where(a2 != 0, z_lin, z_cube)
        on = _horner(ctx, g, z0) == 0
        sing = has & on
        for src, mult in plans:
            d = (c[:, src] * mult) % 3
            layers = _layers(d, ctx, quartic, 4)
            sing &= _horner(ctx, layers, z0) == 0
        out[a:b] = (sing | zero).any(axis=1)
    return out
