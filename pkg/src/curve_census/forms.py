"""Polynomial containers and the GL2 / GL3 substitution actions.

Conventions
-----------
* Univariate polynomials: coefficient lists, lowest degree first.
* Binary forms of degree d in (x, z): arrays ``F`` of length d + 1 with
  ``F[i]`` the coefficient of x^i z^(d-i).
* Ternary quintics: arrays of length 21 indexed by ``MONOMIALS``, ordered by
  z-degree descending, then x-degree descending (the order in which the
  reduced models are usually written down)::

      z^5, xz^4, yz^4, x^2z^3, xyz^3, y^2z^3, x^3z^2, ..., y^5

* Matrices act on the column of variables: ``act_gl2(h, F)(x, z) =
  F(h11 x + h12 z, h21 x + h22 z)``, and ``act_gl3(M, F)(v) = F(M v)``.
  With this convention (h1 h2) . F = h2 . (h1 . F); the forms are
  polynomials in the variables so substitution is a right action.

Matrix arguments may be a single matrix or a stack ``(m, n, n)``; the result
is then stacked the same way.  Field elements are ints as in
:mod:`curve_census.field`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, FieldError, poly_deriv, poly_gcd, poly_trim


def _tern_monomials(d):
    return tuple((i, d - k - i, k) for k in range(d, -1, -1) for i in range(d - k, -1, -1))


MONOMIALS = _tern_monomials(5)
MONO_INDEX = {m: n for n, m in enumerate(MONOMIALS)}


@dataclass(frozen=True)
class UniPoly:
    ctx: FieldCtx
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(poly_trim(self.ctx, self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self) -> "UniPoly":
        return UniPoly(self.ctx, poly_deriv(self.ctx, self.coeffs))


def gcd_univ(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    if f.ctx is not g.ctx:
        raise FieldError("polynomials over different fields")
    return UniPoly(f.ctx, poly_gcd(f.ctx, f.coeffs, g.coeffs))


def is_squarefree(f: UniPoly) -> bool:
    """True iff gcd(f, f') is constant.  A vanishing derivative means f is a
    cube in characteristic 3, so that case is not square-free."""
    if f.degree < 1:
        raise ValueError("square-freeness needs degree >= 1")
    df = f.derivative()
    if df.degree < 0:
        return False
    return gcd_univ(f, df).degree == 0


def is_squarefree_f3(coeffs) -> bool:
    """Square-free test for a polynomial with F_3 coefficients."""
    from .field import build_field

    return is_squarefree(UniPoly(build_field(1), [int(c) % 3 for c in coeffs]))


# -- matrices -------------------------------------------------------------------

def det2(ctx: FieldCtx, h) -> int:
    h = np.asarray(h)
    return ctx.sub(ctx.mul(int(h[0, 0]), int(h[1, 1])), ctx.mul(int(h[0, 1]), int(h[1, 0])))


def det3(ctx: FieldCtx, m) -> int:
    m = [[int(v) for v in row] for row in np.asarray(m)]
    total = 0
    for perm, sign in ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), \
                      ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1):
        term = 1
        for r in range(3):
            term = ctx.mul(term, m[r][perm[r]])
        total = ctx.add(total, term if sign > 0 else ctx.neg(term))
    return total


def matmul(ctx: FieldCtx, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n, k = a.shape
    out = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i in range(n):
        for j in range(b.shape[1]):
            v = 0
            for t in range(k):
                v = ctx.add(v, ctx.mul(int(a[i, t]), int(b[t, j])))
            out[i, j] = v
    return out


@functools.lru_cache(maxsize=None)
def _gl2_cached(e):
    from .field import build_field

    ctx = build_field(e)
    q = ctx.q
    g = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    det = ctx.vadd(ctx.vmul(g[:, 0], g[:, 3]), ctx.vneg(ctx.vmul(g[:, 1], g[:, 2])))
    g = g[det != 0].reshape(-1, 2, 2)
    g.setflags(write=False)
    return g


def gl2_elements(ctx: FieldCtx) -> np.ndarray:
    """All of GL2(ctx) as an (m, 2, 2) array, m = (q^2 - 1)(q^2 - q)."""
    return _gl2_cached(ctx.e)


def pgl2_representatives(ctx: FieldCtx) -> np.ndarray:
    """One matrix per class of GL2 modulo scalars (first nonzero entry of the
    top row equal to 1)."""
    g = gl2_elements(ctx)
    top = np.where(g[:, 0, 0] != 0, g[:, 0, 0], g[:, 0, 1])
    return g[top == 1]


def squares(ctx: FieldCtx) -> list:
    return sorted({ctx.mul(a, a) for a in range(1, ctx.q)})


# -- binary forms ---------------------------------------------------------------

def _bconv(ctx, a, b):
    """Batched product of binary forms: a (m, da+1), b (m, db+1)."""
    m, la = a.shape
    lb = b.shape[1]
    out = np.zeros((m, la + lb - 1), dtype=np.int64)
    for i in range(la):
        ai = a[:, i:i + 1]
        if not ai.any():
            continue
        out[:, i:i + lb] = ctx.vadd(out[:, i:i + lb], ctx.vmul(ai, b))
    return out


def _linear_powers(ctx, lin, n):
    """Powers 0..n of the batched binary linear forms ``lin`` (m, 2)."""
    m = lin.shape[0]
    pw = [np.ones((m, 1), dtype=np.int64)]
    for _ in range(n):
        pw.append(_bconv(ctx, pw[-1], lin))
    return pw


def act_binary(ctx: FieldCtx, h, form) -> np.ndarray:
    """Substitute (x, z) -> (h11 x + h12 z, h21 x + h22 z) in a binary form."""
    h = np.asarray(h, dtype=np.int64)
    single = h.ndim == 2
    hs = h.reshape(-1, 2, 2)
    form = np.asarray(form, dtype=np.int64)
    d = len(form) - 1
    m = hs.shape[0]
    lx = np.stack([hs[:, 0, 1], hs[:, 0, 0]], axis=1)  # image of x, indexed by x-degree
    lz = np.stack([hs[:, 1, 1], hs[:, 1, 0]], axis=1)
    px = _linear_powers(ctx, lx, d)
    pz = _linear_powers(ctx, lz, d)
    out = np.zeros((m, d + 1), dtype=np.int64)
    for i, c in enumerate(form):
        if c == 0:
            continue
        term = _bconv(ctx, px[i], pz[d - i])
        out = ctx.vadd(out, ctx.vmul(int(c), term))
    return out[0] if single else out


def act_gl2(ctx: FieldCtx, h, form) -> np.ndarray:
    """GL2 action on a degree-12 binary form (13 coefficients)."""
    hs = np.asarray(h, dtype=np.int64).reshape(-1, 2, 2)
    dets = ctx.vadd(ctx.vmul(hs[:, 0, 0], hs[:, 1, 1]), ctx.vneg(ctx.vmul(hs[:, 0, 1], hs[:, 1, 0])))
    if (dets == 0).any():
        raise ValueError("singular matrix in act_gl2")
    if len(form) != 13:
        raise ValueError("act_gl2 expects a degree-12 form")
    return act_binary(ctx, h, form)


def eval_binary(ctx: FieldCtx, form, x: int, z: int) -> int:
    d = len(form) - 1
    v = 0
    for i, c in enumerate(form):
        if c:
            v = ctx.add(v, ctx.mul(int(c), ctx.mul(ctx.pow(x, i), ctx.pow(z, d - i))))
    return v


# -- ternary forms --------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _tern_product_plan(da, db):
    ma, mb, mc = _tern_monomials(da), _tern_monomials(db), _tern_monomials(da + db)
    idx = {m: n for n, m in enumerate(mc)}
    plan = []
    for ia, a in enumerate(ma):
        for ib, b in enumerate(mb):
            plan.append((ia, ib, idx[(a[0] + b[0], a[1] + b[1], a[2] + b[2])]))
    return len(mc), plan


def _tconv(ctx, a, da, b, db):
    size, plan = _tern_product_plan(da, db)
    out = np.zeros((a.shape[0], size), dtype=np.int64)
    for ia, ib, ic in plan:
        out[:, ic] = ctx.vadd(out[:, ic], ctx.vmul(a[:, ia], b[:, ib]))
    return out


def act_ternary(ctx: FieldCtx, M, form, degree: int = 5) -> np.ndarray:
    """Substitute v -> M v in a ternary form (coefficients in the documented
    monomial order for that degree)."""
    M = np.asarray(M, dtype=np.int64)
    single = M.ndim == 2
    Ms = M.reshape(-1, 3, 3)
    m = Ms.shape[0]
    # image of x, y, z as linear forms in the degree-1 order (z, x, y)
    images = [np.stack([Ms[:, r, 2], Ms[:, r, 0], Ms[:, r, 1]], axis=1) for r in range(3)]
    pows = []
    for r in range(3):
        pw = [np.ones((m, 1), dtype=np.int64)]
        for k in range(degree):
            pw.append(_tconv(ctx, pw[-1], k, images[r], 1))
        pows.append(pw)
    monos = _tern_monomials(degree)
    out = np.zeros((m, len(monos)), dtype=np.int64)
    form = np.asarray(form, dtype=np.int64)
    for c, (i, j, k) in zip(form, monos):
        if c == 0:
            continue
        t = _tconv(ctx, pows[0][i], i, pows[1][j], j)
        t = _tconv(ctx, t, i + j, pows[2][k], k)
        out = ctx.vadd(out, ctx.vmul(int(c), t))
    return out[0] if single else out


def act_gl3(ctx: FieldCtx, M, form) -> np.ndarray:
    """GL3 action on a ternary quintic; the result may have k >= 4 terms."""
    Ms = np.asarray(M, dtype=np.int64).reshape(-1, 3, 3)
    for mat in Ms:
        if det3(ctx, mat) == 0:
            raise ValueError("singular matrix in act_gl3")
    if len(form) != len(MONOMIALS):
        raise ValueError("act_gl3 expects 21 quintic coefficients")
    return act_ternary(ctx, M, form, 5)


def eval_ternary(ctx: FieldCtx, form, point, degree: int = 5) -> int:
    x, y, z = (int(v) for v in point)
    v = 0
    for c, (i, j, k) in zip(form, _tern_monomials(degree)):
        if c:
            t = ctx.mul(ctx.mul(ctx.pow(x, i), ctx.pow(y, j)), ctx.pow(z, k))
            v = ctx.add(v, ctx.mul(int(c), t))
    return v


def projective_points(ctx: FieldCtx, n: int):
    """Representatives of P^n(ctx) with first nonzero coordinate 1."""
    pts = []
    for lead in range(n + 1):
        for rest in itertools.product(range(ctx.q), repeat=n - lead):
            pts.append((0,) * lead + (1,) + rest)
    return pts


def form_to_list(form) -> list:
    return [int(c) for c in form]
