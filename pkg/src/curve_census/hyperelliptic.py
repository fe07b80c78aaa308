"""Reduced genus-5 hyperelliptic models over F_3.

A model is ``c y^2 = f(x)`` with::

    f = x^12 + b1 x^11 + b2 x^10 + a9 x^9 + ... + a1 x + a0

where c is 1 or eps = 2 (the nonsquare of F_3) and (b1, b2) is one of
(1, 0), (0, 0), (0, 1), (0, eps); characteristic 3 divides 12, so both top
coefficients are normalised rather than the x^11 term being removed.

Enumeration order is lexicographic in ``(c, (b1, b2), a0, a1, ..., a9)`` with
c in (1, 2), (b1, b2) in the order above and each a_i in (0, 1, 2).  The
position in that order is the model's ``index``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .field import FieldCtx, build_field
from .forms import act_gl2, gl2_elements, is_squarefree_f3, pgl2_representatives, squares

EPS = 2
GENUS = 5
C_VALUES = (1, EPS)
B_PAIRS = ((1, 0), (0, 0), (0, 1), (0, EPS))
N_FREE = 2 * GENUS  # a0 .. a9
TOTAL = len(C_VALUES) * len(B_PAIRS) * 3**N_FREE  # 472392


def leading_shapes(genus: int = GENUS, p: int = 3):
    """Normalised top coefficients allowed by the reduction.

    If p divides 2g+2 the pair (b1, b2) of x^(2g+1), x^(2g) coefficients ranges
    over ``B_PAIRS``; otherwise the x^(2g+1) term is shifted away and only
    b2 in {0, 1, eps} remains.
    """
    eps = EPS if p == 3 else None
    if (2 * genus + 2) % p == 0:
        return ((1, 0), (0, 0), (0, 1), (0, eps))
    return ((0, 0), (0, 1), (0, eps))


@dataclass(frozen=True)
class HyperModel:
    c: int
    b1: int
    b2: int
    a: tuple  # a0 .. a9

    def __post_init__(self):
        if self.c not in C_VALUES or (self.b1, self.b2) not in B_PAIRS:
            raise ValueError(f"not a reduced model: c={self.c}, (b1, b2)={(self.b1, self.b2)}")
        if len(self.a) != N_FREE or any(v not in (0, 1, 2) for v in self.a):
            raise ValueError("a must hold ten values in {0, 1, 2}")
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))

    @property
    def f(self) -> tuple:
        """Coefficients of f, lowest degree first (13 entries)."""
        return self.a + (self.b2, self.b1, 1)

    @property
    def index(self) -> int:
        head = C_VALUES.index(self.c) * len(B_PAIRS) + B_PAIRS.index((self.b1, self.b2))
        return head * 3**N_FREE + sum(v * 3**(N_FREE - 1 - i) for i, v in enumerate(self.a))

    @classmethod
    def from_index(cls, index: int) -> "HyperModel":
        if not 0 <= index < TOTAL:
            raise IndexError(index)
        head, rest = divmod(index, 3**N_FREE)
        ci, bi = divmod(head, len(B_PAIRS))
        a = [(rest // 3**(N_FREE - 1 - i)) % 3 for i in range(N_FREE)]
        b1, b2 = B_PAIRS[bi]
        return cls(C_VALUES[ci], b1, b2, tuple(a))

    @classmethod
    def from_f(cls, f, c: int = 1) -> "HyperModel":
        f = [int(v) % 3 for v in f]
        if len(f) != 13 or f[12] != 1:
            raise ValueError("f must be monic of degree 12")
        return cls(c, f[11], f[10], tuple(f[:10]))

    def is_squarefree(self) -> bool:
        return is_squarefree_f3(self.f)

    def to_json(self) -> dict:
        return {"family": "hyperelliptic", "c": self.c, "b1": self.b1, "b2": self.b2, "a": list(self.a)}

    @classmethod
    def from_json(cls, d: dict) -> "HyperModel":
        if d.get("family", "hyperelliptic") != "hyperelliptic":
            raise ValueError("not a hyperelliptic record")
        return cls(int(d["c"]), int(d["b1"]), int(d["b2"]), tuple(int(v) for v in d["a"]))


def enumerate_hyper_models(start: int = 0, stop: int | None = None):
    """Yield the reduced models with index in [start, stop)."""
    stop = TOTAL if stop is None else min(stop, TOTAL)
    for i in range(start, stop):
        yield HyperModel.from_index(i)


def coefficient_block(start: int, stop: int):
    """Arrays for the models with index in [start, stop): the (n, 13) matrix
    of f coefficients (lowest degree first) and the c values."""
    idx = np.arange(start, stop, dtype=np.int64)
    head, rest = np.divmod(idx, 3**N_FREE)
    ci, bi = np.divmod(head, len(B_PAIRS))
    f = np.zeros((len(idx), 13), dtype=np.int64)
    for i in range(N_FREE):
        f[:, i] = (rest // 3**(N_FREE - 1 - i)) % 3
    pairs = np.array(B_PAIRS)
    f[:, 11] = pairs[bi, 0]
    f[:, 10] = pairs[bi, 1]
    f[:, 12] = 1
    c = np.array(C_VALUES)[ci]
    return f, c


def _check_e(e):
    if not 1 <= e <= 10:
        raise ValueError(f"extension degree must be in 1..10, got {e}")


def counts_from_charsums(charsums, c, ctx: FieldCtx):
    """#H(GF(q)) from the character sums S = sum_x chi(f(x)).

    Affine points: sum_x (1 + chi(f(x)/c)) = q + chi(c) S.  The two points
    over infinity are rational exactly when c is a square.
    """
    chi_c = ctx.chi[np.asarray(c, dtype=np.int64)].astype(np.int64)
    return ctx.q + chi_c * np.asarray(charsums, dtype=np.int64) + np.where(chi_c == 1, 2, 0)


def count_points_block(f, c, e: int) -> np.ndarray:
    _check_e(e)
    ctx = build_field(e)
    return counts_from_charsums(kernels.hyper_charsums(f, ctx), c, ctx)


def count_points_hyper(H: HyperModel, e: int) -> int:
    """Number of GF(3^e)-points of the smooth genus-5 curve given by H."""
    f = np.array([H.f])
    return int(count_points_block(f, np.array([H.c]), e)[0])


def count_vector(H: HyperModel, base_e: int, length: int = GENUS) -> list:
    """Counts over GF(3^(base_e * j)) for j = 1..length."""
    return [count_points_hyper(H, base_e * j) for j in range(1, length + 1)]


# -- isomorphism -------------------------------------------------------------------

def binary_form(H: HyperModel, ctx: FieldCtx) -> np.ndarray:
    """Homogenisation in (x, z) of c^-1 f, as 13 coefficients over ctx."""
    cinv = ctx.inv(ctx.embed(H.c))
    return np.array([ctx.mul(cinv, ctx.embed(v)) for v in H.f], dtype=np.int64)


def orbit(form, ctx: FieldCtx, matrices=None) -> np.ndarray:
    """All mu * (h . F) for h in ``matrices`` (default GL2(k)) and mu a
    nonzero square, as an (m * #squares, 13) array."""
    mats = gl2_elements(ctx) if matrices is None else matrices
    images = act_gl2(ctx, mats, form)
    sq = np.array(squares(ctx), dtype=np.int64)
    return ctx.vmul(sq[:, None, None], images[None, :, :]).reshape(-1, len(form))


def hyper_isomorphic(H1: HyperModel, H2: HyperModel, k: FieldCtx) -> bool:
    """Whether some h in GL2(k), lambda in k^x give h . F1 = lambda^2 F2.

    Decided by running through all of GL2(k).
    """
    target = binary_form(H2, k)
    orb = orbit(binary_form(H1, k), k)
    return bool((orb == target).all(axis=1).any())


def hyper_canonical(H: HyperModel, k: FieldCtx) -> tuple:
    """Least element of the orbit of F under GL2(k) and square scalars.

    Vectors are compared coefficient by coefficient from x^0 z^12 upward,
    elements in the order 0, zeta^0, zeta^1, ...  The result is returned as
    field elements.
    """
    orb = orbit(binary_form(H, k), k, pgl2_representatives(k))
    ranks = k.rank_table[orb]
    order = np.lexsort(ranks.T[::-1])
    return tuple(int(v) for v in orb[order[0]])


class OrbitIndex:
    """Greedy isomorphism classification by orbit lookup.

    Each new class stores the keys of all forms in its orbit that can occur
    as a query (F_3 coefficients, nonzero x^12 term); membership of a later
    model is then a single dictionary lookup.  PGL2 representatives suffice:
    a scalar matrix nu*I multiplies a degree-12 form by nu^12, a square.
    """

    def __init__(self, k: FieldCtx):
        self.k = k
        self.mats = pgl2_representatives(k)
        self.lookup: dict[bytes, int] = {}
        self.representatives: list = []

    @staticmethod
    def _key(form) -> bytes:
        return np.asarray(form, dtype=np.uint8).tobytes()

    def classify(self, H: HyperModel) -> int:
        form = binary_form(H, self.k)
        key = self._key(form)
        cls = self.lookup.get(key)
        if cls is not None:
            return cls
        cls = len(self.representatives)
        self.representatives.append(H)
        orb = orbit(form, self.k, self.mats)
        keep = (orb < 3).all(axis=1) & (orb[:, 12] != 0)
        for row in orb[keep]:
            self.lookup.setdefault(self._key(row), cls)
        self.lookup[key] = cls
        return cls
