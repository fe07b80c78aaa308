"""Reduced plane-quintic models of genus-5 trigonal curves over F_3.

Every model has the shape ``F = q(x, y) z^3 + f2 z^2 + f1 z + f0`` with the
unique singular point at (0:0:1), where q is

* ``xy`` for a split node,
* ``x^2 - eps y^2 = x^2 + y^2`` (eps = 2) for a non-split node,
* ``x^2`` for a cusp.

Coefficients are stored as 21-vectors in :data:`forms.MONOMIALS` order.

Each (type, case) is a list of *families*.  A family is a base vector plus
free slots; a slot is a direction (a combination of monomials) together with
the values it may take.  Members of a family are listed in mixed-radix order
with the first slot most significant, families of a case in order, and cases
in :data:`CASE_ORDER`.  The position of a model in that concatenation is its
global enumeration index.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .field import FieldCtx, build_field
from .forms import MONO_INDEX, MONOMIALS, act_binary, act_ternary, gl2_elements

EPS = 2
SPLIT, NONSPLIT, CUSP = "split", "nonsplit", "cusp"
SING_TYPES = (SPLIT, NONSPLIT, CUSP)
CASE_ORDER = ((SPLIT, 1), (SPLIT, 2), (SPLIT, 3), (SPLIT, 4), (SPLIT, 5),
              (NONSPLIT, 1), (NONSPLIT, 2), (NONSPLIT, 3), (NONSPLIT, 4),
              (CUSP, 1))
VALIDATION_EXTENSIONS = (4, 5, 6)

F3 = (0, 1, 2)
BIT = (0, 1)


def _vec(terms) -> np.ndarray:
    """21-vector from {(i, j, k): coefficient} (exponents of x, y, z)."""
    v = np.zeros(len(MONOMIALS), dtype=np.int64)
    for mono, c in terms.items():
        v[MONO_INDEX[mono]] = (v[MONO_INDEX[mono]] + c) % 3
    return v


def _m(i, j, k):
    return _vec({(i, j, k): 1})


# z^2 layer a1..a4, z layer a5..a9, quintic tail a10..a15 of the general split form
Z2 = [_m(3 - j, j, 2) for j in range(4)]
Z1 = [_m(4 - j, j, 1) for j in range(5)]
Z0 = [_m(5 - j, j, 0) for j in range(6)]

Q_FORMS = {
    SPLIT: _vec({(1, 1, 3): 1}),
    NONSPLIT: _vec({(2, 0, 3): 1, (0, 2, 3): -EPS}),
    CUSP: _vec({(2, 0, 3): 1}),
}
# x (x^2 - eps y^2) z^2
X_NORM = _vec({(3, 0, 2): 1, (1, 2, 2): -EPS})


class Family:
    """A base vector and free slots, enumerated in mixed-radix order."""

    def __init__(self, base, slots):
        self.base = np.asarray(base, dtype=np.int64) % 3
        self.slots = [(np.asarray(d, dtype=np.int64), tuple(dom)) for d, dom in slots]
        self.radices = [len(dom) for _, dom in self.slots]
        self.size = int(np.prod(self.radices, dtype=np.int64)) if self.slots else 1
        # a monomial per slot that no later slot touches
        used = np.array([d != 0 for d, _ in self.slots]).reshape(len(self.slots), -1)
        self.pivots = [int(np.flatnonzero(used[i] & ~used[i + 1:].any(axis=0))[0])
                       for i in range(len(self.slots))]

    def values(self, local):
        """Slot values of the member at ``local`` (array or int)."""
        local = np.asarray(local, dtype=np.int64)
        out = []
        for (_, dom), r in zip(reversed(self.slots), reversed(self.radices)):
            local, digit = np.divmod(local, r)
            out.append(np.asarray(dom, dtype=np.int64)[digit])
        return out[::-1]

    def block(self, start, stop) -> np.ndarray:
        local = np.arange(start, stop, dtype=np.int64)
        coeffs = np.tile(self.base, (len(local), 1))
        for (d, _), v in zip(self.slots, self.values(local)):
            coeffs += v[:, None] * d[None, :]
        return coeffs % 3

    def locate(self, coeffs):
        """Local index of ``coeffs`` in this family, or None."""
        coeffs = np.asarray(coeffs, dtype=np.int64) % 3
        rest = (coeffs - self.base) % 3
        local = 0
        for (d, dom), lead in zip(self.slots, self.pivots):
            v = int(rest[lead] * d[lead]) % 3  # d[lead] is +-1, its own inverse
            if v not in dom:
                return None
            rest = (rest - v * d) % 3
            local = local * len(dom) + dom.index(v)
        return local if not rest.any() else None


def _split_family(case):
    q = Q_FORMS[SPLIT]
    z2 = {1: (1, 0, 0, 0), 2: (0, 1, 0, 0), 3: (0, 0, 1, 0), 4: (0, 0, 0, 1), 5: (0, 0, 0, 0)}[case]
    base = q + sum(c * v for c, v in zip(z2, Z2))
    # free z^2 slots after the normalised leading one
    z2_slots = {1: [(Z2[1], BIT), (Z2[2], F3), (Z2[3], F3)],
                2: [(Z2[2], BIT), (Z2[3], F3)],
                3: [(Z2[3], BIT)],
                4: [],
                5: []}[case]
    # z^1 slots a5..a9, with the two killed by the shift z -> z + alpha x + beta y
    z1_dom = {1: (None, None, F3, F3, F3),
              2: (F3, None, None, F3, F3),
              3: (F3, F3, None, None, F3),
              4: (F3, F3, F3, None, None),
              5: (F3, (0, 1, 2), BIT, F3, F3)}[case]
    z1_slots = [(Z1[i], dom) for i, dom in enumerate(z1_dom) if dom is not None]
    z0_slots = [(v, F3) for v in Z0]
    return [Family(base, z2_slots + z1_slots + z0_slots)]


def _nonsplit_families(case):
    q = Q_FORMS[NONSPLIT]
    z0_slots = [(v, F3) for v in Z0]
    if case == 1:
        return [Family(q + Z2[3], [(X_NORM, F3), (Z2[0], F3), (Z1[0], F3), (Z1[1], F3), (Z1[2], F3)]
                       + z0_slots)]
    if case == 2:
        return [Family(q + X_NORM, [(Z2[0], F3), (Z1[0], F3), (Z1[1], F3), (Z1[4], F3)] + z0_slots)]
    if case == 3:
        return [Family(q + Z2[0], [(Z1[2], F3), (Z1[3], F3), (Z1[4], F3)] + z0_slots)]
    # case 4: no z^2 layer, quintic tail with first nonzero entry 1; the all-zero
    # tail is kept last so validation can reject it explicitly
    z1_slots = [(v, F3) for v in Z1]
    fams = [Family(q + Z0[i], z1_slots + [(v, F3) for v in Z0[i + 1:]]) for i in range(6)]
    fams.append(Family(q, z1_slots))
    return fams


def _cusp_families():
    q = Q_FORMS[CUSP]
    slots = [(Z2[0], BIT), (Z2[1], BIT), (Z2[2], F3), (Z2[3], (1, 2)),
             (Z1[0], F3), (Z1[1], F3), (Z1[2], F3)] + [(v, F3) for v in Z0]
    return [Family(q, slots)]


@functools.lru_cache(maxsize=None)
def case_families(sing_type: str, case: int):
    if sing_type == SPLIT and case in (1, 2, 3, 4, 5):
        return tuple(_split_family(case))
    if sing_type == NONSPLIT and case in (1, 2, 3, 4):
        return tuple(_nonsplit_families(case))
    if sing_type == CUSP and case == 1:
        return tuple(_cusp_families())
    raise ValueError(f"unknown case: {sing_type} {case}")


def case_size(sing_type: str, case: int) -> int:
    return sum(f.size for f in case_families(sing_type, case))


@functools.lru_cache(maxsize=None)
def _layout():
    """(type, case, family position, family, global offset) for every family."""
    out, offset = [], 0
    for t, c in CASE_ORDER:
        for pos, fam in enumerate(case_families(t, c)):
            out.append((t, c, pos, fam, offset))
            offset += fam.size
    return tuple(out), offset


def total_size(sing_type: str | None = None) -> int:
    if sing_type is None:
        return _layout()[1]
    return sum(case_size(t, c) for t, c in CASE_ORDER if t == sing_type)


def case_range(sing_type: str, case: int) -> tuple:
    """Global index range [start, stop) of one case."""
    fams = [(off, fam) for t, c, _, fam, off in _layout()[0] if (t, c) == (sing_type, case)]
    if not fams:
        raise ValueError(f"unknown case: {sing_type} {case}")
    return fams[0][0], fams[-1][0] + fams[-1][1].size


# -- models --------------------------------------------------------------------------

@dataclass(frozen=True)
class QuinticModel:
    sing_type: str
    case: int
    coeffs: tuple  # 21 entries in MONOMIALS order

    def __post_init__(self):
        if self.sing_type not in SING_TYPES:
            raise ValueError(f"unknown singularity type {self.sing_type!r}")
        case_families(self.sing_type, self.case)
        if len(self.coeffs) != len(MONOMIALS):
            raise ValueError("a quintic needs 21 coefficients")
        object.__setattr__(self, "coeffs", tuple(int(v) % 3 for v in self.coeffs))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    @property
    def index(self) -> int | None:
        """Global enumeration index, or None if the model is not in its case."""
        for t, c, _, fam, off in _layout()[0]:
            if (t, c) == (self.sing_type, self.case):
                local = fam.locate(self.coeffs)
                if local is not None:
                    return off + local
        return None

    def in_case(self) -> bool:
        return self.index is not None

    @classmethod
    def from_index(cls, index: int) -> "QuinticModel":
        for t, c, _, fam, off in _layout()[0]:
            if off <= index < off + fam.size:
                return cls(t, c, tuple(int(v) for v in fam.block(index - off, index - off + 1)[0]))
        raise IndexError(index)

    def to_json(self) -> dict:
        return {"family": "trigonal", "type": self.sing_type, "case": self.case, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, d: dict) -> "QuinticModel":
        if d.get("family", "trigonal") != "trigonal":
            raise ValueError("not a trigonal record")
        return cls(d["type"], int(d["case"]), tuple(int(v) for v in d["coeffs"]))


def enumerate_trigonal_models(sing_type: str, case: int):
    """Yield every model of one reduced case in enumeration order."""
    for fam in case_families(sing_type, case):
        for local in range(fam.size):
            yield QuinticModel(sing_type, case, tuple(int(v) for v in fam.block(local, local + 1)[0]))


def index_block(start: int, stop: int):
    """Coefficients (n, 21) and case labels (n,) for global indices [start, stop).

    Labels index into :data:`CASE_ORDER`.
    """
    parts, labels = [], []
    for t, c, _, fam, off in _layout()[0]:
        a, b = max(start, off), min(stop, off + fam.size)
        if a < b:
            parts.append(fam.block(a - off, b - off))
            labels.append(np.full(b - a, CASE_ORDER.index((t, c)), dtype=np.int64))
    if not parts:
        return np.zeros((0, len(MONOMIALS)), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(parts), np.concatenate(labels)


def singular_type_of_label(labels) -> np.ndarray:
    names = np.array([t for t, _ in CASE_ORDER])
    return names[np.asarray(labels)]


# -- counting ------------------------------------------------------------------------

def _check_e(e):
    if not 1 <= e <= 10:
        raise ValueError(f"extension degree must be in 1..10, got {e}")


def node_correction(sing_type, e: int):
    """Difference between the normalisation count and #V(F)(GF(3^e)).

    A split node contributes two points upstairs (+1), a non-split node none
    (-1), a cusp one (0).  The non-split node x^2 - eps y^2 splits exactly
    when eps is a square, i.e. for even e.
    """
    t = np.asarray(sing_type)
    nonsplit = 1 if e % 2 == 0 else -1
    out = np.where(t == SPLIT, 1, np.where(t == NONSPLIT, nonsplit, 0))
    return int(out) if out.ndim == 0 else out


def plane_counts(coeffs, e: int) -> np.ndarray:
    _check_e(e)
    return 1 + kernels.quintic_fiber_sums(np.asarray(coeffs, dtype=np.int64), build_field(e))


def count_plane_quintic(F: QuinticModel, e: int) -> int:
    """#V(F)(GF(3^e)): (0:0:1) plus the roots of F on each line through it."""
    return int(plane_counts(F.array[None, :], e)[0])


def normalization_counts(coeffs, sing_types, e: int) -> np.ndarray:
    return plane_counts(coeffs, e) + node_correction(sing_types, e)


def normalization_count(F: QuinticModel, e: int) -> int:
    """Number of GF(3^e)-points of the normalisation of V(F)."""
    return count_plane_quintic(F, e) + node_correction(F.sing_type, e)


def count_vector(F: QuinticModel, base_e: int, length: int = 5) -> list:
    return [normalization_count(F, base_e * j) for j in range(1, length + 1)]


# -- validation ----------------------------------------------------------------------

_HIGH_Z = [MONO_INDEX[(i, 5 - i - k, k)] for k in (4, 5) for i in range(5 - k + 1)]


def _coeff(F, i, j, k):
    return int(F[MONO_INDEX[(i, j, k)]])


def shape_ok(coeffs, sing_type: str) -> bool:
    """Check that (0:0:1) is a double point of the declared kind."""
    F = np.asarray(coeffs, dtype=np.int64) % 3
    if F[_HIGH_Z].any():
        return False
    q = [_coeff(F, 2, 0, 3), _coeff(F, 1, 1, 3), _coeff(F, 0, 2, 3)]  # x^2, xy, y^2
    disc = (q[1] * q[1] - 4 * q[0] * q[2]) % 3
    if not any(q):
        return False
    if sing_type == SPLIT:
        return disc == 1
    if sing_type == NONSPLIT:
        return disc == 2
    if sing_type != CUSP or disc != 0:
        return False
    # A2 cusp: f2 must not vanish on the tangent direction (the root of q)
    u, v = next((u, v) for u, v in ((1, 0), (0, 1), (1, 1), (1, 2))
                if (q[0] * u * u + q[1] * u * v + q[2] * v * v) % 3 == 0)
    f2 = sum(_coeff(F, 3 - j, j, 2) * u ** (3 - j) * v ** j for j in range(4)) % 3
    return f2 != 0


def singular_elsewhere(coeffs, extensions=VALIDATION_EXTENSIONS) -> np.ndarray:
    """True where V(F) has a singular point other than (0:0:1) over one of the
    given extensions (or contains a line through (0:0:1))."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    bad = np.zeros(len(coeffs), dtype=bool)
    for e in extensions:
        todo = np.flatnonzero(~bad)
        if len(todo) == 0:
            break
        bad[todo] = kernels.quintic_singular_mask(coeffs[todo], build_field(e))
    return bad


def validate_block(coeffs, sing_types) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=np.int64)
    shapes = np.array([shape_ok(c, t) for c, t in zip(coeffs, np.broadcast_to(sing_types, len(coeffs)))],
                      dtype=bool)
    ok = shapes.copy()
    if ok.any():
        ok[ok] = ~singular_elsewhere(coeffs[ok])
    return ok


def validate_genus5(F: QuinticModel) -> bool:
    """True iff the only singular point of V(F) is the declared node or cusp
    at (0:0:1), so that the normalisation has genus 5."""
    return bool(validate_block(F.array[None, :], F.sing_type)[0])


# -- isomorphism ---------------------------------------------------------------------

def _embed_form(F, k: FieldCtx):
    return np.array([k.embed(int(v)) for v in F], dtype=np.int64)


def _layer(F, kdeg):
    """Coefficients of the z^kdeg layer as a binary form in (x, y), indexed
    by the degree in x (the convention of :func:`forms.act_binary`)."""
    d = 5 - kdeg
    return np.array([F[MONO_INDEX[(i, d - i, kdeg)]] for i in range(d + 1)], dtype=np.int64)


def _proportional(k: FieldCtx, a, b):
    """Scalars lam with a = lam * b row-wise (0 where none exists)."""
    a = np.asarray(a)
    b = np.asarray(b)
    lead = np.argmax(b != 0, axis=-1)
    bl = np.take_along_axis(b, lead[..., None], -1)[..., 0]
    al = np.take_along_axis(a, lead[..., None], -1)[..., 0]
    lam = k.vmul(al, k.vinv(bl))
    ok = (lam != 0) & (k.vmul(lam[..., None], b) == a).all(axis=-1)
    return np.where(ok, lam, 0)


def stabilizer_witness(F1, F2, k: FieldCtx):
    """Search M = [[A, 0], [l, 1]] and lam with act(M, F1) = lam * F2.

    Any isomorphism of the quintics fixes their common singular point
    (0:0:1), so M may be taken with third column (0, 0, 1) after absorbing a
    scalar into lam.  Since (z + l)^3 = z^3 + l^3 in characteristic 3, the
    z^3 and z^2 layers of act(M, F1) are q1 o A and f2 o A; A is filtered on
    those before the shift l is searched.  Returns (M, lam) or None.
    """
    G1 = _embed_form(F1, k)
    G2 = _embed_form(F2, k)
    gl2 = gl2_elements(k)
    q1, q2 = _layer(G1, 3), _layer(G2, 3)
    f21, f22 = _layer(G1, 2), _layer(G2, 2)
    qA = act_binary(k, gl2, q1)
    lam = _proportional(k, qA, np.broadcast_to(q2, qA.shape))
    cand = np.flatnonzero(lam != 0)
    if len(cand) == 0:
        return None
    fA = act_binary(k, gl2[cand], f21)
    ok = (fA == k.vmul(lam[cand][:, None], f22[None, :])).all(axis=1)
    cand, lams = cand[ok], lam[cand][ok]
    shifts = np.array(list(itertools.product(range(k.q), repeat=2)), dtype=np.int64)
    for gi, lm in zip(cand, lams):
        A = gl2[gi]
        M = np.zeros((len(shifts), 3, 3), dtype=np.int64)
        M[:, :2, :2] = A
        M[:, 2, :2] = shifts
        M[:, 2, 2] = 1
        images = act_ternary(k, M, G1)
        hit = np.flatnonzero((images == k.vmul(int(lm), G2)).all(axis=1))
        if len(hit):
            return M[hit[0]], int(lm)
    return None


def trigonal_isomorphic(F1: QuinticModel, F2: QuinticModel, k: FieldCtx) -> bool:
    """Whether V(F1) and V(F2) are isomorphic over k: M . F1 = lam F2 for
    some M in GL3(k) fixing (0:0:1) and lam in k^x."""
    return stabilizer_witness(F1.coeffs, F2.coeffs, k) is not None


def gl3_elements(k: FieldCtx) -> np.ndarray:
    """All of GL3(k); intended for k = GF(3) (11232 matrices)."""
    from .forms import det3

    if k.q > 3:
        raise ValueError("full GL3 enumeration is only supported over GF(3)")
    mats = np.array(list(itertools.product(range(3), repeat=9)), dtype=np.int64).reshape(-1, 3, 3)
    dets = np.array([det3(k, m) for m in mats])
    return mats[dets != 0]


def isomorphic_full_search(F1, F2, k: FieldCtx) -> bool:
    """Isomorphism test over all of GL3(GF(3)), without the stabiliser shortcut."""
    G1 = _embed_form(F1, k)
    G2 = _embed_form(F2, k)
    images = act_ternary(k, gl3_elements(k), G1)
    for lam in range(1, k.q):
        if (images == k.vmul(lam, G2)).all(axis=1).any():
            return True
    return False
