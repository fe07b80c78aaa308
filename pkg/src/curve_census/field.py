"""Arithmetic in GF(3^e), 1 <= e <= 12.

Elements are plain ints.  The base-3 digits of an element (least significant
first) are its coordinates in the polynomial basis 1, t, ..., t^(e-1), so the
prime-field constants 0, 1, 2 have the same encoding in every extension.

Multiplication goes through discrete log / antilog tables built once per
field.  Addition is digit-wise mod 3 and is resolved with a shared lookup
table on 5-digit chunks, which needs no knowledge of the modulus.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

P = 3
MAX_DEGREE = 12

_CHUNK = 243  # 3**5

_chunk_digits = np.array(
    [[(v // 3**i) % 3 for i in range(5)] for v in range(_CHUNK)], dtype=np.int64
)
_pow3 = 3 ** np.arange(5, dtype=np.int64)
ADD_CHUNK = (
    ((_chunk_digits[:, None, :] + _chunk_digits[None, :, :]) % 3) @ _pow3
).astype(np.int32)
NEG_CHUNK = (((3 - _chunk_digits) % 3) @ _pow3).astype(np.int32)


class FieldError(ArithmeticError):
    pass


# -- small polynomial helpers over F_3 (lists, lowest degree first) ----------

def _trim3(f):
    f = list(f)
    while f and f[-1] % 3 == 0:
        f.pop()
    return [c % 3 for c in f]


def _polymod3(f, g):
    f = _trim3(f)
    g = _trim3(g)
    inv = g[-1]  # 1 and 2 are self-inverse mod 3
    while len(f) >= len(g):
        c = (f[-1] * inv) % 3
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % 3
        f = _trim3(f)
    return f


def _is_irreducible3(f):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(3), repeat=d):
            if not _polymod3(f, list(low) + [1]):
                return False
    return True


def _mulmat(g_digits, modulus):
    """Matrix over F_3 of multiplication by g in the polynomial basis."""
    e = len(modulus) - 1
    cols = []
    for j in range(e):
        prod = [0] * j + list(g_digits)
        cols.append((_polymod3(prod, modulus) + [0] * e)[:e])
    return np.array(cols, dtype=np.int64).T


def _matpow3(m, n):
    e = m.shape[0]
    result = np.eye(e, dtype=np.int64)
    while n:
        if n & 1:
            result = (result @ m) % 3
        m = (m @ m) % 3
        n >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(v, e):
    return [(v // 3**i) % 3 for i in range(e)]


class FieldCtx:
    """The field GF(3^e) with its tables.

    ``modulus`` is the smallest monic irreducible polynomial of degree e when
    its lower coefficients (c_0, ..., c_{e-1}) are read as the base-3 number
    sum c_i 3^i.  ``zeta`` is the smallest element (as an int) of
    multiplicative order q - 1.
    """

    def __init__(self, e: int):
        if not isinstance(e, (int, np.integer)) or not 1 <= e <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {e!r}")
        e = int(e)
        self.e = e
        self.q = P**e
        self.modulus = self._find_modulus(e)
        self.zeta = self._find_primitive()
        self._build_tables()

    # construction ---------------------------------------------------------
    @staticmethod
    def _find_modulus(e):
        for low in range(P**e):
            f = _digits(low, e) + [1]
            if e == 1 or _is_irreducible3(f):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")

    def _find_primitive(self):
        q, e = self.q, self.e
        one = np.zeros(e, dtype=np.int64)
        one[0] = 1
        factors = _prime_factors(q - 1)
        for g in range(1, q):
            m = _mulmat(_digits(g, e), self.modulus)
            if all(not np.array_equal(_matpow3(m, (q - 1) // r) @ one % 3, one)
                   for r in factors):
                return g
        raise AssertionError("no primitive element found")

    def _build_tables(self):
        q, e = self.q, self.e
        n = q - 1
        zmat = _mulmat(_digits(self.zeta, e), self.modulus)
        block = min(n, 729)
        digits = np.zeros((n, e), dtype=np.int64)
        v = np.zeros(e, dtype=np.int64)
        v[0] = 1
        for k in range(block):
            digits[k] = v
            v = (zmat @ v) % 3
        step = _matpow3(zmat, block)
        for start in range(block, n, block):
            stop = min(start + block, n)
            prev = digits[start - block:stop - block]
            digits[start:stop] = (prev @ step.T) % 3
        weights = 3 ** np.arange(e, dtype=np.int64)
        exp = digits @ weights
        self.exp = np.concatenate([exp, exp]).astype(np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("zeta is not primitive")
        self.log = log
        # quadratic character: squares are the even powers of zeta
        chi = np.where(log % 2 == 0, 1, -1).astype(np.int8)
        chi[0] = 0
        self.chi = chi
        self.inv3 = pow(3, -1, n) if n > 1 else 0

    # ordering ------------------------------------------------------------
    def rank(self, a: int) -> int:
        """Position of ``a`` in the order 0, zeta^0, zeta^1, ..."""
        return 0 if a == 0 else int(self.log[a]) + 1

    @functools.cached_property
    def rank_table(self) -> np.ndarray:
        r = self.log + 1
        r[0] = 0
        return r

    def elements(self) -> range:
        return range(self.q)

    def embed(self, c: int) -> int:
        """Image of the F_3 constant ``c``."""
        return int(c) % 3

    # scalar arithmetic ---------------------------------------------------
    def _check(self, a):
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        if self.q <= _CHUNK:
            return int(ADD_CHUNK[a, b])
        out, scale = 0, 1
        while a or b:
            out += int(ADD_CHUNK[a % _CHUNK, b % _CHUNK]) * scale
            a //= _CHUNK
            b //= _CHUNK
            scale *= _CHUNK
        return out

    def neg(self, a: int) -> int:
        if self.q <= _CHUNK:
            return int(NEG_CHUNK[a])
        out, scale = 0, 1
        while a:
            out += int(NEG_CHUNK[a % _CHUNK]) * scale
            a //= _CHUNK
            scale *= _CHUNK
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return int(self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """Square-and-multiply exponentiation (negative n allowed for a != 0)."""
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the F_3 constant ``c``."""
        c %= 3
        return 0 if c == 0 else (a if c == 1 else self.neg(a))

    def is_square(self, a: int) -> bool:
        return self.pow(a, (self.q - 1) // 2) in (0, 1)

    def sqrt(self, a: int) -> int:
        if a == 0:
            return 0
        k = int(self.log[a])
        if k % 2:
            raise FieldError(f"{a} is not a square in GF({self.q})")
        return int(self.exp[k // 2])

    def cbrt(self, a: int) -> int:
        """The unique cube root (cubing is a bijection in characteristic 3)."""
        if a == 0:
            return 0
        return int(self.exp[(int(self.log[a]) * self.inv3) % (self.q - 1)])

    def frobenius(self, a: int) -> int:
        return self.mul(self.mul(a, a), a)

    def trace(self, a: int) -> int:
        """Absolute trace to F_3, returned as 0, 1 or 2."""
        return int(self.trace_table[a])

    # vectorised arithmetic -----------------------------------------------
    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.q <= _CHUNK:
            return ADD_CHUNK[a, b].astype(np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(-(-self.e // 5)):
            out += ADD_CHUNK[a % _CHUNK, b % _CHUNK] * scale
            a = a // _CHUNK
            b = b // _CHUNK
            scale *= _CHUNK
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.q <= _CHUNK:
            return NEG_CHUNK[a].astype(np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        scale = 1
        for _ in range(-(-self.e // 5)):
            out += NEG_CHUNK[a % _CHUNK] * scale
            a = a // _CHUNK
            scale *= _CHUNK
        return out

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.q <= 729:
            return self.mul_table[a, b]
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        n = self.q - 1
        return np.where(a == 0, 0, self.exp[(n - self.log[a]) % n])

    def vscale(self, c, a):
        c = np.asarray(c, dtype=np.int64) % 3
        a = np.asarray(a, dtype=np.int64)
        return np.where(c == 0, 0, np.where(c == 1, a, self.vneg(a)))

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > 729:
            raise FieldError("multiplication table only for q <= 729")
        a = np.arange(self.q)
        t = self.exp[self.log[a][:, None] + self.log[a][None, :]]
        t[0, :] = 0
        t[:, 0] = 0
        return t

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        a = np.arange(self.q, dtype=np.int64)
        acc = a.copy()
        cur = a
        n = self.q - 1
        for _ in range(self.e - 1):
            cur = np.where(cur == 0, 0, self.exp[(self.log[cur] * 3) % n])
            acc = self.vadd(acc, cur)
        if ((acc < 0) | (acc > 2)).any():
            raise AssertionError("trace left the prime field")
        return acc.astype(np.int8)

    def power_table(self, n: int) -> np.ndarray:
        """Array ``T[i, x] = x**i`` for 0 <= i <= n."""
        x = np.arange(self.q, dtype=np.int64)
        rows = [np.ones(self.q, dtype=np.int64)]
        for _ in range(n):
            rows.append(self.vmul(rows[-1], x))
        return np.stack(rows)

    # roots ---------------------------------------------------------------
    def count_poly_roots(self, coeffs) -> int:
        """Distinct roots in the field of sum coeffs[i] X^i.

        The zero polynomial has q roots and a nonzero constant has none.
        Otherwise this is deg gcd(X^q - X, f), with X^q mod f obtained by
        e-fold cubing.
        """
        f = poly_trim(self, coeffs)
        if not f:
            return self.q
        if len(f) == 1:
            return 0
        r = poly_mod(self, [0, 1], f)
        for _ in range(self.e):
            r = poly_mod(self, poly_mul(self, poly_mul(self, r, r), r), f)
        h = poly_sub(self, r, [0, 1])
        return len(poly_gcd(self, f, h)) - 1

    def __repr__(self):
        return f"FieldCtx(e={self.e}, q={self.q}, modulus={self.modulus}, zeta={self.zeta})"

    # contexts are singletons per e
    def __reduce__(self):
        return (build_field, (self.e,))


@functools.lru_cache(maxsize=None)
def build_field(e: int) -> FieldCtx:
    return FieldCtx(e)


# -- univariate polynomials over a FieldCtx (lists, lowest degree first) -----

def poly_trim(ctx: FieldCtx, f) -> list:
    f = [int(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(ctx, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return poly_trim(ctx, [ctx.add(a, b) for a, b in zip(f, g)])


def poly_sub(ctx, f, g):
    return poly_add(ctx, f, [ctx.neg(c) for c in g])


def poly_mul(ctx, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_trim(ctx, out)


def poly_divmod(ctx, f, g):
    f = poly_trim(ctx, f)
    g = poly_trim(ctx, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = ctx.inv(g[-1])
    quot = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g):
        c = ctx.mul(f[-1], inv)
        shift = len(f) - len(g)
        quot[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = ctx.sub(f[shift + i], ctx.mul(c, gc))
        f = poly_trim(ctx, f)
    return poly_trim(ctx, quot), f


def poly_mod(ctx, f, g):
    return poly_divmod(ctx, f, g)[1]


def poly_monic(ctx, f):
    f = poly_trim(ctx, f)
    if not f:
        return f
    inv = ctx.inv(f[-1])
    return [ctx.mul(c, inv) for c in f]


def poly_gcd(ctx, f, g):
    f = poly_trim(ctx, f)
    g = poly_trim(ctx, g)
    while g:
        f, g = g, poly_mod(ctx, f, g)
    return poly_monic(ctx, f)


def poly_eval(ctx, f, x):
    v = 0
    for c in reversed(f):
        v = ctx.add(ctx.mul(v, x), c)
    return v


def poly_deriv(ctx, f):
    return poly_trim(ctx, [ctx.scale(i, c) for i, c in enumerate(f)][1:])


# -- element wrapper -----------------------------------------------------------

class FieldElem:
    """An element bound to its field, with operator overloading."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        ctx._check(value)
        self.ctx = ctx
        self.value = int(value)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise FieldError("operands live in different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ctx.embed(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.div(self.value, b))

    def __pow__(self, n):
        return FieldElem(self.ctx, self.ctx.pow(self.value, int(n)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.ctx.embed(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.q, self.value))

    def __repr__(self):
        return f"GF({self.ctx.q})({self.value})"

    def is_square(self) -> bool:
        return self.ctx.is_square(self.value)


def arith(ctx: FieldCtx, a, b, op: str):
    """Functional form of the field operations: add, sub, mul, div or pow."""
    a = a if isinstance(a, FieldElem) else FieldElem(ctx, a)
    if a.ctx is not ctx:
        raise FieldError("operand does not belong to this field")
    if op == "pow":
        return a ** int(b)
    b = b if isinstance(b, FieldElem) else FieldElem(ctx, b)
    if b.ctx is not ctx:
        raise FieldError("operand does not belong to this field")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
