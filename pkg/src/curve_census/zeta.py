"""Weil polynomials of genus-g curves from point counts, and back.

For a curve C over F_q with Frobenius eigenvalues alpha_1..alpha_2g, the
power sums are p_e = sum alpha_i^e = 1 + q^e - #C(F_{q^e}).  The coefficients
of W(t) = prod (t - alpha_i) = t^2g + a_1 t^(2g-1) + ... + a_2g follow from
Newton's identities, and a_{2g-i} = q^(g-i) a_i fills in the upper half.

Everything here is exact Python integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GENUS = 5


@dataclass(frozen=True)
class WeilPoly:
    q: int
    coeffs: tuple  # (1, a_1, ..., a_2g)

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        if len(c) % 2 == 0 or c[0] != 1:
            raise ValueError("expected a monic polynomial of even degree")
        object.__setattr__(self, "coeffs", c)

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def satisfies_functional_equation(self) -> bool:
        g, a = self.genus, self.coeffs
        return all(a[2 * g - i] == self.q ** (g - i) * a[i] for i in range(g + 1))

    def max_root_deviation(self) -> float:
        """Largest | |alpha| - sqrt(q) | over the complex roots (diagnostic)."""
        roots = np.roots(np.array(self.coeffs, dtype=float))
        return float(np.max(np.abs(np.abs(roots) - math.sqrt(self.q))))

    def to_list(self) -> list:
        return list(self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs)


def newton_coefficients(power_sums) -> list:
    """a_1..a_n from p_1..p_n: p_k + a_1 p_{k-1} + ... + a_{k-1} p_1 + k a_k = 0."""
    p = [int(v) for v in power_sums]
    a = []
    for k in range(1, len(p) + 1):
        s = p[k - 1] + sum(a[i - 1] * p[k - 1 - i] for i in range(1, k))
        if s % k:
            raise ValueError(f"power sums are not those of an integer polynomial (k={k})")
        a.append(-s // k)
    return a


def weil_from_counts(q: int, counts, genus: int = GENUS) -> WeilPoly:
    """W(t) from N_1..N_g, N_e = #C(F_{q^e})."""
    if len(counts) < genus:
        raise ValueError(f"need {genus} counts, got {len(counts)}")
    p = [1 + q**e - int(n) for e, n in enumerate(counts[:genus], start=1)]
    a = [1] + newton_coefficients(p)
    full = a + [q ** (genus - i) * a[i] for i in range(genus - 1, -1, -1)]
    return WeilPoly(q, tuple(full))


def power_sums(W: WeilPoly, n: int) -> list:
    """p_1..p_n of the roots of W."""
    a = W.coeffs
    d = len(a) - 1
    p = []
    for k in range(1, n + 1):
        s = sum(a[i] * p[k - 1 - i] for i in range(1, min(k, d + 1)))
        if k <= d:
            s += k * a[k]
        p.append(-s)
    return p


def predict_counts(W: WeilPoly, e_max: int) -> list:
    """N_1..N_{e_max} implied by W."""
    return [1 + W.q**e - p for e, p in enumerate(power_sums(W, e_max), start=1)]


def count_isogeny_classes(polys) -> int:
    """Number of distinct Weil polynomials (Jacobian isogeny classes)."""
    polys = list(polys)
    if len({w.q for w in polys}) > 1:
        raise ValueError("Weil polynomials over different base fields")
    return len({w.coeffs for w in polys})


def hasse_weil_check(n: int, q: int, g: int = GENUS) -> bool:
    """N <= q + 1 + 2 g sqrt(q), compared exactly."""
    d = int(n) - q - 1
    return d <= 0 or d * d <= 4 * g * g * q


# -- display -------------------------------------------------------------------------

def format_poly(coeffs, var: str = "t") -> str:
    d = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = d - i
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        mag = abs(c)
        body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag} {mono}")
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _polydiv(num, den):
    """Exact division of integer polynomials (highest degree first) or None."""
    num = list(num)
    out = []
    while len(num) >= len(den):
        c, r = divmod(num[0], den[0])
        if r:
            return None
        out.append(c)
        for i, dv in enumerate(den):
            num[i] -= c * dv
        num.pop(0)
    return out if not any(num) else None


def _candidate_factors(q):
    """Monic t + c, t^2 + b t + c with c = q, and t^2 + b t + q: the shapes
    Weil polynomials of small abelian varieties factor into."""
    r = math.isqrt(q)
    lin = [[1, c] for c in (r, -r)] if r * r == q else []
    quad = [[1, b, q] for b in range(-2 * r - 1, 2 * r + 2)]
    return lin + quad


def factor_display(W: WeilPoly) -> str:
    """Readable partial factorisation by trial division (cosmetic only)."""
    rest = list(W.coeffs)
    parts = []
    for f in _candidate_factors(W.q):
        m = 0
        while len(rest) > len(f) - 1:
            quo = _polydiv(rest, f)
            if quo is None:
                break
            rest, m = quo, m + 1
        if m:
            parts.append((f, m))
    out = []
    for f, m in parts:
        s = f"({format_poly(f)})"
        out.append(s if m == 1 else f"{s}^{m}")
    if len(rest) > 1:
        out.append(f"({format_poly(rest)})")
    return " ".join(out) if out else "1"
