"""Reference quintics and Weil polynomials, typed in as written and parsed
with sympy so the coefficient vectors are computed rather than hand-copied.

Four entries carry corrections to the printed text:

* F1 (F_9 list): the y^3 z^2 coefficient is 2.  As printed, V(F1) has a
  second singular point (1:2:2) over F_3, so it is not a genus-5 model; with
  the coefficient 2 it is one of the 22 maximal models the sweep finds.
* F6 (F_9 list): the printed ``2 x y^2 z^2`` inside the z^2 bracket is ``2 x y^2``.
* F12 (F_9 list): a ``+`` is missing before ``x^2 y^2 z``.
* F19 (F_9 list): ``(2 x^4 + 2 x^2 y^2)`` is missing its factor ``z``.
"""

import sympy
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication_application,
                                        parse_expr, standard_transformations)

from curve_census.forms import MONOMIALS

x, y, z, t, epsilon = sympy.symbols("x y z t epsilon")
_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
_LOCALS = {"x": x, "y": y, "z": z, "t": t, "epsilon": epsilon}

MAX_F9 = {
    "F1": ("split", "x y z^3 + (x^3 + x y^2 + 2 y^3) z^2 + x y^3 z + x^5 + x^3 y^2 + x^2 y^3 + y^5"),
    "F2": ("split", "x y z^3 + (x^3 + 2 x y^2 + y^3) z^2 + (2 x^2 y^2 + 2 x y^3) z + x^5 + 2 x^4 y"
                    " + x^2 y^3 + 2 x y^4 + y^5"),
    "F3": ("split", "x y z^3 + (x^3 + x y^2 + 2 y^3) z^2 + (x^2 y^2 + x y^3 + 2 y^4) z + x^5 + x^3 y^2"
                    " + 2 x^2 y^3 + 2 x y^4 + y^5"),
    "F4": ("split", "x y z^3 + (x^3 + x y^2 + y^3) z^2 + x y^3 z + x^5 + x^3 y^2 + 2 x^2 y^3 + 2 y^5"),
    "F5": ("split", "x y z^3 + (x^3 + x y^2 + y^3) z^2 + (2 x^2 y^2 + x y^3 + y^4) z + x^5 + x^3 y^2"
                    " + x^2 y^3 + 2 x y^4 + 2 y^5"),
    "F6": ("split", "x y z^3 + (x^3 + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3) z + x^5 + x^4 y"
                    " + 2 x^2 y^3 + 2 x y^4 + 2 y^5"),
    "F7": ("split", "x y z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^2 y^2 + 2 x y^3) z + x^5 + 2 x^4 y"
                    " + 2 x^2 y^3 + y^5"),
    "F8": ("split", "x y z^3 + (x^3 + x^2 y + 2 y^3) z^2 + (2 x^2 y^2 + 2 y^4) z + x^5 + x^4 y + x y^4 + y^5"),
    "F9": ("split", "x y z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^2 y^2 + 2 y^4) z + 2 x^5 + x^3 y^2"
                    " + 2 x^2 y^3 + x y^4 + 2 y^5"),
    "F10": ("split", "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x^2 y^2 z + x^5 + x^4 y"
                     " + 2 x y^4 + 2 y^5"),
    "F11": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (x (x^2 - epsilon y^2) + x^3 + y^3) z^2 + x^2 y^2 z"
                        " + 2 x^5 + 2 x^4 y + x^3 y^2 + y^5"),
    "F12": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (2 x (x^2 - epsilon y^2) + 2 x^3 + y^3) z^2"
                        " + x^2 y^2 z + x^5 + 2 x^4 y + 2 x^3 y^2 + y^5"),
    "F13": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (2 x (x^2 - epsilon y^2) + x^3 + y^3) z^2"
                        " + (x^4 + x^3 y) z + x^5 + 2 x^2 y^3 + y^5"),
    "F14": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (x (x^2 - epsilon y^2) + 2 x^3 + y^3) z^2"
                        " + (x^4 + 2 x^3 y) z + 2 x^5 + 2 x^2 y^3 + y^5"),
    "F15": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (x (x^2 - epsilon y^2) + y^3) z^2"
                        " + (2 x^3 y + 2 x^2 y^2) z + x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3 + y^5"),
    "F16": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (2 x (x^2 - epsilon y^2) + y^3) z^2"
                        " + (x^3 y + 2 x^2 y^2) z + 2 x^5 + x^4 y + 2 x^3 y^2 + 2 x^2 y^3 + y^5"),
    "F17": ("nonsplit", "(x^2 - epsilon y^2) z^3 + (x (x^2 - epsilon y^2) + 2 x^3) z^2 + (x^4 + y^4) z + x^5"),
    "F18": ("cusp", "x^2 z^3 + (x^2 y + y^3) z^2 + (x^4 + 2 x^2 y^2) z + x^4 y + y^5"),
    "F19": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (2 x^4 + 2 x^2 y^2) z + 2 x^4 y + 2 y^5"),
    "F20": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (x^4 + x^3 y + 2 x^2 y^2) z + x^5 + 2 x^3 y^2"
                    " + 2 x^2 y^3 + x y^4 + 2 y^5"),
    "F21": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (x^4 + 2 x^3 y + 2 x^2 y^2) z + 2 x^5 + x^3 y^2"
                    " + 2 x^2 y^3 + 2 x y^4 + 2 y^5"),
    "F22": ("cusp", "x^2 z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^3 y + 2 x^2 y^2) z + x^5 + 2 x^3 y^2"
                    " + x^2 y^3 + x y^4 + y^5"),
}

# V(F1) exactly as printed, kept for the test showing it is rejected
F1_AS_PRINTED = "x y z^3 + (x^3 + x y^2 + y^3) z^2 + x y^3 z + x^5 + x^3 y^2 + x^2 y^3 + y^5"

CLASSES_F9 = [
    ["F1", "F4", "F9"], ["F2", "F6", "F8"], ["F3", "F5", "F7"], ["F10", "F17"],
    ["F11", "F12"], ["F13", "F14"], ["F15", "F16"], ["F18", "F19", "F20", "F21", "F22"],
]

_SPLIT_HEAD = "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + "
MAX_F3 = {
    "F1": ("split", _SPLIT_HEAD + "(2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^3 y^2"),
    "F2": ("split", _SPLIT_HEAD + "(x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + x^3 y^2 + x^2 y^3"),
    "F3": ("split", _SPLIT_HEAD + "(2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3"),
    "F4": ("split", _SPLIT_HEAD + "(x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3"),
    "F5": ("split", _SPLIT_HEAD + "(x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + x y^4"),
    "F6": ("split", _SPLIT_HEAD + "(2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + 2 x^4 y + x^2 y^3 + x y^4"),
    "F7": ("split", _SPLIT_HEAD + "(x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + x^2 y^3 + x y^4"),
    "F8": ("split", _SPLIT_HEAD + "(2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^4 y + 2 x^2 y^3 + x y^4"),
    "F9": ("split", _SPLIT_HEAD + "(2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + 2 x^3 y^2 + 2 x y^4"),
    "F10": ("split", _SPLIT_HEAD + "(x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + 2 x^3 y^2"
                                   " + x^2 y^3 + 2 x y^4"),
    "F11": ("split", _SPLIT_HEAD + "2 x y^3 z + 2 x^5 + x^3 y^2 + 2 x^2 y^3 + y^5"),
    "F12": ("split", _SPLIT_HEAD + "2 x y^3 z + 2 x^5 + 2 x^4 y + x y^4 + y^5"),
    "F13": ("split", _SPLIT_HEAD + "2 x y^3 z + 2 x^5 + x^4 y + x^2 y^3 + x y^4 + y^5"),
    "F14": ("split", _SPLIT_HEAD + "2 x y^3 z + 2 x^5 + 2 x^2 y^3 + x y^4 + y^5"),
    "F15": ("split", _SPLIT_HEAD + "2 x y^3 z + 2 x^5 + x^4 y + 2 x^3 y^2 + x^2 y^3 + 2 x y^4 + y^5"),
    "F16": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^2 y^3 + y^5"),
    "F17": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^4 y + 2 x^3 y^2 + x y^4 + y^5"),
    "F18": ("cusp", "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^4 y + x^3 y^2 + 2 x y^4 + y^5"),
}

CLASSES_F3 = [
    ["F1", "F8"], ["F2", "F13"], ["F3"], ["F4", "F15"], ["F5", "F11"],
    ["F6", "F9"], ["F7", "F14"], ["F10", "F12"], ["F16", "F17", "F18"],
]

WEIL_F9 = {
    1: "(t + 3)^4 (t^6 + 8 t^5 + 44 t^4 + 149 t^3 + 396 t^2 + 648 t + 729)",
    2: "(t^2 + 5 t + 9)(t^8 + 15 t^7 + 112 t^6 + 549 t^5 + 1927 t^4 + 4941 t^3 + 9072 t^2"
       " + 10935 t + 6561)",
    3: "t^10 + 20 t^9 + 196 t^8 + 1247 t^7 + 5714 t^6 + 19667 t^5 + 51426 t^4 + 101007 t^3"
       " + 142884 t^2 + 131220 t + 59049",
    4: "(t^2 + 2 t + 9) (t^4 + 9 t^3 + 37 t^2 + 81 t + 81)^2",
    5: "t^10 + 20 t^9 + 200 t^8 + 1299 t^7 + 6030 t^6 + 20843 t^5 + 54270 t^4 + 105219 t^3"
       " + 145800 t^2 + 131220 t + 59049",
    6: "(t + 3)^2 (t^2 + 5 t + 9) (t^6 + 9 t^5 + 49 t^4 + 177 t^3 + 441 t^2 + 729 t + 729)",
    7: "t^10 + 20 t^9 + 194 t^8 + 1210 t^7 + 5433 t^6 + 18539 t^5 + 48897 t^4 + 98010 t^3"
       " + 141426 t^2 + 131220 t + 59049",
    8: "(t^2 + 2 t + 9)(t^4 + 9 t^3 + 37 t^2 + 81 t + 81)^2",
}

# hyperelliptic examples: right-hand sides f of y^2 = f(x)
HYPER_F9_EXAMPLES = [
    ("x^12 + x^11 + 2 x^7 + x^5 + 2 x + 1", "(t + 3)^2 (t^2 + 9)^2 (t^2 + 2 t + 9)^2"),
    ("x^12 + x^11 + 2 x^4 + 2 x^3 + 2",
     "t^10 + 10 t^9 + 51 t^8 + 212 t^7 + 837 t^6 + 2810 t^5 + 7533 t^4 + 17172 t^3"
     " + 37179 t^2 + 65610 t + 59049"),
]
HYPER_F3_EXAMPLES = ["x^12 + x^11 + 2 x^2 + 2 x + 1", "x^12 + x^11 + x^3 + 2 x^2 + x + 1"]


def parse(text):
    return parse_expr(text, local_dict=_LOCALS, transformations=_TRANSFORMS)


def quintic_coeffs(text):
    """21 coefficients over F_3 in the package's monomial order."""
    poly = sympy.Poly(sympy.expand(parse(text).subs(epsilon, 2)), x, y, z)
    if poly.total_degree() != 5 or not poly.is_homogeneous:
        raise ValueError(f"not a quintic form: {text}")
    return [int(poly.coeff_monomial(x**i * y**j * z**k)) % 3 for i, j, k in MONOMIALS]


def univariate_coeffs(text, var=x):
    """Integer coefficients, lowest degree first."""
    return [int(c) for c in reversed(sympy.Poly(parse(text), var).all_coeffs())]


def weil_coeffs(text):
    """[1, a1, ..., a10] for a degree-10 polynomial in t."""
    return [int(c) for c in sympy.Poly(sympy.expand(parse(text)), t).all_coeffs()]
