import itertools
import pickle

import numpy as np
import pytest

from curve_census.field import (FieldCtx, FieldElem, FieldError, arith, build_field, poly_gcd,
                                poly_mul)


def schoolbook_mul(a, b, e, modulus):
    """Independent oracle: multiply digit polynomials and reduce by the modulus."""
    da = [(a // 3**i) % 3 for i in range(e)]
    db = [(b // 3**i) % 3 for i in range(e)]
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % 3
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for i, m in enumerate(modulus):
                prod[d - e + i] = (prod[d - e + i] - c * m) % 3
    return sum(prod[i] * 3**i for i in range(e))


def digit_add(a, b, e):
    return sum((((a // 3**i) + (b // 3**i)) % 3) * 3**i for i in range(e))


def has_factor(f):
    """Brute-force search for a monic factor of degree 1..deg/2 over F_3."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(3), repeat=d):
            g = list(low) + [1]
            r = list(f)
            for s in range(len(r) - len(g), -1, -1):
                c = r[s + d]
                for i, gi in enumerate(g):
                    r[s + i] = (r[s + i] - c * gi) % 3
            if not any(r[:d]):
                return True
    return False


def test_small_fields():
    assert build_field(1).q == 3
    assert build_field(2).q == 9
    assert build_field(10).q == 59049


@pytest.mark.parametrize("e", [0, 13, -1, 2.0])
def test_bad_degree(e):
    with pytest.raises(FieldError):
        FieldCtx(e)


@pytest.mark.parametrize("e", range(1, 13))
def test_modulus_irreducible_and_zeta_primitive(e):
    k = build_field(e)
    assert len(k.modulus) == e + 1 and k.modulus[-1] == 1
    if e > 1:
        assert not has_factor(list(k.modulus))
    powers = k.exp[: k.q - 1]
    assert len(set(powers.tolist())) == k.q - 1
    assert k.exp[1] == k.zeta


@pytest.mark.parametrize("e", [1, 2, 3, 5])
def test_construction_deterministic(e):
    a, b = FieldCtx(e), FieldCtx(e)
    assert a.modulus == b.modulus and a.zeta == b.zeta
    assert np.array_equal(a.exp, b.exp)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_multiplication_matches_schoolbook(e):
    k = build_field(e)
    table = k.mul_table
    for a in range(k.q):
        for b in range(k.q):
            assert table[a, b] == schoolbook_mul(a, b, e, k.modulus)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_addition_is_digitwise(e):
    k = build_field(e)
    a, b = np.meshgrid(np.arange(k.q), np.arange(k.q))
    expect = np.vectorize(lambda u, v: digit_add(u, v, e))(a, b)
    assert np.array_equal(k.vadd(a, b), expect)
    assert np.array_equal(k.vadd(a, k.vneg(a)), np.zeros_like(a))


def test_large_field_add_matches_scalar():
    k = build_field(11)
    rng = np.random.default_rng(3)
    a, b = rng.integers(0, k.q, 500), rng.integers(0, k.q, 500)
    assert [k.add(int(x), int(y)) for x, y in zip(a, b)] == [digit_add(int(x), int(y), 11)
                                                             for x, y in zip(a, b)]
    assert np.array_equal(k.vadd(a, b), [k.add(int(x), int(y)) for x, y in zip(a, b)])


def test_examples():
    k3, k9 = build_field(1), build_field(2)
    assert k3.mul(2, 2) == 1
    assert all(k9.pow(x, 8) == 1 for x in range(1, 9))
    assert not k3.is_square(2)
    assert k9.is_square(2)
    assert k9.pow(k9.zeta, 4) == 2


@pytest.mark.parametrize("e", range(1, 9))
def test_is_square_matches_enumeration(e):
    k = build_field(e)
    squares = set(k.vmul(np.arange(k.q), np.arange(k.q)).tolist())
    assert {a for a in range(k.q) if k.is_square(a)} == squares
    assert k.is_square(0)


@pytest.mark.parametrize("e", range(1, 13))
def test_minus_one_square_iff_even(e):
    assert build_field(e).is_square(2) == (e % 2 == 0)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_frobenius_additive(e):
    k = build_field(e)
    for a in range(k.q):
        for b in range(k.q):
            assert k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b))


def test_character_multiplicative():
    k = build_field(5)
    rng = np.random.default_rng(0)
    for a, b in rng.integers(1, k.q, (500, 2)):
        assert k.chi[k.mul(int(a), int(b))] == k.chi[a] * k.chi[b]


def test_sqrt_and_cbrt():
    for e in (1, 2, 3, 6):
        k = build_field(e)
        for a in range(k.q):
            if k.is_square(a):
                r = k.sqrt(a)
                assert k.mul(r, r) == a
            c = k.cbrt(a)
            assert k.pow(c, 3) == a


def test_count_poly_roots_examples():
    k = build_field(1)
    assert k.count_poly_roots([0, 2, 0, 1]) == 3  # z^3 - z
    assert k.count_poly_roots([1, 0, 1]) == 0  # z^2 + 1
    assert k.count_poly_roots([0, 0]) == 3
    assert k.count_poly_roots([2]) == 0


@pytest.mark.parametrize("e", [1, 2, 3])
def test_count_poly_roots_random(e):
    k = build_field(e)
    rng = np.random.default_rng(e)
    for _ in range(300):
        f = rng.integers(0, k.q, rng.integers(1, 7)).tolist()
        brute = sum(1 for x in range(k.q) if _eval(k, f, x) == 0)
        if not any(f):
            brute = k.q
        assert k.count_poly_roots(f) == brute


def _eval(k, f, x):
    v = 0
    for c in reversed(f):
        v = k.add(k.mul(v, x), c)
    return v


def test_count_poly_roots_of_products():
    k = build_field(2)
    rng = np.random.default_rng(5)
    for _ in range(100):
        roots_f = rng.integers(0, k.q, 2)
        roots_g = rng.integers(0, k.q, 2)
        f = [1]
        for r in roots_f:
            f = poly_mul(k, f, [k.neg(int(r)), 1])
        g = [1]
        for r in roots_g:
            g = poly_mul(k, g, [k.neg(int(r)), 1])
        n = k.count_poly_roots(poly_mul(k, f, g))
        assert n == len(set(roots_f.tolist()) | set(roots_g.tolist()))
        assert n >= max(k.count_poly_roots(f), k.count_poly_roots(g))


def test_poly_gcd():
    k = build_field(1)
    assert poly_gcd(k, [0, 0, 1], [0, 1]) == [0, 1]
    assert poly_gcd(k, [], []) == []


def test_field_elem_operators():
    k = build_field(2)
    a, b = FieldElem(k, 5), FieldElem(k, 7)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a ** 8 == 1
    assert -a + a == 0
    assert 2 * a == a + a
    assert arith(k, 5, 7, "mul") == a * b
    assert arith(k, 5, 3, "pow") == a ** 3
    with pytest.raises(ZeroDivisionError):
        arith(k, 5, 0, "div")
    with pytest.raises(FieldError):
        FieldElem(k, 1) + FieldElem(build_field(1), 1)
    with pytest.raises(FieldError):
        FieldElem(k, 9)


def test_context_pickles_to_same_object():
    k = build_field(4)
    assert pickle.loads(pickle.dumps(k)) is k
