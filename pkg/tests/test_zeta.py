import pytest

from curve_census import zeta
from curve_census.zeta import WeilPoly, predict_counts, weil_from_counts
from reference_data import HYPER_F9_EXAMPLES, WEIL_F9, weil_coeffs


@pytest.mark.parametrize("n", sorted(WEIL_F9))
def test_round_trip(n):
    W = WeilPoly(9, weil_coeffs(WEIL_F9[n]))
    assert W.satisfies_functional_equation()
    counts = predict_counts(W, 5)
    assert counts[0] == 30
    assert weil_from_counts(9, counts) == W
    longer = predict_counts(W, 10)
    assert longer[:5] == counts
    assert weil_from_counts(9, longer[:5]) == W


def test_trivial_polynomial():
    # no Frobenius trace in degrees < 10: all p_e vanish for e = 1..5
    counts = [1 + 9**e for e in range(1, 6)]
    W = weil_from_counts(9, counts)
    assert W.to_list() == [1] + [0] * 9 + [9**5]


def test_hyperelliptic_example():
    W = WeilPoly(9, weil_coeffs(HYPER_F9_EXAMPLES[0][1]))
    assert predict_counts(W, 1) == [20]
    assert zeta.factor_display(W) == "(t + 3)^2 (t^2 + 9)^2 (t^2 + 2 t + 9)^2"


def test_functional_equation_detects_errors():
    c = weil_coeffs(WEIL_F9[3])
    c[9] += 1
    assert not WeilPoly(9, c).satisfies_functional_equation()


def test_bad_input():
    with pytest.raises(ValueError):
        weil_from_counts(9, [30, 90])
    with pytest.raises(ValueError):
        WeilPoly(9, [2, 0, 9])
    with pytest.raises(ValueError):
        zeta.newton_coefficients([1, 0])  # a_2 = 1/2


def test_roots_on_circle():
    # repeated roots make numerical root-finding lose about a quarter of the digits
    for text in WEIL_F9.values():
        assert WeilPoly(9, weil_coeffs(text)).max_root_deviation() < 1e-2


def test_hasse_weil():
    assert zeta.hasse_weil_check(40, 9)
    assert not zeta.hasse_weil_check(41, 9)
    assert zeta.hasse_weil_check(0, 9)
    assert zeta.hasse_weil_check(21, 3)
    assert not zeta.hasse_weil_check(22, 3)


def test_isogeny_class_count():
    W = WeilPoly(9, weil_coeffs(WEIL_F9[4]))
    assert zeta.count_isogeny_classes([W]) == 1
    assert zeta.count_isogeny_classes([W, WeilPoly(9, weil_coeffs(WEIL_F9[8]))]) == 1
    assert zeta.count_isogeny_classes(WeilPoly(9, weil_coeffs(t)) for t in WEIL_F9.values()) == 7
    with pytest.raises(ValueError):
        zeta.count_isogeny_classes([W, weil_from_counts(3, [4, 10, 28, 82, 244])])


def test_format_poly():
    assert zeta.format_poly([1, -2, 0, 9]) == "t^3 - 2 t^2 + 9"
    assert zeta.format_poly([0]) == "0"
    assert zeta.format_poly([-1, 1]) == "-t + 1"
