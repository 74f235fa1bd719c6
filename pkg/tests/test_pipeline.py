import pytest

from qcisyz.fields import QQ, PrimeField
from qcisyz.parsing import parse_polynomial
from qcisyz.pipeline import (
    InputError,
    QciInput,
    analyze,
    c2_from_exponents,
    chern_and_formulas,
    jacobian_ideal,
    verify_hilbert_consistency,
)
from qcisyz.resolution import BettiTable

F = PrimeField(32003)


def curve(text, field=F):
    return QciInput.curve(parse_polynomial(text, field), text)


def triple(texts, field=F):
    return QciInput.triple(*(parse_polynomial(t, field) for t in texts), texts=texts)


def test_nodal_cubic_full_record():
    a = analyze(curve("z*y^2 - x^3 - z*x^2"), deep_checks=True)
    assert (a.d, a.tau, a.m) == (3, 1, 4)
    assert a.exponents == (2, 2, 2, 2)
    assert a.second_syzygy_degrees == (3, 3)
    assert (a.c1, a.c2, a.deg_Z) == (-2, 3, 3)
    assert a.sigma_betti == BettiTable({(0, 1): 2, (1, 2): 1})
    assert a.z.z_betti == BettiTable({(0, 2): 3, (1, 3): 2})
    assert a.h1.h1_betti == BettiTable(
        {(0, 1): 2, (1, 2): 4, (2, 4): 4, (3, 5): 2}
    )
    assert a.h1.generator_count == 2
    assert a.classification == "General(4)"
    assert a.sigma_cone_ok


def test_triangle_free():
    a = analyze(curve("x*y*z"))
    assert (a.tau, a.m, a.exponents) == (3, 2, (1, 1))
    assert a.second_syzygy_degrees == ()
    assert a.classification == "Free"
    assert a.deg_Z == 0
    assert a.h1.generator_count == 0  # jacobian ideal already saturated


def test_smooth_curve_is_not_an_error():
    a = analyze(curve("x^3 + y^3 + z^3"))
    assert a.smooth and a.tau == 0
    assert a.m is None


def test_triple_mode_equals_curve_jacobian():
    f = "z*y^2 - x^3 - z*x^2"
    from qcisyz.poly import format_polynomial

    jac = [format_polynomial(g) for g in jacobian_ideal(parse_polynomial(f, F))]
    a1 = analyze(curve(f))
    a2 = analyze(triple(jac))
    assert (a1.tau, a1.exponents, a1.second_syzygy_degrees) == (
        a2.tau,
        a2.exponents,
        a2.second_syzygy_degrees,
    )


def test_curve_input_validation():
    with pytest.raises(InputError):
        analyze(curve("x^2 + y^2"))  # degree < 3
    with pytest.raises(InputError):
        analyze(curve("x^2*y"))  # non-reduced: V(J) infinite
    with pytest.raises(InputError):
        analyze(QciInput.curve(parse_polynomial("x^2 + y", F)))  # inhomogeneous


def test_triple_input_validation():
    with pytest.raises(InputError):
        analyze(triple(["x^2", "y^2", "z"]))  # unequal degrees
    with pytest.raises(InputError):
        analyze(triple(["x^2", "x*y", "x*z"]))  # codim 1
    with pytest.raises(InputError):
        analyze(triple(["x^2", "y^2", "x*y + z^2"]))  # empty zero locus


def test_characteristic_guards():
    f3 = PrimeField(3)
    with pytest.raises(InputError):
        analyze(curve("x^3 + y^3 + x*y*z", f3))  # p divides d
    f7 = PrimeField(7)
    a = analyze(curve("z*y^2 - x^3 - z*x^2", f7))
    assert any("small characteristic" in w for w in a.warnings)


def test_chern_and_formulas():
    rec = chern_and_formulas(5, 10, 3)
    assert rec == {
        "c1": -4,
        "c2": 6,
        "deg_Z": 3 * (-4) + 16 - 10 + 9,
        "dpw_lower": 4,
        "dpw_upper": 13,
        "tau_plus": 10,
    }
    # tau_plus absent outside the stable range
    assert "tau_plus" not in chern_and_formulas(5, 3, 2)
    with pytest.raises(InputError):
        chern_and_formulas(2, 0, 1)


def test_c2_from_exponents_matches_chern():
    # nodal cubic data
    assert c2_from_exponents((2, 2, 2, 2), (3, 3)) == 3
    # two conics
    assert c2_from_exponents((2, 3, 3, 3), (4, 4)) == 5


def test_deep_checks_pass_on_catalog_examples():
    for text in ["x*y*z", "(x*z - y^2)*(x^2 - y*z)"]:
        a = analyze(curve(text), deep_checks=True)
        verify_hilbert_consistency(a)


def test_z_report_ci_detection():
    a = analyze(curve("(x^3 + y^3 + z^3)*(x + y + z)"))
    assert a.z.is_complete_intersection
    assert a.z.ci_type == (2, 2)
    assert a.deg_Z == 4
    b = analyze(curve("z*y^2 - x^3 - z*x^2"))
    assert not b.z.is_complete_intersection and b.z.ci_type is None


def test_exponents_sorted_and_invariants():
    a = analyze(curve("(x*z - y^2)*(x^2 - y*z)"))
    assert list(a.exponents) == sorted(a.exponents)
    assert sum(a.exponents) - sum(a.second_syzygy_degrees) == a.d - 1
    assert a.c2 == (a.d - 1) ** 2 - a.tau
    assert a.deg_Z == a.d1 * (1 - a.d) + (a.d - 1) ** 2 - a.tau + a.d1**2


def test_rationals_and_prime_field_agree():
    for text in ["z*y^2 - x^3 - z*x^2", "x*y*z*(x + y + z)"]:
        aq = analyze(curve(text, QQ))
        ap = analyze(curve(text, F))
        assert (aq.tau, aq.exponents, aq.second_syzygy_degrees) == (
            ap.tau,
            ap.exponents,
            ap.second_syzygy_degrees,
        )
        assert aq.sigma_betti == ap.sigma_betti
