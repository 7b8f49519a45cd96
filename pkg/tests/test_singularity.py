from __future__ import annotations

from fractions import Fraction

import pytest

from adesing import weyl
from adesing.errors import CorankTooLarge, NonIsolatedSingularity, NoWeightSystem, NotSimple
from adesing.poly import Weights
from adesing.singularity import (
    Germ,
    Spectrum,
    class_in_local_algebra,
    classify_ade,
    in_simple_interval,
    is_simple,
    milnor_formula,
    modality_quasihomogeneous,
    monodromy_eigenvalue_angles,
    mu_const_linear_check,
    signature_from_spectrum,
    spectrum_length,
    spectrum_quasihomogeneous,
    strip_suspension,
    suspend_spectrum,
    three_variable_spectrum,
)

F = Fraction

NORMAL_FORMS = (
    [(f"A{k}", f"x^{k + 1} + y^2") for k in range(1, 13)]
    + [(f"D{k}", f"x^2*y + y^{k - 1}") for k in range(4, 13)]
    + [("E6", "x^3 + y^4"), ("E7", "x^3 + x*y^3"), ("E8", "x^3 + y^5")]
)


def spec(text):
    return spectrum_quasihomogeneous(Germ.parse(text))


def fr(*vals):
    return tuple(F(v) for v in vals)


def test_germ_rejects_bad_input():
    with pytest.raises(ValueError):
        Germ.parse("x + y^2")
    with pytest.raises(ValueError):
        Germ.parse("1 + x^2")
    with pytest.raises(NonIsolatedSingularity):
        Germ.parse("x^2*y")


def test_spectrum_examples():
    assert spec("x^3 + y^2").values == fr("-1/6", "1/6")
    assert spec("x^2 + y^2").values == fr(0)
    assert spec("x^3 + y^5").values == fr(*"-7/15 -4/15 -2/15 -1/15 1/15 2/15 4/15 7/15".split())


def test_spectrum_requires_weights():
    with pytest.raises(NoWeightSystem):
        spec("x^5 + x^2*y^2 + y^5")


def test_suspension_examples():
    assert suspend_spectrum(Spectrum(fr(0), 2), 1).values == fr("1/2")
    a2 = spec("x^3 + y^2")
    assert suspend_spectrum(a2, 1) == Spectrum(fr("1/3", "2/3"), 3)
    assert suspend_spectrum(a2, 0) == a2
    with pytest.raises(ValueError):
        suspend_spectrum(a2, -1)


def test_spectrum_length_examples():
    assert spectrum_length(spec("x^3 + y^2")) == F(1, 3)
    assert spectrum_length(spec("x^3 + y^5")) == F(14, 15)
    assert spectrum_length(spec("x^3 + y^6")) == 1
    with pytest.raises(ValueError):
        spectrum_length(Spectrum((), 2))


def test_is_simple():
    for _, text in NORMAL_FORMS:
        assert is_simple(Germ.parse(text))
    assert not is_simple(Germ.parse("x^3 + y^6"))
    assert not is_simple(Germ.parse("x^4 + y^4"))


def test_signature_examples():
    e8 = three_variable_spectrum(Germ.parse("x^3 + y^5"))
    assert signature_from_spectrum(e8) == (0, 0, 8)
    j10 = suspend_spectrum(spec("x^3 + y^6"), 1)
    assert signature_from_spectrum(j10)[1] >= 1
    assert signature_from_spectrum(j10) == (0, 2, 8)
    assert signature_from_spectrum(Spectrum(fr("1/2"), 3)) == (0, 0, 1)


def test_monodromy_angles_examples():
    assert monodromy_eigenvalue_angles(Spectrum(fr("1/3", "2/3"), 3)) == (fr("1/3", "2/3"), 3)
    e8 = three_variable_spectrum(Germ.parse("x^3 + y^5"))
    angles, order = monodromy_eigenvalue_angles(e8)
    assert angles == tuple(F(m, 30) for m in (1, 7, 11, 13, 17, 19, 23, 29))
    assert order == 30
    assert monodromy_eigenvalue_angles(Spectrum(fr("1/2"), 3)) == (fr("1/2"), 2)


def test_modality_examples():
    for k in range(1, 13):
        assert modality_quasihomogeneous(Germ.parse(f"x^{k + 1} + y^2")) == 0
    assert modality_quasihomogeneous(Germ.parse("x^3 + y^6")) == 1
    assert modality_quasihomogeneous(Germ.parse("x^4 + y^4")) == 1


@pytest.mark.parametrize("name, text", NORMAL_FORMS)
def test_classify_normal_forms(name, text):
    result = classify_ade(Germ.parse(text))
    assert str(result.rstype) == name
    assert result.mu == result.rank == len(result.exponents)
    h = result.coxeter_number
    assert sorted(h - m for m in result.exponents) == list(result.exponents)


def test_classify_e7_details():
    r = classify_ade(Germ.parse("x^3 + x*y^3"))
    assert (r.letter, r.rank, r.mu, r.coxeter_number) == ("E", 7, 7, 18)
    assert r.exponents == (1, 5, 7, 9, 11, 13, 17)
    assert r.weights == Weights((F(1, 3), F(2, 9)))


@pytest.mark.parametrize(
    "text, name",
    [
        ("x^3 + y^5 + z^2", "E8"),
        ("x^4 + y^2 + z^2 + w^2", "A3"),
        ("x^2 + y^2", "A1"),
        ("x^2 + y^2 + z^2", "A1"),
        ("x^2*y + y^4 + z^2", "D5"),
    ],
)
def test_classify_suspended_forms(text, name):
    assert str(classify_ade(Germ.parse(text)).rstype) == name


def test_classify_rejections():
    with pytest.raises(NotSimple):
        classify_ade(Germ.parse("x^3 + y^6"))
    with pytest.raises(NotSimple):
        classify_ade(Germ.parse("x^4 + y^4"))
    with pytest.raises(CorankTooLarge):
        classify_ade(Germ.parse("x^3 + y^3 + z^3"))
    with pytest.raises(NoWeightSystem):
        classify_ade(Germ.parse("x^5 + x^2*y^2 + y^5"))


def test_strip_suspension_keeps_one_variable():
    core, keep = strip_suspension(Germ.parse("x^2 + y^2 + z^2"))
    assert core.nvars == 1 and keep == (0,)
    core, keep = strip_suspension(Germ.parse("x^3 + y^5 + z^2"))
    assert str(core) == "y^5 + x^3" and keep == (0, 1)


@pytest.mark.parametrize("name, text", NORMAL_FORMS + [("J10", "x^3 + y^6"), ("X9", "x^4 + y^4")])
def test_spectrum_symmetry_and_size(name, text):
    g = Germ.parse(text)
    s = spectrum_quasihomogeneous(g)
    assert len(s) == g.mu == milnor_formula(g.weights)
    assert s.is_symmetric()
    assert sorted((g.nvars - 2) - v for v in s.values) == list(s.values)


@pytest.mark.parametrize("name, text", NORMAL_FORMS)
def test_suspension_preserves_length(name, text):
    s = spec(text)
    for k in (1, 2, 3):
        assert spectrum_length(suspend_spectrum(s, k)) == spectrum_length(s)


@pytest.mark.parametrize("name, text", NORMAL_FORMS)
def test_simple_interval_and_exponent_bridge(name, text):
    g = Germ.parse(text)
    s3 = three_variable_spectrum(g)
    assert in_simple_interval(s3)
    rs = weyl.build_root_system(name)
    data = weyl.exponents_and_coxeter_number(rs)
    assert sorted(v * data.coxeter_number for v in s3.values) == [F(m) for m in data.exponents]
    angles, order = monodromy_eigenvalue_angles(s3)
    assert angles == tuple(F(m, data.coxeter_number) for m in data.exponents)
    assert order == data.coxeter_number


def test_non_simple_germs_leave_the_interval():
    for text in ("x^3 + y^6", "x^4 + y^4"):
        assert not in_simple_interval(three_variable_spectrum(Germ.parse(text)))


@pytest.mark.parametrize("name, text", NORMAL_FORMS)
def test_mu_const_vacuous_for_quasihomogeneous(name, text):
    g = Germ.parse(text)
    assert class_in_local_algebra(g).is_zero()
    rep = mu_const_linear_check(g, [1, -1, F(1, 2)])
    assert rep.passed
    assert rep.notes == ["class of f is zero: vacuous pass"]


def test_mu_const_non_quasihomogeneous():
    g = Germ.parse("x^5 + x^2*y^2 + y^5")
    assert g.mu == 11
    rep = mu_const_linear_check(g, [1, -1, F(1, 2)])
    assert rep.passed
    assert [d["local_dimension"] for d in rep.details] == [11, 11, 11]
    assert all(d["diagram_preserved"] for d in rep.details)


def test_mu_const_reports_failing_sample_without_raising():
    # t = -5 cancels x^2*y^2 and the class is 1/5*x^2*y^2, so f + t[f] = x^5 + y^5: mu drops to 16
    g = Germ.parse("x^5 + x^2*y^2 + y^5")
    rep = mu_const_linear_check(g, [-5])
    assert not rep.passed
    assert rep.details[0]["local_dimension"] == 16
    assert rep.details[0]["diagram_preserved"] is False
