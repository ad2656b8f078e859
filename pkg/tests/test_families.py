from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from powersums import families as fam
from powersums.exactmath import substitute_affine
from powersums.genalg import graded_dimensions

nonzero = st.fractions(min_value=-6, max_value=6, max_denominator=6).filter(lambda x: x not in (0, 1, -1))


def type11_oracle(D):
    # (1 + u^3) / ((1 - u)(1 - u^2)), expanded by hand
    base = [d // 2 + 1 for d in range(D + 1)]
    return [base[d] + (base[d - 3] if d >= 3 else 0) for d in range(D + 1)]


# -- coefficients -----------------------------------------------------------------------


def test_cqt_coefficients():
    spec = fam.Type11(fam.CQT(1, 2, 3))
    assert [fam.coefficient(spec, i) for i in (1, 2, 3)] == [Fraction(-1, 2), Fraction(-3, 8), Fraction(-7, 26)]


def test_qt_coefficient_formula():
    assert fam.qt_coefficient(Fraction(2), Fraction(3), Fraction(5), 2) == Fraction(4 * 8, -24)


def test_other_sources():
    assert fam.coefficient(fam.Type11(fam.ConstA(2, 3)), 3) == 24
    assert fam.coefficient(fam.TypeRS(2, 1, fam.Classical(5)), 7) == 5
    with pytest.raises(ValueError):
        fam.coefficient(fam.Type11(fam.ExplicitSeq((1, 2))), 3)
    with pytest.raises(ValueError):
        fam.coefficient(fam.Type11(fam.CQT(1, 2, 3)), 0)


def test_layout():
    assert fam.nvars(fam.Type1RS(2, 1, fam.Classical(5))) == 4
    assert fam.blocks(fam.TypeRS(2, 1, fam.Classical(5))) == ((0, 1), (2,))
    assert fam.blocks(fam.MQuasi(2, 1, 2)) == ((2,),)


# -- admissibility --------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, rule",
    [
        (fam.Type11(fam.ExplicitSeq((1, -1))), "a2 = -a1^2"),
        (fam.Type11(fam.ExplicitSeq((2, 4, 8))), "(a2, a3) = (a1^2, a1^3)"),
        (fam.Type11(fam.ExplicitSeq((1,))), "need at least a1, a2"),
        (fam.TypeRS(1, 1, fam.QT(2, 2)), "q = t"),
        (fam.TypeRS(1, 1, fam.QT(2, Fraction(1, 2))), "q t = 1"),
        (fam.TypeRS(1, 1, fam.QT(1, 3)), "q is a root of unity"),
        (fam.TypeRS(1, 1, fam.QT(4, 2)), "q^1 = t^2"),
        (fam.TypeRS(1, 1, fam.Classical(-1)), "a = -1/1"),
        (fam.Type1RS(1, 1, fam.QT(2, 3, 5)), "type (1,r,s) requires c = 1"),
        (fam.MQuasi(2, 1, 1), "m <= s"),
    ],
)
def test_inadmissible(spec, rule):
    res = fam.admissible(spec)
    assert not res and res.rule == rule
    with pytest.raises(fam.InadmissibleSpec) as exc:
        fam.require_admissible(spec)
    assert exc.value.rule == rule


def test_admissible_examples():
    assert fam.admissible(fam.Type11(fam.CQT(1, 2, 3)))
    assert fam.admissible(fam.TypeRS(2, 2, fam.Classical(5)))
    assert fam.admissible(fam.MQuasi(2, 1, 2))


def test_generators_refuse_inadmissible():
    with pytest.raises(fam.InadmissibleSpec):
        fam.generators(fam.TypeRS(1, 1, fam.QT(2, 2)), 4)


# -- solve_cqt ----------------------------------------------------------------------------


def test_solve_cqt_round_trip():
    spec = fam.Type11(fam.CQT(1, 2, 3))
    sol = fam.solve_cqt(*(fam.coefficient(spec, i) for i in (1, 2, 3)))
    assert sol.indicator == "rational"
    assert (1, 2, 3) in sol.solutions
    assert (Fraction(2, 3), Fraction(1, 2), Fraction(1, 3)) in sol.solutions


def test_solve_cqt_indicators():
    assert fam.solve_cqt(1, 2, 5).indicator == "irrational"
    assert fam.solve_cqt(1, 1, 1).indicator == "degenerate"
    assert fam.solve_cqt(1, 1, 1).solutions == ()
    with pytest.raises(ValueError):
        fam.solve_cqt(0, 1, 1)


@settings(max_examples=40, deadline=None)
@given(nonzero, nonzero, nonzero)
def test_solve_cqt_recovers_parameters(c, q, t):
    assume(fam.admissible(fam.Type11(fam.CQT(c, q, t))))
    a = [fam.qt_coefficient(c, q, t, i) for i in (1, 2, 3)]
    sol = fam.solve_cqt(*a)
    assert (c, q, t) in sol.solutions
    for cc, qq, tt in sol.solutions:
        assert [fam.qt_coefficient(cc, qq, tt, i) for i in (1, 2, 3)] == a


# -- predicted series and diagnosis ---------------------------------------------------------


def test_type11_prediction():
    assert fam.predicted_hilbert(fam.Type11(fam.CQT(1, 2, 3)), 10).int_coefficients(10) == type11_oracle(10)


def test_type11_generators_match_prediction():
    gens = fam.generators(fam.Type11(fam.CQT(1, 2, 3)), 8)
    assert list(graded_dimensions(gens, 8)) == type11_oracle(8)


def test_conditions_skipped_without_rational_parameters():
    assert fam.condition_dims(fam.Type11(fam.ExplicitSeq((1, 2, 5))), 4) is None


def test_cm_diagnose_type11():
    diag = fam.cm_diagnose(fam.Type11(fam.CQT(1, 2, 3)), 8)
    assert diag.verdict.consistent and diag.first_deviation is None
    assert diag.predicted_list() == type11_oracle(8)
    assert tuple(diag.condition_dims) == tuple(diag.computed)


def test_cm_diagnose_generic_seeds_agree():
    diag = fam.cm_diagnose_generic(1, 1, 6)
    assert diag.verdict.consistent
    assert list(diag.computed) == type11_oracle(6)


def test_generic_sampling_is_seeded():
    assert fam.sample_generic_qt(2, 1, 5) == fam.sample_generic_qt(2, 1, 5)
    assert fam.admissible(fam.TypeRS(2, 1, fam.sample_generic_qt(2, 1, 5)))


def test_trig_diagnosis():
    diag = fam.cm_diagnose(fam.MQuasiTrig(2, 1, 2), 5)
    assert diag.verdict.consistent


# -- restriction ------------------------------------------------------------------------------


@pytest.mark.parametrize("r, s", [(0, 0), (1, 0), (1, 1), (2, 1)])
def test_d_polynomial_restricts_to_zero(r, s):
    p = fam.d_polynomial(r, s)
    assert p.degree() == 2 * (r + 1) * (s + 1)
    assert substitute_affine(p, fam.restriction_map(r, s)).is_zero()


def test_d_polynomial_b_degree():
    p = fam.d_polynomial_b(1, 1, Fraction(2, 3))
    assert p.degree() == 8 and p.is_homogeneous()


def test_restriction_needs_large_shape():
    with pytest.raises(ValueError):
        fam.restrict_to_type1rs(fam.TypeRS(1, 2, fam.Classical(5)), 4)
