from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersums import families as fam
from powersums.exactmath import Polynomial
from powersums.genalg import (
    CmVerdict,
    GeneratorSet,
    GradedDims,
    SymmetricCoordinates,
    freeness_test,
    graded_dimensions,
    membership,
    quotient_by_ideal_dims,
    restriction_kernel_dims,
)
from powersums.symfun import partitions


def power_sums(n, D, blocks=None):
    blocks = blocks if blocks is not None else ((tuple(range(n)),) if n > 1 else ())
    gens = [Polynomial.power_sum(n, range(n), i) for i in range(1, D + 1)]
    return GeneratorSet(tuple(gens), n, blocks)


def type11_gens(values, D=None):
    y, z = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    return GeneratorSet(tuple((y**i).scale(a) + z**i for i, a in enumerate(values, start=1)), 2)


def wrong_a4_sequence():
    src = fam.CQT(1, 2, 3)
    vals = [fam.coefficient(fam.Type11(src), i) for i in range(1, 13)]
    vals[3] = Fraction(1)
    return vals


# -- graded dimensions -------------------------------------------------------------


def test_type11_dims():
    gens = fam.generators(fam.Type11(fam.CQT(1, 2, 3)), 6)
    assert tuple(graded_dimensions(gens, 6)) == (1, 1, 2, 3, 4, 5, 6)


def test_symmetric_in_two_variables():
    assert tuple(graded_dimensions(power_sums(2, 5), 5)) == (1, 1, 2, 2, 3, 3)


def test_single_generator():
    y = Polynomial.variable(1, 0)
    assert tuple(graded_dimensions(GeneratorSet((y,), 1), 4)) == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_power_sums_count_partitions(n):
    D = 10
    want = [sum(1 for p in partitions(d) if len(p) <= n) if d else 1 for d in range(D + 1)]
    assert list(graded_dimensions(power_sums(n, D), D)) == want


def test_generator_validation():
    y = Polynomial.variable(2, 0)
    with pytest.raises(ValueError):
        GeneratorSet((y + 1,), 2)
    with pytest.raises(ValueError):
        GeneratorSet((y,), 2, ((0, 1),))
    with pytest.raises(ValueError):
        GeneratorSet((Polynomial.zero(2),), 2)


def test_monotone_in_generators():
    vals = [Fraction(1), Fraction(2), Fraction(3), Fraction(-1)]
    small = graded_dimensions(type11_gens(vals[:2]), 8)
    big = graded_dimensions(type11_gens(vals), 8)
    assert all(a <= b for a, b in zip(small, big))


def test_bounded_by_polynomial_ring():
    for spec in [fam.Type11(fam.CQT(1, 2, 3)), fam.TypeRS(2, 1, fam.Classical(5))]:
        n = fam.nvars(spec)
        dims = graded_dimensions(fam.generators(spec, 8), 8)
        coords = SymmetricCoordinates(n, fam.blocks(spec))
        assert dims[0] == 1
        assert all(dims[d] <= coords.size(d) for d in range(9))


# -- membership --------------------------------------------------------------------


def test_newton_membership():
    gens = power_sums(2, 2)
    assert membership(Polynomial.power_sum(2, range(2), 3), gens)


def test_q3_not_in_span_of_q1_q2():
    gens = type11_gens([1, 1])
    y, z = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert not membership((y**3).scale(2) + z**3, gens)


def test_zero_is_member():
    assert membership(Polynomial.zero(2), type11_gens([1, 1]))


def test_membership_requires_homogeneous():
    with pytest.raises(ValueError):
        membership(Polynomial.variable(2, 0) + 1, type11_gens([1]))


# -- quotients and freeness ------------------------------------------------------------


def test_type11_quotient():
    gens = fam.generators(fam.Type11(fam.CQT(1, 2, 3)), 5)
    assert tuple(quotient_by_ideal_dims(gens, list(gens.prefix(2)), 5)) == (1, 0, 0, 1, 0, 0)


def test_quotient_by_maximal_ideal():
    y, z = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    gens = GeneratorSet((y, z), 2)
    assert tuple(quotient_by_ideal_dims(gens, [y, z], 4)) == (1, 0, 0, 0, 0)


def test_quotient_by_nothing():
    gens = power_sums(2, 6)
    assert quotient_by_ideal_dims(gens, [], 6) == graded_dimensions(gens, 6)


def test_quotient_rejects_non_members():
    gens = power_sums(2, 3)
    with pytest.raises(ValueError):
        quotient_by_ideal_dims(gens, [Polynomial.variable(2, 0)], 3)


def test_freeness_consistent_type11():
    gens = fam.generators(fam.Type11(fam.CQT(1, 2, 3)), 12)
    alg = graded_dimensions(gens, 12)
    quot = quotient_by_ideal_dims(gens, list(gens.prefix(2)), 12)
    v = freeness_test(alg, quot, [1, 2], 12)
    assert v.consistent and str(v) == "ConsistentCM(12)" and v.label == "consistent_cm"


def test_freeness_wrong_a4():
    # the freeness identity over Q1, Q2 alone first breaks at degree 6;
    # cm_diagnose reports the earlier Hilbert series failure at degree 4
    gens = type11_gens(wrong_a4_sequence()[:10])
    alg = graded_dimensions(gens, 10)
    assert alg[4] == 5
    quot = quotient_by_ideal_dims(gens, list(gens.prefix(2)), 10)
    v = freeness_test(alg, quot, [1, 2], 10)
    assert not v.consistent and v.degree == 6 and v.label == "refuted"
    diag = fam.cm_diagnose(fam.Type11(fam.ExplicitSeq(tuple(wrong_a4_sequence()))), 8)
    assert (diag.verdict.degree, diag.verdict.computed, diag.verdict.expected) == (4, 5, 4)


def test_free_polynomial_ring():
    y, z = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    gens = GeneratorSet((y, z), 2)
    alg = graded_dimensions(gens, 6)
    quot = quotient_by_ideal_dims(gens, [y, z], 6)
    assert freeness_test(alg, quot, [1, 1], 6).consistent


def test_freeness_invariant_under_ideal_order():
    gens = fam.generators(fam.Type11(fam.CQT(1, 2, 3)), 8)
    alg = graded_dimensions(gens, 8)
    ideal = list(gens.prefix(2))
    a = freeness_test(alg, quotient_by_ideal_dims(gens, ideal, 8), [1, 2], 8)
    b = freeness_test(alg, quotient_by_ideal_dims(gens, ideal[::-1], 8), [2, 1], 8)
    assert a == b


def test_freeness_window_check():
    with pytest.raises(ValueError):
        freeness_test(GradedDims((1, 1)), GradedDims((1, 0)), [1], 4)


def test_verdict_string():
    v = CmVerdict.refuted_at(4, 4, 5, "hilbert series")
    assert str(v) == "RefutedAt(4; expected 4, computed 5; hilbert series)"
    with pytest.raises(ValueError):
        CmVerdict.refuted_at(4, 5, 5)


# -- restriction kernels -------------------------------------------------------------


def test_restriction_kernel_classical():
    dims = fam.restriction_kernel(fam.TypeRS(2, 2, fam.Classical(5)), 8)
    assert tuple(dims) == (0,) * 8 + (1,)


def test_identity_substitution_has_no_kernel():
    gens = power_sums(3, 6)
    ident = [Polynomial.variable(3, i) for i in range(3)]
    assert tuple(restriction_kernel_dims(gens, ident, 6)) == (0,) * 7


def test_restriction_rank_nullity():
    spec = fam.TypeRS(2, 2, fam.Classical(5))
    D = 9
    gens = fam.generators(spec, D)
    kernel = fam.restriction_kernel(spec, D)
    image = graded_dimensions(fam.restrict_to_type1rs(spec, D), D)
    source = graded_dimensions(gens, D)
    assert [k + i for k, i in zip(kernel, image)] == list(source)


def test_qt_kernel_lower_bound():
    spec = fam.TypeRS(2, 2, fam.QT(2, 3))
    D = 9
    kernel = fam.restriction_kernel(spec, D)
    bound = fam.kernel_lower_bound(spec, D)
    assert all(k >= b for k, b in zip(kernel, bound))


# -- symmetric coordinates ------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_orbit_sum_round_trip(exps):
    coords = SymmetricCoordinates(3, ((0, 1),))
    d = sum(exps)
    m = coords.canon(exps)
    p = coords.orbit_sum(m)
    assert coords.is_symmetric(p)
    assert coords.to_polynomial(coords.to_vector(p, d), d) == p
