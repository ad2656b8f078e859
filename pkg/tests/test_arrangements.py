from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersums.arrangements import (
    ArrangementError,
    CoordinateRing,
    cm_test,
    cm_test_report,
    components,
    conjecture_classifier,
    conjecture_family,
    conjecture_scan,
    expected_component_count,
    hilbert_function,
    merge_kernel_dims,
    monomial_rank,
    window_capacity,
)
from powersums.exactmath import OneMinus, expand_series
from powersums.symfun import partitions

small_partitions = st.integers(1, 5).flatmap(lambda n: st.sampled_from(partitions(n)))


# -- components ---------------------------------------------------------------------


def test_component_examples():
    assert len(components((2, 1))) == 3
    assert len(components((2, 2))) == 3
    assert len(components((1, 1, 1, 1))) == 1
    assert components((1, 1, 1)).assignments == ((0, 1, 2),)


@settings(max_examples=30, deadline=None)
@given(small_partitions)
def test_component_count_and_block_sizes(lam):
    arr = components(lam)
    assert len(arr) == expected_component_count(lam)
    assert len(set(arr.assignments)) == len(arr)
    for assign in arr.assignments:
        sizes = sorted((assign.count(b) for b in range(len(lam))), reverse=True)
        assert tuple(sizes) == lam


def test_components_of_six():
    for lam in partitions(6):
        assert len(components(lam)) == expected_component_count(lam)


# -- Hilbert functions ---------------------------------------------------------------


def test_hilbert_function_21():
    want = expand_series(OneMinus(3, 1), 4) * expand_series(OneMinus(1, -3), 4)
    assert tuple(hilbert_function((2, 1), 4)) == (1, 3, 6, 9, 12)
    assert want.int_coefficients(4) == [1, 3, 6, 9, 12]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_full_space(n):
    assert list(hilbert_function((1,) * n, 6)) == [comb(d + n - 1, n - 1) for d in range(7)]


def test_22_degree_one():
    assert hilbert_function((2, 2), 1)[1] == 4


def test_single_component_is_polynomial_ring():
    # (3,) and (1,1,1) have one component each, of dimension 1 and 3
    assert list(hilbert_function((3,), 5)) == [1] * 6
    assert list(hilbert_function((2, 2, 1), 0)) == [1]


@settings(max_examples=12, deadline=None)
@given(small_partitions, st.integers(0, 4))
def test_reduced_route_matches_monomial_route(lam, d):
    assert hilbert_function(lam, d)[d] == monomial_rank(lam, d)


@settings(max_examples=12, deadline=None)
@given(small_partitions)
def test_bounded_by_normalization(lam):
    dims = hilbert_function(lam, 4)
    ell, count = len(lam), len(components(lam))
    assert dims[0] == 1
    for d in range(5):
        assert dims[d] <= count * comb(d + ell - 1, ell - 1)


# -- CM test --------------------------------------------------------------------------


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (2, 1, 1), (4, 2), (3, 1), (3, 3), (2, 2, 2)])
def test_known_cm_shapes(lam):
    assert cm_test(lam, 10).consistent


def test_report_fields():
    rep = cm_test_report((2, 1), 6)
    assert tuple(rep.quotient) == (1, 1, 1, 0, 0, 0, 0)
    assert len(rep.forms) == 2 and all(-9 <= a <= 9 for f in rep.forms for a in f)
    assert sum(rep.quotient) == len(components((2, 1)))


def test_32_is_cm_within_window():
    # any two components of X_(3,2) meet only in the diagonal, so X is a line
    # times ten lines through 0, a reduced curve cone; the quotient length
    # equals the degree (10), which is the CM equality case
    rep = cm_test_report((3, 2), 10)
    assert rep.verdict.consistent
    assert sum(rep.quotient) == len(components((3, 2))) == 10


def test_seed_independence():
    for lam in [(2, 1), (2, 2), (3, 2), (4, 2), (3, 1, 1)]:
        assert cm_test(lam, 8, seed=0).label == cm_test(lam, 8, seed=1).label


def test_refutation_is_exact():
    rep = cm_test_report((3, 2, 1), 8)
    v = rep.verdict
    assert not v.consistent and v.degree == 7 and (v.expected, v.computed) == (711, 706)
    assert rep.quotient[8] == 0


def test_window_too_small():
    assert window_capacity((2, 1, 1, 1, 1), 10) == 10
    with pytest.raises(ArrangementError):
        cm_test_report((2, 1, 1, 1, 1), 10)


def test_quotient_not_vanishing_raises():
    with pytest.raises(ArrangementError):
        cm_test_report((2, 1, 1), 3)


def test_modular_quotient_agrees_with_exact():
    ring = CoordinateRing((2, 2, 1))
    forms = ((3, -1, 4, 1, -5), (9, 2, -6, 5, 3), (-5, 8, 9, -7, 9))
    assert ring.quotient_dims(forms, 8) == ring.quotient_dims(forms, 8, modular=True)


# -- merge kernel ------------------------------------------------------------------


def test_merge_kernel_13():
    mk = merge_kernel_dims(1, 3, 5)
    assert tuple(mk.dims) == (0, 0, 0, 1, 3, 6)
    assert mk.matches


def test_merge_kernel_23():
    mk = merge_kernel_dims(2, 3, 6)
    assert mk.matches
    assert mk.predicted == tuple(15 * c for c in (0, 0, 0, 1, 3, 6, 10))


def test_merge_kernel_rank_nullity():
    mk = merge_kernel_dims(1, 4, 7)
    assert [k + t for k, t in zip(mk.dims, mk.target_dims)] == list(mk.source_dims)
    assert all(x == 0 for x in mk.dims[:6])
    assert mk.matches


def test_merge_kernel_arguments():
    with pytest.raises(ValueError):
        merge_kernel_dims(1, 2, 4)


# -- conjecture -----------------------------------------------------------------------


def test_classifier_examples():
    assert conjecture_family((2, 1, 1)) in (1, 2)
    assert conjecture_classifier((2, 1, 1))
    assert not conjecture_classifier((3, 2))
    assert conjecture_family((4, 2)) == 3
    assert conjecture_family((3, 1, 1)) == 1
    assert not conjecture_classifier((3, 1, 1, 1))
    assert not conjecture_classifier((3, 2, 1))


def test_small_scan():
    rows = conjecture_scan(4, 8)
    assert [r.shape for r in rows] == [lam for n in range(1, 5) for lam in partitions(n)]
    assert all(r.outcome == "consistent_cm" and r.predicted_cm for r in rows)
