import warnings
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersums.symfun import (
    CharacterTable,
    WindowTooSmall,
    character,
    chi_series,
    conjugate,
    dim,
    gorenstein_check,
    hilbert_P,
    hilbert_P_form2,
    hilbert_P_form3,
    kappa,
    kostka,
    kostka_pair,
    partitions,
    pieri,
    plethysm_c,
    young_permutation_character,
)
from powersums.symfun.partitions import class_size

small_n = st.integers(1, 7)


def hook_length_dim(lam):
    lamc = conjugate(lam)
    hooks = [lam[i] - j + lamc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]
    return factorial(sum(lam)) // prod(hooks)


# -- partitions and characters ------------------------------------------------------------


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))


def test_conjugate_and_kappa():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert kappa((2,)) == 1 and kappa((1, 1)) == -1 and kappa((2, 1)) == 0


def test_s3_character_table():
    table = CharacterTable(3)
    assert table.values == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality(n):
    table = CharacterTable(n)
    size = len(table.parts)
    for i in range(size):
        for j in range(size):
            assert table.inner(i, j) == (factorial(n) if i == j else 0)


@settings(max_examples=30, deadline=None)
@given(small_n.flatmap(lambda n: st.sampled_from(partitions(n))))
def test_dim_matches_hook_length(lam):
    assert dim(lam) == hook_length_dim(lam)


@settings(max_examples=30, deadline=None)
@given(small_n.flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(partitions(n)))))
def test_sign_twist(pair):
    lam, mu = pair
    sign = (-1) ** (sum(mu) - len(mu))
    assert character(conjugate(lam), mu) == sign * character(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum(n):
    assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)


# -- Kostka ---------------------------------------------------------------------------------


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0
    assert kostka((2, 1), (3,)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_inverse(n):
    kp = kostka_pair(n)
    size = len(kp.parts)
    for i in range(size):
        for j in range(size):
            assert sum(kp.K[i][k] * kp.K_inv[k][j] for k in range(size)) == (i == j)


@pytest.mark.parametrize("n", range(1, 6))
def test_young_character_decomposes_by_kostka(n):
    for lam in partitions(n):
        for mu in partitions(n):
            want = sum(kostka(nu, lam) * character(nu, mu) for nu in partitions(n))
            assert young_permutation_character(lam, mu) == want


def test_pieri():
    assert pieri((1,), 1) == ((2,), (1, 1))
    assert pieri((2, 1), 2) == ((4, 1), (3, 2), (3, 1, 1), (2, 2, 1))


# -- plethysm -----------------------------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4])
def test_power_sum_plethysm(m):
    # s_1(x^m) = p_m, a signed sum of hooks
    want = {(m - k,) + (1,) * k: (-1) ** k for k in range(m)}
    assert plethysm_c((1,), m) == want


def test_plethysm_trivial_m():
    assert plethysm_c((2, 1), 1) == {(2, 1): 1}


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (3,), (1, 1, 1)])
@pytest.mark.parametrize("m", [2, 3])
def test_plethysm_transpose_rule(lam, m):
    r = sum(lam)
    base = plethysm_c(conjugate(lam), m)
    sign = (-1) ** (r * (m - 1))
    want = {conjugate(nu): sign * c for nu, c in base.items()}
    assert plethysm_c(lam, m) == want


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (2, 2)])
@pytest.mark.parametrize("m", [2, 3])
def test_plethysm_has_no_multilinear_part(lam, m):
    # every monomial of s_lam(x^m) has exponents divisible by m
    assert sum(c * dim(nu) for nu, c in plethysm_c(lam, m).items()) == 0


# -- series ---------------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chi_series_trivial(n):
    D = 10
    want = [sum(1 for p in partitions(d) if len(p) <= n) if d else 1 for d in range(D + 1)]
    assert chi_series((n,), D).int_coefficients(D) == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_regular_representation(n):
    D = 8
    total = [0] * (D + 1)
    for nu in partitions(n):
        coeffs = chi_series(nu, D).int_coefficients(D)
        total = [t + dim(nu) * c for t, c in zip(total, coeffs)]
    assert total == [factorial(d + n - 1) // (factorial(d) * factorial(n - 1)) for d in range(D + 1)]


@pytest.mark.parametrize("m", [2, 3])
def test_three_forms_agree(m):
    D = 12
    a = hilbert_P(2, 1, m, D).int_coefficients(D)
    assert hilbert_P_form2(2, m, D).int_coefficients(D) == a
    assert hilbert_P_form3(2, m, D).int_coefficients(D) == a
    assert a[0] == 1 and all(c >= 0 for c in a)


def test_hilbert_parameter_checks():
    with pytest.raises(ValueError):
        hilbert_P(2, 2, 2, 5)
    with pytest.raises(ValueError):
        hilbert_P(0, 1, 2, 5)
    with pytest.warns(UserWarning):
        hilbert_P(1, 1, 2, 5)


def test_gorenstein_r1():
    rep = gorenstein_check(1, 2, 20)
    assert rep.numerator.terms == {(0,): 1, (3,): 1}
    assert rep.palindromic and rep.degree_consistent


def test_gorenstein_window_too_small():
    with pytest.raises(WindowTooSmall):
        gorenstein_check(2, 3, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(ValueError):
            gorenstein_check(1, 1, 10)
