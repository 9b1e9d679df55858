from fractions import Fraction
from math import factorial

import pytest

from app.algebra.arithmetic import double_factorial
from app.algebra.double_coset import (
    DoubleCosetException,
    DoubleCosetManager,
    closed_form_npone,
    mlambda_n_closed_form,
    pi_table_closed_forms,
)
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.oracle import OracleCapExceeded, OracleManager
from app.algebra.partitions import enumerate_partitions, hyperoctahedral_order
from app.configs.oracle_config import OracleConfig
from app.dataclasses.near_hook import NearHook

def test_series_at_n2(double_coset):
    assert double_coset.main_series_coefficient((2,), (2,)) == 3
    assert double_coset.main_series_coefficient((2,), (1, 1)) == 2
    assert double_coset.main_series_coefficient((1, 1), (2,)) == 2
    assert double_coset.main_series_coefficient((1, 1), (1, 1)) == 0
    assert double_coset.pi_series(2) == MonomialExpansion(2, {(2,): 2, (1, 1): 2})

def test_known_values_at_n5(double_coset):
    assert double_coset.main_series_coefficient((5,), (5,)) == 945
    assert double_coset.main_series_coefficient((4, 1), (4, 1)) == 225
    assert closed_form_npone(5, 1) == 225
    assert closed_form_npone(5, 3) == 0

def test_pi_at_n4(double_coset):
    pi = double_coset.pi_series(4)
    assert pi[(4,)] == 48
    assert pi[(1, 1, 1, 1)] == factorial(4)

def test_closed_form_helpers():
    assert mlambda_n_closed_form((1, 1)) == 2
    assert mlambda_n_closed_form((3,)) == 15
    labels = [label for label, _, _ in pi_table_closed_forms(6)]
    assert "(n-3,3)" in labels and "(n-4,4)" not in labels
    assert "(n-4,4)" in [label for label, _, _ in pi_table_closed_forms(8)]
    assert len(pi_table_closed_forms(1)) == 2

@pytest.mark.parametrize("n", range(1, 7))
def test_phi_top_on_near_hooks(double_coset, n):
    assert double_coset.phi_top((n,)) == hyperoctahedral_order(n) * double_factorial(2 * n - 2)
    for shape in double_coset.zonal.near_hook_shapes(n):
        assert double_coset.phi_top_nearhook(shape) == double_coset.phi_top(shape.parts)

@pytest.mark.parametrize("n", range(1, 4))
def test_phi_top_matches_histogram(double_coset, n):
    for lam in enumerate_partitions(n):
        assert double_coset.phi_top(lam) == double_coset.phi(lam, (n,))

@pytest.mark.parametrize("n", range(1, 11))
def test_closed_forms(double_coset, n):
    checks = double_coset.verify_closed_forms(n)
    assert all(check.passed for check in checks), [check.detail for check in checks]

@pytest.mark.parametrize("n", range(1, 9))
def test_series_is_integral_and_symmetric(double_coset, n):
    checks = double_coset.verify_integrality(n)
    assert all(check.passed for check in checks), [check.detail for check in checks]

@pytest.mark.parametrize("n", range(1, 5))
def test_near_hook_series_equals_zonal_expansion(double_coset, n):
    formula = double_coset.doublecoset_table(n)
    zonal_series = double_coset.series_from_zonal(n)
    assert formula.entries == zonal_series.entries

@pytest.mark.parametrize("n", range(1, 4))
def test_against_brute_force(double_coset, n):
    checks = double_coset.verify_against_oracle(n)
    assert all(check.passed for check in checks), [check.detail for check in checks]

@pytest.mark.slow
def test_against_brute_force_n4(double_coset):
    checks = double_coset.verify_against_oracle(4)
    assert all(check.passed for check in checks), [check.detail for check in checks]

def test_threaded_table_matches_serial(oracle, zonal, characters):
    threaded = DoubleCosetManager(oracle, zonal, characters, threads=4).doublecoset_table(3)
    serial = DoubleCosetManager(oracle, zonal, characters).doublecoset_table(3)
    assert threaded.entries == serial.entries
    assert threaded.normalization == "1/(2^n n!)"

def test_connection_b_respects_cap():
    capped = DoubleCosetManager(OracleManager(OracleConfig(cap_class=3, cap_coset=2)))
    assert capped.connection_b((2,), (2,), (2,)) == 8
    with pytest.raises(OracleCapExceeded):
        capped.connection_b((3,), (3,), (3,))

def test_invalid_inputs(double_coset):
    with pytest.raises(DoubleCosetException):
        double_coset.main_series_coefficient((2,), (1,))
    with pytest.raises(DoubleCosetException):
        double_coset.pi_series(0)

def test_connection_b_table_matches_counts(double_coset, oracle):
    for nu in enumerate_partitions(3):
        assert double_coset.connection_b_table(3, nu) == oracle.double_coset_convolution_table(3, nu)

@pytest.mark.parametrize("n", range(3, 8))
def test_hook_diagonal_closed_form(n):
    assert closed_form_npone(n, 1) == n * (n - 2) * double_factorial(2 * n - 5)
    assert closed_form_npone(n, 2) == (n * (n - 4) * (n - 3) ** 2 * double_factorial(2 * n - 9) if n >= 5 else 0)

@pytest.mark.slow
def test_against_brute_force_n5():
    manager = DoubleCosetManager(OracleManager(OracleConfig(cap_class=5, cap_coset=5, threads=4)))
    checks = manager.verify_against_oracle(5)
    assert all(check.passed for check in checks), [check.detail for check in checks]

@pytest.mark.parametrize("n", range(1, 10))
def test_pi_rows_match_known_values(double_coset, n):
    pi = double_coset.pi_series(n)
    for label, lam, value in pi_table_closed_forms(n):
        assert pi[lam] == value, label

def test_pi_rows_for_three_and_four_part_tails(double_coset):
    assert double_coset.pi_series(6)[(3, 3)] == Fraction(6 * double_factorial(4) * (5 * 36 - 21 * 6 + 20), 2)
    assert double_coset.pi_series(8)[(4, 4)] == Fraction(8 * double_factorial(6) * (35 * 512 - 270 * 64 + 649 * 8 - 486), 8)

def test_phi_top_mismatch_is_logged(oracle, zonal, characters, mocker, caplog):
    manager = DoubleCosetManager(oracle, zonal, characters)
    mocker.patch.object(manager, "phi_top", return_value=0)
    with pytest.raises(DoubleCosetException, match="phi_top mismatch"):
        manager.phi_top_nearhook(NearHook(2, 1, 0))
    assert "differs from box product" in caplog.text
