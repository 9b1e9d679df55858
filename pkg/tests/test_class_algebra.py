from fractions import Fraction
from math import factorial

import pytest

from app.algebra.class_algebra import ClassAlgebraException, ClassAlgebraManager, first_mismatch
from app.algebra.partitions import class_size, enumerate_partitions

def test_top_connections_at_n2(class_algebra):
    assert class_algebra.connection_c_top((2,), (2,)) == 0
    assert class_algebra.connection_c_top((1, 1), (2,)) == 1
    assert class_algebra.connection_c_top((2,), (1, 1)) == 1
    assert class_algebra.connection_c((2,), (2,), (1, 1)) == 1

@pytest.mark.parametrize("n", range(1, 7))
def test_hook_reduction_agrees_with_character_sum(class_algebra, n):
    checks = class_algebra.verify_connection_consistency(n)
    assert all(check.passed for check in checks), [check.detail for check in checks]

@pytest.mark.parametrize("n", range(1, 6))
def test_connection_rows_sum_to_class_sizes(class_algebra, n):
    nu = enumerate_partitions(n)[-1]
    for lam in enumerate_partitions(n):
        total = sum(class_algebra.connection_c(lam, mu, nu) for mu in enumerate_partitions(n))
        assert total == class_size(lam)

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_character_formula_matches_counts(class_algebra, oracle, n):
    for nu in enumerate_partitions(n):
        counted = oracle.class_convolution_table(n, nu)
        assert first_mismatch(counted, lambda lam, mu: class_algebra.connection_c(lam, mu, nu)) is None

def test_class_table_at_n2(class_algebra):
    table = class_algebra.class_table(2)
    assert table.normalization == "1/n"
    assert table[((2,), (2,))] == 1
    assert table[((1, 1), (2,))] == 1
    assert table[((2,), (1, 1))] == 1
    assert table[((1, 1), (1, 1))] == 0
    assert table.is_symmetric()

@pytest.mark.parametrize("n", range(1, 8))
def test_class_series_closed_form(class_algebra, n):
    checks = class_algebra.verify_mv09(n) + class_algebra.verify_fv10(n)
    assert all(check.passed for check in checks), [check.detail for check in checks]

def test_closed_form_values(class_algebra):
    assert class_algebra.mv09_coefficient((1, 1, 1, 1), (4,)) == 6
    assert class_algebra.mv09_coefficient((1, 1), (1, 1)) == 0
    assert class_algebra.fv10_coefficient((1, 1)) == 2
    assert class_algebra.fv10_coefficient((2, 1)) == Fraction(factorial(3), 2)

def test_top_connection_table_with_threads(characters):
    threaded = ClassAlgebraManager(characters, threads=3).top_connection_table(4)
    serial = ClassAlgebraManager(characters).top_connection_table(4)
    assert threaded == serial
    assert list(threaded) == [(lam, mu) for lam in enumerate_partitions(4) for mu in enumerate_partitions(4)]

def test_weight_mismatch_raises(class_algebra):
    with pytest.raises(ClassAlgebraException):
        class_algebra.connection_c((2,), (1,), (2,))
    with pytest.raises(ClassAlgebraException):
        class_algebra.class_table(0)

def test_non_integral_value_is_logged_and_raised(class_algebra, caplog):
    with pytest.raises(ClassAlgebraException, match="non-integral"):
        class_algebra._checked_integer(Fraction(1, 2), "c^(2)_x,y")
    assert "Non-integral" in caplog.text
    with pytest.raises(ClassAlgebraException, match="negative"):
        class_algebra._checked_integer(Fraction(-1), "c^(2)_x,y")

def test_inconsistent_characters_are_caught(characters, mocker):
    manager = ClassAlgebraManager(characters)
    mocker.patch.object(manager.characters, "dimension", return_value=7)
    with pytest.raises(ClassAlgebraException):
        manager.connection_c((2, 1), (2, 1), (3,))

def test_first_mismatch_reports_cell():
    detail = first_mismatch({((2,), (1, 1)): 3}, lambda lam, mu: 4)
    assert detail == "at ([2], [1, 1]): got 3, expected 4"
    assert first_mismatch({(3,): 1}, lambda k: 1) is None

def test_small_connection_coefficients(class_algebra):
    assert class_algebra.connection_c((1, 1, 1), (1, 1, 1), (1, 1, 1)) == 1
    assert class_algebra.connection_c((3,), (3,), (3,)) == 1
    assert class_algebra.connection_c((2, 1), (2, 1), (3,)) == 3
    assert class_algebra.connection_c_top((2, 1), (3,)) == 0
    for n in range(1, 7):
        assert class_algebra.connection_c_top((n,), (1,) * n) == factorial(n - 1)

@pytest.mark.parametrize("n", range(1, 7))
def test_connections_are_weighted_symmetric(class_algebra, n):
    partitions = enumerate_partitions(n)
    for lam in partitions:
        for mu in partitions:
            for nu in partitions:
                left = class_algebra.connection_c(lam, mu, nu) * class_size(nu)
                assert left == class_algebra.connection_c(lam, nu, mu) * class_size(mu), (lam, mu, nu)
