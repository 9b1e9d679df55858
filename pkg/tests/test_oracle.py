from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.oracle import (
    OracleCapExceeded,
    OracleException,
    OracleManager,
    canonical_class_element,
    compose,
    coset_type,
    cycle_type,
    from_cycles,
    hyperoctahedral_element,
    identity,
    inverse,
    matching,
    random_hyperoctahedral_element,
    semistandard_tableaux,
)
from app.algebra.partitions import class_size, coset_size, enumerate_partitions
from app.configs.oracle_config import OracleConfig

def test_permutation_helpers():
    perm = from_cycles(4, [(0, 1, 2)])
    assert perm == (1, 2, 0, 3)
    assert cycle_type(perm) == (3, 1)
    assert compose(perm, inverse(perm)) == identity(4)
    assert canonical_class_element((2, 1)) == (1, 0, 2)

def test_coset_types():
    assert coset_type(identity(4)) == (1, 1)
    assert coset_type(matching(3)) == (1, 1, 1)
    assert coset_type((0, 2, 1, 3)) == (2,)

@given(st.integers(min_value=1, max_value=4), st.lists(st.integers(min_value=0, max_value=20), max_size=12))
def test_hyperoctahedral_words_stay_in_the_identity_coset(n, word):
    assert coset_type(hyperoctahedral_element(n, word)) == (1,) * n

@given(st.integers(min_value=1, max_value=3), st.lists(st.integers(min_value=0, max_value=20), max_size=8))
def test_coset_type_is_bi_invariant(n, word):
    h = hyperoctahedral_element(n, word)
    omega = tuple(reversed(range(2 * n)))
    assert coset_type(compose(h, omega)) == coset_type(omega) == coset_type(compose(omega, h))

@pytest.mark.parametrize("n", range(1, 4))
def test_histogram_rows_are_double_coset_sizes(oracle, n):
    histogram = oracle.coset_histogram(n)
    assert histogram.total == factorial(2 * n)
    for lam in enumerate_partitions(n):
        assert histogram.row_total(lam) == coset_size(lam)
    assert oracle.coset_histogram(n) is histogram

def test_histogram_with_worker_processes(oracle):
    pooled = OracleManager(OracleConfig(cap_class=3, cap_coset=2, threads=2))
    assert pooled.coset_histogram(2).counts == oracle.coset_histogram(2).counts

def test_class_convolution_rows(oracle):
    table = oracle.class_convolution_table(4, (2, 2))
    for lam in enumerate_partitions(4):
        assert sum(table[(lam, mu)] for mu in enumerate_partitions(4)) == class_size(lam)
    assert oracle.class_convolution((1, 1, 1, 1), (2, 2), (2, 2)) == 1

def test_double_coset_convolution_at_n2(oracle):
    assert oracle.double_coset_convolution((1, 1), (2,), (2,)) == 8
    assert oracle.double_coset_convolution((2,), (2,), (2,)) == 8
    assert oracle.double_coset_convolution((1, 1), (1, 1), (2,)) == 0

def test_caps_are_enforced(caplog):
    oracle = OracleManager(OracleConfig(cap_class=3, cap_coset=2))
    with pytest.raises(OracleCapExceeded, match="--oracle-cap-class"):
        oracle.class_convolution_table(4, (4,))
    with pytest.raises(OracleCapExceeded, match="ORACLE_CAP_COSET"):
        oracle.coset_histogram(3)
    assert "Refusing" in caplog.text

def test_hard_ceiling_overrides_configured_cap():
    oracle = OracleManager(OracleConfig(cap_class=99, cap_coset=99))
    with pytest.raises(OracleCapExceeded):
        oracle.check_class_cap(10)
    with pytest.raises(OracleCapExceeded):
        oracle.check_coset_cap(6)

def test_weight_mismatch_is_rejected(oracle):
    with pytest.raises(OracleException):
        oracle.class_convolution_table(3, (2,))
    with pytest.raises(OracleException):
        oracle.phi((2,), (1,))

def test_zonal_oracle_small_shapes(oracle):
    assert oracle.zonal_oracle((1,)) == MonomialExpansion(1, {(1,): 1})
    assert oracle.zonal_oracle((2,)) == MonomialExpansion(2, {(2,): 3, (1, 1): 2})
    assert oracle.zonal_oracle((1, 1)) == MonomialExpansion(2, {(1, 1): 2})

def test_semistandard_tableaux():
    assert len(semistandard_tableaux((2, 1), (1, 1, 1))) == 2
    assert semistandard_tableaux((2, 2), (2, 2)) == [[[1, 1], [2, 2]]]
    assert semistandard_tableaux((2,), (1,)) == []

@pytest.mark.parametrize("nu", [(2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_class_convolution_ignores_representative(oracle, nu):
    n = sum(nu)
    tables = [oracle.class_convolution_table(n, nu, gamma) for gamma in oracle.class_representatives(nu)]
    assert len(tables) > 1
    assert all(table == tables[0] for table in tables)

def test_double_coset_convolution_ignores_representative(oracle):
    representatives = oracle.coset_representatives((2,), count=3)
    assert len(representatives) == 3
    tables = [oracle.double_coset_convolution_table(2, (2,), omega) for omega in representatives]
    assert all(table == tables[0] for table in tables)

@settings(max_examples=100)
@given(st.integers(min_value=1, max_value=4), st.randoms(use_true_random=False))
def test_coset_type_of_random_triples(n, rng):
    left = random_hyperoctahedral_element(n, rng)
    right = random_hyperoctahedral_element(n, rng)
    sigma = tuple(rng.sample(range(2 * n), 2 * n))
    assert coset_type(compose(compose(left, sigma), right)) == coset_type(sigma)
