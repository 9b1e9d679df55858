import pytest
from hypothesis import given, strategies as st

from app.algebra.arithmetic import binomial, double_factorial, format_rational, multinomial
from app.algebra.partitions import (
    PartitionException,
    aut_of,
    boxes,
    c_products,
    class_size,
    conjugate,
    coset_size,
    double,
    enumerate_partitions,
    hook,
    hook_product,
    hyperoctahedral_order,
    is_horizontal_strip,
    is_near_hook,
    near_hooks,
    partition_count,
    validate_partition,
    z_of,
)
from app.utils.partition_format import format_partition, parse_partition

partitions = st.integers(min_value=1, max_value=8).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))

def test_enumeration_is_reverse_lexicographic():
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert enumerate_partitions(0) == ((),)

@pytest.mark.parametrize("n", range(0, 13))
def test_partition_count_matches_enumeration(n):
    assert partition_count(n) == len(enumerate_partitions(n))

def test_validate_rejects_bad_sequences():
    with pytest.raises(PartitionException):
        validate_partition((1, 2))
    with pytest.raises(PartitionException):
        validate_partition((2, 0))
    with pytest.raises(PartitionException):
        validate_partition((2, 1), n=4)

@given(partitions)
def test_conjugate_is_an_involution(partition):
    assert conjugate(conjugate(partition)) == partition
    assert sum(conjugate(partition)) == sum(partition)

@given(partitions)
def test_class_sizes_sum_to_factorial(partition):
    n = sum(partition)
    assert sum(class_size(lam) for lam in enumerate_partitions(n)) == hyperoctahedral_order(n) // 2 ** n

@given(partitions)
def test_coset_sizes_partition_s2n(partition):
    n = sum(partition)
    total = sum(coset_size(lam) for lam in enumerate_partitions(n))
    assert total == hyperoctahedral_order(n) * double_factorial(2 * n - 1)

@given(partitions)
def test_c_products_match_hook_product_of_double(partition):
    c, c_prime, h_double = c_products(partition)
    assert c * c_prime == h_double == hook_product(double(partition))

def test_small_normalising_products():
    assert z_of((2, 1, 1)) == 4
    assert z_of((2, 2, 1)) == 8
    assert aut_of((4, 4, 4, 1)) == 6
    assert aut_of((2, 2, 1, 1, 1)) == 12
    assert aut_of((5,)) == 1
    assert class_size((2, 1, 1)) == 6
    assert hyperoctahedral_order(3) == 48
    assert coset_size((2,)) == 16
    assert c_products((1, 1)) == (2, 6, 12)
    assert c_products((2,)) == (3, 8, 24)

def test_box_statistics():
    stats = dict(boxes((2, 1)))
    assert (stats[(1, 1)].arm, stats[(1, 1)].leg) == (1, 1)
    assert (stats[(2, 1)].coarm, stats[(2, 1)].coleg) == (0, 1)
    assert hook_product((2, 1)) == 3

def test_hooks_and_near_hooks():
    assert hook(4, 2) == (2, 1, 1)
    with pytest.raises(PartitionException):
        hook(4, 4)
    assert is_near_hook((3, 2, 1, 1))
    assert not is_near_hook((2, 2, 2))
    assert near_hooks(4) == list(enumerate_partitions(4))
    assert (2, 2, 2) not in near_hooks(6)
    assert len(near_hooks(6)) == 10

def test_horizontal_strips():
    assert is_horizontal_strip((3, 1), (1,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert not is_horizontal_strip((2,), (3,))

def test_arithmetic_helpers():
    assert binomial(5, 7) == 0
    assert double_factorial(-1) == double_factorial(0) == 1
    assert double_factorial(7) == 105
    assert multinomial(4, (2, 1, 1)) == 12
    assert format_rational(6) == "6"

def test_parse_partition():
    assert parse_partition("3.1.1", 5) == (3, 1, 1)
    assert parse_partition("0") == ()
    assert format_partition(()) == "0"
    assert format_partition((4, 1)) == "4.1"

@pytest.mark.parametrize("text", ["3..1", "1.2", "a.b", "2.-1"])
def test_parse_partition_rejects_malformed_text(text):
    with pytest.raises(PartitionException, match="malformed"):
        parse_partition(text)

def test_parse_partition_checks_weight():
    with pytest.raises(PartitionException, match="expected n=5"):
        parse_partition("3.1", 5)
