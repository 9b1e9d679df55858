"""Integer partitions, Young-diagram box statistics and the normalising
products built from them.

A partition is a plain tuple of positive integers in weakly decreasing
order; `()` is the unique partition of 0. Enumeration is reverse
lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""
import logging
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, List, Optional, Tuple

from app.constants.app_messages import AppMessages
from app.dataclasses.box_stats import BoxStats

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
Box = Tuple[int, int]

class PartitionException(Exception):
    """Raised for sequences that are not partitions or have the wrong weight"""
    pass

def validate_partition(parts: Iterable[int], n: Optional[int] = None) -> Partition:
    """Return `parts` as a Partition, checking order, positivity and weight."""
    parts = tuple(int(part) for part in parts)
    if any(part < 1 for part in parts):
        raise PartitionException(f"{parts} has a non-positive part")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PartitionException(f"{parts} is not weakly decreasing")
    if n is not None and sum(parts) != n:
        raise PartitionException(AppMessages.WEIGHT_MISMATCH.format(parts, sum(parts), n))
    return parts

def check_same_weight(*partitions: Partition) -> int:
    """Common weight of `partitions`; raises PartitionException when they differ."""
    weights = {sum(partition) for partition in partitions}
    if len(weights) != 1:
        raise PartitionException(f"partitions {partitions} have different weights {sorted(weights)}")
    return weights.pop()

@lru_cache(maxsize=None)
def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Tuple[Partition, ...]:
    """All partitions of n with parts at most `max_part`, reverse lexicographic."""
    if n < 0:
        raise PartitionException(f"cannot enumerate partitions of {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    result: List[Partition] = []
    for first in range(max_part, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)

@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - first)
        second = k * (3 * k + 1) // 2
        if second <= n:
            total += sign * partition_count(n - second)
        k += 1
    return total

def length(partition: Partition) -> int:
    return len(partition)

def multiplicities(partition: Partition) -> Counter:
    """m_i(partition) for each part size i that occurs."""
    return Counter(partition)

def z_of(partition: Partition) -> int:
    """prod_i i^{m_i} m_i!, the centraliser order of a permutation of this cycle type."""
    return prod(part ** count * factorial(count) for part, count in multiplicities(partition).items())

def aut_of(partition: Partition) -> int:
    """prod_i m_i!, the number of orderings of the parts that fix the partition."""
    return prod(factorial(count) for count in multiplicities(partition).values())

def class_size(partition: Partition) -> int:
    """Size of the conjugacy class of S_n with this cycle type."""
    return factorial(sum(partition)) // z_of(partition)

def hyperoctahedral_order(n: int) -> int:
    """|B_n| = 2^n n!."""
    return 2 ** n * factorial(n)

def coset_size(partition: Partition) -> int:
    """|K_partition| = |B_n|^2 / (2^l z), the size of the double coset."""
    order = hyperoctahedral_order(sum(partition))
    return order * order // (2 ** len(partition) * z_of(partition))

def hook(n: int, a: int) -> Partition:
    """The hook (n - a, 1^a)."""
    if not 0 <= a <= n - 1:
        raise PartitionException(f"no hook (n-a, 1^a) with n={n}, a={a}")
    return (n - a,) + (1,) * a

def double(partition: Partition) -> Partition:
    return tuple(2 * part for part in partition)

def conjugate(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part > column) for column in range(partition[0]))

def boxes(partition: Partition) -> List[Tuple[Box, BoxStats]]:
    """Every box (row, column), 1-based, with its arm, leg, co-arm and co-leg."""
    columns = conjugate(partition)
    result = []
    for row, part in enumerate(partition, start=1):
        for column in range(1, part + 1):
            result.append((
                (row, column),
                BoxStats(arm=part - column, leg=columns[column - 1] - row, coarm=column - 1, coleg=row - 1),
            ))
    return result

def hook_product(partition: Partition) -> int:
    """Product of the hook lengths a(s) + l(s) + 1."""
    return prod(stats.arm + stats.leg + 1 for _, stats in boxes(partition))

def c_products(partition: Partition) -> Tuple[int, int, int]:
    """(c, c', H) with c = prod(2a+l+1), c' = prod(2a+l+2) and H = c c'.

    H is also the hook product of the doubled partition; a disagreement
    means the box statistics are wrong.
    """
    stats = [box_stats for _, box_stats in boxes(partition)]
    c = prod(2 * s.arm + s.leg + 1 for s in stats)
    c_prime = prod(2 * s.arm + s.leg + 2 for s in stats)
    h_double = c * c_prime
    expected = hook_product(double(partition))
    if h_double != expected:
        logger.error(f"c*c' = {h_double} but hook product of {double(partition)} is {expected}")
        raise PartitionException(f"inconsistent box statistics for {partition}")
    return c, c_prime, h_double

def is_near_hook(partition: Partition) -> bool:
    """True for (a, b, 1^c): every part after the second equals 1."""
    return bool(partition) and all(part == 1 for part in partition[2:])

def near_hooks(n: int) -> List[Partition]:
    """Near hooks of weight n in the same reverse lexicographic order."""
    return [partition for partition in enumerate_partitions(n) if is_near_hook(partition)]

def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of `inner` sits inside the diagram of `outer`."""
    if len(inner) > len(outer):
        return False
    return all(inner_part <= outer_part for inner_part, outer_part in zip(inner, outer))

def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """outer/inner has at most one box in each column."""
    if not contains(outer, inner):
        return False
    padded = inner + (0,) * (len(outer) - len(inner))
    return all(outer[i + 1] <= padded[i] for i in range(len(outer) - 1))
