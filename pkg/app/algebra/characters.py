"""Irreducible characters of S_n and the basis changes built on them."""
import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from app.algebra.arithmetic import binomial
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.partitions import (
    Partition,
    PartitionException,
    check_same_weight,
    enumerate_partitions,
    hook,
    hook_product,
    validate_partition,
    z_of,
)
from app.constants.log_messages import LogMessages

logger = logging.getLogger(__name__)

class CharacterException(Exception):
    """Custom exception for character evaluation errors"""
    pass

def remove_rim_hooks(partition: Partition, size: int) -> List[Tuple[Partition, int]]:
    """Every way to strip a rim hook of `size` boxes, as (remaining shape, leg length).

    Works on the beta-set {lambda_i + l - i}: a rim hook of size k is a bead
    sliding from x down to an empty position x - k, and its leg length is the
    number of beads jumped over.
    """
    count = len(partition)
    beta = [part + count - 1 - i for i, part in enumerate(partition)]
    occupied = set(beta)
    result = []
    for bead in beta:
        target = bead - size
        if target < 0 or target in occupied:
            continue
        height = sum(1 for other in beta if target < other < bead)
        moved = sorted((target if other == bead else other for other in beta), reverse=True)
        shape = tuple(value - (count - 1 - i) for i, value in enumerate(moved))
        result.append((tuple(part for part in shape if part > 0), height))
    return result

@lru_cache(maxsize=None)
def powersum_monomial_coefficient(mu: Partition, lam: Partition) -> int:
    """[m_lam] p_mu: ways to send each part of mu to a row of lam so rows fill exactly."""

    @lru_cache(maxsize=None)
    def fill(index: int, remaining: Tuple[int, ...]) -> int:
        if index == len(mu):
            return 1 if not any(remaining) else 0
        part = mu[index]
        total = 0
        for row, capacity in enumerate(remaining):
            if capacity >= part:
                reduced = remaining[:row] + (capacity - part,) + remaining[row + 1:]
                total += fill(index + 1, tuple(sorted(reduced, reverse=True)))
        return total

    if sum(mu) != sum(lam):
        return 0
    return fill(0, tuple(lam))


class CharacterManager:
    """Murnaghan-Nakayama character values with a per-instance memo.

    One manager is one computation context; its cache is guarded by a lock
    so table workers can share it.
    """

    def __init__(self) -> None:
        self._cache: Dict[Tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    def _validate_pair(self, lam, mu) -> Tuple[Partition, Partition]:
        try:
            lam = validate_partition(lam)
            mu = validate_partition(mu)
            check_same_weight(lam, mu)
        except PartitionException as err:
            raise CharacterException(f"cannot evaluate character: {err}") from err
        return lam, mu

    def character(self, lam: Partition, mu: Partition) -> int:
        """chi^lam evaluated on the class of cycle type mu."""
        lam, mu = self._validate_pair(lam, mu)
        return self._character(lam, mu)

    def _character(self, lam: Partition, mu: Partition) -> int:
        if not mu:
            return 1 if not lam else 0
        key = (lam, mu)
        with self._lock:
            if key in self._cache:
                return self._cache[key]

        rest = mu[1:]
        value = sum(
            (-1) ** height * self._character(shape, rest)
            for shape, height in remove_rim_hooks(lam, mu[0])
        )
        with self._lock:
            self._cache[key] = value
        return value

    def cache_size(self) -> int:
        with self._lock:
            size = len(self._cache)
        logger.debug(LogMessages.CHARACTER_CACHE.format(size))
        return size

    def dimension(self, lam: Partition) -> int:
        """f^lam, by the hook length formula."""
        return factorial(sum(lam)) // hook_product(tuple(lam))

    def character_table(self, n: int) -> Dict[Tuple[Partition, Partition], int]:
        partitions = enumerate_partitions(n)
        return {(lam, mu): self._character(lam, mu) for lam in partitions for mu in partitions}

    def kostka_hook(self, a: int, lam: Partition) -> int:
        """K_{(n-a,1^a), lam} = C(l(lam) - 1, a)."""
        n = sum(lam)
        if not 0 <= a <= n - 1:
            raise CharacterException(f"hook leg {a} out of range for n={n}")
        return binomial(len(lam) - 1, a)

    def powersum_to_monomial(self, mu: Partition) -> MonomialExpansion:
        mu = validate_partition(mu)
        n = sum(mu)
        return MonomialExpansion(
            n, {lam: powersum_monomial_coefficient(mu, lam) for lam in enumerate_partitions(n)}
        )

    def schur_hook_to_monomial(self, a: int, n: int) -> MonomialExpansion:
        """s_{(n-a,1^a)} = sum over lam of K_{(n-a,1^a), lam} m_lam."""
        if n < 1:
            raise CharacterException(f"n must be positive, got {n}")
        return MonomialExpansion(n, {lam: self.kostka_hook(a, lam) for lam in enumerate_partitions(n)})

    def schur_via_powersums(self, lam: Partition) -> MonomialExpansion:
        """s_lam = sum_mu chi^lam_mu / z_mu p_mu, expanded in monomials."""
        lam = validate_partition(lam)
        n = sum(lam)
        result = MonomialExpansion(n)
        for mu in enumerate_partitions(n):
            value = self._character(lam, mu)
            if value:
                result = result + self.powersum_to_monomial(mu).scale(Fraction(value, z_of(mu)))
        return result

    def hook_character(self, n: int, a: int, mu: Partition) -> int:
        return self.character(hook(n, a), mu)
