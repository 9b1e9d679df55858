"""Brute-force ground truth over S_n and S_2n.

Permutations are 0-based image tuples: `perm[i]` is the image of point i.
The fixed matching is f*(i) = i ^ 1, pairing {0,1}, {2,3}, ...
"""
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from app.algebra.characters import CharacterManager
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.partitions import (
    Partition,
    PartitionException,
    check_same_weight,
    double,
    enumerate_partitions,
    hyperoctahedral_order,
    validate_partition,
)
from app.configs.oracle_config import OracleConfig
from app.constants.app_constants import AppConstants
from app.constants.app_messages import AppMessages
from app.constants.log_messages import LogMessages
from app.dataclasses.coset_histogram import CosetHistogram
from app.enums.env_keys import EnvKeys
from app.utils.get_current_timestamp import calculate_response_time

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Tableau = List[List[int]]

class OracleException(Exception):
    """Custom exception for brute-force oracle errors"""
    pass

class OracleCapExceeded(OracleException):
    """Raised when an enumeration is refused because n is above the configured cap"""
    pass

def identity(m: int) -> Permutation:
    return tuple(range(m))

def inverse(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for point, image in enumerate(perm):
        result[image] = point
    return tuple(result)

def compose(left: Permutation, right: Permutation) -> Permutation:
    """left o right: apply `right` first."""
    return tuple(left[image] for image in right)

def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        size = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))

def from_cycles(m: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation of m points from disjoint 0-based cycles."""
    images = list(range(m))
    for cycle in cycles:
        for position, point in enumerate(cycle):
            images[point] = cycle[(position + 1) % len(cycle)]
    return tuple(images)

def canonical_class_element(cycle_shape: Partition) -> Permutation:
    """Cycles of decreasing length on consecutive points."""
    cycles = []
    start = 0
    for part in cycle_shape:
        cycles.append(range(start, start + part))
        start += part
    return from_cycles(start, cycles)

def matching(n: int) -> Permutation:
    """The fixed-point-free involution f* = (0 1)(2 3)...(2n-2 2n-1)."""
    return tuple(point ^ 1 for point in range(2 * n))

def coset_type(omega: Sequence[int]) -> Partition:
    """Half of the paired cycle type of f* omega f* omega^-1."""
    omega_inverse = inverse(tuple(omega))
    product = [omega[image ^ 1] ^ 1 for image in omega_inverse]
    counts = Counter(cycle_type(product))
    if any(count % 2 for count in counts.values()):
        logger.error(LogMessages.UNPAIRED_COSET_TYPE.format(cycle_type(product)))
        raise OracleException(f"cycle type {cycle_type(product)} of f*wf*w^-1 is not paired")
    return tuple(sorted((part for part, count in counts.items() for _ in range(count // 2)), reverse=True))

def hyperoctahedral_generators(n: int) -> List[Permutation]:
    """Within-pair swaps (2k 2k+1) and adjacent pair swaps; they generate B_n."""
    m = 2 * n
    generators = [from_cycles(m, [(2 * k, 2 * k + 1)]) for k in range(n)]
    generators += [from_cycles(m, [(2 * k, 2 * k + 2), (2 * k + 1, 2 * k + 3)]) for k in range(n - 1)]
    return generators

def hyperoctahedral_element(n: int, word: Sequence[int]) -> Permutation:
    """Product of the generators indexed by `word` (indices taken modulo their count)."""
    generators = hyperoctahedral_generators(n)
    element = identity(2 * n)
    for letter in word:
        element = compose(generators[letter % len(generators)], element)
    return element

def random_hyperoctahedral_element(n: int, rng: random.Random, length: Optional[int] = None) -> Permutation:
    length = length if length is not None else 4 * n + 4
    return hyperoctahedral_element(n, [rng.randrange(3 * n) for _ in range(length)])

def _histogram_shard(n: int, first: int) -> Counter:
    """(coset type, cycle type) counts over the permutations of S_2n sending 0 to `first`."""
    others = [point for point in range(2 * n) if point != first]
    counts: Counter = Counter()
    for rest in permutations(others):
        omega = (first,) + rest
        counts[(coset_type(omega), cycle_type(omega))] += 1
    return counts

def semistandard_tableaux(shape: Partition, content: Sequence[int]) -> List[Tableau]:
    """Column-strict tableaux of `shape` whose label i+1 occurs content[i] times.

    Fills cells row by row, trying each label still available.
    """
    cells = [(row, column) for row, part in enumerate(shape) for column in range(part)]
    if sum(content) != len(cells):
        return []
    tableau = [[0] * part for part in shape]
    remaining = list(content)
    results: List[Tableau] = []

    def fits(row: int, column: int, label: int) -> bool:
        if column > 0 and label < tableau[row][column - 1]:
            return False
        if row > 0 and label <= tableau[row - 1][column]:
            return False
        return True

    def backtrack(position: int) -> None:
        if position == len(cells):
            results.append([row[:] for row in tableau])
            return
        row, column = cells[position]
        for index, count in enumerate(remaining):
            label = index + 1
            if not count or not fits(row, column, label):
                continue
            tableau[row][column] = label
            remaining[index] -= 1
            backtrack(position + 1)
            remaining[index] += 1
            tableau[row][column] = 0

    backtrack(0)
    return results


class OracleManager:
    """Counts factorisations and tabulates spherical sums by enumeration."""

    def __init__(self, config: OracleConfig, characters: Optional[CharacterManager] = None) -> None:
        self.config = config
        self.characters = characters or CharacterManager()
        self._histograms: Dict[int, CosetHistogram] = {}

    def _check_cap(self, kind: str, n: int) -> None:
        if kind == "class":
            cap = min(self.config.cap_class, AppConstants.MAX_CLASS_ORACLE_N)
            flag, key = "--oracle-cap-class", EnvKeys.ORACLE_CAP_CLASS.value
        else:
            cap = min(self.config.cap_coset, AppConstants.MAX_COSET_ORACLE_N)
            flag, key = "--oracle-cap-coset", EnvKeys.ORACLE_CAP_COSET.value
        if n > cap:
            logger.warning(LogMessages.CAP_REFUSED.format(kind, n, cap))
            raise OracleCapExceeded(AppMessages.OVER_CAP.format(n, kind, cap, flag, key))

    def check_class_cap(self, n: int) -> None:
        self._check_cap("class", n)

    def check_coset_cap(self, n: int) -> None:
        self._check_cap("coset", n)

    def _validate(self, *partitions) -> Tuple[Tuple[Partition, ...], int]:
        try:
            validated = tuple(validate_partition(partition) for partition in partitions)
            return validated, check_same_weight(*validated)
        except PartitionException as err:
            raise OracleException(str(err)) from err

    def class_representatives(self, nu: Partition, count: int = 3) -> List[Permutation]:
        """The canonical element of C_nu followed by conjugates of it by rotations."""
        gamma = canonical_class_element(tuple(nu))
        m = len(gamma)
        result = [gamma]
        for shift in range(1, m):
            if len(result) >= count:
                break
            rotation = tuple((point + shift) % m for point in range(m))
            conjugate = compose(compose(rotation, gamma), inverse(rotation))
            if conjugate not in result:
                result.append(conjugate)
        return result

    def class_convolution_table(self, n: int, nu: Partition, gamma: Optional[Permutation] = None) -> Dict[Tuple[Partition, Partition], int]:
        """c^nu_{lam,mu} for every (lam, mu), from one pass over S_n."""
        self.check_class_cap(n)
        (nu,), weight = self._validate(nu)
        if weight != n:
            raise OracleException(AppMessages.WEIGHT_MISMATCH.format(nu, weight, n))
        start_at = datetime.now()
        gamma = gamma or canonical_class_element(nu)
        counts: Counter = Counter()
        for alpha in permutations(range(n)):
            counts[(cycle_type(alpha), cycle_type(compose(inverse(alpha), gamma)))] += 1
        logger.info(LogMessages.CONVOLUTION_DONE.format("class", n, nu, calculate_response_time(start_at)))
        partitions = enumerate_partitions(n)
        return {(lam, mu): counts.get((lam, mu), 0) for lam in partitions for mu in partitions}

    def class_convolution(self, lam: Partition, mu: Partition, nu: Partition, gamma: Optional[Permutation] = None) -> int:
        """Number of alpha in C_lam with alpha^-1 gamma in C_mu, for a fixed gamma in C_nu."""
        (lam, mu, nu), n = self._validate(lam, mu, nu)
        return self.class_convolution_table(n, nu, gamma)[(lam, mu)]

    def coset_representatives(self, nu: Partition, count: int = 1) -> List[Permutation]:
        """The first `count` elements of K_nu in enumeration order."""
        (nu,), n = self._validate(nu)
        self.check_coset_cap(n)
        result = []
        for omega in permutations(range(2 * n)):
            if coset_type(omega) == nu:
                result.append(omega)
                if len(result) == count:
                    break
        return result

    def double_coset_convolution_table(self, n: int, nu: Partition, omega: Optional[Permutation] = None) -> Dict[Tuple[Partition, Partition], int]:
        """b^nu_{lam,mu} for every (lam, mu), from one pass over S_2n."""
        self.check_coset_cap(n)
        (nu,), weight = self._validate(nu)
        if weight != n:
            raise OracleException(AppMessages.WEIGHT_MISMATCH.format(nu, weight, n))
        start_at = datetime.now()
        omega = omega or self.coset_representatives(nu)[0]
        counts: Counter = Counter()
        for sigma in permutations(range(2 * n)):
            counts[(coset_type(sigma), coset_type(compose(inverse(sigma), omega)))] += 1
        logger.info(LogMessages.CONVOLUTION_DONE.format("double coset", n, nu, calculate_response_time(start_at)))
        partitions = enumerate_partitions(n)
        return {(lam, mu): counts.get((lam, mu), 0) for lam in partitions for mu in partitions}

    def double_coset_convolution(self, lam: Partition, mu: Partition, nu: Partition, omega: Optional[Permutation] = None) -> int:
        """Number of sigma in K_lam with sigma^-1 omega in K_mu, for a fixed omega in K_nu."""
        (lam, mu, nu), n = self._validate(lam, mu, nu)
        return self.double_coset_convolution_table(n, nu, omega)[(lam, mu)]

    def coset_histogram(self, n: int) -> CosetHistogram:
        """Counts of S_2n by (coset type, cycle type), cached per n."""
        self.check_coset_cap(n)
        if n in self._histograms:
            return self._histograms[n]

        start_at = datetime.now()
        logger.info(LogMessages.HISTOGRAM_START.format(2 * n, self.config.threads))
        histogram = CosetHistogram(n=n)
        firsts = list(range(2 * n))
        if self.config.threads > 1:
            with ProcessPoolExecutor(max_workers=self.config.threads) as executor:
                shards = list(executor.map(_histogram_shard, [n] * len(firsts), firsts))
        else:
            shards = [_histogram_shard(n, first) for first in firsts]
        for shard in shards:
            histogram.counts.update(shard)

        logger.info(LogMessages.HISTOGRAM_DONE.format(n, histogram.total, calculate_response_time(start_at)))
        self._histograms[n] = histogram
        return histogram

    def phi(self, beta: Partition, mu: Partition) -> int:
        """sum over w in K_mu of chi^{2 beta}(w), read off the histogram."""
        (beta, mu), n = self._validate(beta, mu)
        row = self.coset_histogram(n).row(mu)
        doubled = double(beta)
        return sum(count * self.characters.character(doubled, shape) for shape, count in row.items())

    def zonal_oracle(self, beta: Partition) -> MonomialExpansion:
        """Z_beta = |B_n|^-1 sum_lam phi^beta_lam p_lam."""
        (beta,), n = self._validate(beta)
        result = MonomialExpansion(n)
        for lam in enumerate_partitions(n):
            value = self.phi(beta, lam)
            if value:
                result = result + self.characters.powersum_to_monomial(lam).scale(Fraction(value, hyperoctahedral_order(n)))
        return result

    def count_tableaux(self, shape: Partition, content: Sequence[int]) -> int:
        return len(semistandard_tableaux(tuple(shape), content))
