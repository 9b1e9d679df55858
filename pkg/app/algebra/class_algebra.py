"""Connection coefficients of the class algebra of S_n and the closed forms of
the top-class generating series.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

from app.algebra.arithmetic import Rational, as_integer, format_rational
from app.algebra.characters import CharacterManager
from app.algebra.partitions import (
    Partition,
    PartitionException,
    check_same_weight,
    class_size,
    enumerate_partitions,
    validate_partition,
    z_of,
)
from app.constants.log_messages import LogMessages
from app.dataclasses.series_table import SeriesCoefficientTable
from app.enums.series_kind import SeriesKind
from app.models.verification_report_model import IdentityCheck
from app.utils.get_current_timestamp import calculate_response_time

logger = logging.getLogger(__name__)

ConnectionTable = Dict[Tuple[Partition, Partition], int]

class ClassAlgebraException(Exception):
    """Custom exception for class-algebra errors"""
    pass

def expand_powersum_pairs(
    n: int,
    weights: Dict[Tuple[Partition, Partition], Rational],
    characters: CharacterManager,
) -> Dict[Tuple[Partition, Partition], Fraction]:
    """Rewrite sum w(lam, mu) p_lam(x) p_mu(y) in the basis m_alpha(x) m_beta(y).

    Returns every (alpha, beta) cell, zeros included.
    """
    partitions = enumerate_partitions(n)
    powersums = {lam: characters.powersum_to_monomial(lam) for lam in partitions}

    # half-transformed: sum over mu first, one row per lam
    inner = {
        (lam, beta): sum(
            (Fraction(weights.get((lam, mu), 0)) * powersums[mu][beta] for mu in partitions),
            Fraction(0),
        )
        for lam in partitions
        for beta in partitions
    }
    return {
        (alpha, beta): sum(
            (powersums[lam][alpha] * inner[(lam, beta)] for lam in partitions),
            Fraction(0),
        )
        for alpha in partitions
        for beta in partitions
    }

def first_mismatch(
    computed: Dict[Tuple[Partition, ...], Rational],
    expected: Callable[..., Rational],
) -> Optional[str]:
    for key, value in computed.items():
        target = expected(*key)
        if Fraction(value) != Fraction(target):
            cells = ", ".join(str(list(part)) if isinstance(part, tuple) else str(part) for part in key)
            return f"at ({cells}): got {format_rational(value)}, expected {format_rational(target)}"
    return None


class ClassAlgebraManager:
    """Structure constants c^nu_{lam,mu} of the centre of Q[S_n]."""

    def __init__(self, characters: Optional[CharacterManager] = None, threads: int = 1) -> None:
        self.characters = characters or CharacterManager()
        self.threads = threads

    def _validate(self, *partitions) -> Tuple[Tuple[Partition, ...], int]:
        try:
            validated = tuple(validate_partition(partition) for partition in partitions)
            n = check_same_weight(*validated)
        except PartitionException as err:
            raise ClassAlgebraException(str(err)) from err
        return validated, n

    def _checked_integer(self, value: Fraction, label: str) -> int:
        if value.denominator != 1:
            logger.error(LogMessages.NON_INTEGRAL_CONNECTION.format(value, label))
            raise ClassAlgebraException(f"non-integral connection coefficient {value} for {label}")
        if value < 0:
            logger.error(LogMessages.NEGATIVE_CONNECTION.format(value, label))
            raise ClassAlgebraException(f"negative connection coefficient {value} for {label}")
        return value.numerator

    def connection_c(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        """c^nu_{lam,mu} = n!/(z_lam z_mu) sum_alpha chi_lam chi_mu chi_nu / f^alpha."""
        (lam, mu, nu), n = self._validate(lam, mu, nu)
        total = Fraction(0)
        for alpha in enumerate_partitions(n):
            chi_nu = self.characters.character(alpha, nu)
            if not chi_nu:
                continue
            total += Fraction(
                self.characters.character(alpha, lam) * self.characters.character(alpha, mu) * chi_nu,
                self.characters.dimension(alpha),
            )
        value = total * factorial(n) / (z_of(lam) * z_of(mu))
        return self._checked_integer(value, f"c^{nu}_{lam},{mu}")

    def connection_c_top(self, lam: Partition, mu: Partition) -> int:
        """c^(n)_{lam,mu} from the hook characters alone.

        Only hooks (n-a, 1^a) have chi_(n) != 0, where it equals (-1)^a.
        """
        (lam, mu), n = self._validate(lam, mu)
        total = 0
        for a in range(n):
            total += (
                (-1) ** a * factorial(n - 1 - a) * factorial(a)
                * self.characters.hook_character(n, a, lam)
                * self.characters.hook_character(n, a, mu)
            )
        return self._checked_integer(Fraction(n * total, z_of(lam) * z_of(mu)), f"c^({n})_{lam},{mu}")

    def mv09_coefficient(self, lam: Partition, mu: Partition) -> int:
        """(n - l(lam))! (n - l(mu))! / (n + 1 - l(lam) - l(mu))!, zero when the last argument is negative."""
        (lam, mu), n = self._validate(lam, mu)
        rest = n + 1 - len(lam) - len(mu)
        if rest < 0:
            return 0
        return as_integer(Fraction(factorial(n - len(lam)) * factorial(n - len(mu)), factorial(rest)))

    def fv10_coefficient(self, lam: Partition) -> Fraction:
        """[m_lam] of sum_mu c^(n)_{mu,(n)} p_mu, i.e. n!/(n + 1 - l(lam))."""
        (lam,), n = self._validate(lam)
        return Fraction(factorial(n), n + 1 - len(lam))

    def top_connection_table(self, n: int) -> Dict[Tuple[Partition, Partition], int]:
        """c^(n)_{lam,mu} for every pair, in enumeration order."""
        pairs = [(lam, mu) for lam in enumerate_partitions(n) for mu in enumerate_partitions(n)]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            values = list(executor.map(lambda pair: self.connection_c_top(*pair), pairs))
        return dict(zip(pairs, values))

    def class_table(self, n: int, connections: Optional[ConnectionTable] = None) -> SeriesCoefficientTable:
        """[m_lam(x) m_mu(y)] of (1/n) sum c^(n)_{lam,mu} p_lam(x) p_mu(y).

        `connections` replaces the character formula, e.g. with brute-force counts.
        """
        if n < 1:
            raise ClassAlgebraException(f"n must be positive, got {n}")
        start_at = datetime.now()
        connections = connections if connections is not None else self.top_connection_table(n)
        weights = {pair: Fraction(value, n) for pair, value in connections.items()}
        table = SeriesCoefficientTable(
            n=n,
            kind=SeriesKind.CLASS.value,
            normalization="1/n",
            entries=expand_powersum_pairs(n, weights, self.characters),
        )
        logger.info(LogMessages.TABLE_DONE.format(SeriesKind.CLASS.value, n, len(table.entries), calculate_response_time(start_at)))
        return table

    def verify_mv09(self, n: int, connections: Optional[ConnectionTable] = None) -> List[IdentityCheck]:
        """Expand the top-class series and compare every cell with the closed form."""
        table = self.class_table(n, connections)
        detail = first_mismatch(table.entries, self.mv09_coefficient)
        checks = [IdentityCheck(identity="class series = (n-l)!(n-l')!/(n+1-l-l')!", n=n, passed=detail is None, detail=detail)]

        # unnormalised series: the m_lam(x) m_n(y) coefficient is n!
        top_detail = first_mismatch(
            {(lam,): n * table[(lam, (n,))] for lam in enumerate_partitions(n)},
            lambda lam: factorial(n),
        )
        checks.append(IdentityCheck(identity="[m_lam m_n] of sum c p p = n!", n=n, passed=top_detail is None, detail=top_detail))
        return checks

    def verify_fv10(self, n: int) -> List[IdentityCheck]:
        """sum_mu c^(n)_{mu,(n)} p_mu = sum_lam n!/(n+1-l(lam)) m_lam."""
        series = None
        for mu in enumerate_partitions(n):
            term = self.characters.powersum_to_monomial(mu).scale(self.connection_c_top(mu, (n,)))
            series = term if series is None else series + term
        detail = first_mismatch({(lam,): series[lam] for lam in enumerate_partitions(n)}, self.fv10_coefficient)
        return [IdentityCheck(identity="sum c^n_(mu,n) p_mu = n!/(n+1-l) m", n=n, passed=detail is None, detail=detail)]

    def verify_connection_consistency(self, n: int) -> List[IdentityCheck]:
        """Hook reduction agrees with the full character sum; row sums equal class sizes."""
        top = (n,)
        partitions = enumerate_partitions(n)
        detail = first_mismatch(
            {(lam, mu): self.connection_c_top(lam, mu) for lam in partitions for mu in partitions},
            lambda lam, mu: self.connection_c(lam, mu, top),
        )
        row_detail = first_mismatch(
            {(lam,): sum(self.connection_c_top(lam, mu) for mu in partitions) for lam in partitions},
            class_size,
        )
        return [
            IdentityCheck(identity="hook reduction = character sum", n=n, passed=detail is None, detail=detail),
            IdentityCheck(identity="sum_mu c^n_(lam,mu) = |C_lam|", n=n, passed=row_detail is None, detail=row_detail),
        ]
