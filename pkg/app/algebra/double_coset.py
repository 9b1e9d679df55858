"""Connection coefficients of the double-coset algebra of B_n in S_2n and the
generating series built from near-hook zonal polynomials.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from fractions import Fraction
from math import factorial, prod
from typing import List, Optional, Tuple

from app.algebra.arithmetic import as_integer, double_factorial, multinomial
from app.algebra.class_algebra import ConnectionTable, expand_powersum_pairs, first_mismatch
from app.algebra.characters import CharacterManager
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.oracle import OracleManager
from app.algebra.partitions import (
    Partition,
    PartitionException,
    boxes,
    c_products,
    check_same_weight,
    coset_size,
    enumerate_partitions,
    hook,
    hyperoctahedral_order,
    validate_partition,
)
from app.algebra.zonal_nearhook import ZonalNearHookManager, r_n, r_prime_n
from app.constants.log_messages import LogMessages
from app.dataclasses.near_hook import NearHook
from app.dataclasses.series_table import SeriesCoefficientTable
from app.enums.series_kind import SeriesKind
from app.models.verification_report_model import IdentityCheck
from app.utils.get_current_timestamp import calculate_response_time

logger = logging.getLogger(__name__)

class DoubleCosetException(Exception):
    """Custom exception for double-coset algebra errors"""
    pass

def closed_form_npone(n: int, p: int) -> int:
    """[m_(n-p,1^p)(x) m_(n-p,1^p)(y)] of the top double-coset series, zero unless 2p <= n-1."""
    if 2 * p > n - 1:
        return 0
    ratio = Fraction(factorial(n - p - 1), factorial(n - 2 * p))
    value = n * (n - 2 * p) * ratio ** 2 * double_factorial(2 * n - 4 * p - 1)
    return as_integer(value)

def mlambda_n_closed_form(lam: Partition) -> int:
    """C(n; lam) prod (2 lam_i - 1)!!, the [m_lam(x) m_n(y)] coefficient."""
    n = sum(lam)
    return multinomial(n, lam) * prod(double_factorial(2 * part - 1) for part in lam)

def pi_table_closed_forms(n: int) -> List[Tuple[str, Partition, Fraction]]:
    """Known [m_lam] Pi_n values, as (label, lam, value), for the rows that exist at this n."""
    df = double_factorial
    rows: List[Tuple[str, Partition, Fraction]] = [
        ("(n)", (n,), Fraction(df(2 * n - 2))),
        ("(1^n)", (1,) * n, Fraction(factorial(n))),
    ]
    if n >= 2:
        rows.append(("(n-1,1)", (n - 1, 1), Fraction(n * df(2 * n - 4))))
    if n >= 3:
        rows.append(("(n-2,1,1)", (n - 2, 1, 1), Fraction(n * (n - 1) * df(2 * n - 6))))
    if n >= 4:
        rows.append(("(n-3,1,1,1)", (n - 3, 1, 1, 1), Fraction(n * (n - 1) * (n - 2) * df(2 * n - 8))))
        rows.append(("(n-2,2)", (n - 2, 2), Fraction(n * df(2 * n - 6) * (3 * n - 5), 2)))
    if n >= 6:
        rows.append(("(n-3,3)", (n - 3, 3), Fraction(n * df(2 * n - 8) * (5 * n * n - 21 * n + 20), 2)))
    if n >= 8:
        rows.append((
            "(n-4,4)", (n - 4, 4),
            Fraction(n * df(2 * n - 10) * (35 * n ** 3 - 270 * n ** 2 + 649 * n - 486), 8),
        ))
    return rows


class DoubleCosetManager:
    """Structure constants b^nu_{lam,mu} and the top double-coset series."""

    def __init__(
        self,
        oracle: OracleManager,
        zonal: Optional[ZonalNearHookManager] = None,
        characters: Optional[CharacterManager] = None,
        threads: int = 1,
    ) -> None:
        self.oracle = oracle
        self.characters = characters or oracle.characters
        self.zonal = zonal or ZonalNearHookManager(threads=threads)
        self.threads = threads

    def _validate(self, *partitions) -> Tuple[Tuple[Partition, ...], int]:
        try:
            validated = tuple(validate_partition(partition) for partition in partitions)
            return validated, check_same_weight(*validated)
        except PartitionException as err:
            raise DoubleCosetException(str(err)) from err

    def phi(self, beta: Partition, mu: Partition) -> int:
        """phi^beta_mu = sum over K_mu of chi^{2 beta}, from the coset histogram."""
        (beta, mu), _ = self._validate(beta, mu)
        return self.oracle.phi(beta, mu)

    def phi_top(self, lam: Partition) -> int:
        """phi^lam_(n) = |B_n| prod (2a'(s) - l'(s)) over the boxes other than (1,1)."""
        (lam,), n = self._validate(lam)
        product = prod(
            2 * stats.coarm - stats.coleg
            for box, stats in boxes(lam)
            if box != (1, 1)
        )
        return hyperoctahedral_order(n) * product

    def phi_top_nearhook(self, shape: NearHook) -> int:
        """Closed form of phi_top on (a, b, 1^c), checked against the box product."""
        a, b, c = shape.a, shape.b, shape.c
        if b > 0:
            product = (-1) ** (c + 1) * factorial(c + 1) * double_factorial(2 * a - 2) * double_factorial(2 * b - 3)
        else:
            product = double_factorial(2 * a - 2)
        value = hyperoctahedral_order(shape.weight) * product
        expected = self.phi_top(shape.parts)
        if value != expected:
            logger.error(LogMessages.PHI_TOP_MISMATCH.format(value, expected, shape))
            raise DoubleCosetException(f"phi_top mismatch for {shape}: {value} vs {expected}")
        return value

    def connection_b(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        """b^nu_{lam,mu} = (1/|K_nu|) sum_beta phi_lam phi_mu phi_nu / H_{2 beta}."""
        (lam, mu, nu), n = self._validate(lam, mu, nu)
        self.oracle.check_coset_cap(n)
        total = Fraction(0)
        for beta in enumerate_partitions(n):
            phi_nu = self.phi(beta, nu)
            if not phi_nu:
                continue
            _, _, h_double = c_products(beta)
            total += Fraction(self.phi(beta, lam) * self.phi(beta, mu) * phi_nu, h_double)
        value = total / coset_size(nu)
        label = f"b^{nu}_{lam},{mu}"
        if value.denominator != 1:
            logger.error(LogMessages.NON_INTEGRAL_CONNECTION.format(value, label))
            raise DoubleCosetException(f"non-integral connection coefficient {value} for {label}")
        if value < 0:
            logger.error(LogMessages.NEGATIVE_CONNECTION.format(value, label))
            raise DoubleCosetException(f"negative connection coefficient {value} for {label}")
        return value.numerator

    def connection_b_table(self, n: int, nu: Partition) -> ConnectionTable:
        partitions = enumerate_partitions(n)
        return {(lam, mu): self.connection_b(lam, mu, nu) for lam in partitions for mu in partitions}

    def main_series_coefficient(self, lam: Partition, mu: Partition) -> Fraction:
        """[m_lam(x) m_mu(y)] of (1/|B_n|) sum b^(n)_{lam',mu'} p_lam'(x) p_mu'(y).

        Sums r_n(a, b) times the filling sums of lam and mu over the near hooks.
        """
        (lam, mu), n = self._validate(lam, mu)
        total = Fraction(0)
        for shape in self.zonal.near_hook_shapes(n):
            left = self.zonal.filling_sum(shape, lam)
            if not left:
                continue
            right = self.zonal.filling_sum(shape, mu)
            if right:
                total += r_n(shape.a, shape.b, n) * left * right
        return total

    def doublecoset_table(self, n: int, connections: Optional[ConnectionTable] = None) -> SeriesCoefficientTable:
        """Monomial coefficients of the top double-coset series.

        Without `connections` every cell comes from the near-hook formula;
        with them (b^(n) counts, e.g. from the oracle) the power-sum series
        is expanded directly.
        """
        if n < 1:
            raise DoubleCosetException(f"n must be positive, got {n}")
        start_at = datetime.now()
        partitions = enumerate_partitions(n)
        if connections is None:
            pairs = [(lam, mu) for lam in partitions for mu in partitions]
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                values = list(executor.map(lambda pair: self.main_series_coefficient(*pair), pairs))
            entries = dict(zip(pairs, values))
        else:
            order = hyperoctahedral_order(n)
            weights = {pair: Fraction(value, order) for pair, value in connections.items()}
            entries = expand_powersum_pairs(n, weights, self.characters)
        table = SeriesCoefficientTable(n=n, kind=SeriesKind.DOUBLECOSET.value, normalization="1/(2^n n!)", entries=entries)
        logger.info(LogMessages.TABLE_DONE.format(SeriesKind.DOUBLECOSET.value, n, len(entries), calculate_response_time(start_at)))
        return table

    def series_from_zonal(self, n: int) -> SeriesCoefficientTable:
        """(|B_n|/|K_(n)|) sum phi^{hook}_(n) P_hook(x) Q_hook(y) over near hooks."""
        partitions = enumerate_partitions(n)
        scale = Fraction(hyperoctahedral_order(n), coset_size((n,)))
        entries = {(lam, mu): Fraction(0) for lam in partitions for mu in partitions}
        for shape in self.zonal.near_hook_shapes(n):
            weight = scale * self.phi_top_nearhook(shape)
            p_expansion = self.zonal.p_near_hook(shape)
            q_expansion = self.zonal.q_near_hook(shape)
            for lam, p_value in p_expansion.items():
                for mu, q_value in q_expansion.items():
                    entries[(lam, mu)] += weight * p_value * q_value
        return SeriesCoefficientTable(n=n, kind=SeriesKind.DOUBLECOSET.value, normalization="1/(2^n n!)", entries=entries)

    def pi_series(self, n: int) -> MonomialExpansion:
        """Pi_n = (1/|B_n|) sum_lam b^(n)_{lam,(n)} p_lam, via r'_n and the filling sums."""
        if n < 1:
            raise DoubleCosetException(f"n must be positive, got {n}")
        result = MonomialExpansion(n)
        for lam in enumerate_partitions(n):
            value = Fraction(0)
            for shape in self.zonal.near_hook_shapes(n):
                value += r_prime_n(shape.a, shape.b, n) * self.zonal.filling_sum(shape, lam)
            result.add_term(lam, value)
        return result

    def pi_series_from_zonal(self, n: int) -> MonomialExpansion:
        """Pi_n as (1/|K_(n)|) sum (phi^{hook}_(n))^2 / c'_hook P_hook."""
        result = MonomialExpansion(n)
        for shape in self.zonal.near_hook_shapes(n):
            _, c_prime, _ = c_products(shape.parts)
            weight = Fraction(self.phi_top_nearhook(shape) ** 2, coset_size((n,)) * c_prime)
            result = result + self.zonal.p_near_hook(shape).scale(weight)
        return result

    def pi_series_from_connections(self, n: int, connections: ConnectionTable) -> MonomialExpansion:
        """Pi_n from b^(n)_{lam,(n)} counts expanded through p_lam."""
        result = MonomialExpansion(n)
        order = hyperoctahedral_order(n)
        for lam in enumerate_partitions(n):
            count = connections.get((lam, (n,)), 0)
            if count:
                result = result + self.characters.powersum_to_monomial(lam).scale(Fraction(count, order))
        return result

    def verify_closed_forms(self, n: int) -> List[IdentityCheck]:
        """Printed closed forms of the top series and of Pi_n at weight n."""
        partitions = enumerate_partitions(n)
        checks = []

        def record(identity: str, detail: Optional[str]) -> None:
            checks.append(IdentityCheck(identity=identity, n=n, passed=detail is None, detail=detail))
            if detail:
                logger.warning(LogMessages.IDENTITY_FAILED.format(identity, n, detail))

        top = (n,)
        record("[m_n m_n] = (2n-1)!!", first_mismatch(
            {(top,): self.main_series_coefficient(top, top)}, lambda lam: double_factorial(2 * n - 1)))
        record("[m_lam m_n] = C(n,lam)(2lam-1)!!", first_mismatch(
            {(lam,): self.main_series_coefficient(lam, top) for lam in partitions}, mlambda_n_closed_form))
        record("[m_(n-p,1^p) m_(n-p,1^p)] closed form, p <= 2", first_mismatch(
            {(p,): self.main_series_coefficient(hook(n, p), hook(n, p)) for p in range(min(2, n - 1) + 1)},
            lambda p: closed_form_npone(n, p)))

        pi = self.pi_series(n)
        known = pi_table_closed_forms(n)
        from_zonal = self.pi_series_from_zonal(n)
        record("Pi_n coefficient table", first_mismatch(
            {(lam,): pi[lam] for _, lam, _ in known}, lambda lam: next(value for _, row, value in known if row == lam)))
        record("Pi_n via r'_n = Pi_n via P on near hooks", first_mismatch(
            {(lam,): pi[lam] for lam in partitions}, lambda lam: from_zonal[lam]))
        return checks

    def verify_integrality(self, n: int) -> List[IdentityCheck]:
        """Every top-series coefficient is a nonnegative integer and the table is symmetric."""
        table = self.doublecoset_table(n)
        bad = next(
            ((pair, value) for pair, value in table.entries.items() if value.denominator != 1 or value < 0),
            None,
        )
        detail = None if bad is None else f"at {bad[0]}: {bad[1]}"
        checks = [IdentityCheck(identity="top series coefficients are nonnegative integers", n=n, passed=bad is None, detail=detail)]
        symmetric = table.is_symmetric()
        checks.append(IdentityCheck(
            identity="top series symmetric in x and y", n=n, passed=symmetric,
            detail=None if symmetric else "table differs from its transpose",
        ))
        return checks

    def verify_against_oracle(self, n: int) -> List[IdentityCheck]:
        """Character-side b, near-hook series and Pi_n against brute-force counts at weight n."""
        self.oracle.check_coset_cap(n)
        partitions = enumerate_partitions(n)
        checks = []
        for nu in partitions:
            counted = self.oracle.double_coset_convolution_table(n, nu)
            detail = first_mismatch(counted, lambda lam, mu: self.connection_b(lam, mu, nu))
            checks.append(IdentityCheck(identity=f"b^{list(nu)} = brute-force count", n=n, passed=detail is None, detail=detail))
            row_detail = first_mismatch(
                {(lam,): sum(counted[(lam, mu)] for mu in partitions) for lam in partitions}, coset_size)
            checks.append(IdentityCheck(identity=f"sum_mu b^{list(nu)}_(lam,mu) = |K_lam|", n=n, passed=row_detail is None, detail=row_detail))

        histogram = self.oracle.coset_histogram(n)
        detail = first_mismatch({(lam,): histogram.row_total(lam) for lam in partitions}, coset_size)
        checks.append(IdentityCheck(identity="histogram rows = |K_lam|", n=n, passed=detail is None, detail=detail))

        top_counts = self.oracle.double_coset_convolution_table(n, (n,))
        from_oracle = self.doublecoset_table(n, top_counts)
        formula = self.doublecoset_table(n)
        detail = first_mismatch(formula.entries, lambda lam, mu: from_oracle[(lam, mu)])
        checks.append(IdentityCheck(identity="near-hook series = oracle series", n=n, passed=detail is None, detail=detail))

        zonal_series = self.series_from_zonal(n)
        detail = first_mismatch(formula.entries, lambda lam, mu: zonal_series[(lam, mu)])
        checks.append(IdentityCheck(identity="near-hook series = sum phi P Q", n=n, passed=detail is None, detail=detail))

        pi = self.pi_series(n)
        pi_oracle = self.pi_series_from_connections(n, top_counts)
        detail = first_mismatch({(lam,): pi[lam] for lam in partitions}, lambda lam: pi_oracle[lam])
        checks.append(IdentityCheck(identity="Pi_n = oracle Pi_n", n=n, passed=detail is None, detail=detail))
        return checks
