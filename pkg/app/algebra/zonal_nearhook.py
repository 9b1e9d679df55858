"""Monomial expansions of the zonal polynomials Q, P and Z on near hooks.

A column-strict tableau of shape (a, b, 1^c) is read from its largest label
down: each label peels a horizontal strip off the remaining near hook, and
the tableau contributes a product of binomial-ratio kernels, one factor
group per label.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import List, Tuple, Union

from app.algebra.arithmetic import binomial, double_factorial, multinomial
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.oracle import Tableau, semistandard_tableaux
from app.algebra.partitions import (
    Partition,
    PartitionException,
    boxes,
    c_products,
    enumerate_partitions,
    is_horizontal_strip,
    near_hooks,
    validate_partition,
)
from app.constants.app_messages import AppMessages
from app.constants.log_messages import LogMessages
from app.dataclasses.near_hook import NearHook, NearHookFilling

logger = logging.getLogger(__name__)

# Jack parameter of the zonal polynomials
ALPHA = 2

Row = Tuple[int, int, int]
ShapeLike = Union[NearHook, Partition]

class ZonalException(Exception):
    """Custom exception for near-hook zonal polynomial errors"""
    pass

def gen_bin(x: int, y: int) -> Fraction:
    """<x, y> = C(x, y)^2 / C(2x, 2y), zero unless 0 <= y <= x."""
    if y < 0 or y > x:
        return Fraction(0)
    return Fraction(binomial(x, y) ** 2, binomial(2 * x, 2 * y))

def var_gen_bin(x: int, y: int) -> Fraction:
    """<<x, y>> = C(x, y)^2 / C(2x + 1, 2y), zero unless 0 <= y <= x."""
    if y < 0 or y > x:
        return Fraction(0)
    return Fraction(binomial(x, y) ** 2, binomial(2 * x + 1, 2 * y))

def gen_bin_multinomial(n: int, parts: Partition) -> Fraction:
    """<n, lam> = C(n; lam) prod (2 lam_i - 1)!! / (2n - 1)!!."""
    return Fraction(
        multinomial(n, parts) * prod(double_factorial(2 * part - 1) for part in parts),
        double_factorial(2 * n - 1),
    )

def gen_bin_sequential(n: int, parts: Partition) -> Fraction:
    """<n, lam> as the telescoping product of <remaining, lam_i>."""
    result = Fraction(1)
    remaining = n
    for part in parts:
        result *= gen_bin(remaining, part)
        remaining -= part
    return result

def rfunc(x: int, y: int, z: int, t: int, w: int) -> Fraction:
    """R(x,y,z,t,w) = (2x+w)(2y+w)(2z+w-1)(2t+w-1) / ((2x+w-1)(2y+w+1)(2z+w-2)(2t+w))."""
    numerator = (2 * x + w) * (2 * y + w) * (2 * z + w - 1) * (2 * t + w - 1)
    factors = {
        "2x+w-1": 2 * x + w - 1,
        "2y+w+1": 2 * y + w + 1,
        "2z+w-2": 2 * z + w - 2,
        "2t+w": 2 * t + w,
    }
    for name, value in factors.items():
        if value == 0:
            logger.error(LogMessages.RFUNC_ZERO.format(name, (x, y, z, t, w)))
            raise ZonalException(f"rfunc denominator factor {name} is zero at (x,y,z,t,w)={(x, y, z, t, w)}")
    return Fraction(numerator, prod(factors.values()))

def _check_series_hook(x: int, y: int, n: int) -> None:
    if (x, y) == (n, 0):
        return
    if not (y >= 1 and x >= y and x + y <= n):
        raise ZonalException(f"({x},{y},1^{n - x - y}) is not a near hook with a second row")

def r_n(x: int, y: int, n: int) -> Fraction:
    """Weight of the near hook (x, y, 1^{n-x-y}) in the top double-coset series."""
    _check_series_hook(x, y, n)
    if (x, y) == (n, 0):
        return Fraction(double_factorial(2 * n - 1))
    numerator = (
        2 * n * (n + x - y + 1) * (n + y - x)
        * factorial(n - x - y)
        * double_factorial(2 * x - 1) * double_factorial(2 * y - 2)
    )
    denominator = (
        (-1) ** (n + 1 - x - y) * (n + x - y) * (n + y - x - 1) * (2 * (x - y) + 1)
    )
    return Fraction(numerator, denominator)

def r_prime_n(x: int, y: int, n: int) -> Fraction:
    """Weight of the near hook (x, y, 1^{n-x-y}) in the series Pi_n."""
    _check_series_hook(x, y, n)
    if (x, y) == (n, 0):
        return Fraction(double_factorial(2 * n - 2))
    numerator = (
        2 * n * factorial(n + 1 - x - y)
        * double_factorial(2 * x - 2) * double_factorial(2 * y - 3)
    )
    return Fraction(numerator, (n + x - y) * (n + y - x - 1))

def _b_factor(partition: Partition, box: Tuple[int, int], stats_by_box) -> Fraction:
    """b_partition(s) = (alpha a + l + 1)/(alpha a + l + alpha), 1 outside the diagram."""
    stats = stats_by_box.get(box)
    if stats is None:
        return Fraction(1)
    return Fraction(ALPHA * stats.arm + stats.leg + 1, ALPHA * stats.arm + stats.leg + ALPHA)

def _strip_boxes(outer: Partition, inner: Partition) -> List[Tuple[int, int]]:
    padded = inner + (0,) * (len(outer) - len(inner))
    return [
        (row, column)
        for row, (outer_part, inner_part) in enumerate(zip(outer, padded), start=1)
        for column in range(inner_part + 1, outer_part + 1)
    ]

def _check_strip(outer: Partition, inner: Partition) -> None:
    if not is_horizontal_strip(outer, inner):
        raise ZonalException(f"{outer}/{inner} is not a horizontal strip")

def skew_phi(outer: Partition, inner: Partition) -> Fraction:
    """phi_{outer/inner}: product of b_outer(s)/b_inner(s) over the columns the strip meets."""
    outer, inner = tuple(outer), tuple(inner)
    _check_strip(outer, inner)
    strip = _strip_boxes(outer, inner)
    columns = {column for _, column in strip}
    outer_stats = dict(boxes(outer))
    inner_stats = dict(boxes(inner))
    result = Fraction(1)
    for box in outer_stats:
        if box[1] in columns:
            result *= _b_factor(outer, box, outer_stats) / _b_factor(inner, box, inner_stats)
    return result

def skew_psi(outer: Partition, inner: Partition) -> Fraction:
    """psi_{outer/inner}: product of b_inner(s)/b_outer(s) over rows met by the strip, minus its columns."""
    outer, inner = tuple(outer), tuple(inner)
    _check_strip(outer, inner)
    strip = _strip_boxes(outer, inner)
    rows = {row for row, _ in strip}
    columns = {column for _, column in strip}
    outer_stats = dict(boxes(outer))
    inner_stats = dict(boxes(inner))
    result = Fraction(1)
    for box in outer_stats:
        if box[0] in rows and box[1] not in columns:
            result *= _b_factor(inner, box, inner_stats) / _b_factor(outer, box, outer_stats)
    return result

def filling_weight(filling: NearHookFilling) -> Fraction:
    """prod_i <a~-b~, a_i> <<a~_{i-1}-b~_i, b_i>> R(...)^{c_i} for one filling."""
    remainders = filling.remainders()
    result = Fraction(1)
    for i, (a_i, b_i, c_i) in enumerate(filling.rows, start=1):
        a_prev, b_prev, c_prev = remainders[i - 1]
        a_cur, b_cur, _ = remainders[i]
        result *= gen_bin(a_prev - b_prev, a_i) * var_gen_bin(a_prev - b_cur, b_i)
        if not result:
            return result
        if c_i:
            result *= rfunc(a_cur, a_prev, b_cur, b_prev, c_prev)
    return result

def filling_constraint_violations(filling: NearHookFilling) -> List[str]:
    """Names of the tableau-sequence inequalities a filling breaks (empty when valid)."""
    violations = []
    remainders = filling.remainders()
    rows = filling.rows
    p = len(rows)
    for i, ((a_i, b_i, c_i), part) in enumerate(zip(rows, filling.type_), start=1):
        a_prev, b_prev, _ = remainders[i - 1]
        _, b_cur, c_cur = remainders[i]
        if a_i + b_i + c_i != part:
            violations.append(f"a_{i}+b_{i}+c_{i} = mu_{i}")
        if c_i not in (0, 1):
            violations.append(f"c_{i} in {{0,1}}")
        if a_i > a_prev - b_prev:
            violations.append(f"a_{i} <= a~_{i - 1} - b~_{i - 1}")
        if c_cur > 0 and b_i > b_prev - 1:
            violations.append(f"b_{i} <= b~_{i - 1} - 1 while the column is non-empty")
        # a column box still waiting below keeps row two alive
        if remainders[i - 1][2] > 0 and b_cur == 0:
            violations.append(f"sum b_j (j <= {i}) < b while sum c_j (j < {i}) < c")
    if p:
        last = rows[-1]
        if last[1] or last[2]:
            violations.append("b_p = c_p = 0")
        if p >= 2 and rows[-2][2]:
            violations.append("c_(p-1) = 0")
    if remainders[-1] != (0, 0, 0):
        violations.append("filling exhausts the shape")
    return violations

@lru_cache(maxsize=None)
def _fillings(shape: NearHook, type_: Partition) -> Tuple[Tuple[Row, ...], ...]:
    """Strip sequences of the near hook, largest label first."""
    results: List[Tuple[Row, ...]] = []

    def extend(step: int, current: Tuple[int, int, int], rows: Tuple[Row, ...]) -> None:
        big, second, column = current
        if step == len(type_):
            if current == (0, 0, 0):
                results.append(rows)
            return
        part = type_[step]
        for c_i in range(min(1, column) + 1):
            for b_i in range(min(second, part - c_i) + 1):
                a_i = part - b_i - c_i
                if a_i > big:
                    continue
                # horizontal strip: nothing removed above a remaining box
                if big - a_i < second:
                    continue
                if column >= 1 and second - b_i < 1:
                    continue
                extend(step + 1, (big - a_i, second - b_i, column - c_i), rows + ((a_i, b_i, c_i),))

    extend(0, (shape.a, shape.b, shape.c), ())
    return tuple(results)

@lru_cache(maxsize=None)
def _filling_sum(shape: NearHook, type_: Partition) -> Fraction:
    return sum(
        (filling_weight(NearHookFilling(shape, type_, rows)) for rows in _fillings(shape, type_)),
        Fraction(0),
    )

def q_prefactor(shape: NearHook) -> Fraction:
    """C(2a-2b, a-b) / (4^(a-b) (1+c))."""
    gap = shape.a - shape.b
    return Fraction(binomial(2 * gap, gap), 4 ** gap * (1 + shape.c))

def p_prefactor(shape: NearHook) -> Fraction:
    """(2a+c+1)(2b+c) / ((2a+c)(2b+c-1) <<a-1, b-1>>) when b > 0, else 1."""
    a, b, c = shape.a, shape.b, shape.c
    if b == 0:
        return Fraction(1)
    return Fraction((2 * a + c + 1) * (2 * b + c), (2 * a + c) * (2 * b + c - 1)) / var_gen_bin(a - 1, b - 1)

def tableau_chain(tableau: Tableau, labels: int) -> List[Partition]:
    """Shapes holding the labels <= k, for k = labels down to 0."""
    chain = []
    for k in range(labels, -1, -1):
        rows = (sum(1 for label in row if label <= k) for row in tableau)
        chain.append(tuple(length for length in rows if length))
    return chain


class ZonalNearHookManager:
    """Builds Q, P and Z on near hooks from strip-sequence fillings."""

    def __init__(self, threads: int = 1) -> None:
        self.threads = threads

    def as_near_hook(self, shape: ShapeLike) -> NearHook:
        if isinstance(shape, NearHook):
            return shape
        try:
            return NearHook.from_partition(validate_partition(shape))
        except (ValueError, PartitionException) as err:
            raise ZonalException(AppMessages.NOT_A_NEAR_HOOK.format(tuple(shape))) from err

    def _validate_type(self, shape: NearHook, type_: Partition) -> Partition:
        try:
            return validate_partition(type_, shape.weight)
        except PartitionException as err:
            raise ZonalException(str(err)) from err

    def enumerate_fillings(self, shape: ShapeLike, type_: Partition) -> List[NearHookFilling]:
        """All column-strict fillings of `shape` with content `type_`.

        Every filling is checked against the inequality description of such
        tableaux; a violation means the generator is wrong.
        """
        shape = self.as_near_hook(shape)
        type_ = self._validate_type(shape, type_)
        fillings = [NearHookFilling(shape, type_, rows) for rows in _fillings(shape, type_)]
        for filling in fillings:
            violations = filling_constraint_violations(filling)
            if violations:
                logger.error(LogMessages.FILLING_VIOLATION.format(filling.rows, shape, violations))
                raise ZonalException(f"filling {filling.rows} of {shape} violates {violations}")
        logger.debug(LogMessages.FILLINGS_ENUMERATED.format(len(fillings), shape, type_))
        return fillings

    def filling_sum(self, shape: ShapeLike, type_: Partition) -> Fraction:
        """Sum of kernel products over the fillings, before any prefactor."""
        shape = self.as_near_hook(shape)
        return _filling_sum(shape, self._validate_type(shape, type_))

    def _expansion(self, shape: NearHook, prefactor: Fraction) -> MonomialExpansion:
        types = enumerate_partitions(shape.weight)
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            sums = list(executor.map(lambda type_: _filling_sum(shape, type_), types))
        return MonomialExpansion(shape.weight, {type_: prefactor * value for type_, value in zip(types, sums)})

    def q_near_hook(self, shape: ShapeLike) -> MonomialExpansion:
        shape = self.as_near_hook(shape)
        return self._expansion(shape, q_prefactor(shape))

    def p_near_hook(self, shape: ShapeLike) -> MonomialExpansion:
        shape = self.as_near_hook(shape)
        return self._expansion(shape, p_prefactor(shape))

    def zonal_Z(self, shape: ShapeLike) -> MonomialExpansion:
        """Z = c' Q, checked against c P."""
        shape = self.as_near_hook(shape)
        c, c_prime, _ = c_products(shape.parts)
        from_q = self.q_near_hook(shape).scale(c_prime)
        from_p = self.p_near_hook(shape).scale(c)
        if from_q != from_p:
            logger.error(LogMessages.ZONAL_MISMATCH.format(shape))
            raise ZonalException(f"c'Q and cP disagree for {shape}: {from_q} vs {from_p}")
        return from_q

    def _from_skew_factors(self, shape: NearHook, factor) -> MonomialExpansion:
        result = MonomialExpansion(shape.weight)
        for type_ in enumerate_partitions(shape.weight):
            total = Fraction(0)
            for tableau in semistandard_tableaux(shape.parts, type_):
                chain = tableau_chain(tableau, len(type_))
                total += prod(
                    (factor(chain[i], chain[i + 1]) for i in range(len(chain) - 1)),
                    start=Fraction(1),
                )
            result.add_term(type_, total)
        return result

    def q_from_skew_factors(self, shape: ShapeLike) -> MonomialExpansion:
        """Q as the tableau-by-tableau product of phi over each strip.

        Walks the tableaux of the generic enumerator, not the strip fillings.
        """
        return self._from_skew_factors(self.as_near_hook(shape), skew_phi)

    def p_from_skew_factors(self, shape: ShapeLike) -> MonomialExpansion:
        return self._from_skew_factors(self.as_near_hook(shape), skew_psi)

    def near_hook_shapes(self, n: int) -> List[NearHook]:
        """Near hooks of weight n in reverse lexicographic order."""
        return [NearHook.from_partition(partition) for partition in near_hooks(n)]
