from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from app.algebra.arithmetic import Rational
from app.algebra.partitions import Partition, PartitionException, enumerate_partitions, validate_partition

class MonomialExpansion:
    """A homogeneous symmetric function written in the monomial basis m_lambda.

    Coefficients are exact `Fraction`s; zero coefficients are never stored,
    so two expansions are equal exactly when their stored maps are equal.
    """

    def __init__(self, degree: int, coefficients: Optional[Mapping[Partition, Rational]] = None) -> None:
        if degree < 0:
            raise PartitionException(f"negative degree {degree}")
        self.degree = degree
        self._coefficients: Dict[Partition, Fraction] = {}
        for partition, value in (coefficients or {}).items():
            self.add_term(partition, value)

    def add_term(self, partition: Partition, value: Rational) -> None:
        partition = validate_partition(partition, self.degree)
        total = self._coefficients.get(partition, Fraction(0)) + Fraction(value)
        if total:
            self._coefficients[partition] = total
        else:
            self._coefficients.pop(partition, None)

    def coefficient(self, partition: Partition) -> Fraction:
        return self._coefficients.get(tuple(partition), Fraction(0))

    __getitem__ = coefficient

    def items(self) -> Iterator[Tuple[Partition, Fraction]]:
        """Nonzero terms in reverse lexicographic order of the partitions."""
        for partition in enumerate_partitions(self.degree):
            if partition in self._coefficients:
                yield partition, self._coefficients[partition]

    def to_dict(self) -> Dict[Partition, Fraction]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return not self._coefficients

    def scale(self, factor: Rational) -> "MonomialExpansion":
        factor = Fraction(factor)
        return MonomialExpansion(
            self.degree, {partition: value * factor for partition, value in self._coefficients.items()}
        )

    def _check_degree(self, other: "MonomialExpansion") -> None:
        if self.degree != other.degree:
            raise PartitionException(f"cannot combine expansions of degree {self.degree} and {other.degree}")

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        self._check_degree(other)
        result = MonomialExpansion(self.degree, self._coefficients)
        for partition, value in other._coefficients.items():
            result.add_term(partition, value)
        return result

    def __sub__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        return self + other.scale(-1)

    def __mul__(self, factor: Rational) -> "MonomialExpansion":
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self.degree == other.degree and self._coefficients == other._coefficients

    def __len__(self) -> int:
        return len(self._coefficients)

    def __repr__(self) -> str:
        terms = ", ".join(f"{list(partition)}: {value}" for partition, value in self.items())
        return f"MonomialExpansion(degree={self.degree}, {{{terms}}})"
