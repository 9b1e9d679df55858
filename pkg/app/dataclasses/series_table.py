from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

Partition = Tuple[int, ...]

@dataclass
class SeriesCoefficientTable:
    """Monomial-basis coefficients of a generating series, keyed by (lambda, mu).

    `normalization` names the scalar the series was divided by, e.g.
    "1/n" or "1/(2^n n!)". Single-index series use mu = None.
    """
    n: int
    kind: str
    normalization: str
    entries: Dict[Tuple[Partition, Optional[Partition]], Fraction] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[Partition, Optional[Partition]]) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def is_symmetric(self) -> bool:
        return all(
            self.entries.get((mu, lam), Fraction(0)) == value
            for (lam, mu), value in self.entries.items()
            if mu is not None
        )
