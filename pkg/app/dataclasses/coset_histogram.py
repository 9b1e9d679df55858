from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple

Partition = Tuple[int, ...]

@dataclass
class CosetHistogram:
    """Counts of w in S_2n by (coset type, cycle type)."""
    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def row(self, coset_type: Partition) -> Dict[Partition, int]:
        """Cycle-type distribution inside the double coset K_{coset_type}."""
        return {
            cycle_type: count
            for (kind, cycle_type), count in self.counts.items()
            if kind == coset_type
        }

    def row_total(self, coset_type: Partition) -> int:
        return sum(self.row(coset_type).values())
