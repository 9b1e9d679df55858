from dataclasses import dataclass
from typing import List, Tuple

@dataclass(frozen=True, order=True)
class NearHook:
    """The partition (a, b, 1^c): at most two rows longer than one box."""
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or self.c < 0:
            raise ValueError(f"invalid near hook {self.a, self.b, self.c}: need a >= 1, b >= 0, c >= 0")
        if self.b > self.a:
            raise ValueError(f"invalid near hook {self.a, self.b, self.c}: b exceeds a")
        if self.c > 0 and self.b == 0:
            raise ValueError(f"invalid near hook {self.a, self.b, self.c}: a column needs b >= 1")

    @property
    def weight(self) -> int:
        return self.a + self.b + self.c

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(part for part in (self.a, self.b) if part) + (1,) * self.c

    @classmethod
    def from_partition(cls, partition: Tuple[int, ...]) -> "NearHook":
        """Raises ValueError when `partition` is not of the form (a, b, 1^c)."""
        if not partition:
            raise ValueError("the empty partition is not a near hook")
        tail = partition[2:]
        if any(part != 1 for part in tail):
            raise ValueError(f"{partition} is not a near hook")
        b = partition[1] if len(partition) > 1 else 0
        return cls(partition[0], b, len(tail))

    def __str__(self) -> str:
        return f"({self.a},{self.b},1^{self.c})"


@dataclass(frozen=True)
class NearHookFilling:
    """A column-strict tableau of near-hook shape read label by label.

    `rows[i]` is (a_i, b_i, c_i): how many boxes of the first row, second row
    and column hold the label p - i (0-based i), the largest label first.
    """
    shape: NearHook
    type_: Tuple[int, ...]
    rows: Tuple[Tuple[int, int, int], ...]

    def remainders(self) -> List[Tuple[int, int, int]]:
        """(a_bar_i, b_bar_i, c_bar_i) for i = 0..p, starting from the full shape."""
        a_bar, b_bar, c_bar = self.shape.a, self.shape.b, self.shape.c
        result = [(a_bar, b_bar, c_bar)]
        for a_i, b_i, c_i in self.rows:
            a_bar, b_bar, c_bar = a_bar - a_i, b_bar - b_i, c_bar - c_i
            result.append((a_bar, b_bar, c_bar))
        return result

    def chain(self) -> List[Tuple[int, ...]]:
        """Shapes lambda^(p), lambda^(p-1), ..., lambda^(0) = () as partitions."""
        return [
            tuple(part for part in (a_bar, b_bar) if part) + (1,) * c_bar
            for a_bar, b_bar, c_bar in self.remainders()
        ]
