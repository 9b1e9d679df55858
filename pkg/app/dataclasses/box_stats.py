from dataclasses import dataclass

@dataclass(frozen=True)
class BoxStats:
    """Arm, leg, co-arm and co-leg of one box of a Young diagram."""
    arm: int
    leg: int
    coarm: int
    coleg: int
