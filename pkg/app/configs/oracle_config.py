from dataclasses import dataclass

@dataclass(frozen=True)
class OracleConfig:
    """Configuration for the brute-force oracle and table workers."""
    cap_class: int
    cap_coset: int
    threads: int = 1
