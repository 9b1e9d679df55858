"""Integer helpers shared by the coefficient formulas.

All values are exact Python integers or `fractions.Fraction`.
"""
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

Rational = Union[int, Fraction]

def binomial(x: int, y: int) -> int:
    """C(x, y), zero outside 0 <= y <= x."""
    if y < 0 or x < 0 or y > x:
        return 0
    return comb(x, y)

def double_factorial(k: int) -> int:
    """k!! with the conventions (-1)!! = 0!! = 1.

    Raises:
        ValueError: for k < -1
    """
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result

def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(parts_i!), requires sum(parts) == n."""
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    result = factorial(n)
    for part in parts:
        result //= factorial(part)
    return result

def as_integer(value: Rational) -> int:
    """Return `value` as int; raises ValueError when it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return value.numerator

def format_rational(value: Rational) -> str:
    """'p/q' for proper fractions, plain integer text otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
