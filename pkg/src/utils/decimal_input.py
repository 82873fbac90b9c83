"""
Exact parsing of decimal command-line inputs
"""
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import List, Tuple, Union

ExactInput = Union[str, int, Fraction]


def parse_decimal(text: ExactInput) -> Fraction:
    """
    Parse a decimal string into an exact rational

    Args:
        text (ExactInput): Decimal string such as "3.56", or an int/Fraction

    Returns:
        Fraction: Exact value (3.56 -> 89/25, never its binary neighbour)
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        value = Decimal(text.strip())
    except (InvalidOperation, AttributeError):
        raise ValueError(f"not a decimal number: {text!r}")
    if not value.is_finite():
        raise ValueError(f"not a finite decimal number: {text!r}")
    return Fraction(value)


def parse_decimal_list(text: str) -> List[Fraction]:
    """Parse a comma-separated list of decimals"""
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError(f"empty list: {text!r}")
    return [parse_decimal(item) for item in items]


def parse_int_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive integer range "lo:hi" (a single integer means lo == hi)

    Args:
        text (str): Range text, e.g. "-2:2"

    Returns:
        Tuple[int, int]: (lo, hi) with lo <= hi
    """
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"not an integer range: {text!r}")
    if lo > hi:
        raise ValueError(f"empty integer range: {text!r}")
    return lo, hi
