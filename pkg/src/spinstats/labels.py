"""Half-integer spin labels, stored as doubled integers.

A label ``m`` is kept as ``2m`` so that half-integers never touch floats.
``"3/2"``, ``"-1/2"``, ``"1.5"`` and ``"2"`` all parse; rendering always
uses the ``p`` / ``p/2`` form.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["format_label", "parse_label"]


def format_label(two_m: int) -> str:
    if two_m % 2 == 0:
        return str(two_m // 2)
    return f"{two_m}/2"


def parse_label(text: str) -> int:
    """Parse an integer or half-integer label into its doubled encoding."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid label {text!r}") from exc
    doubled = value * 2
    if doubled.denominator != 1:
        raise ValueError(f"label {text!r} is not an integer or half-integer")
    return int(doubled)
