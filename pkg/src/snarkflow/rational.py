"""Exact rational values.

All flow values, thresholds and circular flow numbers in this package are
``fractions.Fraction`` instances: always reduced, arbitrary precision, never
floats.  This module only adds the "p/q" string round-trip used by the CLI
and the JSON file formats.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def rat(numerator: int, denominator: int = 1) -> Fraction:
    return Fraction(numerator, denominator)


def parse_ratio(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer "p") into an exact fraction."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_ratio(value: Fraction) -> str:
    """Render a fraction as "p/q", keeping an explicit denominator ("5/1")."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"
