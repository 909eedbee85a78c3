"""
rationals.py

Text form of exact rationals used by input documents and every output format.

Accepted input
--------------
    "7"      -- integer, optional leading sign
    "-3/2"   -- numerator / positive or negative denominator
    7        -- a JSON integer (booleans and floats are rejected)

Floats, exponents, decimals and zero denominators are rejected so that no
rounded value can enter the library. Output is always ``str(Fraction)``:
reduced, denominator positive, integers without "/1".

Part of the Restriction Stability Toolkit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional, Union

from src.utils import messages
from src.utils.errors import ValidationError


def _is_integer_text(text: str) -> bool:
    if text[:1] in "+-":
        text = text[1:]
    return text.isdigit() and text.isascii()


def is_valid_rational(text: str) -> bool:
    """
    Return ``True`` if ``text`` is an integer or ``p/q`` with ``q != 0``.

    Rules
    -----
    1. Surrounding whitespace is ignored; inner whitespace is not allowed.
    2. At most one ``/``.
    3. Each side is an optionally signed run of ASCII digits.
    4. The denominator is not zero.
    """
    if not isinstance(text, str):
        return False
    text = text.strip()
    if not text or " " in text:
        return False
    parts = text.split("/")
    if len(parts) > 2:
        return False
    if not all(_is_integer_text(part) for part in parts):
        return False
    if len(parts) == 2 and int(parts[1]) == 0:
        return False
    return True


def parse_rational(value: Any, location: str = "value") -> Fraction:
    """Parse a document value into a ``Fraction`` or raise ``ValidationError``."""
    if isinstance(value, bool):
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=value, location=location, reason="booleans are not numbers"))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=value, location=location, reason='floats are not accepted; use "p/q"'))
    if not isinstance(value, str):
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=value, location=location, reason="expected a string"))
    if not is_valid_rational(value):
        reason = "zero denominator" if _has_zero_denominator(value) else 'expected "p" or "p/q"'
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=value, location=location, reason=reason))
    numerator, _, denominator = value.strip().partition("/")
    return Fraction(int(numerator), int(denominator or 1))


def _has_zero_denominator(text: str) -> bool:
    parts = text.strip().split("/")
    return len(parts) == 2 and _is_integer_text(parts[1]) and int(parts[1]) == 0


def parse_integer(value: Any, location: str = "value") -> int:
    """Parse an integer given either as a JSON int or as integral rational text."""
    if isinstance(value, bool):
        raise ValidationError(messages.DocumentMessages.bad_integer.format(location=location, value=value))
    if isinstance(value, int):
        return value
    parsed = parse_rational(value, location)
    if parsed.denominator != 1:
        raise ValidationError(messages.DocumentMessages.bad_integer.format(location=location, value=value))
    return parsed.numerator


def format_rational(value: Optional[Union[int, Fraction]]) -> str:
    """Canonical text for a rational; ``None`` renders as an empty string."""
    if value is None:
        return ""
    return str(Fraction(value))


def approximate(value: Any, digits: int = 6) -> str:
    """Decimal approximation for display columns; never fed back into computation."""
    return f"{float(value):.{digits}f}"
