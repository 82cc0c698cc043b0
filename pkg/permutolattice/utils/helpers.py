from fractions import Fraction
from typing import Any

TRUTHY = ("1", "true", "yes", "y", "on")


def is_truthy(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        return value.strip().lower() in TRUTHY
    return bool(value)


def parse_rational(token: str) -> Fraction:
    """
    Parse `p/q`, an integer or a finite decimal into an exact Fraction.
    Raises ValueError on anything else.
    """
    token = token.strip()
    if not token:
        raise ValueError("empty number")
    # Fraction accepts '1e5' and ' 3 ' too; keep the accepted surface narrow
    if any(ch in token for ch in "eEjJ_ ") or token.lower() in ("nan", "inf", "-inf", "+inf"):
        raise ValueError(f"not a rational number: {token!r}")
    if token.count("/") == 1:
        num, den = token.split("/")
        if not num.strip() or not den.strip():
            raise ValueError(f"not a rational number: {token!r}")
        if Fraction(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
    return Fraction(token)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
