"""Number rendering shared by every command's output"""

import math
from typing import Any, Optional

from config import Config


def format_number(value: Any, significant_digits: Optional[int] = None) -> str:
    """Fixed significant digits, trailing zeros kept so output widths stay stable"""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    try:
        number = float(value)
    except (TypeError, ValueError):
        return str(value)
    if math.isnan(number) or math.isinf(number):
        return str(number)
    digits = significant_digits or Config.SIGNIFICANT_DIGITS
    if number == 0:
        return f"{0:.{digits - 1}f}"
    magnitude = int(math.floor(math.log10(abs(number))))
    if magnitude >= digits or magnitude < -4:
        return f"{number:.{digits - 1}e}"
    decimals = max(digits - 1 - magnitude, 0)
    return f"{number:.{decimals}f}"


def round_significant(value: Any, significant_digits: Optional[int] = None) -> Any:
    """Floats rounded for machine-readable output; other values unchanged"""
    if isinstance(value, float) and math.isfinite(value):
        digits = significant_digits or Config.SIGNIFICANT_DIGITS
        return float(f"{value:.{digits}g}")
    return value


def rounded(data: Any) -> Any:
    """Apply round_significant through nested dicts and lists"""
    if isinstance(data, dict):
        return {key: rounded(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [rounded(value) for value in data]
    return round_significant(data)
