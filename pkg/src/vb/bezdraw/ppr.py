"""Provide pretty text output of progress and reports."""

from __future__ import annotations

import math
import pprint
from typing import Optional


def progress(
        value: float, max_value: float,
        num_digits: Optional[int] = None) -> str:
    """Show textual representation of progress of value.

    The non-negative value should increase from 0 (0 %) to max_value (100 %).

    Args:
        value: current value to measure the progress of
        max_value: the maximum for the value, zero means undefined
        num_digits: optional maximum number of digits override for the value

    Returns:
        formatted string showing the progress of the value

    Examples:
        >>> progress(1, 10)
        ' 1/10   10 %'

        >>> progress(5, 0)
        '5/0  --- %'
    """
    percent_str = '---'
    if round(max_value) > 0:
        max_value = max(max_value, 1)
        percent_str = f'{round(100 * value / max_value):>3d}'
    max_str = f'{round(max_value):d}'
    if num_digits is None:
        num_digits = len(max_str)
    return f'{round(value):>{num_digits}d}/{max_str}  {percent_str} %'


def angle_str(radians: float, digits: int = 4) -> str:
    """Format an angle in degrees.

    Examples:
        >>> angle_str(math.pi / 2)
        '90.0000°'
        >>> angle_str(math.inf)
        'inf'
    """
    if not math.isfinite(radians):
        return str(radians)
    return f'{math.degrees(radians):.{digits}f}°'


def pformat(obj: object, color: bool = True) -> str:
    """Format object for better human readable printing.

    If color is set and the pygments module is available make the output
    in color.

    Examples:
        >>> pformat({'verdict': 'pass', 'violations': []}, False)
        "{'verdict': 'pass', 'violations': []}"
    """
    formatted = pprint.pformat(obj, sort_dicts=False)
    if color:
        try:
            from pygments import highlight
            from pygments.formatters.terminal256 import Terminal256Formatter
            from pygments.lexers.python import PythonLexer
        except ImportError:
            return formatted
        formatted = highlight(formatted, PythonLexer(), Terminal256Formatter())
    return formatted


def class_full_name(obj: object) -> str:
    """Return the full name of object's class (including module name).

    Used to name exceptions in command line diagnostics.

    Examples:
        >>> class_full_name(1.0)
        'float'

        >>> from vb.bezdraw.errors import EmbeddingError
        >>> class_full_name(EmbeddingError('Euler check failed'))
        'vb.bezdraw.errors.EmbeddingError'
    """
    class_ = obj.__class__
    module = class_.__module__
    name = class_.__qualname__
    if module and module != 'builtins':
        name = f'{module}.{name}'
    return name
