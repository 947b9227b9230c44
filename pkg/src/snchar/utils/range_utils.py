"""
Integer range utilities

This module provides the ``lo..hi`` range syntax used by ``--n`` flags,
certification windows and the ``checked=lo..hi`` column of catalogs.
"""

from typing import Union

from snchar.errors import DomainError

RANGE_TYPE = Union[int, str, tuple[int, int], None]


def parse_index_range(value: RANGE_TYPE) -> tuple[int, int]:
    """
    Convert the accepted range spellings to an inclusive ``(lo, hi)`` pair.

    Parameters
    ----------
    value : RANGE_TYPE
        - int: a single index, ``(value, value)``
        - str: ``"7"`` or ``"1..6"``
        - tuple: ``(lo, hi)`` returned as-is after validation

    Returns
    -------
    tuple[int, int]
        Inclusive bounds with ``lo <= hi``

    Raises
    ------
    DomainError
        If the text is malformed, a bound is negative, or ``lo > hi``

    Examples
    --------
    >>> parse_index_range("1..6")
    (1, 6)

    >>> parse_index_range(4)
    (4, 4)
    """
    if value is None:
        raise DomainError("an index or range lo..hi is required")

    if isinstance(value, bool):
        raise DomainError(f"invalid index {value!r}")

    if isinstance(value, int):
        lo = hi = value
    elif isinstance(value, tuple):
        lo, hi = value
    elif isinstance(value, str):
        text = value.strip()
        try:
            if ".." in text:
                left, right = text.split("..", 1)
                lo, hi = int(left), int(right)
            else:
                lo = hi = int(text)
        except ValueError:
            raise DomainError(f"invalid range {value!r}. Expected N or LO..HI")
    else:
        raise DomainError(f"unsupported range type: {type(value)}")

    if lo < 0:
        raise DomainError(f"range start must be >= 0, got {lo}")
    if lo > hi:
        raise DomainError(f"range start {lo} is after range end {hi}")
    return lo, hi


def index_range(start: int, end: int) -> list[int]:
    """
    Consecutive integers from ``start`` to ``end``, both included.

    Examples
    --------
    >>> index_range(3, 6)
    [3, 4, 5, 6]
    """
    if start > end:
        raise DomainError("start cannot be after end")
    return list(range(start, end + 1))


def to_range_string(lo: int, hi: int) -> str:
    """``(3, 9)`` -> ``3..9``"""
    return f"{lo}..{hi}"
