"""
Utils package for snchar.

This package provides integer-range parsing and formatting shared by the CLI and catalogs.
"""

from .range_utils import RANGE_TYPE, index_range, parse_index_range, to_range_string

__all__ = [
    "RANGE_TYPE",
    "index_range",
    "parse_index_range",
    "to_range_string",
]
