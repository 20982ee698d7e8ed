"""Exact tools for cross-2-intersecting uniform families.

Families are k-uniform over [n] and stored as integer bitmasks (element e at
bit e - 1).  All arithmetic is exact: ``int`` for sizes, ``Fraction`` for
ratios.
"""

from .core import DomainError, FamilyParseError, Subset, UniformFamily, binomial
from .relation import ClosedPair, CrossParams
from .search import SearchConfig, SearchResult, max_product

__all__ = [
    "ClosedPair",
    "CrossParams",
    "DomainError",
    "FamilyParseError",
    "SearchConfig",
    "SearchResult",
    "Subset",
    "UniformFamily",
    "binomial",
    "max_product",
]
__version__ = "0.1.0"
