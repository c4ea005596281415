"""
.. include:: ../README.rst
"""

from .construction import (
    Classification,
    ConstructionOutcome,
    Parameters,
    Route,
    closed_form,
    construct,
)
from .search import CoverageReport, SearchBound, coverage
from .triangle import MedianTriangle, dual, normalize, similar, verify

__all__ = [
    "Classification",
    "ConstructionOutcome",
    "CoverageReport",
    "MedianTriangle",
    "Parameters",
    "Route",
    "SearchBound",
    "closed_form",
    "construct",
    "coverage",
    "dual",
    "normalize",
    "similar",
    "verify",
]
