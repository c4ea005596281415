"""Exhaustive search for primitive median triangles, and coverage of the
parametric family against it.

The search is deliberately naive: it walks ``a <= b <= c`` over the region
where the half-sides form a triangle and tests each median square. Its output
is sorted by ``(a, b, c)`` and does not depend on the number of workers.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Tuple

from .arith import gcd_all, is_perfect_square
from .construction import Route, construct_grid
from .exceptions import ConstructionConsistencyError, ParameterError
from .triangle import MedianTriangle, normalize

logger = logging.getLogger(__name__)


def default_workers():
    """Worker count from ``MEDIANS_WORKERS``, 1 when unset"""
    value = os.environ.get("MEDIANS_WORKERS", "1")
    try:
        workers = int(value)
    except ValueError:
        raise ParameterError(f"MEDIANS_WORKERS must be an integer, got {value!r}")
    return max(1, workers)


@dataclass(frozen=True)
class SearchBound:
    """Largest half-side the search will consider"""

    max_half_side: int

    def __post_init__(self):
        if not isinstance(self.max_half_side, int) or self.max_half_side < 1:
            raise ParameterError(
                f"max_half_side must be a positive integer, got {self.max_half_side!r}"
            )


def _as_bound(bound):
    return bound if isinstance(bound, SearchBound) else SearchBound(bound)


def _search_smallest_side(a, limit):
    """All primitive sextuples with smallest half-side ``a`` and ``c <= limit``"""
    found = []
    aa = a * a
    for b in range(a, limit + 1):
        bb = b * b
        for c in range(b, min(a + b - 1, limit) + 1):
            cc = c * c
            z = is_perfect_square(2 * aa + 2 * bb - cc)
            if z is None:
                continue
            x = is_perfect_square(2 * bb + 2 * cc - aa)
            if x is None:
                continue
            y = is_perfect_square(2 * cc + 2 * aa - bb)
            if y is None:
                continue
            if gcd_all(a, b, c, x, y, z) == 1:
                found.append((a, b, c, x, y, z))
    logger.debug("a=%d: %d primitive triangles", a, len(found))
    return found


def enumerate(bound, workers=None) -> List[MedianTriangle]:
    """Every primitive median triangle with ``max(a, b, c) <= bound``.

    :param bound: a :class:`SearchBound` or a positive int
    :param workers: processes to use, defaults to :func:`default_workers`
    :returns: canonical triangles (``a <= b <= c``) sorted by ``(a, b, c)``
    """
    limit = _as_bound(bound).max_half_side
    workers = default_workers() if workers is None else workers
    job = partial(_search_smallest_side, limit=limit)
    smallest = range(1, limit + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(job, smallest))
    else:
        chunks = [job(a) for a in smallest]
    triangles = [MedianTriangle(*sextuple) for chunk in chunks for sextuple in chunk]
    logger.info("Found %d primitive triangles up to %d", len(triangles), limit)
    return triangles


@dataclass
class CoverageReport:
    """How much of the exhaustive list the ``(f, g)`` grid reaches

    ``provenance`` maps each canonical family triangle to the ``(f, g)`` pairs
    producing it; ``beyond_bound`` holds family triangles too large for the search.
    """

    bound: int
    f_max: int
    g_max: int
    oracle: List[MedianTriangle] = field(default_factory=list)
    hits: List[MedianTriangle] = field(default_factory=list)
    misses: List[MedianTriangle] = field(default_factory=list)
    provenance: Dict[MedianTriangle, List[Tuple[int, int]]] = field(default_factory=dict)
    beyond_bound: List[MedianTriangle] = field(default_factory=list)

    @property
    def oracle_count(self):
        return len(self.oracle)

    def summary(self):
        return {
            "max_half_side": self.bound,
            "f_max": self.f_max,
            "g_max": self.g_max,
            "oracle_count": self.oracle_count,
            "hits": len(self.hits),
            "misses": len(self.misses),
            "beyond_bound": len(self.beyond_bound),
        }

    def as_dict(self):
        """Summary counts plus the triangles themselves as canonical sextuples

        ``provenance`` is a list of ``{"sextuple": [...], "pairs": [[f, g], ...]}``
        sorted by sextuple, each ``pairs`` list in grid (f-major) order.
        """
        return {
            "summary": self.summary(),
            "hits": [list(t.as_tuple()) for t in self.hits],
            "misses": [list(t.as_tuple()) for t in self.misses],
            "beyond_bound": [list(t.as_tuple()) for t in self.beyond_bound],
            "provenance": [
                {"sextuple": list(t.as_tuple()), "pairs": [list(pair) for pair in self.provenance[t]]}
                for t in sorted(self.provenance, key=lambda t: t.as_tuple())
            ],
        }


def coverage(bound, f_max, g_max, route=Route.RATIONAL_PIPELINE, workers=None) -> CoverageReport:
    """Compares :func:`enumerate` against the constructions over ``[1, f_max] x [1, g_max]``

    :raises: :class:`medians.exceptions.ConstructionConsistencyError` when a
        family triangle within the bound is missing from the search
    """
    limit = _as_bound(bound).max_half_side
    if f_max < 1 or g_max < 1:
        raise ParameterError(f"f_max and g_max must be positive, got {f_max}, {g_max}")
    workers = default_workers() if workers is None else workers

    oracle = enumerate(limit, workers=workers)
    outcomes = construct_grid(range(1, f_max + 1), range(1, g_max + 1), route, workers=workers)

    provenance = {}
    for pair, outcome in outcomes:
        if outcome.is_valid:
            provenance.setdefault(normalize(outcome.triangle), []).append(pair)

    known = set(oracle)
    beyond = []
    for triangle in provenance:
        if max(triangle.half_sides) > limit:
            beyond.append(triangle)
        elif triangle not in known:
            raise ConstructionConsistencyError(
                f"{triangle.as_tuple()} from {provenance[triangle]} is missing from the search"
            )

    report = CoverageReport(
        bound=limit,
        f_max=f_max,
        g_max=g_max,
        oracle=oracle,
        hits=[t for t in oracle if t in provenance],
        misses=[t for t in oracle if t not in provenance],
        provenance=provenance,
        beyond_bound=sorted(beyond, key=lambda t: t.as_tuple()),
    )
    logger.info("Coverage: %s", report.summary())
    return report
