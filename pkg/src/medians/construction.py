"""Parametric construction of median triangles from a generator pair ``(f, g)``.

Two routes lead from ``(f, g)`` to a signed sextuple ``(a, b, c, x, y, z)``:

``Route.RATIONAL_PIPELINE``
    m, n -> rational p, q -> coprime integer p, q -> t, u -> sextuple

``Route.CLOSED_FORM``
    polynomial expressions in f and g, no rationals at all

Both end in :func:`construct`, which takes absolute values, classifies the
result and, when it is a proper triangle, reduces it to primitive form.

Note on the recipe: ``m`` is ``(5g^2 - f^2) / (4g^2)``. A variant with ``4f^2``
in the denominator does not reproduce ``m = 1/4`` at ``(f, g) = (2, 1)`` and
is not used.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Optional, Tuple

from .arith import Rational, gcd, lcm, rational_make, square
from .exceptions import (
    ConstructionConsistencyError,
    DegenerateRatioError,
    ParameterError,
)
from .triangle import Degeneracy, MedianTriangle, classify_sides, verify

logger = logging.getLogger(__name__)


class Route(Enum):
    RATIONAL_PIPELINE = "rational"
    CLOSED_FORM = "closed-form"


class Classification(Enum):
    VALID = "Valid"
    DEGENERATE = "Degenerate"
    ZERO = "Zero"


@dataclass(frozen=True)
class Parameters:
    """The generator pair, two positive integers"""

    f: int
    g: int

    def __post_init__(self):
        for name in ("f", "g"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ParameterError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class ConstructionTrace:
    """Every intermediate of one construction.

    ``m``, ``n``, ``p_rat`` and ``q_rat`` are None on the closed-form route,
    which never forms rationals.
    """

    m: Optional[Rational]
    n: Optional[Rational]
    p_rat: Optional[Rational]
    q_rat: Optional[Rational]
    p: int
    q: int
    t: Rational
    u: Rational
    raw_a: int
    raw_b: int
    raw_c: int
    raw_x: int
    raw_y: int
    raw_z: int

    @property
    def raw(self):
        return (self.raw_a, self.raw_b, self.raw_c, self.raw_x, self.raw_y, self.raw_z)


@dataclass(frozen=True)
class ConstructionOutcome:
    params: Parameters
    route: Route
    trace: ConstructionTrace
    classification: Classification
    triangle: Optional[MedianTriangle] = None

    @property
    def is_valid(self):
        return self.classification is Classification.VALID


def compute_mn(params: Parameters) -> Tuple[Rational, Rational]:
    """``m = (5g^2 - f^2) / 4g^2`` and ``n = (5f^2 - 9g^2) / 4f^2``

    >>> compute_mn(Parameters(2, 1))
    (Fraction(1, 4), Fraction(11, 16))
    """
    ff, gg = params.f * params.f, params.g * params.g
    return rational_make(5 * gg - ff, 4 * gg), rational_make(5 * ff - 9 * gg, 4 * ff)


def compute_pq_rational(m: Rational, n: Rational) -> Tuple[Rational, Rational]:
    """``p = 4(m + n)`` and ``q = (m - n)^2 - 4``"""
    return 4 * (m + n), square(m - n) - 4


def integerize(p: Rational, q: Rational) -> Tuple[int, int]:
    """The coprime integer pair with the same ratio and the same signs as ``(p, q)``

    :raises: :class:`medians.exceptions.DegenerateRatioError` for ``(0, 0)``

    >>> integerize(Fraction(15, 4), Fraction(-975, 256))
    (64, -65)
    """
    p, q = Rational(p), Rational(q)
    if p == 0 and q == 0:
        raise DegenerateRatioError("degenerate ratio")
    common = lcm(p.denominator, q.denominator)
    p_num = p.numerator * (common // p.denominator)
    q_num = q.numerator * (common // q.denominator)
    divisor = gcd(p_num, q_num)
    return p_num // divisor, q_num // divisor


def compute_tu(m: Rational, n: Rational, p: int, q: int) -> Tuple[Rational, Rational]:
    """``t = (m - n)p/2 + q`` and ``u = (m - n)p/2 - q``"""
    half = (m - n) * p / 2
    return half + q, half - q


def _require_integer(value: Rational, name: str, params: Parameters) -> int:
    if Rational(value).denominator != 1:
        raise ConstructionConsistencyError(
            f"{name} = {value} is not an integer for f={params.f}, g={params.g}"
        )
    return int(value)


def assemble_triangle(params: Parameters, m: Rational, n: Rational, p: int, q: int):
    """The signed sextuple ``(a, b, c, x, y, z)`` for integer ``p``, ``q``

    :raises: :class:`medians.exceptions.ConstructionConsistencyError` if ``c``
        or ``z`` is not integral
    """
    f, g = params.f, params.g
    d = m - n
    a = (f - g) * p + (f + g) * q
    b = (f + g) * p + (f - g) * q
    c = _require_integer(g * d * p + 2 * g * q, "c", params)
    x = (3 * g + f) * p + (3 * g - f) * q
    y = (3 * g - f) * p + (3 * g + f) * q
    z = _require_integer(f * d * p - 2 * f * q, "z", params)
    return (a, b, c, x, y, z)


@dataclass(frozen=True)
class ClosedForm:
    p: int
    q: int
    t: int
    u: int
    sextuple: Tuple[int, int, int, int, int, int]


def closed_form(params: Parameters) -> ClosedForm:
    """Evaluates the polynomial forms directly.

    ``p = -16f^2g^2``, ``q = (g^2 + f^2)(9g^2 + f^2)``,
    ``t = q - 2(3g^2 + f^2)(3g^2 - f^2)``, ``u = -q - 2(3g^2 + f^2)(3g^2 - f^2)``,
    ``c = 2gt``, ``z = 2fu``, and a, b, x, y from
    ``a + b = 2f(p + q)``, ``b - a = 2g(p - q)``, ``x + y = 6g(p + q)``,
    ``x - y = 2f(p - q)``.
    """
    f, g = params.f, params.g
    ff, gg = f * f, g * g
    p = -16 * ff * gg
    q = (gg + ff) * (9 * gg + ff)
    cross = 2 * (3 * gg + ff) * (3 * gg - ff)
    t = q - cross
    u = -q - cross
    total, diff = p + q, p - q
    a = f * total - g * diff
    b = f * total + g * diff
    x = 3 * g * total + f * diff
    y = 3 * g * total - f * diff
    return ClosedForm(p, q, t, u, (a, b, 2 * g * t, x, y, 2 * f * u))


def mn_forms(params: Parameters) -> Tuple[Rational, Rational]:
    """``c`` and ``z`` from m and n alone, for the unscaled ``p = 4(m + n)``,
    ``q = (m - n)^2 - 4``: ``2g(m - n)(3m + n) - 8g`` and ``2f(m - n)(m + 3n) + 8f``
    """
    m, n = compute_mn(params)
    d = m - n
    return (
        2 * params.g * d * (3 * m + n) - 8 * params.g,
        2 * params.f * d * (m + 3 * n) + 8 * params.f,
    )


def square_conditions(params: Parameters, p, q):
    """The quadratic forms in ``p``, ``q`` that the construction turns into squares.

    :returns: dict with ``c2`` and ``z2`` (the two conditions), and the
        intermediate sums ``x2_plus_y2`` and ``a2_plus_b2``
    """
    ff, gg = params.f * params.f, params.g * params.g
    s, pq = p * p + q * q, p * q
    return {
        "c2": 4 * gg * s + (10 * gg - 2 * ff) * pq,
        "z2": 4 * ff * s + (10 * ff - 18 * gg) * pq,
        "x2_plus_y2": 2 * (9 * gg + ff) * s + 4 * (9 * gg - ff) * pq,
        "a2_plus_b2": 2 * (ff + gg) * s + 4 * (ff - gg) * pq,
    }


def factorizations(params: Parameters):
    """Factored forms of ``m + n``, ``m - n``, ``m - n + 2`` and ``m - n - 2``,
    each scaled by ``4f^2g^2``.

    :returns: dict of name -> (scaled rational, factored integer); the two
        members of each pair are equal
    """
    m, n = compute_mn(params)
    ff, gg = params.f * params.f, params.g * params.g
    scale = 4 * ff * gg
    return {
        "m+n": (scale * (m + n), -(gg - ff) * (9 * gg - ff)),
        "m-n": (scale * (m - n), (3 * gg + ff) * (3 * gg - ff)),
        "m-n+2": (scale * (m - n + 2), (gg + ff) * (9 * gg - ff)),
        "m-n-2": (scale * (m - n - 2), (gg - ff) * (9 * gg + ff)),
    }


def _pipeline_trace(params: Parameters) -> ConstructionTrace:
    m, n = compute_mn(params)
    p_rat, q_rat = compute_pq_rational(m, n)
    if p_rat == 0 and q_rat == 0:
        # f = g and f = 3g: the ratio p:q is indeterminate
        logger.debug("Indeterminate ratio for f=%d, g=%d", params.f, params.g)
        zero = Rational(0)
        return ConstructionTrace(m, n, p_rat, q_rat, 0, 0, zero, zero, 0, 0, 0, 0, 0, 0)
    p, q = integerize(p_rat, q_rat)
    t, u = compute_tu(m, n, p, q)
    raw = assemble_triangle(params, m, n, p, q)
    if raw[2] != 2 * params.g * t or raw[5] != 2 * params.f * u:
        raise ConstructionConsistencyError(
            f"c != 2gt or z != 2fu for f={params.f}, g={params.g}"
        )
    return ConstructionTrace(m, n, p_rat, q_rat, p, q, t, u, *raw)


def _closed_form_trace(params: Parameters) -> ConstructionTrace:
    closed = closed_form(params)
    return ConstructionTrace(
        None, None, None, None, closed.p, closed.q,
        Rational(closed.t), Rational(closed.u), *closed.sextuple,
    )


def classify(raw) -> Classification:
    """Classification of a signed sextuple by its half-sides"""
    degeneracy = classify_sides(*raw[:3])
    if degeneracy is Degeneracy.ZERO_SIDE:
        return Classification.ZERO
    if degeneracy is Degeneracy.NONE:
        return Classification.VALID
    return Classification.DEGENERATE


def construct(params: Parameters, route: Route = Route.RATIONAL_PIPELINE) -> ConstructionOutcome:
    """Runs one route end to end.

    The outcome keeps the signed trace. A Valid outcome carries the primitive
    :class:`MedianTriangle` of the absolute values, in ``(a, b, c, x, y, z)``
    order. At f = g and f = 3g the rational pipeline meets the indeterminate
    ratio 0:0 and the outcome is Degenerate.

    >>> construct(Parameters(2, 1)).triangle.as_tuple()
    (131, 127, 158, 255, 261, 204)
    """
    if route is Route.CLOSED_FORM:
        trace = _closed_form_trace(params)
    else:
        trace = _pipeline_trace(params)

    if trace.p == 0 and trace.q == 0:
        classification = Classification.DEGENERATE
    else:
        classification = classify(trace.raw)

    triangle = None
    if classification is Classification.VALID:
        values = tuple(abs(v) for v in trace.raw)
        report = verify(values)
        if not report.ok:
            raise ConstructionConsistencyError(
                f"f={params.f}, g={params.g} produced {trace.raw}, failing {report.failures}"
            )
        triangle = MedianTriangle(*values).primitive()

    logger.debug(
        "f=%d g=%d route=%s -> %s", params.f, params.g, route.value, classification.value
    )
    return ConstructionOutcome(params, route, trace, classification, triangle)


def _construct_pair(pair, route):
    f, g = pair
    try:
        return pair, construct(Parameters(f, g), route)
    except OverflowError as e:
        raise OverflowError(f"arithmetic overflow at f={f}, g={g}: {e}") from e


def construct_grid(f_range, g_range, route=Route.RATIONAL_PIPELINE, workers=1):
    """Constructs every ``(f, g)`` in ``f_range x g_range``.

    :returns: list of ``((f, g), ConstructionOutcome)`` in f-major, g-minor order,
        whatever the number of workers
    """
    pairs = [(f, g) for f in f_range for g in g_range]
    job = partial(_construct_pair, route=route)
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(job, pairs, chunksize=max(1, len(pairs) // (4 * workers))))
    return [job(pair) for pair in pairs]
