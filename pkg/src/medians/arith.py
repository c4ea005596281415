"""Exact integer and rational primitives.

Nothing in the package uses floating point. Integers are Python's unbounded
``int``; rationals are :class:`fractions.Fraction`, which keeps every value in
lowest terms with a positive denominator and represents zero as ``0/1``.

If ``gmpy2`` is installed it is used for square roots, unless the
``MEDIANS_NOGMPY`` environment variable is set. Results are always plain ``int``.
"""

import logging
import math
import os
from fractions import Fraction
from functools import reduce

from .exceptions import RationalArithmeticError

logger = logging.getLogger(__name__)

Rational = Fraction

gmpy = None
BACKEND = "python"

if "MEDIANS_NOGMPY" not in os.environ:
    try:
        import gmpy2 as gmpy

        BACKEND = "gmpy"
    except ImportError:
        pass

logger.debug("Integer backend: %s", BACKEND)


def gcd(a: int, b: int) -> int:
    """Non-negative greatest common divisor; ``gcd(0, 0) == 0``

    >>> gcd(960, -975)
    15
    """
    return math.gcd(a, b)


def gcd_all(*values: int) -> int:
    """gcd across any number of integers, 0 when there are none or all are 0"""
    return reduce(math.gcd, values, 0)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def integer_sqrt(n: int) -> int:
    """Floor of the exact square root of ``n``

    :raises: ValueError for negative ``n``
    """
    if n < 0:
        raise ValueError(f"{n} has no real square root")
    if gmpy is not None:
        return int(gmpy.isqrt(n))
    return math.isqrt(n)


def is_perfect_square(n: int):
    """Returns ``r >= 0`` with ``r * r == n``, or None

    Negative numbers and non-squares give None.

    >>> is_perfect_square(65025)
    255
    >>> is_perfect_square(2) is None
    True
    """
    if n < 0:
        return None
    if gmpy is not None and not gmpy.is_square(n):
        return None
    root = integer_sqrt(n)
    if root * root == n:
        return root
    return None


def rational_make(num: int, den: int) -> Rational:
    """Builds ``num/den`` in lowest terms, sign carried by the numerator

    :raises: :class:`medians.exceptions.RationalArithmeticError` when ``den`` is 0
    """
    if den == 0:
        raise RationalArithmeticError("division by zero")
    return Fraction(num, den)


def square(r: Rational) -> Rational:
    return r * r
