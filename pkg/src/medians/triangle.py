"""The median triangle data model.

A triangle has sides ``2a``, ``2b``, ``2c``; the median ``x`` bisects side
``2a``, ``y`` bisects ``2b`` and ``z`` bisects ``2c``. With this convention
the medians satisfy

    x^2 = 2b^2 + 2c^2 - a^2
    y^2 = 2c^2 + 2a^2 - b^2
    z^2 = 2a^2 + 2b^2 - c^2

and the triangle whose half-sides are ``x, y, z`` has medians ``3a, 3b, 3c``.
"""

import logging
from dataclasses import dataclass, astuple
from enum import Enum

from .arith import gcd_all
from .exceptions import ConstructionConsistencyError, VerificationError

logger = logging.getLogger(__name__)


class Degeneracy(Enum):
    """Shape of the half-sides ``(|a|, |b|, |c|)``"""

    NONE = "none"
    COLLINEAR = "collinear"
    ZERO_SIDE = "zero_side"
    # largest half-side exceeds the sum of the other two
    VIOLATION = "violation"


def median_squares(a, b, c):
    """The squares of the three medians for half-sides ``a, b, c``

    Only squares are used, so signs do not matter.

    >>> median_squares(131, 127, 158)
    (65025, 68121, 41616)
    """
    aa, bb, cc = a * a, b * b, c * c
    return (2 * bb + 2 * cc - aa, 2 * cc + 2 * aa - bb, 2 * aa + 2 * bb - cc)


def classify_sides(a, b, c):
    """Classifies half-sides after taking absolute values

    :returns: a :class:`Degeneracy`, ``NONE`` for a proper triangle
    """
    sides = sorted((abs(a), abs(b), abs(c)))
    if sides[0] == 0:
        return Degeneracy.ZERO_SIDE
    if sides[2] == sides[0] + sides[1]:
        return Degeneracy.COLLINEAR
    if sides[2] > sides[0] + sides[1]:
        return Degeneracy.VIOLATION
    return Degeneracy.NONE


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a candidate sextuple ``(a, b, c, x, y, z)``

    ``identity_difference`` and ``identity_sum`` are the derived identities
    ``x^2 - y^2 = 3(b^2 - a^2)`` and ``x^2 + y^2 = 4c^2 + a^2 + b^2``, recomputed
    independently of the three median identities.
    """

    identity_x: bool
    identity_y: bool
    identity_z: bool
    identity_difference: bool
    identity_sum: bool
    triangle_inequality: bool
    positive: bool
    primitive: bool
    degeneracy: Degeneracy

    CHECKS = (
        "identity_x",
        "identity_y",
        "identity_z",
        "identity_difference",
        "identity_sum",
        "triangle_inequality",
        "positive",
    )

    @property
    def failures(self):
        """Names of the failing checks, in a fixed order"""
        return [name for name in self.CHECKS if not getattr(self, name)]

    @property
    def ok(self):
        """True when the sextuple is a :class:`MedianTriangle`"""
        return not self.failures

    def as_dict(self):
        result = {name: getattr(self, name) for name in self.CHECKS}
        result["primitive"] = self.primitive
        result["degeneracy"] = self.degeneracy.value
        return result


def verify(sextuple):
    """Checks the median identities, the derived identities, the triangle
    inequality and primitivity. Failures are reported, never raised.

    :param sextuple: six integers ``(a, b, c, x, y, z)``
    :returns: :class:`VerificationReport`
    """
    a, b, c, x, y, z = sextuple
    aa, bb, cc = a * a, b * b, c * c
    xx, yy, zz = x * x, y * y, z * z
    degeneracy = classify_sides(a, b, c)
    return VerificationReport(
        identity_x=xx == 2 * bb + 2 * cc - aa,
        identity_y=yy == 2 * cc + 2 * aa - bb,
        identity_z=zz == 2 * aa + 2 * bb - cc,
        identity_difference=xx - yy == 3 * (bb - aa),
        identity_sum=xx + yy == 4 * cc + aa + bb,
        triangle_inequality=degeneracy is Degeneracy.NONE,
        positive=all(v > 0 for v in sextuple),
        primitive=gcd_all(*sextuple) == 1,
        degeneracy=degeneracy,
    )


@dataclass(frozen=True)
class MedianTriangle:
    """A triangle with integer half-sides ``a, b, c`` and integer medians ``x, y, z``

    Creation verifies the median identities, so every instance is valid.

    :raises: :class:`medians.exceptions.VerificationError` for invalid values
    """

    a: int
    b: int
    c: int
    x: int
    y: int
    z: int

    def __post_init__(self):
        report = verify(self.as_tuple())
        if not report.ok:
            raise VerificationError(
                f"{self.as_tuple()} is not a median triangle: failed {', '.join(report.failures)}",
                report=report,
            )

    def __iter__(self):
        return iter(self.as_tuple())

    def as_tuple(self):
        return astuple(self)

    @property
    def half_sides(self):
        return (self.a, self.b, self.c)

    @property
    def sides(self):
        return (2 * self.a, 2 * self.b, 2 * self.c)

    @property
    def medians(self):
        return (self.x, self.y, self.z)

    @property
    def is_primitive(self):
        return gcd_all(*self.as_tuple()) == 1

    def scaled(self, k):
        if k < 1:
            raise ValueError(f"scale factor must be positive, got {k}")
        return MedianTriangle(*(k * v for v in self.as_tuple()))

    def primitive(self):
        """Divides all six entries by their gcd, keeping the (side, median) order"""
        g = gcd_all(*self.as_tuple())
        if g == 1:
            return self
        return MedianTriangle(*(v // g for v in self.as_tuple()))


def duality_identities(triangle):
    """The three identities making the medians the half-sides of another
    median triangle: ``2x^2 + 2y^2 - z^2 = 9c^2`` and its two companions.

    :returns: tuple of three booleans, for ``9c^2``, ``9a^2``, ``9b^2``
    """
    a, b, c, x, y, z = triangle
    xx, yy, zz = x * x, y * y, z * z
    return (
        2 * xx + 2 * yy - zz == 9 * c * c,
        2 * yy + 2 * zz - xx == 9 * a * a,
        2 * zz + 2 * xx - yy == 9 * b * b,
    )


def dual(triangle):
    """The median triangle: half-sides ``(x, y, z)`` with medians ``(3a, 3b, 3c)``,
    reduced to primitive form in pairing order.

    The factor 3 is never divided out by assumption; primitive reduction removes
    it whenever it is present.

    >>> dual(MedianTriangle(131, 127, 158, 255, 261, 204)).as_tuple()
    (85, 87, 68, 131, 127, 158)
    """
    if not all(duality_identities(triangle)):
        raise ConstructionConsistencyError(
            f"duality identities fail for {tuple(triangle)}"
        )
    a, b, c, x, y, z = triangle
    return MedianTriangle(x, y, z, 3 * a, 3 * b, 3 * c).primitive()


def normalize(sextuple):
    """Canonical primitive form of a sextuple.

    Absolute values are taken, all six are divided by their gcd, and the
    ``(side, median)`` pairs are sorted ascending by half-side, ties broken by
    median.

    :raises: :class:`medians.exceptions.VerificationError` if the sextuple
        does not verify after taking absolute values
    """
    values = tuple(abs(v) for v in sextuple)
    report = verify(values)
    if not report.ok:
        raise VerificationError(
            f"cannot normalize {tuple(sextuple)}: failed {', '.join(report.failures)}",
            report=report,
        )
    g = gcd_all(*values)
    a, b, c, x, y, z = (v // g for v in values)
    pairs = sorted([(a, x), (b, y), (c, z)])
    (a, x), (b, y), (c, z) = pairs
    return MedianTriangle(a, b, c, x, y, z)


def similar(first, second):
    """True when both triangles share the same canonical primitive form"""
    return normalize(first) == normalize(second)
