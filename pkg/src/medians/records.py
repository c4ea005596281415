"""Text formats for triangles: JSON lines, CSV and inline sextuples.

All numbers are written in decimal integers; rationals in a trace are written
as ``"num/den"`` strings. Nothing is ever written as a float.
"""

import csv
import io
import json
import logging
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .arith import Rational
from .exceptions import RecordParseError

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["f", "g", "a", "b", "c", "x", "y", "z", "primitive", "classification"]
CSV_HEADER = ",".join(CSV_COLUMNS)
VERIFY_COLUMNS = ["line", "a", "b", "c", "x", "y", "z", "ok", "failures", "primitive", "degeneracy"]
SEPARATOR = re.compile(r"[\s,]+")


def _rational_value(value):
    """Integers stay integers, other rationals become ``"num/den"``"""
    if value is None:
        return None
    value = Rational(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class TriangleRecord:
    """One triangle (or one failed construction) for interchange.

    ``half_sides``, ``medians`` and ``sides`` are None when the construction
    produced no triangle.
    """

    half_sides: Optional[Tuple[int, int, int]]
    medians: Optional[Tuple[int, int, int]]
    classification: str = "Valid"
    primitive: bool = False
    f: Optional[int] = None
    g: Optional[int] = None
    route: Optional[str] = None
    trace: Optional[dict] = None

    @classmethod
    def from_triangle(cls, triangle, **provenance):
        return cls(
            half_sides=triangle.half_sides,
            medians=triangle.medians,
            classification="Valid",
            primitive=triangle.is_primitive,
            **provenance,
        )

    @classmethod
    def from_outcome(cls, outcome, include_trace=False):
        """Record for a :class:`medians.construction.ConstructionOutcome`"""
        trace = None
        if include_trace:
            tr = outcome.trace
            trace = {
                "m": _rational_value(tr.m),
                "n": _rational_value(tr.n),
                "p_rat": _rational_value(tr.p_rat),
                "q_rat": _rational_value(tr.q_rat),
                "p": tr.p,
                "q": tr.q,
                "t": _rational_value(tr.t),
                "u": _rational_value(tr.u),
                "raw": list(tr.raw),
            }
        triangle = outcome.triangle
        return cls(
            half_sides=triangle.half_sides if triangle else None,
            medians=triangle.medians if triangle else None,
            classification=outcome.classification.value,
            primitive=bool(triangle and triangle.is_primitive),
            f=outcome.params.f,
            g=outcome.params.g,
            route=outcome.route.value,
            trace=trace,
        )

    @property
    def sides(self):
        if self.half_sides is None:
            return None
        return tuple(2 * v for v in self.half_sides)

    @property
    def sextuple(self):
        if self.half_sides is None:
            return None
        return tuple(self.half_sides) + tuple(self.medians)

    def as_dict(self):
        result = {}
        if self.f is not None:
            result.update(f=self.f, g=self.g)
        if self.route is not None:
            result["route"] = self.route
        result.update(
            half_sides=list(self.half_sides) if self.half_sides else None,
            sides=list(self.sides) if self.sides else None,
            medians=list(self.medians) if self.medians else None,
            primitive=self.primitive,
            classification=self.classification,
        )
        if self.trace is not None:
            result["trace"] = self.trace
        return result

    def to_json(self):
        return json.dumps(self.as_dict(), separators=(", ", ": "))

    def csv_row(self):
        values = self.sextuple or ("",) * 6
        return [
            "" if self.f is None else self.f,
            "" if self.g is None else self.g,
            *values,
            "true" if self.primitive else "false",
            self.classification,
        ]

    @classmethod
    def from_json(cls, text, line_number=None):
        try:
            data = json.loads(text)
            half_sides = data.get("half_sides")
            medians = data.get("medians")
            record = cls(
                half_sides=tuple(_as_int(v) for v in half_sides) if half_sides else None,
                medians=tuple(_as_int(v) for v in medians) if medians else None,
                classification=data.get("classification", "Valid"),
                primitive=bool(data.get("primitive", False)),
                f=data.get("f"),
                g=data.get("g"),
                route=data.get("route"),
                trace=data.get("trace"),
            )
        except (ValueError, TypeError, AttributeError) as e:
            raise RecordParseError(f"invalid JSON record: {e}", line_number)
        _check_sizes(record, line_number)
        return record

    @classmethod
    def from_csv_row(cls, row, line_number=None):
        if len(row) != len(CSV_COLUMNS):
            raise RecordParseError(
                f"expected {len(CSV_COLUMNS)} CSV columns, got {len(row)}", line_number
            )
        data = dict(zip(CSV_COLUMNS, row))
        try:
            numbers = [data[k] for k in "abcxyz"]
            sextuple = None
            if any(numbers):
                sextuple = tuple(_as_int(v) for v in numbers)
            return cls(
                half_sides=sextuple[:3] if sextuple else None,
                medians=sextuple[3:] if sextuple else None,
                classification=data["classification"],
                primitive=data["primitive"].strip().lower() == "true",
                f=_as_int(data["f"]) if data["f"] else None,
                g=_as_int(data["g"]) if data["g"] else None,
            )
        except ValueError as e:
            raise RecordParseError(f"invalid CSV record: {e}", line_number)


def _as_int(value):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"{value!r} is not an integer")
    return int(value)


def _check_sizes(record, line_number):
    if (record.half_sides is None) != (record.medians is None):
        raise RecordParseError("half_sides and medians must both be present", line_number)
    for name in ("half_sides", "medians"):
        values = getattr(record, name)
        if values is not None and len(values) != 3:
            raise RecordParseError(f"{name} must have three entries", line_number)


def parse_sextuple(text, line_number=None):
    """Six integers ``a b c x y z`` separated by whitespace or commas"""
    fields = [v for v in SEPARATOR.split(text.strip()) if v]
    if len(fields) != 6:
        raise RecordParseError(f"expected 6 integers, got {len(fields)}", line_number)
    try:
        return tuple(int(v) for v in fields)
    except ValueError as e:
        raise RecordParseError(f"not an integer: {e}", line_number)


def read_sextuples(lines):
    """Reads sextuples from inline text, JSON lines or CSV.

    Blank lines and ``#`` comments are skipped. JSON lines are recognised by a
    leading ``{``; a CSV header switches the remaining lines to CSV. Records
    carrying no triangle are skipped.

    :returns: generator of ``(line_number, sextuple)``
    :raises: :class:`medians.exceptions.RecordParseError` with the line number
    """
    in_csv = False
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if text == CSV_HEADER:
            in_csv = True
            continue
        if text.startswith("{"):
            record = TriangleRecord.from_json(text, line_number)
        elif in_csv:
            row = next(csv.reader([text]))
            record = TriangleRecord.from_csv_row(row, line_number)
        else:
            yield line_number, parse_sextuple(text, line_number)
            continue
        if record.sextuple is None:
            logger.debug("line %d: %s record has no triangle", line_number, record.classification)
            continue
        yield line_number, record.sextuple


def write_records(records, fmt="json"):
    """Serializes records as JSON lines or CSV with a header row.

    :returns: the complete text, so nothing is written if serialization fails
    """
    buffer = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.csv_row())
    else:
        for record in records:
            buffer.write(record.to_json())
            buffer.write("\n")
    return buffer.getvalue()


def write_reports(results, fmt="json"):
    """Serializes ``(line_number, sextuple, VerificationReport)`` triples"""
    buffer = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(VERIFY_COLUMNS)
        for line_number, sextuple, report in results:
            writer.writerow(
                [line_number, *sextuple, "true" if report.ok else "false",
                 ";".join(report.failures), "true" if report.primitive else "false",
                 report.degeneracy.value]
            )
    else:
        for line_number, sextuple, report in results:
            entry = {"line": line_number, "sextuple": list(sextuple), "ok": report.ok,
                     "failures": report.failures}
            entry.update(report.as_dict())
            buffer.write(json.dumps(entry, separators=(", ", ": ")))
            buffer.write("\n")
    return buffer.getvalue()
