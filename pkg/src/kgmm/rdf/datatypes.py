"""Lexical-form validation for XSD datatypes.

A literal is well-formed when its lexical form belongs to the lexical space
of its datatype. Datatypes without a registered grammar get the ``unknown``
verdict and are counted as well-formed by the accuracy evaluator.
"""
from __future__ import annotations

import enum
import re

from .terms import RDF_LANGSTRING, XSD, Literal

XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_FLOAT = XSD + "float"
XSD_BOOLEAN = XSD + "boolean"
XSD_DATE = XSD + "date"
XSD_DATETIME = XSD + "dateTime"
XSD_ANYURI = XSD + "anyURI"
XSD_GYEAR = XSD + "gYear"
XSD_STRING_IRI = XSD + "string"


class Verdict(enum.Enum):
    WELL_FORMED = "well-formed"
    ILL_FORMED = "ill-formed"
    UNKNOWN = "unknown"


# re.ASCII keeps \d from accepting non-Latin digit characters
_TZ = r"(Z|[+-](0\d|1[0-4]):[0-5]\d)?"
_DATE_RE = re.compile(r"^(-?\d{4,})-(\d{2})-(\d{2})" + _TZ + "$", re.ASCII)
_TIME_RE = re.compile(
    r"^(-?\d{4,})-(\d{2})-(\d{2})T(\d{2}):([0-5]\d):([0-5]\d)(\.\d+)?" + _TZ + "$",
    re.ASCII,
)
_GYEAR_RE = re.compile(r"^-?\d{4,}" + _TZ + "$", re.ASCII)
_INTEGER_RE = re.compile(r"^[+-]?\d+$", re.ASCII)
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$", re.ASCII)
_DOUBLE_RE = re.compile(
    r"^([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?|[+-]?INF|NaN)$", re.ASCII
)


def _days_in_month(year: int, month: int) -> int:
    if month in (1, 3, 5, 7, 8, 10, 12):
        return 31
    if month in (4, 6, 9, 11):
        return 30
    leap = year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)
    return 29 if leap else 28


def _valid_date_parts(year: str, month: str, day: str) -> bool:
    y, m, d = int(year), int(month), int(day)
    if not 1 <= m <= 12:
        return False
    return 1 <= d <= _days_in_month(y, m)


def _valid_date(lexical: str) -> bool:
    m = _DATE_RE.match(lexical)
    return bool(m) and _valid_date_parts(m.group(1), m.group(2), m.group(3))


_TIME24_RE = re.compile(
    r"^(-?\d{4,})-(\d{2})-(\d{2})T24:00:00(\.0+)?" + _TZ + "$", re.ASCII
)


def _valid_datetime(lexical: str) -> bool:
    m = _TIME_RE.match(lexical)
    if m is not None and int(m.group(4)) <= 23:
        return _valid_date_parts(m.group(1), m.group(2), m.group(3))
    # 24:00:00 denotes the first instant of the next day
    m24 = _TIME24_RE.match(lexical)
    return bool(m24) and _valid_date_parts(m24.group(1), m24.group(2), m24.group(3))


def _valid_anyuri(lexical: str) -> bool:
    return not any(c.isspace() for c in lexical) and not set('<>"').intersection(lexical)


_VALIDATORS = {
    XSD_STRING_IRI: lambda s: True,
    RDF_LANGSTRING: lambda s: True,
    XSD_INTEGER: lambda s: bool(_INTEGER_RE.match(s)),
    XSD_DECIMAL: lambda s: bool(_DECIMAL_RE.match(s)),
    XSD_DOUBLE: lambda s: bool(_DOUBLE_RE.match(s)),
    XSD_FLOAT: lambda s: bool(_DOUBLE_RE.match(s)),
    XSD_BOOLEAN: lambda s: s in ("true", "false", "1", "0"),
    XSD_DATE: _valid_date,
    XSD_DATETIME: _valid_datetime,
    XSD_ANYURI: _valid_anyuri,
    XSD_GYEAR: lambda s: bool(_GYEAR_RE.match(s)),
}


def validate_literal(lit: Literal) -> Verdict:
    validator = _VALIDATORS.get(lit.datatype.value)
    if validator is None:
        return Verdict.UNKNOWN
    return Verdict.WELL_FORMED if validator(lit.lexical) else Verdict.ILL_FORMED


def is_well_formed(lit: Literal) -> bool:
    """Unknown datatypes count as well-formed."""
    return validate_literal(lit) is not Verdict.ILL_FORMED
