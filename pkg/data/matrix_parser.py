"""
Matrix parser for the two input formats.

Text format: entries separated by whitespace or commas, rows separated by ``;``
or newlines, ``#`` starts a comment. Literals are ``a``, ``bi``, ``a+bi`` and
``a-bi``. Whitespace around the inner sign is allowed on both sides or on
neither, so ``1 - 2i`` and ``1-2i`` are one entry while ``1 -2i`` is two.
``i`` alone is ``1i`` and ``j`` may replace ``i``.

JSON format: ``{"n": int, "re": [[...]], "im": [[...]]}``. A full report
document is accepted too; its ``input`` member is used.
"""
import json
import logging
import math
import re
from typing import List

from data.serialization import matrix_from_dict
from models.matrix_document import MatrixDocument
from utils.errors import NonSquareMatrix, ParseError

logger = logging.getLogger("UECSM.Parser")

_FLOAT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_END = r"(?=[\s,;]|$)"
_IMAGINARY_RE = re.compile(rf"(?P<sign>[+-]?)(?P<value>{_FLOAT})?[ij]{_END}")
_COMPLEX_RE = re.compile(
    rf"(?P<real>[+-]?{_FLOAT})(?:(?:\s+(?P<spaced_sign>[+-])\s+|(?P<sign>[+-]))(?P<imag>{_FLOAT})?[ij])?{_END}"
)


def _imaginary_part(sign: str, value: str) -> float:
    magnitude = float(value) if value else 1.0
    return -magnitude if sign == "-" else magnitude


def _parse_literal(line: str, pos: int, lineno: int):
    """Parse the literal starting at ``pos``; return (value, end)."""
    match = _IMAGINARY_RE.match(line, pos)
    if match:
        value = complex(0.0, _imaginary_part(match.group("sign"), match.group("value")))
    else:
        match = _COMPLEX_RE.match(line, pos)
        if not match:
            token = re.match(r"[^\s,;]*", line[pos:]).group(0)
            raise ParseError(f"Invalid complex literal {token!r}", lineno, pos + 1)
        imag = 0.0
        sign = match.group("sign") or match.group("spaced_sign")
        if sign:
            imag = _imaginary_part(sign, match.group("imag"))
        value = complex(float(match.group("real")), imag)

    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ParseError(f"Literal {match.group(0)!r} is not finite", lineno, pos + 1)
    return value, match.end()


def parse_text(text: str) -> MatrixDocument:
    """
    Parse the semicolon-row text format.

    Args:
        text: The document

    Returns:
        MatrixDocument: The parsed matrix

    Raises:
        ParseError: On an invalid literal or an empty document
        NonSquareMatrix: If the rows do not form a square matrix
    """
    rows: List[List[complex]] = []
    row_lines: List[int] = []
    row: List[complex] = []

    def finish_row(lineno: int) -> None:
        nonlocal row
        if row:
            rows.append(row)
            row_lines.append(lineno)
        row = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            char = line[pos]
            if char in " \t\r\f\v,":
                pos += 1
            elif char == ";":
                finish_row(lineno)
                pos += 1
            else:
                value, pos = _parse_literal(line, pos, lineno)
                row.append(value)
        finish_row(lineno)

    if not rows:
        raise ParseError("Document holds no matrix entries", 1, 1)
    n = len(rows)
    for entries, lineno in zip(rows, row_lines):
        if len(entries) != n:
            raise NonSquareMatrix(f"Row on line {lineno} has {len(entries)} entries; a {n}-row matrix needs {n}")
    return MatrixDocument(rows, source="text")


def parse_json(text: str) -> MatrixDocument:
    """
    Parse the JSON matrix schema.

    Args:
        text: The document

    Returns:
        MatrixDocument: The parsed matrix

    Raises:
        ParseError: On invalid JSON or a malformed matrix object
        NonSquareMatrix: If the arrays are not square
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)
    if isinstance(data, dict) and "re" not in data and isinstance(data.get("input"), dict):
        data = data["input"]
    return MatrixDocument(matrix_from_dict(data), source="json")


def parse_matrix(text: str) -> MatrixDocument:
    """
    Parse a matrix in either input format.

    Documents whose first non-blank character is ``{`` are read as JSON.

    Args:
        text: The document

    Returns:
        MatrixDocument: The parsed matrix
    """
    if text.lstrip().startswith("{"):
        document = parse_json(text)
    else:
        document = parse_text(text)
    logger.debug(f"Parsed {document}")
    return document
