"""
📄 Matrix Input / Report Output

Reads comparison matrices from CSV or JSON and renders a RatingReport
as JSON (exact fractions as strings) or as an aligned text summary.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from rating.report import RatingReport
from tropical.errors import ParseError, SchemaError
from tropical.matrix import TropicalMatrix, TropicalVector
from tropical.scalars import Arithmetic, format_scalar, parse_scalar, to_scalar
from utils.logger import get_logger

logger = get_logger(__name__)


# ==================== INPUT ====================

def parse_matrix_csv(text: str, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> TropicalMatrix:
    """
    Parse n lines of n comma-separated values

    Values may be integers ("3"), decimals ("0.5") or fractions ("1/3").
    Blank lines are ignored.

    Raises:
        ParseError: empty input, ragged row, or unreadable value (1-based
            line and column in the message)
    """
    rows: List[list] = []
    width: Optional[int] = None
    for line_no, record in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not record or all(not cell.strip() for cell in record):
            continue
        if width is None:
            width = len(record)
        elif len(record) != width:
            raise ParseError(f"ragged row: {len(record)} values, expected {width}", line=line_no)
        row = []
        for col_no, cell in enumerate(record, start=1):
            try:
                row.append(parse_scalar(cell, arithmetic))
            except ValueError as e:
                raise ParseError(str(e), line=line_no, column=col_no) from e
        rows.append(row)
    if not rows:
        raise ParseError("empty input")
    logger.debug(f"CSV: {len(rows)}x{width} matrix")
    return TropicalMatrix.from_rows(rows, arithmetic)


def _json_scalar(value: Any, path: str, arithmetic: Arithmetic):
    # bool is an int subclass; true/false are not numbers here
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
        raise SchemaError(path, f"expected a number or a fraction string, got {json.dumps(value, default=str)}")
    if isinstance(value, str):
        try:
            return parse_scalar(value, arithmetic)
        except ValueError as e:
            raise SchemaError(path, str(e)) from e
    return to_scalar(value, arithmetic)


def parse_matrix_json(text: str, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> Tuple[TropicalMatrix, Optional[List[str]]]:
    """
    Parse {"matrix": [[...], ...], "labels": [...]}

    Numbers are read exactly (decimals become Fractions before any float
    conversion).

    Returns:
        (matrix, labels or None)

    Raises:
        ParseError: text is not JSON
        SchemaError: document shape is wrong, with a path like $.matrix[1][2]
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e

    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    if "matrix" not in doc:
        raise SchemaError("$", 'missing "matrix"')
    raw = doc["matrix"]
    if not isinstance(raw, list) or not raw:
        raise SchemaError("$.matrix", "expected a nonempty array of rows")

    rows = []
    for i, raw_row in enumerate(raw):
        if not isinstance(raw_row, list) or not raw_row:
            raise SchemaError(f"$.matrix[{i}]", "expected a nonempty array")
        if len(raw_row) != len(raw[0]):
            raise SchemaError(f"$.matrix[{i}]", f"row has {len(raw_row)} values, expected {len(raw[0])}")
        rows.append([_json_scalar(v, f"$.matrix[{i}][{j}]", arithmetic) for j, v in enumerate(raw_row)])

    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise SchemaError("$.labels", "expected an array of strings")
        if len(labels) != len(rows):
            raise SchemaError("$.labels", f"{len(labels)} labels for {len(rows)} rows")

    return TropicalMatrix.from_rows(rows, arithmetic), labels


# ==================== OUTPUT ====================

def _scalars(v: TropicalVector) -> List[str]:
    return [format_scalar(x) for x in v]


def _one_based(groups: List[List[int]]) -> List[List[int]]:
    return [[i + 1 for i in g] for g in groups]


def _block(vector: TropicalVector, contrast, groups, families) -> Dict[str, Any]:
    return {
        "scores": _scalars(vector),
        "contrast": format_scalar(contrast),
        "ranking": _one_based(groups),
        "families": [[_scalars(c) for c in f.columns()] for f in families],
    }


def report_to_dict(report: RatingReport) -> Dict[str, Any]:
    """JSON-ready view of a report; key order is fixed"""
    doc: Dict[str, Any] = {}
    if report.comparison.labels:
        doc["labels"] = list(report.comparison.labels)
    doc["spectral_radius"] = format_scalar(report.spectral_radius)
    doc["approximation_error"] = report.approximation_error
    doc["generators"] = [_scalars(c) for c in report.family.generator.columns()]
    doc["column_contrasts"] = [format_scalar(c) for c in report.column_contrasts]
    doc["least_differentiating"] = _block(
        report.least_diff, report.least_contrast, report.rankings['least'], report.least_families
    )
    doc["most_differentiating"] = _block(
        report.most_diff, report.most_contrast, report.rankings['most'], report.most_families
    )
    doc["unanimous"] = {
        "top": [i + 1 for i in report.unanimous_top],
        "bottom": [i + 1 for i in report.unanimous_bottom],
    }
    doc["consistent"] = report.consistent
    doc["truncated"] = report.truncated
    return doc


def render_json(report: RatingReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def _vector_table(report: RatingReport, columns: List[Tuple[str, TropicalVector]]) -> List[str]:
    a = report.comparison
    names = [a.label(i) for i in range(a.n)]
    cells = [[format_scalar(v[i]) for _, v in columns] for i in range(a.n)]
    name_w = max(len("Alternative"), *(len(x) for x in names))
    widths = [
        max(len(title), *(len(row[j]) for row in cells))
        for j, (title, _) in enumerate(columns)
    ]
    header = "Alternative".ljust(name_w) + "  " + "  ".join(
        title.rjust(w) for (title, _), w in zip(columns, widths)
    )
    lines = ["   " + header, "   " + "-" * len(header)]
    for name, row in zip(names, cells):
        lines.append("   " + name.ljust(name_w) + "  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return lines


def _ranking_text(report: RatingReport, groups: List[List[int]]) -> str:
    a = report.comparison
    return " > ".join(" = ".join(a.label(i) for i in g) for g in groups)


def render_text(report: RatingReport) -> str:
    """Human-readable report; mirrors the JSON content"""
    a = report.comparison
    lines = ["=" * 60, "📊 RATING REPORT", "=" * 60]
    lines.append(f"   Alternatives:        {a.n}")
    lines.append(f"   Spectral radius:     {format_scalar(report.spectral_radius)}")
    lines.append(f"   Approximation error: {report.approximation_error:.6g} (log scale)")
    lines.append(f"   Consistent:          {'yes' if report.consistent else 'no'}")
    lines.append("")
    lines.append(f"📐 Score family ({report.family.size} generator(s))")
    lines.extend(_vector_table(report, [
        (f"b{j + 1}", c) for j, c in enumerate(report.family.generator.columns())
    ]))
    lines.append("   Contrast: " + ", ".join(
        f"b{j + 1}={format_scalar(c)}" for j, c in enumerate(report.column_contrasts)
    ))
    lines.append("")
    lines.append("🎯 Representatives")
    lines.extend(_vector_table(report, [("least", report.least_diff), ("most", report.most_diff)]))
    lines.append(f"   Least differentiating: contrast {format_scalar(report.least_contrast)}, "
                 f"{len(report.least_families)} family(ies)")
    lines.append(f"      {_ranking_text(report, report.rankings['least'])}")
    lines.append(f"   Most differentiating:  contrast {format_scalar(report.most_contrast)}, "
                 f"{len(report.most_families)} family(ies)")
    lines.append(f"      {_ranking_text(report, report.rankings['most'])}")
    lines.append("")
    top = ", ".join(a.label(i) for i in report.unanimous_top) or "none"
    bottom = ", ".join(a.label(i) for i in report.unanimous_bottom) or "none"
    lines.append(f"🏆 Always first: {top}")
    lines.append(f"🔻 Always last:  {bottom}")
    if report.truncated:
        lines.append("")
        lines.append("⚠️ Row selections were capped; least differentiating families may be incomplete")
    lines.append("=" * 60)
    return "\n".join(lines) + "\n"
