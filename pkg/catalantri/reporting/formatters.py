"""
Renderers for triangles, verification reports and bijection pairings.

Every renderer returns a string; the CLI writes it to stdout.
"""

import csv
import io
import json
from typing import Iterable, List, Optional, Sequence, Tuple

from catalantri.core.exact import Scalar, format_scalar
from catalantri.models.schema import OutputFormat, TriangleKind, VerificationReport
from catalantri.paths.bijections import PhiInput
from catalantri.paths.lattice import LatticePath
from catalantri.triangles.base import Triangle

ROW_SUMS = "row sums"
ALTERNATING_SUMS = "alt sums"


def _extra_columns(kind: TriangleKind) -> Tuple[str, ...]:
    if kind is TriangleKind.Z:
        return (ROW_SUMS, ALTERNATING_SUMS)
    if kind.is_derived:
        return (ROW_SUMS,)
    return ()


def _table_cells(
    triangle: Triangle, kind: TriangleKind, rows: int
) -> Tuple[List[List[str]], List[List[str]]]:
    """Cell strings (blank outside the support) and the extra sum columns."""
    body: List[List[str]] = []
    extras: List[List[str]] = []
    extra_names = _extra_columns(kind)
    for n in range(rows):
        body.append([
            format_scalar(triangle.entry(n, k)) if triangle.in_support(n, k) else ""
            for k in range(rows)
        ])
        sums = []
        if ROW_SUMS in extra_names:
            sums.append(format_scalar(triangle.row_sum(n)))
        if ALTERNATING_SUMS in extra_names:
            sums.append(format_scalar(triangle.row_sum(n, alternating=True)))
        extras.append(sums)
    return body, extras


def render_table_ascii(triangle: Triangle, kind: TriangleKind, rows: int) -> str:
    """
    Fixed-width table: one line per row n, columns k = 0 .. rows - 1,
    blank cells outside the support and sum columns for X, Y, Z and W.

    Example (C, 3 rows):
        n/k | 0 1 2
        -----------
          0 | 1
          1 | 1 1
          2 | 2 2 1
    """
    kind = TriangleKind(kind)
    body, extras = _table_cells(triangle, kind, rows)
    extra_names = _extra_columns(kind)

    width = max([len(str(rows - 1))] + [len(c) for line in body for c in line])
    extra_widths = [
        max([len(name)] + [len(line[i]) for line in extras])
        for i, name in enumerate(extra_names)
    ]

    def line(label: str, cells: Sequence[str], sums: Sequence[str]) -> str:
        text = f"{label:>3} |" + "".join(f" {c:>{width}}" for c in cells)
        for value, w in zip(sums, extra_widths):
            text += f" | {value:>{w}}"
        return text.rstrip()

    header = line("n/k", [str(k) for k in range(rows)], extra_names)
    lines = [header, "-" * len(header)]
    lines.extend(line(str(n), body[n], extras[n]) for n in range(rows))
    return "\n".join(lines)


def render_table_csv(triangle: Triangle, kind: TriangleKind, rows: int) -> str:
    """CSV with header ``n,0,1,...`` plus sum columns; empty cells outside the support."""
    kind = TriangleKind(kind)
    body, extras = _table_cells(triangle, kind, rows)
    extra_names = [name.replace(" ", "_") for name in _extra_columns(kind)]

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n"] + [str(k) for k in range(rows)] + extra_names)
    for n in range(rows):
        writer.writerow([str(n)] + body[n] + extras[n])
    return buffer.getvalue().rstrip("\n")


def render_table_json(
    triangle: Triangle,
    kind: TriangleKind,
    rows: int,
    x: Optional[Scalar] = None,
    y: Optional[Scalar] = None,
) -> str:
    """JSON object with the support rows as lists of exact-value strings."""
    kind = TriangleKind(kind)
    payload = {
        "triangle": kind.value,
        "rows": [[format_scalar(v) for v in triangle.row(n)] for n in range(rows)],
    }
    if x is not None:
        payload["x"] = format_scalar(x)
        payload["y"] = format_scalar(y)
    if kind.is_derived:
        payload["row_sums"] = [format_scalar(triangle.row_sum(n)) for n in range(rows)]
    if kind is TriangleKind.Z:
        payload["alternating_sums"] = [
            format_scalar(triangle.row_sum(n, alternating=True)) for n in range(rows)
        ]
    return json.dumps(payload, indent=2)


def render_table(
    triangle: Triangle,
    kind: TriangleKind,
    rows: int,
    fmt: OutputFormat = OutputFormat.ASCII,
    x: Optional[Scalar] = None,
    y: Optional[Scalar] = None,
) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.CSV:
        return render_table_csv(triangle, kind, rows)
    if fmt is OutputFormat.JSON:
        return render_table_json(triangle, kind, rows, x, y)
    return render_table_ascii(triangle, kind, rows)


def render_reports(
    reports: Iterable[VerificationReport], fmt: OutputFormat = OutputFormat.ASCII
) -> str:
    """
    Render verification reports.

    ascii gives one summary line per report, csv has the columns
    id,pass,cases,params,lhs,rhs and json is an array of report objects
    with the field ``pass``.
    """
    reports = list(reports)
    fmt = OutputFormat(fmt)

    if fmt is OutputFormat.JSON:
        return json.dumps(
            [r.model_dump(by_alias=True, mode="json") for r in reports], indent=2
        )

    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["id", "pass", "cases", "params", "lhs", "rhs"])
        for r in reports:
            ce = r.counterexample
            writer.writerow([
                r.id,
                "true" if r.passed else "false",
                r.cases,
                ";".join(f"{k}={v}" for k, v in ce.params.items()) if ce else "",
                ce.lhs if ce else "",
                ce.rhs if ce else "",
            ])
        return buffer.getvalue().rstrip("\n")

    return "\n".join(r.summary() for r in reports)


def render_pairing(pairs: Iterable[Tuple[PhiInput, LatticePath]]) -> str:
    """One ``pair -> target`` line per element of the phi pairing."""
    return "\n".join(f"{inp.serialize()} -> {target}" for inp, target in pairs)
