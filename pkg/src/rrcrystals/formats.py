"""Rendering of matrices, tables and series as csv, json or markdown."""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .crystal import parse_element
from .energy import DifferenceMatrix
from .rootsystem import AffineType

FORMATS = ("csv", "json", "md")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _md(header, rows) -> str:
    lines = ["| " + " | ".join(map(str, header)) + " |",
             "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def render_matrix(matrix: DifferenceMatrix, fmt: str = "csv") -> str:
    _check_format(fmt)
    names = matrix.names
    rows = matrix.entries.tolist()
    if fmt == "json":
        return json.dumps({"type": matrix.type.value, "order": names,
                           "entries": rows}) + "\n"
    if fmt == "csv":
        return _csv([[""] + names] + [[n] + r for n, r in zip(names, rows)])
    return _md([""] + names, [[n] + r for n, r in zip(names, rows)])


def parse_matrix_json(text: str) -> DifferenceMatrix:
    data = json.loads(text)
    order = tuple(parse_element(n) for n in data["order"])
    entries = np.array(data["entries"], dtype=np.int64)
    if entries.shape != (len(order), len(order)):
        raise ValueError(f"entries shape {entries.shape} does not match order")
    entries.flags.writeable = False
    return DifferenceMatrix(AffineType.parse(data["type"]), order, entries)


def render_ccon(type: AffineType, table, fmt: str = "csv") -> str:
    _check_format(fmt)
    rows = [(r, [b.name for b in colors]) for r, colors in sorted(table.items())]
    if fmt == "json":
        return json.dumps({"type": type.value, "modulus": len(rows),
                           "rows": {str(r): names for r, names in rows}}) + "\n"
    if fmt == "csv":
        return _csv([[r] + names for r, names in rows])
    return _md(["residue", "colors"], [[r, " ".join(names)] for r, names in rows])


def render_icon(type: AffineType, parts, fmt: str = "csv") -> str:
    _check_format(fmt)
    rows = sorted(((p.value, p.color.name) for p in parts),
                  key=lambda vc: (vc[0], vc[1]))
    if fmt == "json":
        return json.dumps({"type": type.value,
                           "parts": [{"value": v, "color": c} for v, c in rows]}) + "\n"
    if fmt == "csv":
        return _csv(rows)
    return _md(["value", "color"], rows)


def render_series(coeffs, fmt: str = "csv", type: AffineType | None = None,
                  label: str = "coefficient") -> str:
    _check_format(fmt)
    rows = list(enumerate(int(c) for c in coeffs))
    if fmt == "json":
        out = {"coefficients": [c for _, c in rows]}
        if type is not None:
            out = {"type": type.value, **out}
        return json.dumps(out) + "\n"
    if fmt == "csv":
        return _csv(rows)
    return _md(["degree", label], rows)


def render_columns(columns: dict[str, list[int]], fmt: str = "csv",
                   type: AffineType | None = None) -> str:
    """Several series side by side, one row per degree."""
    _check_format(fmt)
    names = list(columns)
    n = len(next(iter(columns.values())))
    if fmt == "json":
        out = {k: list(v) for k, v in columns.items()}
        if type is not None:
            out = {"type": type.value, **out}
        return json.dumps(out) + "\n"
    rows = [[k] + [columns[c][k] for c in names] for k in range(n)]
    if fmt == "csv":
        return _csv([["degree"] + names] + rows)
    return _md(["degree"] + names, rows)
