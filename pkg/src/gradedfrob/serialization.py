"""JSON algebra files and exact formatting helpers for reports."""

from __future__ import annotations

import json

from .algebra import Algebra, build_algebra
from .errors import ValidationError
from .fields import Field, field_from_descriptor

SCHEMA = "gradedfrob.algebra/1"
REPORT_SCHEMA = "gradedfrob.report/1"


def fmt(field: Field, x) -> str:
    return field.format(x)


def fmt_vec(A: Algebra, v: dict) -> dict:
    """Sparse vector as {label: "coefficient"} with labels in basis order."""
    return {A.labels[i]: A.field.format(v[i]) for i in sorted(v) if v[i]}


def fmt_matrix(field: Field, cols, nrows: int):
    """Column-sparse matrix as a dense list of rows of exact strings."""
    rows = [[field.format(field.zero)] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows[i][j] = field.format(x)
    return rows


def _sparse_pairs(field, v: dict):
    return [[k, field.format(v[k])] for k in sorted(v) if v[k]]


def algebra_to_dict(A: Algebra, grading=None) -> dict:
    F = A.field
    out = {
        "schema": SCHEMA,
        "name": A.name,
        "field": F.descriptor(),
        "labels": list(A.labels),
        "unit": [F.format(A.unit.get(i, F.zero)) for i in range(A.dim)],
        "table": [
            [i, j, _sparse_pairs(F, A.table[i][j])]
            for i in range(A.dim) for j in range(A.dim) if A.table[i][j]
        ],
    }
    if A.hints:
        out["hints"] = [_sparse_pairs(F, h) for h in A.hints]
    if grading is not None:
        n, degrees = grading
        out["grading"] = {"n": n, "degrees": list(degrees)}
    return out


def _parse_scalar(F, text, where):
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise ValidationError(f"{where}: coefficients must be exact strings, got {text!r}")
    try:
        return F(text) if isinstance(text, int) else F.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"{where}: {exc}") from exc


def _parse_pairs(F, pairs, d, where):
    v = {}
    for item in pairs:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValidationError(f"{where}: expected [index, coefficient], got {item!r}")
        k, x = item
        if not isinstance(k, int) or not 0 <= k < d:
            raise ValidationError(f"{where}: index {k!r} out of range")
        val = _parse_scalar(F, x, where)
        if val:
            v[k] = v.get(k, F.zero) + val
    return {k: x for k, x in v.items() if x}


def algebra_from_dict(data: dict):
    """(Algebra, grading or None); raises ValidationError on malformed input."""
    if not isinstance(data, dict):
        raise ValidationError("algebra file must be a JSON object")
    for key in ("field", "labels", "unit", "table"):
        if key not in data:
            raise ValidationError(f"missing key {key!r}")
    try:
        F = field_from_descriptor(data["field"])
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    labels = data["labels"]
    if not isinstance(labels, list) or not labels or not all(isinstance(l, str) for l in labels):
        raise ValidationError("labels must be a nonempty list of strings")
    if len(set(labels)) != len(labels):
        raise ValidationError("labels must be distinct")
    d = len(labels)
    unit = data["unit"]
    if not isinstance(unit, list) or len(unit) != d:
        raise ValidationError(f"unit must be a list of {d} coefficients")
    u = {}
    for i, x in enumerate(unit):
        val = _parse_scalar(F, x, "unit")
        if val:
            u[i] = val
    table = [[{} for _ in range(d)] for _ in range(d)]
    seen = set()
    for entry in data["table"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ValidationError(f"table entries are [i, j, pairs], got {entry!r}")
        i, j, pairs = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < d and 0 <= j < d):
            raise ValidationError(f"table index ({i!r}, {j!r}) out of range")
        if (i, j) in seen:
            raise ValidationError(f"duplicate table entry ({i}, {j})")
        seen.add((i, j))
        table[i][j] = _parse_pairs(F, pairs, d, f"table[{i}][{j}]")
    A = build_algebra(F, labels, table, u, name=data.get("name", ""))
    if "hints" in data:
        A.hints = tuple(_parse_pairs(F, h, d, "hints") for h in data["hints"])
    grading = None
    if "grading" in data:
        g = data["grading"]
        try:
            n, degrees = int(g["n"]), [int(x) for x in g["degrees"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad grading block: {exc}") from exc
        if n < 1 or len(degrees) != d or any(not 0 <= x < n for x in degrees):
            raise ValidationError("grading must give a degree in [0, n) for every basis element")
        grading = (n, degrees)
    return A, grading


def dumps(obj) -> str:
    """Canonical JSON text (sorted keys, fixed separators, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_algebra(A: Algebra, path, grading=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(algebra_to_dict(A, grading)))


def load_algebra(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from exc
    return algebra_from_dict(data)


def verdict_name(res) -> str:
    return getattr(res, "verdict", "yes" if res is True else "no" if res is False else "undecided")
