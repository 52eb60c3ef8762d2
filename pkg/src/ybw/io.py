"""JSON codecs for every on-disk object.

Rationals are serialized as strings "p/q" (or "p" for integers), never as
floats, so files round-trip bit-exactly across languages.  A scalar is
either such a string or {"N": conductor, "c": [coefficient strings]} with
phi(N) power-basis coordinates.  Matrices list nonzero entries only.
Files carry a "format": 1 version field; it may be omitted on input.

Decoding validates shapes and ranges and raises SchemaError with the JSON
path of the offending node.  Certification (group axioms, R-matrix laws,
couple laws) is the caller's job and is kept separate so the CLI can
distinguish malformed input from failed verification.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import lcm
from pathlib import Path

from .cyclo import CycloScalar, totient
from .errors import SchemaError
from .groups import FiniteGroup, Irrep, catalog_irreps, load_group
from .hirai import HiraiParams, validate_params
from .matrix import ExactMatrix
from .perms import FinitePermutation
from .wreath import WreathElement

FORMAT_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def rational_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def rational_from_str(text, path: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise SchemaError(path, f"expected a rational string like '3/4', got {text!r}")
    return Fraction(text)


def scalar_to_json(value: CycloScalar):
    if value.is_rational():
        return rational_to_str(value.as_rational())
    return {"N": value.n, "c": [rational_to_str(Fraction(c, value.den)) for c in value.nums]}


def scalar_from_json(obj, path: str) -> CycloScalar:
    if isinstance(obj, str):
        return CycloScalar.from_rational(rational_from_str(obj, path))
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected a rational string or an object, got {type(obj).__name__}")
    if "N" not in obj:
        raise SchemaError(path, "missing conductor field 'N'")
    n = obj["N"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"{path}.N", f"conductor must be a positive integer, got {n!r}")
    coeffs = obj.get("c")
    if not isinstance(coeffs, list) or len(coeffs) != totient(n):
        raise SchemaError(f"{path}.c", f"expected {totient(n)} coefficient strings for conductor {n}")
    values = [rational_from_str(c, f"{path}.c[{k}]") for k, c in enumerate(coeffs)]
    return CycloScalar.from_coeffs(n, values)


def matrix_to_json(m: ExactMatrix) -> dict:
    conductor = 1
    entries = []
    for i in range(m.rows):
        for j in range(m.cols):
            v = m.data[i][j]
            if not v.is_zero():
                conductor = lcm(conductor, v.n)
                entries.append([i, j, scalar_to_json(v)])
    return {"dim_rows": m.rows, "dim_cols": m.cols, "conductor": conductor, "entries": entries}


def matrix_from_json(obj, path: str) -> ExactMatrix:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a matrix object")
    for field in ("dim_rows", "dim_cols", "conductor", "entries"):
        if field not in obj:
            raise SchemaError(path, f"missing field {field!r}")
    rows, cols = obj["dim_rows"], obj["dim_cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise SchemaError(path, f"bad dimensions {rows!r} x {cols!r}")
    if not isinstance(obj["conductor"], int) or obj["conductor"] < 1:
        raise SchemaError(f"{path}.conductor", "conductor must be a positive integer")
    if not isinstance(obj["entries"], list):
        raise SchemaError(f"{path}.entries", "expected a list of [i, j, scalar] triples")
    m = ExactMatrix.zeros(rows, cols)
    seen = set()
    for k, item in enumerate(obj["entries"]):
        epath = f"{path}.entries[{k}]"
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(epath, "expected [row, col, scalar]")
        i, j, raw = item
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < rows and 0 <= j < cols):
            raise SchemaError(epath, f"index ({i!r},{j!r}) out of range")
        if (i, j) in seen:
            raise SchemaError(epath, f"duplicate entry for ({i},{j})")
        seen.add((i, j))
        m.data[i][j] = scalar_from_json(raw, epath)
    return m


def group_to_json(g: FiniteGroup) -> dict:
    return {"name": g.name, "order": g.order, "table": [list(row) for row in g.table]}


def group_from_json(obj, path: str) -> FiniteGroup:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a group object")
    for field in ("name", "order", "table"):
        if field not in obj:
            raise SchemaError(path, f"missing field {field!r}")
    table = obj["table"]
    if not isinstance(table, list) or len(table) != obj["order"]:
        raise SchemaError(f"{path}.table", "table size does not match order")
    return FiniteGroup(str(obj["name"]), table)


def irrep_to_json(rep: Irrep) -> dict:
    return {
        "label": rep.label,
        "dim": rep.dim,
        "conductor": rep.conductor,
        "images": [matrix_to_json(m) for m in rep.images],
    }


def irrep_images_from_json(obj, path: str) -> tuple[str, list[ExactMatrix]]:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an irrep object")
    for field in ("label", "dim", "images"):
        if field not in obj:
            raise SchemaError(path, f"missing field {field!r}")
    images = [matrix_from_json(m, f"{path}.images[{k}]") for k, m in enumerate(obj["images"])]
    return str(obj["label"]), images


def element_to_json(g: WreathElement) -> dict:
    return {
        "format": FORMAT_VERSION,
        "colors": {str(pos): t for pos, t in sorted(g.colors.items())},
        "cycles": [list(c) for c in g.perm.cycles()],
    }


def element_from_json(obj, group: FiniteGroup, path: str) -> WreathElement:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an element object")
    _check_format(obj, path)
    colors = {}
    raw_colors = obj.get("colors", {})
    if not isinstance(raw_colors, dict):
        raise SchemaError(f"{path}.colors", "expected an object of position -> color index")
    for key, value in raw_colors.items():
        if not key.isdigit() or int(key) < 1:
            raise SchemaError(f"{path}.colors.{key}", "positions are positive integers")
        if not isinstance(value, int) or not (0 <= value < group.order):
            raise SchemaError(f"{path}.colors.{key}", f"color index {value!r} out of range")
        colors[int(key)] = value
    raw_cycles = obj.get("cycles", [])
    if not isinstance(raw_cycles, list):
        raise SchemaError(f"{path}.cycles", "expected a list of cycles")
    for k, cyc in enumerate(raw_cycles):
        if not (isinstance(cyc, list) and len(cyc) >= 2
                and all(isinstance(p, int) and p >= 1 for p in cyc)):
            raise SchemaError(f"{path}.cycles[{k}]", "a cycle is a list of >= 2 positive positions")
    try:
        perm = FinitePermutation.from_cycles(raw_cycles)
    except ValueError as exc:
        raise SchemaError(f"{path}.cycles", str(exc)) from None
    return WreathElement(group, colors, perm)


def params_to_json(p: HiraiParams) -> dict:
    a_obj: dict[str, dict[str, list[str]]] = {}
    for (label, eps), seq in sorted(p.a.items()):
        a_obj.setdefault(label, {})[str(eps)] = [rational_to_str(v) for v in seq]
    return {
        "format": FORMAT_VERSION,
        "group": p.group.name,
        "a": a_obj,
        "mu": {label: rational_to_str(v) for label, v in sorted(p.mu.items())},
    }


def params_from_json(obj, path: str) -> HiraiParams:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a parameter object")
    _check_format(obj, path)
    if "group" not in obj:
        raise SchemaError(path, "missing field 'group'")
    group = load_group(str(obj["group"]))
    irreps = catalog_irreps(group)
    a_raw = {}
    for label, by_eps in obj.get("a", {}).items():
        if not isinstance(by_eps, dict):
            raise SchemaError(f"{path}.a.{label}", "expected an object with keys '0' and/or '1'")
        for eps_key, seq in by_eps.items():
            if eps_key not in ("0", "1"):
                raise SchemaError(f"{path}.a.{label}", f"epsilon key must be '0' or '1', got {eps_key!r}")
            if not isinstance(seq, list):
                raise SchemaError(f"{path}.a.{label}.{eps_key}", "expected a list of rational strings")
            values = [rational_from_str(v, f"{path}.a.{label}.{eps_key}[{k}]")
                      for k, v in enumerate(seq)]
            a_raw[(label, int(eps_key))] = values
    mu_raw = {}
    for label, v in obj.get("mu", {}).items():
        mu_raw[label] = rational_from_str(v, f"{path}.mu.{label}")
    return validate_params(group, irreps, a_raw, mu_raw)


def rmatrix_file_to_json(d: int, m: ExactMatrix) -> dict:
    out = matrix_to_json(m)
    out["format"] = FORMAT_VERSION
    out["d"] = d
    return out


def rmatrix_file_from_json(obj, path: str) -> tuple[int, ExactMatrix]:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an R-matrix object")
    _check_format(obj, path)
    if "d" not in obj or not isinstance(obj["d"], int) or obj["d"] < 1:
        raise SchemaError(path, "missing or bad field 'd'")
    m = matrix_from_json(obj, path)
    return obj["d"], m


def couple_file_to_json(group: FiniteGroup, d: int, w: int, r: ExactMatrix, pi) -> dict:
    return {
        "format": FORMAT_VERSION,
        "group": group_to_json(group),
        "d": d,
        "w": w,
        "r": matrix_to_json(r),
        "pi": [matrix_to_json(m) for m in pi],
    }


def couple_file_from_json(obj, path: str):
    """Schema-level decoding; returns (group, d, w, r_matrix, pi_images)."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a couple object")
    _check_format(obj, path)
    for field in ("group", "d", "w", "r", "pi"):
        if field not in obj:
            raise SchemaError(path, f"missing field {field!r}")
    group = group_from_json(obj["group"], f"{path}.group")
    d, w = obj["d"], obj["w"]
    if not (isinstance(d, int) and d >= 1 and isinstance(w, int) and w >= 1):
        raise SchemaError(path, "'d' and 'w' must be positive integers")
    r = matrix_from_json(obj["r"], f"{path}.r")
    if not isinstance(obj["pi"], list) or len(obj["pi"]) != group.order:
        raise SchemaError(f"{path}.pi", f"expected {group.order} pi images")
    pi = [matrix_from_json(m, f"{path}.pi[{k}]") for k, m in enumerate(obj["pi"])]
    return group, d, w, r, pi


def _check_format(obj: dict, path: str) -> None:
    version = obj.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise SchemaError(f"{path}.format", f"unsupported format version {version!r}")


def read_json_file(path: str | Path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def write_json_file(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
