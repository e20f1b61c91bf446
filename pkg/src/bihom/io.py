"""Canonical JSON format for algebras and representations.

Algebra files::

    {"dim": n,
     "c": [[i, j, k, "p/q"], ...],          # nonzero structure constants, 0-based
     "alpha": [["p/q", ...], ...],           # row-major
     "beta": [["p/q", ...], ...],
     "grading": {"moduli": [...], "degrees": [[...], ...],
                 "epsilon": [[[a...], [b...], "p/q"], ...]}}   # optional

Representation files add ``"kind": "representation"``, the algebra under
``"algebra"`` and the fields ``dim``, ``l``, ``r``, ``alphaV``, ``betaV``.
Scalars are exact fraction strings; floats are rejected on input.
A cyclotomic value is written as ``{"zeta": m, "coeffs": ["p/q", ...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product
from pathlib import Path

from .cyclotomic import Cyclotomic
from .linalg import Matrix
from .model import Algebra, Bicharacter, Grading, GradingGroup, InputError, Representation


# --- scalars --------------------------------------------------------------------

def scalar_to_json(a):
    if isinstance(a, Cyclotomic):
        if a.is_rational():
            return scalar_to_json(a.coeffs[0])
        return {"zeta": a.m, "coeffs": [scalar_to_json(c) for c in a.coeffs]}
    a = Fraction(a)
    return f"{a.numerator}/{a.denominator}"


def scalar_from_json(value, where: str):
    if isinstance(value, bool):
        raise InputError(f"{where}: booleans are not scalars")
    if isinstance(value, float):
        raise InputError(f"{where}: floating point value {value!r}; write scalars as 'p/q' strings")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{where}: {value!r} is not an exact fraction") from None
    if isinstance(value, dict) and set(value) == {"zeta", "coeffs"}:
        coeffs = [scalar_from_json(c, where) for c in _list(value["coeffs"], where)]
        return Cyclotomic(int(value["zeta"]), coeffs)
    raise InputError(f"{where}: unsupported scalar {value!r}")


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list")
    return value


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def matrix_to_json(m: Matrix) -> list:
    return [[scalar_to_json(a) for a in row] for row in m.tolist()]


def matrix_from_json(value, n: int, where: str) -> Matrix:
    rows = _list(value, where)
    if len(rows) == n * n and all(not isinstance(r, list) for r in rows):
        rows = [rows[i * n:(i + 1) * n] for i in range(n)]
    if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise InputError(f"{where}: expected a {n}x{n} matrix")
    return Matrix([[scalar_from_json(a, where) for a in row] for row in rows], n)


def _sparse_to_json(t, shape) -> list:
    out = []
    for idx in product(*(range(s) for s in shape)):
        a = t[idx[0]][idx[1]][idx[2]]
        if a != 0:
            out.append([*idx, scalar_to_json(a)])
    return out


def _sparse_from_json(value, shape, where: str) -> list:
    t = [[[Fraction(0)] * shape[2] for _ in range(shape[1])] for _ in range(shape[0])]
    for entry in _list(value, where):
        if not isinstance(entry, list) or len(entry) != 4:
            raise InputError(f"{where}: entries must be [i, j, k, value]")
        idx = [_int(x, where) for x in entry[:3]]
        for x, s in zip(idx, shape):
            if not 0 <= x < s:
                raise InputError(f"{where}: index {tuple(idx)} out of range for shape {shape}")
        t[idx[0]][idx[1]][idx[2]] = scalar_from_json(entry[3], where)
    return t


# --- grading ----------------------------------------------------------------------

def grading_to_json(g: Grading) -> dict:
    return {
        "moduli": list(g.group.moduli),
        "degrees": [list(d) for d in g.degrees],
        "epsilon": [[list(a), list(b), scalar_to_json(v)] for (a, b), v in g.epsilon.table],
    }


def grading_from_json(value, n: int) -> Grading:
    if not isinstance(value, dict):
        raise InputError("grading: expected an object")
    missing = {"moduli", "degrees", "epsilon"} - set(value)
    if missing:
        raise InputError(f"grading: missing fields {sorted(missing)}")
    group = GradingGroup(tuple(_int(m, "grading.moduli") for m in _list(value["moduli"], "grading.moduli")))
    degrees = _list(value["degrees"], "grading.degrees")
    if len(degrees) != n:
        raise InputError(f"grading.degrees: expected {n} degrees, got {len(degrees)}")
    degs = tuple(group.reduce([_int(x, "grading.degrees") for x in _list(d, "grading.degrees")])
                 for d in degrees)
    table = {}
    for entry in _list(value["epsilon"], "grading.epsilon"):
        if not isinstance(entry, list) or len(entry) != 3:
            raise InputError("grading.epsilon: entries must be [a, b, value]")
        a = group.reduce([_int(x, "grading.epsilon") for x in _list(entry[0], "grading.epsilon")])
        b = group.reduce([_int(x, "grading.epsilon") for x in _list(entry[1], "grading.epsilon")])
        table[(a, b)] = scalar_from_json(entry[2], "grading.epsilon")
    return Grading(group, degs, Bicharacter(group, tuple(sorted(table.items()))))


# --- algebras and representations ---------------------------------------------

def algebra_to_json(L: Algebra) -> dict:
    n = L.dim
    out = {
        "dim": n,
        "c": _sparse_to_json(L.c, (n, n, n)),
        "alpha": matrix_to_json(L.alpha),
        "beta": matrix_to_json(L.beta),
    }
    if L.grading is not None:
        out["grading"] = grading_to_json(L.grading)
    return out


def algebra_from_json(obj) -> Algebra:
    if not isinstance(obj, dict):
        raise InputError("algebra: expected a JSON object")
    if "dim" not in obj:
        raise InputError("algebra: missing field 'dim'")
    n = _int(obj["dim"], "dim")
    if n < 0:
        raise InputError("dim: must be non-negative")
    c = _sparse_from_json(obj.get("c", []), (n, n, n), "c")
    alpha = matrix_from_json(obj["alpha"], n, "alpha") if "alpha" in obj else None
    beta = matrix_from_json(obj["beta"], n, "beta") if "beta" in obj else None
    grading = grading_from_json(obj["grading"], n) if obj.get("grading") is not None else None
    return Algebra(n, c, alpha=alpha, beta=beta, grading=grading)


def representation_to_json(V: Representation) -> dict:
    n, m = V.algebra.dim, V.dim
    out = {
        "kind": "representation",
        "algebra": algebra_to_json(V.algebra),
        "dim": m,
        "l": _sparse_to_json(V.l, (n, m, m)),
        "r": _sparse_to_json(V.r, (m, n, m)),
        "alphaV": matrix_to_json(V.alphaV),
        "betaV": matrix_to_json(V.betaV),
    }
    if V.grading is not None:
        out["grading"] = grading_to_json(V.grading)
    return out


def representation_from_json(obj) -> Representation:
    if not isinstance(obj, dict) or "algebra" not in obj:
        raise InputError("representation: expected an object with an 'algebra' field")
    L = algebra_from_json(obj["algebra"])
    if "dim" not in obj:
        raise InputError("representation: missing field 'dim'")
    n, m = L.dim, _int(obj["dim"], "dim")
    return Representation(
        L, m,
        l=_sparse_from_json(obj.get("l", []), (n, m, m), "l"),
        r=_sparse_from_json(obj.get("r", []), (m, n, m), "r"),
        alphaV=matrix_from_json(obj["alphaV"], m, "alphaV") if "alphaV" in obj else None,
        betaV=matrix_from_json(obj["betaV"], m, "betaV") if "betaV" in obj else None,
        grading=grading_from_json(obj["grading"], m) if obj.get("grading") is not None else None,
    )


def from_json(obj) -> Algebra | Representation:
    if isinstance(obj, dict) and obj.get("kind") == "representation":
        return representation_from_json(obj)
    return algebra_from_json(obj)


def to_json(x: Algebra | Representation) -> dict:
    return representation_to_json(x) if isinstance(x, Representation) else algebra_to_json(x)


# --- text ---------------------------------------------------------------------------

def _render(value, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_render(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        text = json.dumps(value)
        if "{" not in text and len(pad) + len(text) <= 72:
            return text
        return "[\n" + ",\n".join(inner + _render(v, indent + 1) for v in value) + "\n" + pad + "]"
    return json.dumps(value)


def dumps(x) -> str:
    """Canonical text: fixed key order, one innermost list per line, trailing newline."""
    obj = x if isinstance(x, dict) else to_json(x)
    return _render(obj, 0) + "\n"


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    return from_json(obj)


def load(path) -> Algebra | Representation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def save(x, path) -> None:
    Path(path).write_text(dumps(x))
