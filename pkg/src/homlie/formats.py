"""
JSON file formats.  Every reader raises :class:`FormatError` naming the
offending field (and line/column for malformed JSON); every writer emits an
object its reader accepts.

Indices are 0-based; rationals are strings ``"p"`` or ``"p/q"``.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from homlie.algebra import HomLieAlgebra, LinearMap
from homlie.cochains import Cochain
from homlie.errors import FormatError
from homlie.linalg import Matrix, format_rational, to_rational


# -- low-level field readers ---------------------------------------------

def _get(obj, key, where):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def _int(x, where, minimum=0):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    if x < minimum:
        raise FormatError(f"{where}: expected an integer >= {minimum}, got {x}")
    return x


def _rat(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"{where}: expected a rational string, got {x!r}")
    try:
        return to_rational(x)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def _rat_list(xs, where, length=None):
    if not isinstance(xs, list):
        raise FormatError(f"{where}: expected a list")
    if length is not None and len(xs) != length:
        raise FormatError(f"{where}: expected {length} entries, got {len(xs)}")
    return [_rat(x, f"{where}[{p}]") for p, x in enumerate(xs)]


def _matrix(xs, where, rows=None, cols=None) -> Matrix:
    if not isinstance(xs, list):
        raise FormatError(f"{where}: expected a list of rows")
    if rows is not None and len(xs) != rows:
        raise FormatError(f"{where}: expected {rows} rows, got {len(xs)}")
    if cols is None:
        cols = len(xs[0]) if xs and isinstance(xs[0], list) else 0
    return Matrix.from_rows([_rat_list(r, f"{where}[{i}]", cols) for i, r in enumerate(xs)], cols=cols)


def _matrix_out(M: Matrix) -> list:
    return [[format_rational(a) for a in M.row(i)] for i in range(M.rows)]


def _vec_out(v) -> list:
    return [format_rational(a) for a in v]


def parse_json_text(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None
    return parse_json_text(text, str(path))


def write_json(obj, path):
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


# -- algebras --------------------------------------------------------------

def algebra_from_json(obj, where="algebra") -> HomLieAlgebra:
    n = _int(_get(obj, "dim", where), f"{where}.dim")
    labels = obj.get("basis")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise FormatError(f"{where}.basis: expected {n} strings")
    brackets = {}
    entries = _get(obj, "brackets", where)
    if not isinstance(entries, list):
        raise FormatError(f"{where}.brackets: expected a list")
    for p, b in enumerate(entries):
        w = f"{where}.brackets[{p}]"
        i = _int(_get(b, "i", w), f"{w}.i")
        j = _int(_get(b, "j", w), f"{w}.j")
        if not i < j < n:
            raise FormatError(f"{w}: need i < j < {n}, got i={i}, j={j}")
        if (i, j) in brackets:
            raise FormatError(f"{w}: duplicate bracket ({i}, {j})")
        brackets[(i, j)] = _rat_list(_get(b, "coeffs", w), f"{w}.coeffs", n)
    alpha = _matrix(_get(obj, "alpha", where), f"{where}.alpha", n, n)
    return HomLieAlgebra(n, brackets, alpha, tuple(labels) if labels is not None else None)


def algebra_to_json(g: HomLieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "basis": list(g.labels),
        "brackets": [{"i": i, "j": j, "coeffs": _vec_out(v)} for (i, j), v in g.structure.items()],
        "alpha": _matrix_out(g.alpha),
    }


def load_algebra(path) -> HomLieAlgebra:
    return algebra_from_json(read_json(path), str(path))


# -- operators and linear maps ----------------------------------------------

def operator_from_json(obj, where="operator") -> Matrix:
    n = _int(_get(obj, "dim", where), f"{where}.dim")
    return _matrix(_get(obj, "matrix", where), f"{where}.matrix", n, n)


def operator_to_json(D: Matrix) -> dict:
    return {"dim": D.rows, "matrix": _matrix_out(D)}


def linear_map_from_json(obj, where="map") -> LinearMap:
    """``{"source_dim", "target_dim", "matrix"}``; an operator file is accepted as a square map."""
    if isinstance(obj, dict) and "dim" in obj and "source_dim" not in obj:
        D = operator_from_json(obj, where)
        return LinearMap(D.cols, D.rows, D)
    s = _int(_get(obj, "source_dim", where), f"{where}.source_dim")
    t = _int(_get(obj, "target_dim", where), f"{where}.target_dim")
    return LinearMap(s, t, _matrix(_get(obj, "matrix", where), f"{where}.matrix", t, s))


def linear_map_to_json(phi: LinearMap) -> dict:
    return {"source_dim": phi.source_dim, "target_dim": phi.target_dim,
            "matrix": _matrix_out(phi.matrix)}


# -- representations --------------------------------------------------------

def representation_data_from_json(obj, n: int, where="representation"):
    """Returns ``(module_dim, rho, A)`` without checking the axioms."""
    m = _int(_get(obj, "module_dim", where), f"{where}.module_dim")
    rho = _get(obj, "rho", where)
    if not isinstance(rho, list) or len(rho) != n:
        raise FormatError(f"{where}.rho: expected {n} matrices")
    mats = tuple(_matrix(r, f"{where}.rho[{i}]", m, m) for i, r in enumerate(rho))
    A = _matrix(_get(obj, "A", where), f"{where}.A", m, m)
    return m, mats, A


def representation_to_json(rep) -> dict:
    return {"module_dim": rep.module_dim, "rho": [_matrix_out(R) for R in rep.rho],
            "A": _matrix_out(rep.A)}


# -- cochains --------------------------------------------------------------

def cochain_from_json(obj, where="cochain") -> Cochain:
    """General cochain format, or the scalar 2-cochain format ``{"degree": 2, "values": [{"i","j","value"}]}``."""
    k = _int(_get(obj, "degree", where), f"{where}.degree")
    values = _get(obj, "values", where)
    if not isinstance(values, list):
        raise FormatError(f"{where}.values: expected a list")
    if "module_dim" not in obj:
        if k != 2:
            raise FormatError(f"{where}: missing field 'module_dim'")
        out = {}
        for p, e in enumerate(values):
            w = f"{where}.values[{p}]"
            i = _int(_get(e, "i", w), f"{w}.i")
            j = _int(_get(e, "j", w), f"{w}.j")
            if not i < j:
                raise FormatError(f"{w}: need i < j, got i={i}, j={j}")
            if (i, j) in out:
                raise FormatError(f"{w}: duplicate entry ({i}, {j})")
            out[(i, j)] = [_rat(_get(e, "value", w), f"{w}.value")]
        return Cochain(2, 1, out)
    m = _int(_get(obj, "module_dim", where), f"{where}.module_dim")
    out = {}
    for p, e in enumerate(values):
        w = f"{where}.values[{p}]"
        idx = _get(e, "indices", w)
        if not isinstance(idx, list) or len(idx) != k:
            raise FormatError(f"{w}.indices: expected {k} indices")
        idx = tuple(_int(a, f"{w}.indices") for a in idx)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise FormatError(f"{w}.indices: must be strictly increasing, got {list(idx)}")
        if idx in out:
            raise FormatError(f"{w}: duplicate indices {list(idx)}")
        out[idx] = _rat_list(_get(e, "coeffs", w), f"{w}.coeffs", m)
    return Cochain(k, m, out)


def cochain_to_json(f: Cochain) -> dict:
    return {"degree": f.degree, "module_dim": f.module_dim,
            "values": [{"indices": list(t), "coeffs": _vec_out(v)} for t, v in f.values.items()]}


def scalar_2cochain_to_json(theta: Cochain) -> dict:
    if theta.degree != 2 or theta.module_dim != 1:
        raise ValueError("not a scalar 2-cochain")
    return {"degree": 2, "values": [{"i": i, "j": j, "value": format_rational(v[0])}
                                    for (i, j), v in theta.values.items()]}


def cochain_full_table(f: Cochain, n: int) -> list:
    """All increasing tuples with their values, zeros included."""
    return [{"indices": list(t), "coeffs": _vec_out(f.value_at(t))}
            for t in itertools.combinations(range(n), f.degree)]
