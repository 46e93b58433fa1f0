"""
Command-line front end.

Exit status: 0 when the computation succeeds and every checked property
holds, 1 when a checked property fails, 2 on malformed input or a violated
precondition.  ``--format json`` emits objects in the same schemas the
readers accept, so outputs can be fed back in.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

from homlie import corpus
from homlie.algebra import (
    HomLieAlgebra, VerificationReport, direct_sum, graph_is_subalgebra, is_multiplicative,
    is_regular, morphism_report, verify_hom_jacobi,
)
from homlie.cochains import Cochain
from homlie.cohomology import coboundary_apply, cohomology, d_squared_is_zero
from homlie.deformations import (
    check_trivializes, deformed_bracket_at, generates_deformation, is_hom_nijenhuis,
    nijenhuis_bracket,
)
from homlie.derivations import (
    derivation_extension, derivation_space, inner_derivation_space, is_derivation,
)
from homlie.errors import FormatError, HomLieError
from homlie.formats import (
    algebra_from_json, algebra_to_json, cochain_from_json, cochain_to_json, linear_map_from_json,
    linear_map_to_json, operator_from_json, operator_to_json, read_json,
    representation_data_from_json,
)
from homlie.linalg import format_rational, to_rational
from homlie.representations import (
    Representation, adjoint_representation, central_extension, central_extension_isomorphism,
    semidirect_product, trivial_representation,
)

OK, FAILS, INPUT_ERROR = 0, 1, 2


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    @property
    def structured(self) -> bool:
        return self.fmt == "json"

    def line(self, text: str = ""):
        if not self.structured:
            print(text, file=self.stream)

    def obj(self, obj):
        if self.structured:
            print(json.dumps(obj, indent=2), file=self.stream)


# -- input helpers -----------------------------------------------------------

def _resolve(path: str) -> Path:
    """A path on disk, else a file shipped in the package data directory."""
    p = Path(path)
    if p.exists():
        return p
    for candidate in (path, f"{path}.json"):
        shipped = corpus.data_path(candidate)
        if shipped.is_file():
            return Path(str(shipped))
    raise FormatError(f"{path}: no such file")


def _load(path: str):
    return read_json(_resolve(path))


def _algebra(path: str) -> HomLieAlgebra:
    return algebra_from_json(_load(path), path)


def _operator(path: str):
    return operator_from_json(_load(path), path)


def _cochain(path: str) -> Cochain:
    return cochain_from_json(_load(path), path)


def _rep(g: HomLieAlgebra, spec: str) -> Representation:
    spec = spec.strip()
    if spec == "trivial":
        return trivial_representation(g)
    if spec.startswith("adjoint:"):
        try:
            s = int(spec.split(":", 1)[1])
        except ValueError:
            raise FormatError(f"--rep {spec}: adjoint power must be an integer") from None
        return adjoint_representation(g, s)
    m, rho, A = representation_data_from_json(_load(spec), g.dim, spec)
    return Representation(g, m, rho, A)


def _report_json(r: VerificationReport) -> dict:
    ce = r.counterexample
    return {
        "property": r.property,
        "holds": r.holds,
        "counterexample": None if ce is None else {
            "indices": list(ce.indices),
            "defect": [format_rational(a) for a in ce.defect],
            "note": ce.note,
        },
    }


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _print_matrix(out: _Out, M, indent="  "):
    for i in range(M.rows):
        out.line(indent + "[" + ", ".join(format_rational(a) for a in M.row(i)) + "]")


def _print_algebra(out: _Out, g: HomLieAlgebra):
    labels = g.labels
    out.line(f"dim {g.dim}; basis {', '.join(labels)}")
    for (i, j), v in g.structure.items():
        terms = " + ".join(f"{format_rational(c)}*{labels[k]}" for k, c in enumerate(v) if c)
        out.line(f"  [{labels[i]}, {labels[j]}] = {terms}")
    out.line("  alpha:")
    _print_matrix(out, g.alpha, "    ")


def _print_cochain(out: _Out, f: Cochain, labels):
    if not f.values:
        out.line("  0")
    for t, v in f.values.items():
        args = ", ".join(labels[i] for i in t)
        out.line(f"  f({args}) = (" + ", ".join(format_rational(a) for a in v) + ")")


# -- verbs -------------------------------------------------------------------

def cmd_verify(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    hj = verify_hom_jacobi(g)
    mult = is_multiplicative(g)
    reg = is_regular(g)
    out.line(f"hom-Jacobi: {'holds' if hj else 'fails'}; multiplicative: "
             f"{'holds' if mult else 'fails'}; regular: {'true' if reg else 'false'}")
    for r in (hj, mult):
        if not r:
            out.line("  " + r.describe(g.labels))
    out.obj({"hom_jacobi": _report_json(hj), "multiplicative": _report_json(mult), "regular": reg})
    return OK if (hj and mult and reg) else FAILS


def _derivation_output(out: _Out, name: str, space):
    out.line(f"{name}: dim {space.dim}")
    for p, D in enumerate(space.matrices()):
        out.line(f" basis[{p}]:")
        _print_matrix(out, D)
    out.obj({"grade": space.k, "dim": space.dim, "basis": [operator_to_json(D) for D in space.matrices()]})


def cmd_derivations(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    _derivation_output(out, f"Der_alpha^{args.grade}", derivation_space(g, args.grade))
    return OK


def cmd_inner(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    _derivation_output(out, f"Inn_alpha^{args.grade}", inner_derivation_space(g, args.grade))
    return OK


def cmd_cohomology(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    rep = _rep(g, args.rep)
    res = cohomology(g, rep, args.degree)
    out.line(f"H^{res.degree}({Path(args.algebra).stem}; {args.rep}): "
             f"dims Z={res.dim_Z} B={res.dim_B} H={res.dim_H}")
    for p, f in enumerate(res.representatives):
        out.line(f" representative[{p}]:")
        _print_cochain(out, f, g.labels)
    out.obj({"degree": res.degree, "rep": args.rep, "dim_Z": res.dim_Z, "dim_B": res.dim_B,
             "dim_H": res.dim_H, "representatives": [cochain_to_json(f) for f in res.representatives]})
    return OK


def _emit_algebra(out: _Out, h: HomLieAlgebra, extra_lines=()):
    _print_algebra(out, h)
    for text in extra_lines:
        out.line(text)
    out.obj(algebra_to_json(h))


def _verifier_line(h: HomLieAlgebra):
    hj, mult = verify_hom_jacobi(h), is_multiplicative(h)
    text = f"hom-Jacobi: {'holds' if hj else 'fails'}; multiplicative: {'holds' if mult else 'fails'}"
    return text, bool(hj) and bool(mult), (hj, mult)


def cmd_semidirect(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    h = semidirect_product(g, _rep(g, args.rep))
    text, ok, reports = _verifier_line(h)
    _emit_algebra(out, h, [text] + ["  " + r.describe(h.labels) for r in reports if not r])
    return OK if ok else FAILS


def cmd_central_extend(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    theta = _cochain(args.theta)
    h = central_extension(g, theta)
    closed = coboundary_apply(g, trivial_representation(g), theta).is_zero()
    text, ok, reports = _verifier_line(h)
    _emit_algebra(out, h, [f"closed (d_T theta = 0): {_yes(closed)}", text]
                  + ["  " + r.describe(h.labels) for r in reports if not r])
    return OK if ok else FAILS


def cmd_iso_check(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    fh, report = central_extension_isomorphism(g, _cochain(args.theta1), _cochain(args.theta2),
                                               _cochain(args.f))
    out.line("f_h:")
    _print_matrix(out, fh.matrix)
    out.line(report.describe())
    out.obj({"map": linear_map_to_json(fh), "report": _report_json(report)})
    return OK if report else FAILS


def cmd_derivation_extend(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    D = _operator(args.op)
    member = is_derivation(g, 1, D)
    h = derivation_extension(g, D)
    text, ok, reports = _verifier_line(h)
    _emit_algebra(out, h, [f"alpha-derivation: {_yes(bool(member))}", text]
                  + ["  " + r.describe(h.labels) for r in reports if not r])
    return OK if ok else FAILS


def cmd_direct_sum(args, out: _Out) -> int:
    h = direct_sum(_algebra(args.first), _algebra(args.second))
    _emit_algebra(out, h)
    return OK


def cmd_morphism_check(args, out: _Out) -> int:
    g, k = _algebra(args.source), _algebra(args.target)
    phi = linear_map_from_json(_load(args.map), args.map)
    report = morphism_report(g, k, phi)
    graph = graph_is_subalgebra(g, k, phi)
    out.line(f"morphism: {_yes(bool(report))}; graph is subalgebra: {_yes(graph)}")
    if not report:
        out.line("  " + report.describe())
    out.obj({"map": linear_map_to_json(phi), "morphism": _report_json(report), "graph_is_subalgebra": graph})
    return OK if report else FAILS


def cmd_nijenhuis(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    N = _operator(args.op)
    nij = is_hom_nijenhuis(g, N)
    datum = nijenhuis_bracket(g, N)
    result = {"hom_nijenhuis": _report_json(nij), "omega": cochain_to_json(datum.omega),
              "deformation": None, "trivializes": None}
    parts = [f"hom-Nijenhuis: {_yes(bool(nij))}"]
    status = OK if nij else FAILS
    if is_regular(g):
        deform = generates_deformation(g, datum.omega)
        result["deformation"] = _report_json(deform)
        parts.append(f"deformation: {'valid' if deform else 'invalid'}")
        if not deform:
            status = FAILS
    else:
        parts.append("deformation: n/a (algebra not regular)")
    if nij:
        triv = check_trivializes(g, N)
        result["trivializes"] = _report_json(triv)
        parts.append(f"trivializes: {_yes(bool(triv))}")
        if not triv:
            status = FAILS
    out.line("; ".join(parts))
    if not nij:
        out.line("  " + nij.describe(g.labels))
    out.obj(result)
    return status


def _t_list(text: str):
    try:
        return [to_rational(s) for s in text.split(",") if s.strip()]
    except (ValueError, TypeError) as exc:
        raise FormatError(f"--t {text}: {exc}") from None


def cmd_deform(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    omega = _cochain(args.omega)
    report = generates_deformation(g, omega)
    out.line(f"generates deformation: {_yes(bool(report))}")
    if not report:
        out.line("  " + report.describe(g.labels))
    samples = []
    status = OK if report else FAILS
    for t in _t_list(args.t):
        h = deformed_bracket_at(g, omega, t)
        text, ok, (hj, mult) = _verifier_line(h)
        out.line(f"t={format_rational(t)}: {text}")
        samples.append({"t": format_rational(t), "hom_jacobi": _report_json(hj),
                        "multiplicative": _report_json(mult)})
        if not ok:
            status = FAILS
    out.obj({"generates_deformation": _report_json(report), "samples": samples})
    return status


def cmd_d_squared(args, out: _Out) -> int:
    g = _algebra(args.algebra)
    rep = _rep(g, args.rep)
    max_degree = g.dim if args.max_degree is None else args.max_degree
    report = d_squared_is_zero(g, rep, max_degree)
    out.line(report.describe(g.labels))
    out.obj(_report_json(report))
    return OK if report else FAILS


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's unset option from overwriting a top-level one
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="human-readable text (default) or structured JSON output")

    p = argparse.ArgumentParser(
        prog="homlie", parents=[common],
        description="Exact computations with hom-Lie algebras. Algebra arguments are JSON "
                    "files or the names of shipped fixtures (A1, A2, A3, S3, H3, H3q).")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = verb("verify", cmd_verify, "check hom-Jacobi, multiplicativity and regularity")
    sp.add_argument("algebra")

    for name, func, what in (("derivations", cmd_derivations, "alpha^K-derivations"),
                             ("inner-derivations", cmd_inner, "inner alpha^K-derivations")):
        sp = verb(name, func, f"basis of the {what}")
        sp.add_argument("algebra")
        sp.add_argument("--grade", type=int, required=True)

    sp = verb("cohomology", cmd_cohomology, "cohomology dimensions and representatives")
    sp.add_argument("algebra")
    sp.add_argument("--rep", required=True, help="trivial | adjoint:S | representation file")
    sp.add_argument("--degree", type=int, required=True)

    sp = verb("semidirect", cmd_semidirect, "semidirect product with a representation")
    sp.add_argument("algebra")
    sp.add_argument("--rep", required=True, help="representation file | trivial | adjoint:S")

    sp = verb("central-extend", cmd_central_extend, "central extension by a scalar 2-cochain")
    sp.add_argument("algebra")
    sp.add_argument("--theta", required=True)

    sp = verb("iso-check", cmd_iso_check, "isomorphism of central extensions differing by d_T f")
    sp.add_argument("algebra")
    sp.add_argument("--theta1", required=True)
    sp.add_argument("--theta2", required=True)
    sp.add_argument("--f", required=True)

    sp = verb("derivation-extend", cmd_derivation_extend, "extension by an operator D")
    sp.add_argument("algebra")
    sp.add_argument("--op", required=True)

    sp = verb("direct-sum", cmd_direct_sum, "direct sum of two algebras")
    sp.add_argument("first")
    sp.add_argument("second")

    sp = verb("morphism-check", cmd_morphism_check, "morphism test and graph subalgebra test")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--map", required=True)

    sp = verb("nijenhuis", cmd_nijenhuis, "hom-Nijenhuis test and the deformation it generates")
    sp.add_argument("algebra")
    sp.add_argument("--op", required=True)

    sp = verb("deform", cmd_deform, "check that omega generates a deformation")
    sp.add_argument("algebra")
    sp.add_argument("--omega", required=True)
    sp.add_argument("--t", default="1,-1,2", help="comma-separated rationals (default 1,-1,2)")

    sp = verb("d-squared", cmd_d_squared, "check that the coboundary squares to zero")
    sp.add_argument("algebra")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--max-degree", type=int, default=None)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    out = _Out(getattr(args, "format", "text"), stdout)
    try:
        return args.func(args, out)
    except FormatError as exc:
        print(f"input error: {exc}", file=stderr)
        return INPUT_ERROR
    except HomLieError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return INPUT_ERROR


def run(argv) -> tuple[int, str]:
    """Exit status and the report text (stdout then stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue() + err.getvalue()
