"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails (the
report carries a witness), 2 on malformed input or invalid flags.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import axioms, cohomology, constructions, corpus, ideals, io, representations, solvers
from .axioms import AXIOM_NAMES, AxiomSet
from .linalg import Matrix, Subspace, fraction_str
from .model import Algebra, CheckReport, InputError, Representation, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Report:
    """Ordered key/value report rendered as text or JSON."""

    def __init__(self, command: str):
        self.data = {"command": command}
        self.passed = True

    def __setitem__(self, key, value):
        self.data[key] = value

    def add_check(self, name: str, report: CheckReport) -> dict:
        entry = {"name": name, "passed": report.passed}
        if report.witness is not None:
            w = report.witness
            entry["witness"] = {"axiom": w.axiom, "indices": list(w.indices),
                                "residual": [fraction_str(a) for a in w.residual]}
        if report.notes:
            entry["notes"] = list(report.notes)
        self.data.setdefault("checks", []).append(entry)
        self.passed = self.passed and report.passed
        return entry

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2) + "\n"
        return "\n".join(_text_lines(self.data)) + "\n"


def _text_lines(data: dict) -> list[str]:
    lines = []
    for key, value in data.items():
        if key == "checks":
            for c in value:
                line = f"{c['name']}: {'PASS' if c['passed'] else 'FAIL'}"
                if "witness" in c:
                    w = c["witness"]
                    line += f"  witness {w['axiom']} at {tuple(w['indices'])} residual ({', '.join(w['residual'])})"
                lines.append(line)
                lines.extend(f"    {n}" for n in c.get("notes", []))
        elif key == "rows":
            lines.extend(_table(value))
        elif key == "basis":
            for t, mat in enumerate(value):
                lines.append(f"basis[{t}]:")
                lines.extend("    " + "  ".join(f"{a:>6}" for a in row) for row in mat)
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"    {k}: {_plain(v)}" for k, v in value.items())
        elif key in ("notes", "passing_axiom_sets"):
            lines.append(f"{key}:")
            lines.extend(f"    {v}" for v in value)
        else:
            lines.append(f"{key}: {_plain(value)}")
    return lines


def _plain(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ", ".join(_plain(x) for x in v) if v else "-"
    return str(v)


def _table(rows: list[dict]) -> list[str]:
    if not rows:
        return ["(no rows)"]
    cols = list(rows[0])
    cells = [[_plain(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    out.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    return out


# --- argument parsing helpers ---------------------------------------------------------

def _axiom_names(text: str) -> list[str]:
    names = [t for t in text.replace(" ", "").split(",") if t]
    for n in names:
        if n not in AXIOM_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown axiom set {n!r}; valid names: {', '.join(AXIOM_NAMES)}")
    return names


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact fraction") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError("powers must be non-negative")
    return v


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None


def _matrix(text: str) -> Matrix:
    """Rows separated by ';', entries by ',', e.g. '1,0;0,1/2'."""
    try:
        rows = [[Fraction(a) for a in row.split(",")] for row in text.split(";")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse matrix {text!r}; use '1,0;0,1/2'") from None
    if any(len(r) != len(rows) for r in rows):
        raise argparse.ArgumentTypeError(f"matrix {text!r} is not square")
    return Matrix(rows, len(rows))


def _grid_axis(text: str) -> tuple[str, list[Fraction]]:
    """'x=-2..2' (integer range) or 'x=1,2,1/2' (explicit values)."""
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"grid axis {text!r} must look like name=lo..hi or name=v1,v2")
    name, spec = text.split("=", 1)
    try:
        if ".." in spec:
            lo, hi = (int(s) for s in spec.split(".."))
            values = [Fraction(v) for v in range(lo, hi + 1)]
        else:
            values = [Fraction(v) for v in spec.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse grid axis {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"grid axis {text!r} is empty")
    return name.strip(), values


def _load_algebra(path: str) -> Algebra:
    obj = io.load(path)
    if isinstance(obj, Representation):
        raise InputError(f"{path} holds a representation; this command needs an algebra")
    return obj


def _basis_matrices(S: Subspace, n: int) -> list:
    return [[[fraction_str(a) for a in row] for row in Matrix.from_flat(n, n, v).tolist()] for v in S.basis]


# --- commands ------------------------------------------------------------------------

def cmd_validate(args, rep: Report) -> None:
    obj = io.load(args.file)
    rep["file"] = args.file
    if isinstance(obj, Representation):
        rep["kind"] = "representation"
        rep["dim"] = obj.dim
        rep.add_check("algebra", validate(obj.algebra))
        comm = obj.alphaV @ obj.betaV - obj.betaV @ obj.alphaV
        bad = next((j for j in range(obj.dim) if any(comm.col(j))), None)
        rep.add_check("module_maps_commute",
                      CheckReport.ok() if bad is None else CheckReport.fail("commuting_maps:V", (bad,), comm.col(bad)))
    else:
        rep["kind"] = "algebra"
        rep["dim"] = obj.dim
        rep["graded"] = obj.graded
        rep.add_check("well_formed", validate(obj))


REP_CHECKS = {
    "compatibility": lambda V, r: representations.check_compatibility(V, r),
    "left_rep": lambda V, r: representations.check_left_representation_B1(V, r),
    "right_rep": lambda V, r: representations.check_right_representation_B1(V, r),
    "right_consistency": lambda V, r: representations.check_right_consistency(V),
    "symmetric_rep": lambda V, r: representations.check_symmetric_representation_B1(V),
    "consequences": lambda V, r: representations.check_rep_consequences(V, r),
}


def cmd_check(args, rep: Report) -> None:
    obj = io.load(args.file)
    rep["file"] = args.file
    if isinstance(obj, Representation):
        names = args.rep_checks or list(REP_CHECKS)
        reading = representations.BetaReading(args.beta_reading)
        rep["beta_reading"] = reading.value
        for name in names:
            rep.add_check(name, REP_CHECKS[name](obj, reading))
        return
    if args.rep_checks:
        raise InputError("--rep-checks applies to representation files only")
    names = args.axioms or [a.value for a in AxiomSet if obj.graded or not a.is_colour]
    for name in names:
        rep.add_check(name, axioms.check(obj, name))


def _subspace_summary(L: Algebra, S: Subspace) -> dict:
    kinds = ideals.classify_subspace(L, S)
    return {"dim": S.dim, "kinds": sorted(k.value for k in kinds)}


def cmd_analyze(args, rep: Report) -> None:
    L = _load_algebra(args.file)
    rep["file"] = args.file
    rep["dim"] = L.dim
    rep["graded"] = L.graded
    rep["alpha_surjective"] = ideals.surjective(L.alpha)
    rep["beta_surjective"] = ideals.surjective(L.beta)
    rep["passing_axiom_sets"] = [a.value for a in AxiomSet
                                 if (L.graded or not a.is_colour) and axioms.check(L, a).passed]
    rep["center"] = _subspace_summary(L, ideals.center(L))
    rep["squared"] = _subspace_summary(L, ideals.squared(L))
    rep["square_ideal"] = _subspace_summary(L, ideals.ideal_IL(L))
    rep["omega_dim"] = solvers.omega_space(L).dim


SPACES = ("der", "centroid", "qc", "zder", "ider", "omega")


def cmd_solve(args, rep: Report) -> None:
    L = _load_algebra(args.file)
    k, l = args.k, args.l
    triple = (args.lam, args.mu, args.gamma)
    rep["file"] = args.file
    rep["space"] = args.space
    rep["k"], rep["l"] = k, l
    if args.space == "der":
        S = solvers.generalized_derivation_space(L, solvers.DerivationSpec(*triple, k, l))
        rep["triple"] = [fraction_str(t) for t in triple]
    elif args.space == "ider":
        S = solvers.ider_space(L, solvers.DerivationSpec(*triple, k, l))
        rep["triple"] = [fraction_str(t) for t in triple]
    elif args.space == "centroid":
        S = solvers.centroid_space(L, k, l)
    elif args.space == "qc":
        S = solvers.quasi_centroid_space(L, k, l)
    elif args.space == "zder":
        S = solvers.central_derivation_space(L, k, l)
        P = solvers.printed_central_intersection(L, k, l)
        rep["intersection_0_1_-1_and_1_1_-1_dim"] = P.dim
        rep["matches_intersection"] = P == S
    else:
        S = solvers.omega_space(L)
    rep["dim"] = S.dim
    rep["basis"] = _basis_matrices(S, L.dim)


CONSTRUCTIONS = ("yau_twist_hom", "lie_tensor", "hom_lie_tensor", "bihom_yau_twist",
                 "bihom_to_hom", "adjoint", "trivial_module")


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise InputError(f"construct {args.name} needs --{n}")


def cmd_construct(args, rep: Report) -> str:
    L = _load_algebra(args.file)
    name = args.name
    if name == "yau_twist_hom":
        _need(args, "a")
        out = constructions.yau_twist_hom(L, args.a)
    elif name == "lie_tensor":
        out = constructions.lie_tensor_to_leibniz(L)
    elif name == "hom_lie_tensor":
        _need(args, "a")
        out = constructions.hom_lie_tensor_construction(L, args.a)
    elif name == "bihom_yau_twist":
        _need(args, "a", "b")
        out = constructions.bihom_yau_twist(L, args.a, args.b)
    elif name == "bihom_to_hom":
        out = constructions.bihom_to_hom_leibniz(L)
    elif name == "adjoint":
        out = representations.adjoint_representation(L, args.n, args.m)
    else:
        out = representations.trivial_representation(L, args.module_dim)
    text = io.dumps(out)
    rep["construction"] = name
    rep["output_dim"] = out.dim
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        rep["written"] = args.output
        return ""
    return text


def _coefficients(L: Algebra, spec: str) -> Representation:
    if spec == "adjoint":
        return representations.adjoint_representation(L)
    if spec == "trivial":
        return representations.trivial_representation(L)
    V = io.load(spec)
    if not isinstance(V, Representation):
        raise InputError(f"{spec} holds an algebra, not a representation")
    if V.algebra != L:
        raise InputError(f"{spec} is a representation of a different algebra")
    return V


def cmd_cohomology(args, rep: Report) -> None:
    L = _load_algebra(args.file)
    V = _coefficients(L, args.coefficients)
    reading = cohomology.Reading(args.reading)
    k, n, m = args.k, args.n, args.m
    rep["file"] = args.file
    rep["coefficients"] = args.coefficients
    rep["reading"] = reading.value
    rep["k"], rep["n"], rep["m"] = k, n, m
    rep["dim_C"] = cohomology.cochain_space(L, V, k).dim
    verdicts = []
    for kk in (k, k + 1):
        if kk >= 1:
            r = cohomology.verify_complex(L, V, kk, n, m, reading)
            rep.add_check(f"delta{kk}_delta{kk - 1}", r)
            verdicts.append(r.passed)
    Z = cohomology.cocycle_space(L, V, k, n, m, reading)
    B = cohomology.coboundary_space(L, V, k, n, m, reading)
    rep["dim_Z"] = Z.dim
    rep["dim_B"] = B.dim
    closed = all(verdicts[:1]) if k >= 1 else True
    rep["dim_H"] = Z.dim - B.dim if closed else "undefined (not a complex)"


EXPECTED = {
    "table_case1": lambda p: {"left": True, "multiplicative": p["y"] == 0, "symmetric": p["x"] * p["y"] == 0},
    "table_case2": lambda p: {"left": True, "multiplicative": p["c"] == 0, "symmetric": p["c"] == 0},
    "table_case3": lambda p: {"left": True, "multiplicative": p["a"] == 0, "symmetric": True},
    "table_case4": lambda p: {"left": True, "hom_lie": True},
    "super3d": lambda p: {"symmetric": True},
}

DEFAULT_GRIDS = {
    "table_case1": {"x": range(-2, 3), "y": range(-2, 3)},
    "table_case2": {"c": range(-2, 3), "d": range(-2, 3)},
    "table_case3": {"a": range(-2, 3), "x": range(-2, 3)},
    "table_case4": {"b": range(-1, 2), "y": range(-1, 2)},
    "super3d": {"a": [1], "x": [1, 2], "d": [0, 1], "mu": [-1, 1]},
}


def _predicates(L: Algebra) -> dict:
    if L.graded:
        sets = {"left": AxiomSet.left_hom_leibniz_colour, "symmetric": AxiomSet.symmetric_hom_leibniz_colour,
                "hom_lie": AxiomSet.hom_lie_colour}
    else:
        sets = {"left": AxiomSet.left_hom_leibniz, "symmetric": AxiomSet.symmetric_hom_leibniz,
                "hom_lie": AxiomSet.hom_lie}
    out = {name: axioms.check(L, s).passed for name, s in sets.items()}
    out["multiplicative"] = axioms.check_multiplicative(L).passed
    return {k: out[k] for k in ("left", "multiplicative", "symmetric", "hom_lie")}


def enumerate_family(family: str, grid: dict[str, Sequence]) -> tuple[list[dict], list[str]]:
    """Rows of computed predicates next to the expected ones, in grid order."""
    builder, params = corpus.FAMILIES[family]
    unknown = set(grid) - set(params)
    if unknown:
        raise InputError(f"family {family} has parameters {', '.join(params)}; unknown: {', '.join(sorted(unknown))}")
    axes = [[Fraction(v) for v in grid.get(p, DEFAULT_GRIDS[family][p])] for p in params]
    rows, notes = [], []
    for point in product(*axes):
        p = dict(zip(params, point))
        label = ", ".join(f"{k}={fraction_str(v)}" for k, v in p.items())
        try:
            L = builder(*point)
        except InputError as exc:
            notes.append(f"skipped {label}: {exc}")
            continue
        got = _predicates(L)
        want = EXPECTED[family](p)
        row = {k: fraction_str(v) for k, v in p.items()}
        row.update(got)
        for key, val in want.items():
            row[f"expected_{key}"] = val
        row["match"] = all(got[key] == val for key, val in want.items())
        rows.append(row)
    return rows, notes


def cmd_enumerate(args, rep: Report) -> None:
    grid = dict(args.grid or [])
    rows, notes = enumerate_family(args.family, grid)
    rep["family"] = args.family
    rep["rows"] = rows
    matched = sum(r["match"] for r in rows)
    rep["matched"] = f"{matched}/{len(rows)}"
    if notes:
        rep["notes"] = notes
    rep.passed = matched == len(rows)


# --- entry point -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable JSON report")

    parser = argparse.ArgumentParser(prog="bihom", description="Exact checks and solvers for BiHom-Leibniz algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check that a file is well formed")
    p.add_argument("file")

    p = sub.add_parser("check", parents=[common], help="run identity checks")
    p.add_argument("file")
    p.add_argument("--axioms", type=_axiom_names, help="comma-separated axiom sets (default: all applicable)")
    p.add_argument("--rep-checks", type=lambda s: [x for x in s.split(",") if x], metavar="NAMES",
                   help=f"representation checks: {', '.join(REP_CHECKS)}")
    p.add_argument("--beta-reading", choices=[r.value for r in representations.BetaReading], default="verbatim")

    p = sub.add_parser("analyze", parents=[common], help="center, squared ideal and structure summary")
    p.add_argument("file")

    p = sub.add_parser("solve", parents=[common], help="derivation-type subspaces of End(L)")
    p.add_argument("file")
    p.add_argument("--space", choices=SPACES, required=True)
    p.add_argument("--k", type=_nonneg, default=0)
    p.add_argument("--l", type=_nonneg, default=0)
    p.add_argument("--lambda", dest="lam", type=_fraction, default=Fraction(1))
    p.add_argument("--mu", type=_fraction, default=Fraction(1))
    p.add_argument("--gamma", type=_fraction, default=Fraction(1))

    p = sub.add_parser("construct", parents=[common], help="build a new algebra or module")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("file")
    p.add_argument("--a", type=_matrix, help="first map, e.g. '1,0;0,2'")
    p.add_argument("--b", type=_matrix, help="second map")
    p.add_argument("--n", type=_nonneg, default=0)
    p.add_argument("--m", type=_nonneg, default=0)
    p.add_argument("--module-dim", type=_nonneg, default=1)
    p.add_argument("-o", "--output", help="write the result here instead of stdout")

    p = sub.add_parser("cohomology", parents=[common], help="cochain complex dimensions")
    p.add_argument("file")
    p.add_argument("--k", type=_nonneg, default=1)
    p.add_argument("--n", type=_int, default=0)
    p.add_argument("--m", type=_int, default=0)
    p.add_argument("--coefficients", default="adjoint", help="adjoint, trivial, or a representation file")
    p.add_argument("--reading", choices=[r.value for r in cohomology.Reading],
                   default=cohomology.DEFAULT_READING.value)

    p = sub.add_parser("enumerate", parents=[common], help="evaluate a parametric family over a grid")
    p.add_argument("family", choices=sorted(corpus.FAMILIES))
    p.add_argument("--grid", type=_grid_axis, action="append", metavar="NAME=LO..HI",
                   help="parameter range; repeat per parameter")
    return parser


COMMANDS = {
    "validate": cmd_validate, "check": cmd_check, "analyze": cmd_analyze, "solve": cmd_solve,
    "construct": cmd_construct, "cohomology": cmd_cohomology, "enumerate": cmd_enumerate,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "check" and args.rep_checks:
        bad = [n for n in args.rep_checks if n not in REP_CHECKS]
        if bad:
            stderr.write(f"error: unknown representation check {bad[0]!r}; valid names: {', '.join(REP_CHECKS)}\n")
            return EXIT_INPUT
    rep = Report(args.command)
    try:
        payload = COMMANDS[args.command](args, rep)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except constructions.VerificationError as exc:
        rep.add_check(exc.builder, exc.report)
        payload = None
    if payload:
        stdout.write(payload)
    else:
        stdout.write(rep.render(args.json))
    return EXIT_OK if rep.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())
