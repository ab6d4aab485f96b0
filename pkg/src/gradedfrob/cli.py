"""Command line entry point: analyze, construct, verify, examples.

Exit codes: 0 success, 1 invalid input, 2 a claim was violated, 3 undecided results.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Algebra
from .catalog import CATALOG, make_example
from .claims import Options, default_suite, parse_element, tri, verify_claim
from .errors import (
    AlgebraError,
    BadParams,
    InvalidC,
    NotAssociativeMorphism,
    NotBimoduleMorphism,
    UnsupportedCharacteristic,
    ValidationError,
    Yes,
)
from .frobenius import (
    FrobeniusData,
    NotFrobenius,
    associative_c_space,
    frobenius_form,
    is_quasi_frobenius,
    is_symmetric,
    nakayama_permutation,
    phi_from_c,
)
from .graded import GradedAlgebra, build_A_dual, graded_diagnostics
from .modules import LinearMap, NoneUpTo, dual_bimodule, hom_space, pic_order_of_dual, regular_bimodule, tensor_powers
from .semisimple import jacobson_radical
from .serialization import (
    REPORT_SCHEMA,
    algebra_to_dict,
    dumps,
    fmt_matrix,
    fmt_vec,
    load_algebra,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATED, EXIT_UNDECIDED = 0, 1, 2, 3
INPUT_ERRORS = (ValidationError, BadParams, InvalidC, NotAssociativeMorphism, NotBimoduleMorphism,
                OSError, json.JSONDecodeError, KeyError, ValueError)


# ---------------------------------------------------------------- analyze

def _verdict(res):
    t = tri(res)
    return "undecided" if t is None else ("yes" if t else "no")


def analyze_algebra(A: Algebra, opts: Options, pic_limit: int = 6, grading=None) -> dict:
    F = A.field
    out: dict = {"name": A.name, "field": F.descriptor(), "dim": A.dim, "labels": list(A.labels)}
    undecided = []
    try:
        J = jacobson_radical(A)
        out["radical"] = {"dim": J.dim, "basis": [fmt_vec(A, v) for v in J.basis]}
    except UnsupportedCharacteristic as exc:
        out["radical"] = {"unsupported": str(exc)}
    D = dual_bimodule(A)
    tp = tensor_powers(A, 3)
    out["hom_left_dual_to_R_dim"] = len(hom_space(D, regular_bimodule(A), "left"))
    out["dual_tensor_power_dims"] = tp.dims()[:4]
    out["tensor_square_dim"] = tp.module(2).dim
    qf = is_quasi_frobenius(A, **opts.kw)
    out["quasi_frobenius"] = _verdict(qf)
    fr = frobenius_form(A, **opts.kw)
    if isinstance(fr, FrobeniusData):
        out["frobenius"] = {"verdict": "yes", "decision": getattr(fr, "decision", ""),
                            "form": fmt_vec(A, fr.lam),
                            "nakayama_automorphism": fmt_matrix(F, fr.nu, A.dim)}
    elif isinstance(fr, NotFrobenius):
        out["frobenius"] = {"verdict": "no", "reason": fr.reason}
    else:
        out["frobenius"] = {"verdict": "undecided", "reason": fr.reason, "trials": fr.trials}
        undecided.append("frobenius")
    sym = is_symmetric(A, **opts.kw)
    out["symmetric"] = {"verdict": _verdict(sym)}
    if isinstance(sym, Yes):
        out["symmetric"]["form"] = fmt_vec(A, sym.witness)
    if out["quasi_frobenius"] == "undecided":
        undecided.append("quasi_frobenius")
    if out["symmetric"]["verdict"] == "undecided":
        undecided.append("symmetric")
    if isinstance(qf, Yes):
        try:
            pi, m = nakayama_permutation(A, **opts.kw)
            out["nakayama_permutation"] = [p + 1 for p in pi]
            out["multiplicities"] = m
        except (UnsupportedCharacteristic, AlgebraError) as exc:
            out["nakayama_permutation"] = {"unavailable": str(exc)}
        order = pic_order_of_dual(A, limit=pic_limit, **opts.kw)
        if isinstance(order, NoneUpTo):
            out["pic_order_of_dual"] = {"none_up_to": order.limit, "undecided": order.undecided}
            if order.undecided:
                undecided.append("pic_order_of_dual")
        else:
            out["pic_order_of_dual"] = order
    if grading is not None:
        n, degrees = grading
        G = GradedAlgebra(A, n, degrees, offsets=[])
        bad = G.check_homogeneous()
        if bad is not None:
            raise ValidationError(f"grading is not compatible with the multiplication at {bad}")
        diag = graded_diagnostics(G, **opts.kw)
        out["graded"] = {
            "n": n,
            "component_dims": G.component_dims(),
            "faithful": [diag.faithful[s] for s in range(n)],
            "strongly_graded": diag.strongly_graded,
            "graded_frobenius": [None if diag.graded_frobenius[s] is None
                                 else fmt_vec(A, diag.graded_frobenius[s]) for s in range(n)],
        }
        if diag.undecided:
            undecided.append("graded_frobenius")
    out["undecided"] = undecided
    return out


# ---------------------------------------------------------------- construct

def load_phi(R: Algebra, n: int, path: str) -> LinearMap:
    """φ file: {"columns": [[t, [[k, "coef"], ...]], ...]} on the pure-tuple basis of (R*)^n."""
    from .serialization import _parse_pairs

    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    T = tensor_powers(R, n).module(n)
    cols = [{} for _ in range(T.dim)]
    for entry in data.get("columns", []):
        t, pairs = entry
        if not isinstance(t, int) or not 0 <= t < T.dim:
            raise ValidationError(f"column index {t!r} out of range (tensor power has dim {T.dim})")
        cols[t] = _parse_pairs(R.field, pairs, R.dim, f"phi column {t}")
    return LinearMap(T.dim, R.dim, cols, "phi")


def construct(R: Algebra, n: int, phi_spec: str, opts: Options) -> GradedAlgebra:
    if n < 2:
        raise BadParams("--n must be at least 2")
    phi = None
    if phi_spec in (None, "zero"):
        phi = None
    elif phi_spec.startswith("c:"):
        fd = frobenius_form(R, **opts.kw)
        if not isinstance(fd, FrobeniusData):
            raise InvalidC("φ given by c needs a Frobenius algebra")
        c = parse_element(R, phi_spec[2:])
        if not associative_c_space(R, fd, n).contains(c):
            raise InvalidC(f"c = {R.format_element(c)} is outside the associative c-space")
        phi = phi_from_c(R, fd, n, c) if c else None
    else:
        phi = load_phi(R, n, phi_spec)
    return build_A_dual(R, n, phi)


# ---------------------------------------------------------------- verify

def _parse_params(items):
    params = {}
    for item in items or []:
        if "=" not in item:
            raise BadParams(f"parameter {item!r} must look like key=value")
        k, v = item.split("=", 1)
        try:
            params[k] = int(v)
        except ValueError:
            params[k] = v
    return params


def _claim_inputs(args) -> dict:
    inputs = {"example": args.example, "params": _parse_params(args.params)}
    if args.n is not None:
        inputs["n"] = args.n
    if args.phi is not None:
        inputs["phi"] = args.phi
    return inputs


# ---------------------------------------------------------------- text rendering

def render_text(report: dict) -> str:
    lines = [f"# {' '.join(report['command'])}"]
    res = report.get("results")
    if report.get("error"):
        lines.append(f"error: {report['error']['type']}: {report['error']['message']}")
    if isinstance(res, dict) and "claims" in res:
        for c in res["claims"]:
            inp = ", ".join(f"{k}={v}" for k, v in c["inputs"].items())
            lines.append(f"{c['verdict']:>10}  {c['claim']}  ({inp})")
            for chk in c["payload"]["checks"]:
                if chk["ok"] is not True:
                    lines.append(f"            - {chk['check']}: ok={chk['ok']}")
        lines.append(f"summary: {res['summary']}")
    elif res is not None:
        _flatten(res, "", lines)
    return "\n".join(lines) + "\n"


def _flatten(obj, prefix, lines):
    if isinstance(obj, dict) and obj:
        for k, v in obj.items():
            _flatten(v, f"{prefix}{k}.", lines)
    else:
        lines.append(f"{prefix.rstrip('.')}: {json.dumps(obj, ensure_ascii=False)}")


# ---------------------------------------------------------------- main

class _Parser(argparse.ArgumentParser):
    """Usage errors become input errors (exit 1) instead of argparse's exit 2."""

    def error(self, message):
        raise BadParams(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mc-trials", type=int, default=64)
    common.add_argument("--det-fallback-dim", type=int, default=12)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="write the report (or algebra file) here")

    p = _Parser(prog="gradedfrob", description="Exact computations with Z_n-graded "
                                "algebras built from dual tensor powers.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="diagnostics for an algebra file")
    a.add_argument("file")
    a.add_argument("--pic-limit", type=int, default=6)
    c = sub.add_parser("construct", parents=[common], help="build A(R, R*, φ) from an algebra file")
    c.add_argument("file")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--phi", default="zero", help="zero | c:<element> | path to a φ file")
    v = sub.add_parser("verify", parents=[common], help="verify a claim, or the whole suite")
    v.add_argument("claim", help="B, C, D, E, F, PropA, Tachikawa, NonlocalRemark, Example:<id> or all")
    v.add_argument("--example", default=None)
    v.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--phi", default=None)
    e = sub.add_parser("examples", parents=[common], help="list the catalog")
    e.add_argument("--write-dir", default=None, help="also write one algebra file per example")
    return p


def _echo(argv):
    """The invocation as recorded in the report; the output path is left out so
    that reports written to different files compare equal."""
    out, skip = ["gradedfrob"], False
    for a in argv:
        if skip:
            skip = False
            continue
        if a == "--out":
            skip = True
            continue
        if a.startswith("--out="):
            continue
        out.append(a)
    return out


def execute(argv) -> tuple:
    """(exit code, report dict, optional text payload for --out of algebra files)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except BadParams as exc:
        report = {"schema": REPORT_SCHEMA, "command": _echo(argv),
                  "error": {"type": "UsageError", "message": str(exc)}, "exit_code": EXIT_INPUT}
        return EXIT_INPUT, report, None
    opts = Options(args.seed, args.mc_trials, args.det_fallback_dim)
    report = {"schema": REPORT_SCHEMA, "command": _echo(argv),
              "parameters": {"seed": opts.seed, "mc_trials": opts.mc_trials,
                             "det_fallback_dim": opts.det_fallback_dim}}
    code = EXIT_OK
    try:
        if args.command == "analyze":
            A, grading = load_algebra(args.file)
            res = analyze_algebra(A, opts, args.pic_limit, grading)
            report["results"] = res
            if res["undecided"]:
                code = EXIT_UNDECIDED
        elif args.command == "construct":
            R, _ = load_algebra(args.file)
            G = construct(R, args.n, args.phi, opts)
            report["results"] = {"dim": G.dim, "component_dims": G.component_dims(),
                                 "algebra": algebra_to_dict(G.algebra, (G.n, G.degrees))}
        elif args.command == "verify":
            if args.claim == "all":
                suite = default_suite()
            else:
                if args.claim != "NonlocalRemark" and args.example is None and not args.claim.startswith("Example:"):
                    raise BadParams("--example is required for a single claim")
                inputs = _claim_inputs(args)
                if args.claim.startswith("Example:") and args.example is None:
                    inputs["example"] = args.claim.split(":", 1)[1]
                suite = [(args.claim, inputs)]
            reports = [verify_claim(cid, inp, **opts.kw) for cid, inp in suite]
            verdicts = [r.verdict for r in reports]
            summary = {v: verdicts.count(v) for v in ("verified", "violated", "undecided")}
            report["results"] = {"claims": [r.to_dict() for r in reports], "summary": summary}
            if summary["violated"]:
                code = EXIT_VIOLATED
            elif summary["undecided"]:
                code = EXIT_UNDECIDED
        elif args.command == "examples":
            items = []
            for eid, entry in CATALOG.items():
                A = make_example(eid)
                items.append({"id": eid, "signature": entry.signature, "dim": A.dim,
                              "facts": entry.facts})
                if args.write_dir:
                    Path(args.write_dir).mkdir(parents=True, exist_ok=True)
                    with open(Path(args.write_dir) / f"{eid}.json", "w", encoding="utf-8") as fh:
                        fh.write(dumps(algebra_to_dict(A)))
            report["results"] = {"examples": items}
    except INPUT_ERRORS as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    except AlgebraError as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    report["exit_code"] = code
    return code, report, args


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    code, report, args = execute(argv)
    if args is None:
        sys.stderr.write(f"usage error: {report['error']['message']}\n")
        build_parser().print_usage(sys.stderr)
        return code
    if args.command == "construct" and "results" in report and args.out and args.format == "json":
        # the output file of construct is the algebra file itself
        text = dumps(report["results"]["algebra"])
    else:
        text = dumps(report) if args.format == "json" else render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_INPUT and "error" in report:
        print(f"error: {report['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
