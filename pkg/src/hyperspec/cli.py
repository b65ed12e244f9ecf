"""Command-line entry point: ``hyperspec <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or
invalid input, 3 the eigensolver did not converge.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import grafting, verify
from .enumeration import KINDS as ENUM_KINDS, EnumQuery, enumerate_class
from .errors import HyperspecError, NoConvergence
from .families import TAGS, FamilySpec, generate, parse_params
from .hypergraph import Hypergraph
from .spectral import (
    DEFAULT_TOL, MAX_ITERATIONS, adjacency_matrix, alpha_matrix, laplacian, row_sum_matrix,
    signless_laplacian, spectral_radius, write_matrix_market,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """Fixed ten-decimal rendering used for every printed eigenvalue."""
    return f"{x:.10f}"


def fmt_small(x: float) -> str:
    return f"{x:.3e}"


def _alpha(text):
    try:
        a = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= a < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1), got {a}")
    return a


def _alpha_list(text):
    return [_alpha(t) for t in text.split(",") if t.strip()]


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _count(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def parse_grid(text: str) -> list[float]:
    """``"a:b:step"`` to the inclusive list ``a, a+step, ..., <= b``."""
    try:
        a, b, step = (float(t) for t in text.split(":"))
    except ValueError:
        raise UsageError(f"alpha grid must look like a:b:step, got {text!r}")
    if step <= 0 or b < a:
        raise UsageError("alpha grid needs step > 0 and a <= b")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    grid = [round(a + i * step, 12) for i in range(count)]
    for x in grid:
        if not 0.0 <= x < 1.0:
            raise UsageError(f"alpha grid value {x} outside [0, 1)")
    return grid


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_hypergraph(path) -> Hypergraph:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc.msg})")
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise UsageError(f"{path}: expected an object with 'n' and 'edges'")
    return Hypergraph.from_dict(data)


def _load_descriptor(text):
    src = text
    if not text.lstrip().startswith("{"):
        src = _read_text(text)
    try:
        data = json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"operation descriptor is not valid JSON ({exc.msg})")
    if not isinstance(data, dict):
        raise UsageError("operation descriptor must be a JSON object")
    return data


def _params(text):
    try:
        return parse_params(text or "")
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- commands ---------------------------------------------------------------

def cmd_gen(args):
    spec = FamilySpec(args.tag, _params(args.params))
    hg = generate(spec)
    data = hg.to_dict()
    data["family"] = {"tag": spec.tag, "params": dict(spec.params)}
    _emit(json.dumps(data), args.out)
    return EXIT_OK


def cmd_rho(args):
    hg = load_hypergraph(args.file)
    res = spectral_radius(hg, args.alpha, args.tol, args.max_iter)
    print(f"rho {fmt(res.rho)}")
    print(f"residual {fmt_small(res.residual)}")
    print(f"iterations {res.iterations}")
    if args.vector:
        print("vector " + " ".join(fmt(float(x)) for x in res.vector))
    return EXIT_OK


def cmd_sweep(args):
    grid = parse_grid(args.alpha_grid)
    hg = load_hypergraph(args.file)
    rows = ["alpha,rho,iterations,residual"]
    for a in grid:
        res = spectral_radius(hg, a, args.tol)
        rows.append(f"{a:g},{fmt(res.rho)},{res.iterations},{fmt_small(res.residual)}")
    _emit("\n".join(rows), args.out)
    return EXIT_OK


def cmd_graft(args):
    hg = load_hypergraph(args.file)
    inst = grafting.apply(hg, _load_descriptor(args.descriptor))
    out = inst.to_dict()
    if args.alpha is not None:
        before = spectral_radius(hg, args.alpha, args.tol).rho
        after = spectral_radius(inst.result, args.alpha, args.tol).rho
        out["alpha"] = args.alpha
        out["rho_source"] = before
        out["rho_result"] = after
        print(f"rho source {fmt(before)}  result {fmt(after)}  change {after - before:+.3e}",
              file=sys.stderr)
    _emit(json.dumps(out), args.out)
    return EXIT_OK


def _enum_query(args):
    base = None
    if args.kind == "PendantConstrained":
        if not args.base:
            raise UsageError("PendantConstrained needs --base KIND and --base-params")
        base = EnumQuery(args.base, _params(args.base_params))
    return EnumQuery(args.kind, _params(args.params), base)


def cmd_enum(args):
    q = _enum_query(args)
    members = enumerate_class(q, args.jobs)
    if args.count_only:
        print(len(members))
        return EXIT_OK
    for hg in members:
        line = hg.to_dict()
        line["code"] = hg.canonical_code().hex()
        print(json.dumps(line))
    return EXIT_OK


def cmd_verify(args):
    alphas = args.alpha
    options = {"n": args.n, "k": args.k, "m": args.m, "seed": args.seed, "trials": args.trials,
               "samples": args.samples}
    options = {k: v for k, v in options.items() if v is not None}
    if args.jobs > 1:
        options["jobs"] = args.jobs
    report = verify.run(args.theorem, alphas, **options)
    _emit(report.to_json(), args.out)
    print(report.table(), file=sys.stderr)
    s = report.summary
    print(f"{s['total']} checks: {s['pass']} pass, {s['equality']} equality, {s['fail']} fail",
          file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


MATRICES = {
    "A": lambda hg, a: adjacency_matrix(hg),
    "D": lambda hg, a: row_sum_matrix(hg),
    "Aalpha": alpha_matrix,
    "Q": lambda hg, a: signless_laplacian(hg),
    "L": lambda hg, a: laplacian(hg),
}


def cmd_export(args):
    hg = load_hypergraph(args.file)
    M = MATRICES[args.matrix](hg, args.alpha)
    comment = f"{args.matrix} of a hypergraph with n={hg.n}, m={hg.m}"
    if args.matrix == "Aalpha":
        comment += f", alpha={args.alpha:g}"
    write_matrix_market(args.out, np.asarray(M), comment)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a named family and print its JSON")
    g.add_argument("tag", choices=TAGS)
    g.add_argument("--params", default="", help="comma-separated integers, e.g. n=7,k=3")
    g.add_argument("--out", help="write to this file instead of stdout")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rho", help="alpha-spectral radius of a hypergraph JSON file")
    r.add_argument("file", help="hypergraph JSON ('-' for stdin)")
    r.add_argument("--alpha", type=_alpha, default=0.0)
    r.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    r.add_argument("--max-iter", type=_count, default=MAX_ITERATIONS)
    r.add_argument("--vector", action="store_true", help="also print the Perron vector")
    r.set_defaults(func=cmd_rho)

    s = sub.add_parser("sweep", help="CSV of rho over a grid of alpha values")
    s.add_argument("file")
    s.add_argument("--alpha-grid", required=True, help="a:b:step, inclusive")
    s.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    gr = sub.add_parser("graft", help="apply an operation descriptor to a hypergraph")
    gr.add_argument("file")
    gr.add_argument("descriptor", help="descriptor JSON text or a file containing it")
    gr.add_argument("--alpha", type=_alpha, help="also report rho before and after")
    gr.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    gr.add_argument("--out")
    gr.set_defaults(func=cmd_graft)

    e = sub.add_parser("enum", help="one JSON line per isomorphism class")
    e.add_argument("kind", choices=ENUM_KINDS)
    e.add_argument("--params", default="")
    e.add_argument("--base", choices=[k for k in ENUM_KINDS if k != "PendantConstrained"])
    e.add_argument("--base-params", default="")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--jobs", type=_count, default=1)
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", help="run theorem checks and print a JSON report")
    v.add_argument("theorem", choices=list(verify.THEOREMS) + ["all"])
    v.add_argument("--alpha", type=_alpha_list, help="comma-separated alpha values")
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=_count)
    v.add_argument("--samples", type=_count)
    v.add_argument("--jobs", type=_count, default=1)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export", help="write a matrix in MatrixMarket format")
    x.add_argument("file")
    x.add_argument("--matrix", choices=list(MATRICES), default="Aalpha")
    x.add_argument("--alpha", type=_alpha, default=0.0)
    x.add_argument("--out", required=True)
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"hyperspec: error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (UsageError, HyperspecError, ValueError, KeyError, TypeError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"hyperspec: error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
