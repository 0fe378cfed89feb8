"""Command-line front end.

Examples::

    walkforge synth "hypercube(4)" --t 1.0 --format qasm
    walkforge verify "book(3)" --t 0,1,3.14159
    walkforge evolve "path2" --t 0.5pi --init 0
    walkforge scaling hypercube --sizes 1,2,3,4
    walkforge export-graph "interdep_id(complete(2))" --format dot
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys

import numpy as np

from . import circuit as C
from . import expr as E
from . import serialize
from .config import TOL
from .errors import (
    CommutationError,
    DimensionError,
    EmbeddingError,
    ParseError,
    PreconditionError,
    ResourceError,
)
from .graphs import WalkParams
from .oracle import basis_state, eig_hermitian
from .synthesis import synth
from .verify import reports_to_csv, scaling, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_COMMUTATION = 4
EXIT_EMBEDDING = 5
EXIT_RESOURCE = 6
EXIT_DIMENSION = 7
EXIT_IO = 8

_EXIT_FOR = [
    (ParseError, EXIT_PARSE),
    (PreconditionError, EXIT_PRECONDITION),
    (CommutationError, EXIT_COMMUTATION),
    (EmbeddingError, EXIT_EMBEDDING),
    (ResourceError, EXIT_RESOURCE),
    (DimensionError, EXIT_DIMENSION),
    (OSError, EXIT_IO),
]

EPILOG = """\
exit status:
  0  success
  1  verification failed (some row above tolerance)
  2  usage or expression syntax error
  3  precondition violated (family sizes, equal degrees for interdep_complete, ...)
  4  adjacency matrices do not commute
  5  sub-walk cannot be embedded in the composite index space
  6  size cap exceeded (see --cap / WALKFORGE_CAP)
  7  dimension mismatch
  8  I/O error
"""


def parse_real(text: str) -> float:
    """Decimal literal, optionally followed by 'pi' ("0.5pi", "-pi", "2*pi")."""
    s = text.strip().lower().replace("*", "")
    if s.endswith("pi"):
        coef = s[:-2]
        if coef in ("", "+"):
            return math.pi
        if coef == "-":
            return -math.pi
        return float(coef) * math.pi
    return float(s)


def parse_list(text: str) -> list[float]:
    return [parse_real(part) for part in text.split(",") if part.strip()]


def _sizes(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_synth(args) -> int:
    expr = E.parse_expr(args.expr)
    circ = synth(expr, WalkParams(args.gamma[0], args.t[0]))
    fmt = args.format or "json"
    if fmt not in ("json", "qasm"):
        raise PreconditionError(f"synth writes json or qasm, not {fmt}")
    text = serialize.circuit_to_json(circ) if fmt == "json" else serialize.circuit_to_qasm(circ)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(E.parse_expr(args.expr), args.t, args.gamma, args.tol)
    _emit(reports_to_csv([report]), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_scaling(args) -> int:
    table = scaling(args.expr, args.sizes, WalkParams(args.gamma[0], args.t[0]))
    _emit(table.to_csv(), args.out)
    print(f"fitted exponent (cost2q vs wires): {table.exponent:.4f}", file=sys.stderr)
    return EXIT_OK


def cmd_evolve(args) -> int:
    expr = E.parse_expr(args.expr)
    graph = E.graph_of(expr)
    decomp = eig_hermitian(graph)
    psi0 = basis_state(graph.dim, args.init)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "gamma", "index", "p_circuit", "p_oracle", "abs_dev"])
    worst = 0.0
    for gamma in args.gamma:
        for t in args.t:
            params = WalkParams(gamma, t)
            p_circ = np.abs(C.apply_to_state(synth(expr, params), psi0)) ** 2
            p_orac = np.abs(decomp.evolution(params) @ psi0) ** 2
            dev = np.abs(p_circ - p_orac)
            worst = max(worst, float(dev.max()))
            for i in range(graph.dim):
                w.writerow([repr(t), repr(gamma), i, repr(float(p_circ[i])), repr(float(p_orac[i])), repr(float(dev[i]))])
    _emit(buf.getvalue(), args.out)
    print(f"max probability deviation: {worst:.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_export_graph(args) -> int:
    expr = E.parse_expr(args.expr)
    fmt = args.format or "dot"
    if fmt == "dot":
        pair = E.pair_of(expr)
        text = serialize.graph_to_dot(pair if pair is not None else E.graph_of(expr))
    elif fmt == "json":
        text = serialize.graph_to_json(E.graph_of(expr)) + "\n"
    else:
        raise PreconditionError(f"export-graph writes dot or json, not {fmt}")
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", type=parse_list, default=[1.0], help="time value(s), comma separated; 'pi' allowed")
    common.add_argument("--gamma", type=parse_list, default=[1.0], help="hopping rate(s), comma separated")
    common.add_argument("--tol", type=float, default=TOL.verify, help="entrywise verification tolerance")
    common.add_argument("--format", choices=["json", "qasm", "dot", "csv"], default=None)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--init", type=int, default=0, help="initial basis state for evolve")
    common.add_argument("--cap", type=int, default=None, help="unitary extraction wire cap")

    parser = argparse.ArgumentParser(
        prog="walkforge",
        description="Exact, t-independent circuits for continuous-time quantum walks on composite graphs.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext in [
        ("synth", cmd_synth, "compile a walk expression to a circuit"),
        ("verify", cmd_verify, "check the circuit against the dense oracle; CSV report"),
        ("evolve", cmd_evolve, "basis-state probabilities from circuit and oracle"),
        ("export-graph", cmd_export_graph, "write the graph as DOT or JSON"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("expr", help='walk expression, e.g. "cartesian(star(3), path2)"')
        p.set_defaults(func=fn)
    p = sub.add_parser("scaling", parents=[common], help="gate counts across sizes of one family")
    p.add_argument("expr", metavar="family", help="path2, hypercube, complete, star, book or bipartite")
    p.add_argument("--sizes", type=_sizes, default=list(range(1, 7)), help="e.g. 1,2,3 or 1..10")
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("WALKFORGE_CAP")
    if args.cap is not None:
        os.environ["WALKFORGE_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except Exception as exc:
        for cls, code in _EXIT_FOR:
            if isinstance(exc, cls):
                print(f"walkforge: {exc}", file=sys.stderr)
                return code
        raise
    finally:
        # main() may be called in-process; do not leak --cap
        if saved is None:
            os.environ.pop("WALKFORGE_CAP", None)
        else:
            os.environ["WALKFORGE_CAP"] = saved


if __name__ == "__main__":
    sys.exit(main())
