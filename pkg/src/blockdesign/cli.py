"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 proven negative
(uncompletable input or no decomposition, by completed search or
certificate), 2 invalid input, 3 inconclusive (node budget exhausted or
the coloring engine gave up without a proof).  Results go to stdout as
canonical JSON; diagnostics go to stderr.

Environment: BLOCKDESIGN_BUDGET sets the default search node budget;
BLOCKDESIGN_THREADS is accepted for compatibility with parallel runners
but the search always follows the canonical deterministic order, so
outputs never depend on it.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import constructions, jsonio, pipeline, report
from .coloring import ColoringFailure, ColoringInstance, equitable_color
from .constructions import verify_certificate
from .core import PartialDesign, is_k_admissible, is_kk_divisible, leave, validate_design
from .decompose import exact_terminal
from .graphs import DenseGraph

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3


def _emit(obj) -> None:
    sys.stdout.write(jsonio.dumps(obj))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def _env_budget() -> int | None:
    raw = os.environ.get("BLOCKDESIGN_BUDGET")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"BLOCKDESIGN_BUDGET must be an integer, got {raw!r}")
    return value if value > 0 else None


def _check_threads_env() -> None:
    raw = os.environ.get("BLOCKDESIGN_THREADS")
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"BLOCKDESIGN_THREADS must be an integer, got {raw!r}")
        if value < 1:
            raise ValueError("BLOCKDESIGN_THREADS must be at least 1")


def _parse_gamma(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"gamma must be a rational 'p/q', got {text!r}")
    gamma = Fraction(int(num), int(den))
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must be in (0,1), got {gamma}")
    return gamma


def _parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if sep:
        start, stop = int(lo), int(hi)
        if stop < start:
            raise ValueError(f"empty range {text!r}")
        return list(range(start, stop + 1))
    return [int(text)]


# ----------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    kind = jsonio.detect_kind(args.path)
    if kind == "design":
        d = jsonio.load_design(args.path)
        check = validate_design(d)
        if not check:
            _emit({"kind": "design", "valid": False, "reason": check.reason})
            return EXIT_INVALID
        lv = leave(d)
        _emit(
            {
                "kind": "design",
                "valid": True,
                "n": d.n,
                "k": d.k,
                "blocks": len(d.blocks),
                "admissible": is_k_admissible(d.n, d.k),
                "leave_edges": lv.num_edges(),
                "leave_min_degree": lv.min_degree(),
                "leave_max_degree": lv.max_degree(),
                "leave_divisible": is_kk_divisible(lv, d.k),
            }
        )
        return EXIT_OK
    if kind == "graph":
        g = jsonio.load_graph(args.path)
        obj = {
            "kind": "graph",
            "n": g.n,
            "edges": g.num_edges(),
            "min_degree": g.min_degree(),
            "max_degree": g.max_degree(),
        }
        if args.k is not None:
            obj["k"] = args.k
            obj["kk_divisible"] = is_kk_divisible(g, args.k)
        _emit(obj)
        return EXIT_OK
    return _fail(f"{args.path}: not a design or graph file")


def cmd_complete(args) -> int:
    d = jsonio.load_design(args.path)
    check = validate_design(d)
    if not check:
        return _fail(f"invalid design: {check.reason}")
    if not is_k_admissible(d.n, d.k):
        return _fail(f"n={d.n} is not {d.k}-admissible, no completion can exist")
    budget = args.budget if args.budget is not None else _env_budget()
    result = pipeline.complete_design(d, terminal=exact_terminal(budget))
    obj: dict = {"status": result.status, "path": result.path}
    if result.detail:
        obj["detail"] = result.detail
    if result.status == pipeline.COMPLETED:
        obj["design"] = jsonio.design_to_obj(result.design)
        _emit(obj)
        return EXIT_OK
    if result.status == pipeline.UNCOMPLETABLE:
        obj["certificate"] = (
            jsonio.certificate_to_obj(result.certificate) if result.certificate else None
        )
        _emit(obj)
        return EXIT_NEGATIVE
    _emit(obj)
    return EXIT_INCONCLUSIVE


def cmd_decompose(args) -> int:
    g = jsonio.load_graph(args.path)
    k = args.k
    budget = args.budget if args.budget is not None else _env_budget()
    if not is_kk_divisible(g, k):
        _emit(
            {
                "status": pipeline.NON_DECOMPOSABLE,
                "path": "divisibility",
                "detail": f"graph is not K_{k}-divisible",
            }
        )
        return EXIT_NEGATIVE
    terminal = exact_terminal(budget)
    gamma = args.gamma if args.gamma is not None else pipeline.default_gamma(k)
    if (g.n - 1) % (k - 1) == 0:
        result = pipeline.decompose_admissible_order(g, k, terminal=terminal)
    else:
        result = pipeline.decompose_any_order(g, k, terminal=terminal, gamma=gamma)
    obj: dict = {"status": result.status, "path": result.path}
    if result.detail:
        obj["detail"] = result.detail
    if result.status == pipeline.DECOMPOSED:
        obj["decomposition"] = jsonio.decomposition_to_obj(result.decomposition)
        _emit(obj)
        return EXIT_OK
    if result.status == pipeline.NON_DECOMPOSABLE:
        obj["certificate"] = (
            jsonio.certificate_to_obj(result.certificate) if result.certificate else None
        )
        _emit(obj)
        return EXIT_NEGATIVE
    _emit(obj)
    return EXIT_INCONCLUSIVE


_FAMILY_RESIDUES = {"k3a": (0,), "k3b": (5,), "k3c": (2, 4)}


def cmd_construct(args) -> int:
    family = args.family
    if family == "evans":
        if args.n is None or args.k is None:
            return _fail("construct evans needs --n and --k")
        design, cert = constructions.construct_uncompletable_design(args.n, args.k)
        _emit({"design": jsonio.design_to_obj(design), "certificate": jsonio.certificate_to_obj(cert)})
        return EXIT_OK
    if family == "thm2":
        if args.n is None or args.k is None:
            return _fail("construct thm2 needs --n and --k")
        graph, cert = constructions.construct_thm2_tight_graph(args.n, args.k)
    elif family == "thm3":
        if args.k is None or args.s is None:
            return _fail("construct thm3 needs --k and --s")
        graph, cert = constructions.construct_thm3_tight_graph(args.k, args.s)
    else:
        if args.n is None:
            return _fail(f"construct {family} needs --n")
        if args.n % 6 not in _FAMILY_RESIDUES[family]:
            return _fail(f"family {family} needs n mod 6 in {_FAMILY_RESIDUES[family]}, got n={args.n}")
        graph, cert = constructions.construct_k3_tight_graph(args.n)
    _emit({"graph": jsonio.graph_to_obj(graph), "certificate": jsonio.certificate_to_obj(cert)})
    return EXIT_OK


def cmd_color(args) -> int:
    g = jsonio.load_graph(args.graph)
    inst = ColoringInstance(g, args.a, args.k)
    result = equitable_color(inst)
    if isinstance(result, ColoringFailure):
        _emit(
            {
                "failure": {
                    "step": result.step,
                    "full_colors": list(result.full_colors),
                    "neighbor_colors": list(result.neighbor_colors),
                    "swap_color": result.swap_color,
                    "partial_assignment": list(result.partial_assignment),
                }
            }
        )
        return EXIT_INCONCLUSIVE
    _emit({"classes": result.classes()})
    return EXIT_OK


def cmd_bounds(args) -> int:
    ns = _parse_range(args.n)
    rows = report.bounds_rows(args.k, ns)
    if args.csv:
        report.write_bounds_csv(rows, args.csv)
        print(f"wrote {args.csv}", file=sys.stderr)
    if args.plot:
        report.render_bounds_figure(rows, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    _emit({"k": args.k, "rows": [report.report_to_obj(r) for r in rows]})
    return EXIT_OK


def cmd_verify_cert(args) -> int:
    cert = jsonio.load_certificate(args.cert)
    kind = jsonio.detect_kind(args.target)
    if kind == "design":
        target = jsonio.load_design(args.target)
        k = target.k
    elif kind == "graph":
        if args.k is None:
            return _fail("verifying against a graph needs --k")
        target = jsonio.load_graph(args.target)
        k = args.k
    else:
        return _fail(f"{args.target}: not a design or graph file")
    applies = verify_certificate(target, k, cert)
    _emit({"applies": applies, "kind": cert.kind, "z": cert.z})
    return EXIT_OK


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockdesign",
        description="Partial design completion and K_k decomposition toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a design or graph file and report statistics")
    p.add_argument("path")
    p.add_argument("--k", type=int, help="block size for graph divisibility checks")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complete", help="complete a partial design or prove it uncompletable")
    p.add_argument("path")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--deterministic", action="store_true", help="canonical single-threaded order")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("decompose", help="K_k-decompose a graph or prove it impossible")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--gamma", type=_parse_gamma, help="density parameter as a rational p/q")
    p.add_argument("--deterministic", action="store_true", help="canonical single-threaded order")
    p.add_argument("--terminal", choices=["exact"], default="exact")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="generate a tightness instance with its certificate")
    p.add_argument("family", choices=["evans", "thm2", "thm3", "k3a", "k3b", "k3c"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("color", help="equitably color a graph with a classes of size k-1")
    p.add_argument("--graph", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("bounds", help="tabulate the bound formulas over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="single n or inclusive range lo..hi")
    p.add_argument("--csv", help="also write the table as CSV to this path")
    p.add_argument("--plot", help="also render the bounds figure to this path")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify-cert", help="check an obstruction certificate against a target")
    p.add_argument("target")
    p.add_argument("--cert", required=True)
    p.add_argument("--k", type=int, help="block size (required for graph targets)")
    p.set_defaults(func=cmd_verify_cert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_threads_env()
        return args.func(args)
    except (jsonio.FormatError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
