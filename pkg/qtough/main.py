from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

try:
    from dotenv import load_dotenv
except Exception:  # optional
    load_dotenv = None

from .config import HarnessConfig, load_config
from .errors import EigenSolverError, QToughError, ReducibleMatrixError
from .extremal import (
    THM11,
    THM12,
    THEOREMS,
    describe,
    extremal_graph,
    n_min,
    proof_g2_case1,
    proof_g3_case2,
    proof_thm12_g2,
    proof_thm12_g3,
    proof_thm12_g3prime,
)
from .graph_core import Graph, components_count, independence_number, is_connected
from .graph_io import format_graph, read_graph
from .logging_utils import log, setup_logger
from .spectral import adjacency_spectral_radius, das_feng_yu_bound, q_index
from .storage import save_reports, write_csv, write_jsonl
from .suites import SUITE_NAMES, SuiteOptions, run_suite
from .toughness import l_toughness, toughness

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

GRAPH_FORMATS = ("g6", "edges")


def repo_root_from_here() -> Path:
    # qtough/main.py -> qtough -> repo root
    return Path(__file__).resolve().parents[1]


def _need(args: argparse.Namespace, *names: str) -> List[int]:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError(f"{args.family} needs {', '.join(missing)}")
    return [getattr(args, n) for n in names]


FAMILIES: Dict[str, Callable[[argparse.Namespace], Graph]] = {
    THM11: lambda a: extremal_graph(THM11, *_need(a, "b", "l", "n")),
    THM12: lambda a: extremal_graph(THM12, *_need(a, "b", "l", "n")),
    "g2-case1": lambda a: proof_g2_case1(*_need(a, "b", "omega", "n")),
    "g3-case2": lambda a: proof_g3_case2(*_need(a, "b", "n")),
    "thm12-g2": lambda a: proof_thm12_g2(*_need(a, "s", "omega", "n")),
    "thm12-g3": lambda a: proof_thm12_g3(*_need(a, "b", "l", "n")),
    "thm12-g3prime": lambda a: proof_thm12_g3prime(*_need(a, "b", "l", "n")),
}


def _add_params(p: argparse.ArgumentParser) -> None:
    for name in ("b", "l", "n", "s", "omega"):
        p.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtough", description="Q-index sufficient conditions for l-toughness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="n, e, alpha, q, rho, edge bound and toughness of a graph file")
    p.add_argument("path", type=Path)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--input-format", choices=GRAPH_FORMATS, default=None)

    p = sub.add_parser("extremal", help="emit an extremal or proof graph")
    p.add_argument("family", choices=tuple(FAMILIES))
    _add_params(p)
    p.add_argument("--format", choices=GRAPH_FORMATS, default="g6")
    p.add_argument("--describe", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    _add_params(p)
    p.add_argument("--theorem", choices=THEOREMS, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--model", default=None, help="near-complete:M | extremal-plus:M | gnp:P")
    p.add_argument("--edge-budget", type=int, default=None)
    p.add_argument("--no-dedup", action="store_true", help="exhaustive: keep isomorphic copies")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("convert", help="graph6 <-> edge list")
    p.add_argument("path", type=Path)
    p.add_argument("--format", choices=GRAPH_FORMATS, required=True)
    p.add_argument("--input-format", choices=GRAPH_FORMATS, default=None)
    return parser


def cmd_invariants(args: argparse.Namespace, cfg: HarnessConfig, out) -> int:
    g = read_graph(args.path, args.input_format)
    report: Dict[str, object] = {
        "n": g.n,
        "e": g.edge_count,
        "connected": is_connected(g),
        "components": components_count(g),
        "alpha": independence_number(g, cfg.enumeration_limit),
        "q_index": q_index(g) if g.n else None,
        "rho": adjacency_spectral_radius(g) if g.n else None,
        "edge_bound": das_feng_yu_bound(g) if g.n >= 2 else None,
    }
    if g.n <= cfg.toughness_budget:
        t = toughness(g, cfg.toughness_budget)
        report["t"] = str(t.value)
        report["t_witness"] = list(t.witness) if t.witness is not None else []
        if args.l is not None:
            tl = l_toughness(g, args.l, cfg.toughness_budget)
            report["l"] = args.l
            report["t_l"] = str(tl.value)
            report["t_l_witness"] = list(tl.witness) if tl.witness is not None else []
    else:
        report["t"] = "skipped"
    out.write(json.dumps(report, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace, cfg: HarnessConfig, out, logger: logging.Logger) -> int:
    g = FAMILIES[args.family](args)
    if args.family in THEOREMS and args.n < n_min(args.family, args.b, args.l):
        log(logger, logging.WARNING, "extremal.below_n_min", theorem=args.family, b=args.b, l=args.l, n=args.n,
            status=f"n_min={n_min(args.family, args.b, args.l)}")
    if args.describe:
        if args.family not in THEOREMS:
            raise argparse.ArgumentTypeError("--describe is only available for thm11 and thm12")
        out.write(json.dumps(describe(args.family, args.b, args.l, args.n), sort_keys=True) + "\n")
        return EXIT_OK
    out.write(format_graph(g, args.format) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: HarnessConfig, out, logger: logging.Logger) -> int:
    cfg = cfg.with_overrides(
        tol=args.tol, samples=args.samples, seed=args.seed, dedup=False if args.no_dedup else None
    )
    opts = SuiteOptions(
        b=args.b,
        l=args.l,
        n=args.n,
        s=args.s,
        omega=args.omega,
        theorem=args.theorem,
        tol=cfg.tol,
        samples=cfg.samples,
        seed=cfg.seed,
        trials=args.trials,
        model=args.model,
        edge_budget=args.edge_budget,
        threads=cfg.threads,
        budget=cfg.toughness_budget,
        dedup=cfg.dedup,
    )
    log(logger, logging.INFO, "verify.start", suite=args.suite, seed=cfg.seed, status=f"tol={cfg.tol}")
    reports = run_suite(args.suite, opts)
    if args.output is not None:
        save_reports(args.output, reports, args.format)
    elif args.format == "csv":
        write_csv(reports, out)
    else:
        write_jsonl(reports, out)

    failed = [r for r in reports if r.failed]
    log(logger, logging.INFO, "verify.done", suite=args.suite, seed=cfg.seed, count=len(reports),
        status="pass" if not failed else f"{len(failed)} failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_convert(args: argparse.Namespace, out) -> int:
    g = read_graph(args.path, args.input_format)
    out.write(format_graph(g, args.format) + "\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    repo_root = repo_root_from_here()

    # Load .env from repo root
    if load_dotenv is not None:
        env_path = repo_root / ".env"
        if env_path.exists():
            load_dotenv(env_path)

    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    try:
        cfg = load_config()
        logger = setup_logger(name="qtough", level=cfg.log_level, log_file=cfg.log_file)
        log(logger, logging.DEBUG, "start", op=args.command)
        if args.command == "invariants":
            return cmd_invariants(args, cfg, out)
        if args.command == "extremal":
            return cmd_extremal(args, cfg, out, logger)
        if args.command == "verify":
            return cmd_verify(args, cfg, out, logger)
        return cmd_convert(args, out)
    except (EigenSolverError, ReducibleMatrixError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (QToughError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
