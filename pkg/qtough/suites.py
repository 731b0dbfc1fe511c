"""Named verification suites run by `verify SUITE`."""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .config import COMPARE_TOL, ENUMERATION_LIMIT, TOUGHNESS_BUDGET
from .errors import InvalidParameters, QToughError
from .extremal import (
    THM11,
    THM12,
    THEOREMS,
    TheoremParams,
    case2_split,
    ceil_div,
    extremal_parts,
    n_min_thm11,
    n_min_thm12,
    split_join_graph,
)
from .graph_core import Graph, VertexSet, join, make_complete, make_cycle, make_empty, remove_vertices
from .logging_utils import get_logger, log
from .search import SampleModel, exhaustive_search, monte_carlo_search, random_connected_graph
from .spectral import MAX_DENSE_ORDER, Partition
from .verify import (
    VerificationReport,
    check_identity_4_2,
    check_inequality_4_5,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_lemma24,
    check_phi_sec3_identity,
    check_phi_sec4_positivity,
    check_polynomials,
    check_sec3_case2_edges,
    check_sec3_chain,
    check_sec4_chain,
    check_spanning_g3prime,
    sharpness_report,
    skipped_report,
)

logger = get_logger("suites")

GRID_B = (1, 2, 3)
GRID_L = (2, 3, 4, 5)
GRID_SPAN = 20

SHARPNESS_DEFAULTS: Tuple[Tuple[str, int, int, int], ...] = (
    (THM11, 1, 2, 11),
    (THM11, 1, 3, 21),
    (THM11, 2, 2, 26),
    (THM12, 2, 3, 12),
    (THM12, 3, 4, 18),
    (THM12, 2, 5, 24),
)
THEOREM_DEFAULTS = {THM11: (1, 2, 11), THM12: (2, 3, 12)}
EXHAUSTIVE_DEFAULT_RANGE = (4, 5, 6)


@dataclass(frozen=True)
class SuiteOptions:
    """Flags shared by all suites; None means the suite's default grid."""

    b: Optional[int] = None
    l: Optional[int] = None
    n: Optional[int] = None
    s: Optional[int] = None
    omega: Optional[int] = None
    theorem: Optional[str] = None
    tol: float = COMPARE_TOL
    samples: int = 1000
    seed: int = 0
    trials: Optional[int] = None
    model: Optional[str] = None
    edge_budget: Optional[int] = None
    threads: int = 1
    budget: int = TOUGHNESS_BUDGET
    dedup: bool = True

    def rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, index])

    def seeded(self, report: VerificationReport, index: int) -> VerificationReport:
        """Stamp a report drawn from rng(index) with the seed and trial that reproduce it."""
        return replace(report, seed=self.seed, params={**report.params, "trial": index})


# ---------------------------------------------------------------- lemma corpora


def lemma21_instances() -> Iterator[Tuple[Graph, Partition]]:
    """Graphs paired with partitions that are equitable by construction."""
    for n in range(2, 13):
        yield make_complete(n), Partition.blocks([n])
    for n in range(3, 12):
        yield make_cycle(n), Partition.blocks([n])
    for a in range(1, 6):
        for c in range(a, 7):
            yield join(make_empty(a), make_empty(c)), Partition.blocks([a, c])
    for s in range(1, 4):
        for m in range(1, 6):
            for k in range(1, 5):
                yield split_join_graph(s, m, k), Partition.blocks([s, m, k])


def _lemma21(opts: SuiteOptions) -> List[VerificationReport]:
    trials = opts.trials if opts.trials is not None else 100
    instances = list(lemma21_instances())
    return [check_lemma21(g, p) for g, p in instances[:trials]]


def _random_subgraph(rng: np.random.Generator, g: Graph) -> Graph:
    op = int(rng.integers(0, 3))
    if op == 0 or g.edge_count == 0:
        return g
    if op == 1:
        h = g
        edges = g.edges()
        count = int(rng.integers(1, min(3, len(edges)) + 1))
        for i in rng.choice(len(edges), size=count, replace=False):
            h = h.without_edge(*edges[int(i)])
        return h
    count = int(rng.integers(1, min(2, g.n - 1) + 1))
    drop = VertexSet.of(int(v) for v in rng.choice(g.n, size=count, replace=False))
    return remove_vertices(g, drop)


def _lemma22(opts: SuiteOptions) -> List[VerificationReport]:
    trials = opts.trials if opts.trials is not None else 1000
    out = []
    for i in range(trials):
        rng = opts.rng(i)
        g = random_connected_graph(rng, int(rng.integers(3, 13)))
        out.append(opts.seeded(check_lemma22(g, _random_subgraph(rng, g), opts.tol), i))
    return out


def random_lemma23_tuple(rng: np.random.Generator) -> Tuple[int, int, List[int]]:
    s = int(rng.integers(1, 5))
    p = int(rng.integers(1, 4))
    t = int(rng.integers(2, 5))
    rest = sorted((int(x) for x in rng.integers(p, p + 4, size=t - 1)), reverse=True)
    if rest[0] == p:
        rest[0] = p + 1
    head = rest[0] + int(rng.integers(0, 5))
    return s, p, [head] + rest


def _lemma23(opts: SuiteOptions) -> List[VerificationReport]:
    trials = opts.trials if opts.trials is not None else 100
    out = []
    for i in range(trials):
        s, p, parts = random_lemma23_tuple(opts.rng(i))
        out.append(opts.seeded(check_lemma23(s, p, parts), i))
    return out


def _lemma24(opts: SuiteOptions) -> List[VerificationReport]:
    trials = opts.trials if opts.trials is not None else 1000
    out = []
    for i in range(trials):
        rng = opts.rng(i)
        n = int(rng.integers(2, 15))
        g = random_connected_graph(rng, n) if rng.random() < 0.5 else _gnp(rng, n)
        out.append(opts.seeded(check_lemma24(g, opts.tol), i))
    return out


def _gnp(rng: np.random.Generator, n: int) -> Graph:
    return SampleModel("gnp", p=float(rng.uniform(0.0, 1.0))).draw(rng, n, make_empty(n))


# ---------------------------------------------------------------- grids

# checks that build graphs or call the dense solver stop here
GRAPH_ORDER_LIMIT = min(ENUMERATION_LIMIT, MAX_DENSE_ORDER)


def grid_points(
    opts: SuiteOptions, bs: Tuple[int, ...], floor: Callable[[int, int], int]
) -> Iterator[Tuple[int, int, int]]:
    """(b, l, n) over the grid, or the pinned coordinates; n runs from floor(b, l) for GRID_SPAN steps."""
    for b in (opts.b,) if opts.b is not None else bs:
        for l in (opts.l,) if opts.l is not None else GRID_L:
            try:
                start = floor(b, l)
            except QToughError:
                continue
            ns = (opts.n,) if opts.n is not None else range(start, start + GRID_SPAN + 1)
            for n in ns:
                yield b, l, n


def _too_large(check_id: str, params: Dict[str, Any]) -> VerificationReport:
    return skipped_report(check_id, params, f"order {params['n']} > {GRAPH_ORDER_LIMIT}")


def _identity_floor(b: int, l: int) -> int:
    return 6 * b * ceil_div(l - 1, b)


def _s_range(opts: SuiteOptions, lo: int, n: int, b: int) -> range:
    if opts.s is not None:
        return range(opts.s, opts.s + 1)
    return range(lo, (n - 1) // (b + 1) + 1)


def _identities(opts: SuiteOptions) -> List[VerificationReport]:
    out: List[VerificationReport] = []
    for b, l, n in grid_points(opts, GRID_B, _identity_floor):
        h = ceil_div(l - 1, b)
        for s in _s_range(opts, h, n, b):
            out.append(check_identity_4_2(b, l, n, s))
            out.append(check_polynomials(b, l, n, s))
            if b >= 2 and s >= h + 1 and n >= n_min_thm12(b, l):
                out.append(check_phi_sec4_positivity(b, l, n, s))
        if b >= 2 and (l - 1) % b and n >= n_min_thm12(b, l):
            if n > GRAPH_ORDER_LIMIT:
                out.append(_too_large("inequality_4_5", {"b": b, "l": l, "n": n}))
                out.append(_too_large("spanning_g3prime", {"b": b, "l": l, "n": n}))
                continue
            out.append(check_inequality_4_5(b, l, n))
            out.append(check_spanning_g3prime(b, l, n))
    # exact arithmetic only, so no order cap
    for b, l, n in grid_points(opts, GRID_B, n_min_thm11):
        out.append(check_phi_sec3_identity(b, l, n))
    return out


def _case2_omegas(b: int, n: int) -> List[int]:
    k = case2_split(b, n)
    return sorted({k, (k + n - 1) // 2, n - 1})


def _chains(opts: SuiteOptions) -> List[VerificationReport]:
    out: List[VerificationReport] = []
    seen_edges = set()
    for b, l, n in grid_points(opts, GRID_B, n_min_thm11):
        if n > GRAPH_ORDER_LIMIT:
            out.append(_too_large("sec3_chain", {"b": b, "l": l, "n": n}))
            continue
        if (b, n) not in seen_edges:
            seen_edges.add((b, n))
            out.append(check_sec3_case2_edges(b, n))
        if opts.omega is not None:
            omegas = [opts.omega]
        else:
            omegas = list(range(l, (n + 1) // (b + 1) + 1)) + _case2_omegas(b, n)
        for omega in sorted(set(omegas)):
            out.append(check_sec3_chain(b, l, n, omega, opts.tol))
    for b, l, n in grid_points(opts, (2, 3), n_min_thm12):
        if n > GRAPH_ORDER_LIMIT:
            out.append(_too_large("sec4_chain", {"b": b, "l": l, "n": n}))
            continue
        for s in _s_range(opts, 1, n, b):
            out.append(check_sec4_chain(b, l, n, s, opts.tol))
    return out


def _sharpness(opts: SuiteOptions) -> List[VerificationReport]:
    if opts.b is None and opts.l is None and opts.n is None:
        cases = [c for c in SHARPNESS_DEFAULTS if opts.theorem in (None, c[0])]
    else:
        if None in (opts.b, opts.l, opts.n):
            raise InvalidParameters("sharpness needs all of --b, --l and --n, or none")
        theorems = (opts.theorem,) if opts.theorem else THEOREMS
        cases = [(t, opts.b, opts.l, opts.n) for t in theorems]
    out = []
    for theorem, b, l, n in cases:
        try:
            extremal_parts(theorem, b, l, n)
        except InvalidParameters:
            if opts.theorem:
                raise
            continue
        out.append(sharpness_report(theorem, b, l, n, allow_below=True, budget=opts.budget))
    return out


def _theorem_suite(theorem: str) -> Callable[[SuiteOptions], List[VerificationReport]]:
    def run(opts: SuiteOptions) -> List[VerificationReport]:
        db, dl, dn = THEOREM_DEFAULTS[theorem]
        b, l = opts.b if opts.b is not None else db, opts.l if opts.l is not None else dl
        n = opts.n if opts.n is not None else (dn if (b, l) == (db, dl) else _theorem_floor(theorem, b, l))
        model = SampleModel.parse(opts.model) if opts.model else SampleModel("near-complete")
        return [
            monte_carlo_search(theorem, b, l, n, model, opts.samples, opts.seed, opts.tol, opts.threads, opts.budget)
        ]

    return run


def _theorem_floor(theorem: str, b: int, l: int) -> int:
    return n_min_thm11(b, l) if theorem == THM11 else n_min_thm12(b, l)


def _exhaustive(opts: SuiteOptions) -> List[VerificationReport]:
    theorem = opts.theorem or THM11
    b = opts.b if opts.b is not None else THEOREM_DEFAULTS[theorem][0]
    l = opts.l if opts.l is not None else THEOREM_DEFAULTS[theorem][1]
    TheoremParams(b, l, 0).validate(theorem)
    n_range = (opts.n,) if opts.n is not None else EXHAUSTIVE_DEFAULT_RANGE
    return [exhaustive_search(theorem, b, l, n_range, opts.edge_budget, opts.tol, opts.dedup)]


SUITES: Dict[str, Callable[[SuiteOptions], List[VerificationReport]]] = {
    "lemma21": _lemma21,
    "lemma22": _lemma22,
    "lemma23": _lemma23,
    "lemma24": _lemma24,
    "identities": _identities,
    "chains": _chains,
    "sharpness": _sharpness,
    "thm11": _theorem_suite(THM11),
    "thm12": _theorem_suite(THM12),
    "exhaustive": _exhaustive,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, opts: SuiteOptions) -> List[VerificationReport]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise InvalidParameters(f"unknown suite {name!r}, expected one of {', '.join(SUITE_NAMES)}")
    reports: List[VerificationReport] = []
    for suite in names:
        batch = SUITES[suite](opts)
        failed = sum(1 for r in batch if r.failed)
        log(logger, logging.INFO, "suite.done", suite=suite, seed=opts.seed, count=len(batch),
            status="pass" if not failed else f"{failed} failed")
        reports.extend(batch)
    return reports
