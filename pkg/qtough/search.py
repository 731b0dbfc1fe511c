"""Randomized and exhaustive counterexample searches for the two theorems."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from multiprocessing.pool import ThreadPool
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .config import COMPARE_TOL, TOUGHNESS_BUDGET
from .errors import BudgetExceeded, InvalidParameters, QToughError
from .extremal import extremal_graph, extremal_parts, n_min
from .graph_core import Graph, canonical_form, from_networkx, is_connected, make_complete, to_networkx
from .graph_io import format_graph6
from .logging_utils import get_logger, log
from .spectral import q_index
from .toughness import l_toughness
from .verify import EXEMPT, FAIL, NOT_MET, PASS, TIE, TheoremContext, VerificationReport, verify_theorem_on_graph

logger = get_logger("search")

EXHAUSTIVE_LIMIT = 9
# all 2^C(n,2) labeled graphs; above this order an edge budget is required
FULL_ENUMERATION_LIMIT = 7
REJECTED = "rejected"

NEAR_COMPLETE = "near-complete"
EXTREMAL_PLUS = "extremal-plus"
GNP = "gnp"
MODELS = (NEAR_COMPLETE, EXTREMAL_PLUS, GNP)


@dataclass(frozen=True)
class SampleModel:
    """How a Monte Carlo sample is drawn.

    near-complete:M   K_n minus up to M uniformly chosen edges
    extremal-plus:M   the extremal graph plus up to M of its non-edges
    gnp:P             G(n, P)
    """

    kind: str
    m: Optional[int] = None
    p: Optional[float] = None

    @classmethod
    def parse(cls, text: str) -> "SampleModel":
        kind, _, arg = text.partition(":")
        if kind not in MODELS:
            raise InvalidParameters(f"unknown sample model {kind!r}, expected one of {', '.join(MODELS)}")
        try:
            if kind == GNP:
                model = cls(kind, p=float(arg) if arg else 0.5)
            else:
                model = cls(kind, m=int(arg) if arg else None)
        except ValueError as e:
            raise InvalidParameters(f"bad sample model argument in {text!r}") from e
        model.validate()
        return model

    def validate(self) -> None:
        if self.kind == GNP and not (self.p is not None and 0.0 <= self.p <= 1.0):
            raise InvalidParameters(f"gnp probability must lie in [0, 1], got {self.p}")
        if self.kind != GNP and self.m is not None and self.m < 0:
            raise InvalidParameters(f"edge budget must be >= 0, got {self.m}")

    def resolved(self, l: int) -> "SampleModel":
        if self.kind != GNP and self.m is None:
            return SampleModel(self.kind, m=2 * l + 2)
        return self

    def __str__(self) -> str:
        return f"{self.kind}:{self.p}" if self.kind == GNP else f"{self.kind}:{self.m}"

    def draw(self, rng: np.random.Generator, n: int, extremal: Graph) -> Graph:
        if self.kind == GNP:
            return from_networkx(nx.gnp_random_graph(n, self.p, seed=int(rng.integers(2**31))))
        if self.kind == NEAR_COMPLETE:
            base, pool = make_complete(n), make_complete(n).edges()
        else:
            base, pool = extremal, extremal.non_edges()
        count = int(rng.integers(0, min(self.m or 0, len(pool)) + 1))
        chosen = rng.choice(len(pool), size=count, replace=False) if count else []
        g = base
        for i in sorted(int(i) for i in chosen):
            u, v = pool[i]
            g = g.without_edge(u, v) if self.kind == NEAR_COMPLETE else g.with_edge(u, v)
        return g


def random_connected_graph(rng: np.random.Generator, n: int, p: Optional[float] = None) -> Graph:
    """G(n, p) with components chained together by one edge each."""
    p = float(rng.uniform(0.2, 0.9)) if p is None else p
    h = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
    parts = [min(c) for c in nx.connected_components(h)]
    for a, b in zip(parts, parts[1:]):
        h.add_edge(a, b)
    return from_networkx(h)


def _sample(args: Tuple[int, int, SampleModel, int, Graph]) -> Tuple[int, Graph]:
    seed, index, model, n, extremal = args
    rng = np.random.default_rng([seed, index])
    return index, model.draw(rng, n, extremal)


def monte_carlo_search(
    theorem: str,
    b: int,
    l: int,
    n: int,
    model: SampleModel,
    samples: int,
    seed: int,
    tol: float = COMPARE_TOL,
    threads: int = 1,
    budget: int = TOUGHNESS_BUDGET,
) -> VerificationReport:
    """Sample graphs, keep those meeting the q-index hypothesis and check their l-toughness.

    Sample i uses the stream default_rng([seed, i]), so results do not depend on
    the thread count.
    """
    if samples < 0:
        raise InvalidParameters(f"samples must be >= 0, got {samples}")
    ctx = TheoremContext.build(theorem, b, l, n, budget)
    model = model.resolved(l)
    extremal = extremal_graph(theorem, b, l, n)

    statuses: Counter[str] = Counter()
    min_margin: Optional[float] = None
    failure: Optional[VerificationReport] = None
    failure_index: Optional[int] = None
    jobs = ((seed, i, model, n, extremal) for i in range(samples))

    with ThreadPool(max(1, threads)) as pool:
        for index, g in pool.imap(_sample, jobs, chunksize=16):
            if not is_connected(g):
                statuses[REJECTED] += 1
                continue
            report = verify_theorem_on_graph(theorem, g, b, l, tol, ctx)
            statuses[report.status] += 1
            if report.status in (PASS, FAIL):
                min_margin = report.margin if min_margin is None else min(min_margin, report.margin)
            if report.status == FAIL and failure is None:
                failure, failure_index = report, index
                log(logger, logging.ERROR, "search.counterexample", theorem=theorem, b=b, l=l, n=n, seed=seed,
                    count=index, err=report.witness)

    met = statuses[PASS] + statuses[FAIL] + statuses[EXEMPT] + statuses[TIE]
    passed = statuses[FAIL] == 0
    computed: Dict[str, Any] = {
        "sampled": samples,
        "rejected_disconnected": statuses[REJECTED],
        "hypothesis_not_met": statuses[NOT_MET],
        "hypothesis_met": met,
        "passed": statuses[PASS],
        "failed": statuses[FAIL],
        "exempt": statuses[EXEMPT],
        "threshold_ties": statuses[TIE],
        "threshold": ctx.threshold,
        "min_margin": min_margin,
    }
    if failure is not None:
        computed["first_failure_index"] = failure_index
        computed["first_failure"] = failure.to_json()["computed"]
    log(logger, logging.INFO, "search.done", theorem=theorem, b=b, l=l, n=n, seed=seed, count=met,
        status=PASS if passed else FAIL)
    return VerificationReport(
        check_id=f"monte_carlo_{theorem}",
        params={"theorem": theorem, "b": b, "l": l, "n": n, "model": str(model), "samples": samples, "tol": tol},
        computed=computed,
        margin=min_margin if min_margin is not None else 0.0,
        passed=passed,
        witness=failure.witness if failure is not None else None,
        seed=seed,
        status=PASS if passed else FAIL,
        exploratory=ctx.below_n_min,
    )


def graphs_near_complete(n: int, edge_budget: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled graph on n vertices missing at most edge_budget edges of K_n."""
    full = make_complete(n)
    pairs = full.edges()
    top = len(pairs) if edge_budget is None else min(edge_budget, len(pairs))
    for r in range(top + 1):
        for missing in combinations(pairs, r):
            g = full
            for u, v in missing:
                g = g.without_edge(u, v)
            yield g


def _unique(graphs: Iterable[Graph]) -> Iterator[Graph]:
    # WL hashes only merge graphs that might be isomorphic; survivors are exact-deduplicated
    seen: Dict[str, List[Graph]] = {}
    for g in graphs:
        key = nx.weisfeiler_lehman_graph_hash(to_networkx(g), iterations=3)
        canon = canonical_form(g)
        bucket = seen.setdefault(key, [])
        if canon in bucket:
            continue
        bucket.append(canon)
        yield g


def exhaustive_search(
    theorem: str,
    b: int,
    l: int,
    n_range: Sequence[int],
    edge_budget: Optional[int] = None,
    tol: float = COMPARE_TOL,
    dedup: bool = True,
) -> VerificationReport:
    """Check every graph on each n in n_range (up to edge_budget missing edges of K_n).

    With dedup, isomorphic copies are dropped (WL hash, then canonical form)
    before any invariant is computed.

    Orders below the theorem's n_min are explored too; violations there are
    recorded as exploratory and never fail the run.
    """
    if edge_budget is not None and edge_budget < 0:
        raise InvalidParameters(f"edge budget must be >= 0, got {edge_budget}")
    for n in n_range:
        if n > EXHAUSTIVE_LIMIT:
            raise BudgetExceeded("n", n, EXHAUSTIVE_LIMIT)
        if n > FULL_ENUMERATION_LIMIT and edge_budget is None:
            raise BudgetExceeded("n (no edge budget)", n, FULL_ENUMERATION_LIMIT)
    floor = n_min(theorem, b, l)

    by_n: Dict[str, Dict[str, Any]] = {}
    failure: Optional[Tuple[int, Graph]] = None
    for n in n_range:
        try:
            extremal_parts(theorem, b, l, n)
        except QToughError:
            by_n[str(n)] = {"skipped": "no extremal graph at this order"}
            continue
        ctx = TheoremContext.build(theorem, b, l, n, allow_below=True)
        counts: Counter[str] = Counter()
        violations: List[str] = []
        candidates = graphs_near_complete(n, edge_budget)
        for g in _unique(candidates) if dedup else candidates:
            counts["graphs"] += 1
            if not is_connected(g):
                counts["disconnected"] += 1
                continue
            if q_index(g) < ctx.threshold - tol:
                counts["hypothesis_not_met"] += 1
                continue
            if canonical_form(g) == ctx.extremal_canonical:
                counts["exempt"] += 1
                continue
            counts["hypothesis_met"] += 1
            if l_toughness(g, l).value >= ctx.target:
                continue
            violations.append(format_graph6(g))
            if n >= floor and failure is None:
                failure = (n, g)
        by_n[str(n)] = {**counts, "below_n_min": n < floor, "violations": violations}
        log(logger, logging.INFO, "search.exhaustive", theorem=theorem, b=b, l=l, n=n, count=counts["graphs"],
            status=f"{len(violations)} violations")

    checked = [k for k, v in by_n.items() if "skipped" not in v]
    exploratory = bool(checked) and all(by_n[k]["below_n_min"] for k in checked)
    passed = failure is None
    return VerificationReport(
        check_id=f"exhaustive_{theorem}",
        params={"theorem": theorem, "b": b, "l": l, "n_range": list(n_range), "edge_budget": edge_budget, "tol": tol,
                "dedup": dedup},
        computed={"n_min": floor, "by_n": by_n},
        margin=0.0,
        passed=passed,
        witness=format_graph6(failure[1]) if failure else None,
        status=PASS if passed else FAIL,
        exploratory=exploratory,
    )
