from __future__ import annotations

import numpy as np
import pytest

from qtough.errors import InvalidParameters
from qtough.extremal import n_min_thm11
from qtough.suites import (
    GRAPH_ORDER_LIMIT,
    GRID_B,
    SUITE_NAMES,
    SuiteOptions,
    grid_points,
    lemma21_instances,
    random_lemma23_tuple,
    run_suite,
)
from qtough.verify import SKIPPED, check_lemma23


def test_suite_names() -> None:
    assert SUITE_NAMES[-1] == "all"
    assert {"lemma21", "lemma22", "lemma23", "lemma24", "identities", "chains", "sharpness", "thm11", "thm12",
            "exhaustive"} <= set(SUITE_NAMES)


def test_lemma21_corpus_has_a_hundred_instances() -> None:
    assert len(list(lemma21_instances())) >= 100


def test_lemma23_tuples_are_valid() -> None:
    for i in range(50):
        s, p, parts = random_lemma23_tuple(np.random.default_rng([0, i]))
        assert check_lemma23(s, p, parts).passed


@pytest.mark.parametrize("suite", ["lemma21", "lemma22", "lemma23", "lemma24"])
def test_lemma_suites_pass(suite: str) -> None:
    reports = run_suite(suite, SuiteOptions(trials=25, seed=42))
    assert len(reports) == 25
    assert all(r.passed for r in reports)


def test_identities_for_one_tuple() -> None:
    reports = run_suite("identities", SuiteOptions(b=2, l=2, n=12))
    assert reports
    assert not [r for r in reports if r.failed]
    assert {r.check_id for r in reports} >= {"identity_4_2", "charpoly", "phi_sec4", "inequality_4_5"}


def test_chains_for_one_tuple() -> None:
    reports = run_suite("chains", SuiteOptions(b=1, l=2, n=11))
    assert {r.computed["case"] for r in reports if r.check_id == "sec3_chain"} == {"boundary", 1, 2}
    assert all(r.passed for r in reports)


def test_sharpness_defaults() -> None:
    reports = run_suite("sharpness", SuiteOptions())
    assert len(reports) == 6
    assert all(r.passed for r in reports)
    assert [r.exploratory for r in reports].count(True) == 1


def test_sharpness_needs_complete_parameters() -> None:
    with pytest.raises(InvalidParameters):
        run_suite("sharpness", SuiteOptions(b=1))


def test_theorem_suite_uses_seed() -> None:
    reports = run_suite("thm11", SuiteOptions(samples=10, seed=5, model="near-complete:3"))
    assert len(reports) == 1
    assert reports[0].seed == 5
    assert reports[0].passed


def test_exhaustive_suite_single_order() -> None:
    reports = run_suite("exhaustive", SuiteOptions(n=5))
    assert len(reports) == 1
    assert reports[0].exploratory


def test_unknown_suite() -> None:
    with pytest.raises(InvalidParameters):
        run_suite("lemma99", SuiteOptions())


@pytest.mark.parametrize("suite", ["lemma22", "lemma23", "lemma24"])
def test_randomized_lemma_reports_carry_seed_and_trial(suite: str) -> None:
    reports = run_suite(suite, SuiteOptions(trials=3, seed=42))
    assert [r.seed for r in reports] == [42, 42, 42]
    assert sorted(r.params["trial"] for r in reports) == [0, 1, 2]


def test_grid_keeps_orders_above_the_graph_limit() -> None:
    points = {(b, l): n for b, l, n in grid_points(SuiteOptions(), GRID_B, n_min_thm11)}
    assert {(3, 4), (3, 5)} <= set(points)
    assert n_min_thm11(3, 4) == 130


def test_exact_identity_runs_beyond_the_graph_limit() -> None:
    reports = run_suite("identities", SuiteOptions(b=3, l=4, n=130))
    phi = [r for r in reports if r.check_id == "phi_sec3"]
    assert len(phi) == 1
    assert phi[0].passed and not phi[0].exploratory
    assert not [r for r in reports if r.failed]


def test_chains_above_the_graph_limit_are_recorded_as_skipped() -> None:
    reports = run_suite("chains", SuiteOptions(b=3, l=4, n=130))
    assert sorted(r.check_id for r in reports) == ["sec3_chain", "sec4_chain"]
    for r in reports:
        assert r.status == SKIPPED
        assert r.exploratory and not r.failed
        assert r.computed["skipped"] == f"order 130 > {GRAPH_ORDER_LIMIT}"
