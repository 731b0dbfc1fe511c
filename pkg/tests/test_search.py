from __future__ import annotations

import numpy as np
import pytest

from qtough.errors import BudgetExceeded, InvalidParameters
from qtough.extremal import THM11, THM12, thm11_extremal
from qtough.graph_core import is_connected, make_complete
from qtough.search import (
    SampleModel,
    exhaustive_search,
    graphs_near_complete,
    monte_carlo_search,
    random_connected_graph,
)


def test_sample_model_parse() -> None:
    assert SampleModel.parse("near-complete:8") == SampleModel("near-complete", m=8)
    assert SampleModel.parse("extremal-plus:5") == SampleModel("extremal-plus", m=5)
    assert SampleModel.parse("gnp:0.25") == SampleModel("gnp", p=0.25)
    assert SampleModel.parse("near-complete").resolved(3).m == 8
    assert str(SampleModel.parse("gnp:0.5")) == "gnp:0.5"


@pytest.mark.parametrize("text", ["star:3", "gnp:1.5", "near-complete:x", "extremal-plus:-1"])
def test_sample_model_rejects(text: str) -> None:
    with pytest.raises(InvalidParameters):
        SampleModel.parse(text)


def test_near_complete_draws_remove_at_most_m_edges() -> None:
    model = SampleModel("near-complete", m=4)
    for i in range(20):
        g = model.draw(np.random.default_rng([3, i]), 9, make_complete(9))
        assert 36 - 4 <= g.edge_count <= 36


def test_extremal_plus_draws_contain_extremal() -> None:
    ext = thm11_extremal(1, 2, 11)
    model = SampleModel("extremal-plus", m=3)
    for i in range(20):
        g = model.draw(np.random.default_rng([5, i]), 11, ext)
        assert ext.is_spanning_subgraph_of(g)
        assert g.edge_count - ext.edge_count <= 3


def test_draws_are_reproducible() -> None:
    model = SampleModel("gnp", p=0.4)
    a = model.draw(np.random.default_rng([9, 1]), 10, make_complete(10))
    b = model.draw(np.random.default_rng([9, 1]), 10, make_complete(10))
    assert a == b


def test_random_connected_graph() -> None:
    for i in range(20):
        assert is_connected(random_connected_graph(np.random.default_rng([1, i]), 8, p=0.1))


def test_graphs_near_complete_counts() -> None:
    assert sum(1 for _ in graphs_near_complete(4, 1)) == 1 + 6
    assert sum(1 for _ in graphs_near_complete(4)) == 2**6


def test_monte_carlo_thm11() -> None:
    r = monte_carlo_search(THM11, 1, 2, 11, SampleModel.parse("near-complete:4"), samples=30, seed=7)
    assert r.passed
    assert r.computed["failed"] == 0
    assert r.computed["sampled"] == 30
    assert r.seed == 7


def test_monte_carlo_is_independent_of_thread_count() -> None:
    model = SampleModel.parse("near-complete:6")
    one = monte_carlo_search(THM12, 2, 3, 12, model, samples=24, seed=3, threads=1)
    many = monte_carlo_search(THM12, 2, 3, 12, model, samples=24, seed=3, threads=4)
    assert one.to_json() == many.to_json()


def test_monte_carlo_extremal_itself_is_exempt() -> None:
    r = monte_carlo_search(THM11, 1, 2, 11, SampleModel("extremal-plus", m=0), samples=5, seed=0)
    assert r.computed["exempt"] == 5
    assert r.passed


def test_monte_carlo_preconditions() -> None:
    with pytest.raises(InvalidParameters):
        monte_carlo_search(THM11, 1, 2, 10, SampleModel.parse("gnp:0.5"), samples=1, seed=0)
    with pytest.raises(BudgetExceeded):
        monte_carlo_search(THM11, 1, 3, 30, SampleModel.parse("gnp:0.5"), samples=1, seed=0)


def test_exhaustive_below_threshold_is_exploratory() -> None:
    r = exhaustive_search(THM11, 1, 2, [5])
    assert r.passed
    assert r.exploratory
    by_n = r.computed["by_n"]["5"]
    assert by_n["below_n_min"] is True
    assert by_n["graphs"] <= 2**10


def test_exhaustive_empty_range_passes() -> None:
    r = exhaustive_search(THM11, 1, 2, [])
    assert r.passed
    assert r.computed["by_n"] == {}


def test_exhaustive_limits() -> None:
    with pytest.raises(BudgetExceeded):
        exhaustive_search(THM11, 1, 2, [10])
    with pytest.raises(InvalidParameters):
        exhaustive_search(THM11, 1, 2, [5], edge_budget=-1)


def test_exhaustive_full_enumeration_needs_edge_budget_above_seven() -> None:
    with pytest.raises(BudgetExceeded):
        exhaustive_search(THM11, 1, 2, [8])
    r = exhaustive_search(THM11, 1, 2, [8], edge_budget=1)
    assert r.computed["by_n"]["8"]["graphs"] <= 1 + 28
    assert r.exploratory


def test_exhaustive_dedup_switch() -> None:
    labeled = exhaustive_search(THM11, 1, 2, [4], dedup=False)
    assert labeled.computed["by_n"]["4"]["graphs"] == 2**6
    assert labeled.params["dedup"] is False
    unique = exhaustive_search(THM11, 1, 2, [4])
    assert 11 <= unique.computed["by_n"]["4"]["graphs"] < 2**6
