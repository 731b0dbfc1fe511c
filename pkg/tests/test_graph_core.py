from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtough.errors import BudgetExceeded, InvalidParameters
from qtough.extremal import split_join_graph
from qtough.graph_core import (
    Graph,
    VertexSet,
    canonical_form,
    components_count,
    copies,
    disjoint_union,
    independence_number,
    is_connected,
    isolated_count,
    join,
    make_complete,
    make_cycle,
    make_empty,
    remove_vertices,
)

from .strategies import brute_force_alpha, graphs


def test_cycle_is_two_regular() -> None:
    c6 = make_cycle(6)
    assert c6.edge_count == 6
    assert c6.degrees() == [2] * 6


def test_small_independence_numbers() -> None:
    assert independence_number(make_cycle(5)) == 2
    assert independence_number(make_cycle(6)) == 3
    assert independence_number(make_complete(7)) == 1
    assert independence_number(make_empty(4)) == 4
    assert independence_number(make_empty(0)) == 0


def test_complete_and_empty() -> None:
    assert make_complete(5).edge_count == 10
    assert make_empty(5).edge_count == 0
    assert make_complete(0).n == 0


def test_cycle_needs_three_vertices() -> None:
    with pytest.raises(InvalidParameters):
        make_cycle(2)


def test_graph_rejects_loops_and_asymmetry() -> None:
    with pytest.raises(InvalidParameters):
        Graph(2, (0b01, 0b00))
    with pytest.raises(InvalidParameters):
        Graph(2, (0b10, 0b00))
    with pytest.raises(InvalidParameters):
        Graph.from_edges(3, [(0, 3)])


def test_graph_order_limit() -> None:
    with pytest.raises(BudgetExceeded):
        make_empty(65)
    assert make_empty(64).n == 64


def test_join_labels_first_graph_first() -> None:
    g = join(make_complete(1), make_empty(4))
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_remove_vertices_reindexes() -> None:
    path = remove_vertices(make_cycle(6), VertexSet.of([0]))
    assert path.n == 5
    assert path.edge_count == 4
    assert is_connected(path)
    assert path.has_edge(0, 1) and not path.has_edge(0, 4)


def test_components_and_isolated() -> None:
    g = disjoint_union(make_complete(3), copies(2, make_complete(1)))
    assert components_count(g) == 3
    assert isolated_count(g) == 2
    assert not is_connected(g)
    assert not is_connected(make_empty(0))


def test_edge_edits_and_spanning() -> None:
    k4 = make_complete(4)
    g = k4.without_edge(0, 1)
    assert g.edge_count == 5
    assert g.non_edges() == [(0, 1)]
    assert g.is_spanning_subgraph_of(k4)
    assert not k4.is_spanning_subgraph_of(g)
    assert g.with_edge(1, 0) == k4


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_identity(g1: Graph, g2: Graph) -> None:
    assert join(g1, g2).edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_alpha_of_union_and_join(g1: Graph, g2: Graph) -> None:
    a1, a2 = independence_number(g1), independence_number(g2)
    assert independence_number(disjoint_union(g1, g2)) == a1 + a2
    assert independence_number(join(g1, g2)) == max(a1, a2)


@given(graphs(max_n=10))
@settings(max_examples=60)
def test_independence_number_matches_brute_force(g: Graph) -> None:
    assert independence_number(g) == brute_force_alpha(g)


@given(st.permutations(list(range(8))))
def test_canonical_form_identifies_relabeled_split_graphs(order: list[int]) -> None:
    g = split_join_graph(2, 4, 2)
    assert canonical_form(g.relabel(order)) == canonical_form(g)


def test_canonical_form_separates_non_isomorphic() -> None:
    assert canonical_form(split_join_graph(1, 9, 1)) != canonical_form(split_join_graph(2, 7, 2))


@given(graphs(min_n=1, max_n=8), graphs(min_n=1, max_n=8))
def test_components_are_additive_over_union(g1: Graph, g2: Graph) -> None:
    assert components_count(disjoint_union(g1, g2)) == components_count(g1) + components_count(g2)


@given(graphs(max_n=10))
def test_removing_no_vertices_is_identity(g: Graph) -> None:
    assert remove_vertices(g, VertexSet.of([])) == g
