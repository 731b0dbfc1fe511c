from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from qtough.errors import InvalidParameters
from qtough.extremal import (
    THM11,
    THM12,
    case2_split,
    charpoly_fB1,
    charpoly_fB2,
    charpoly_fB2prime,
    charpoly_general,
    describe,
    eq45_difference,
    extremal_graph,
    general_quotient,
    n_min,
    n_min_thm11,
    n_min_thm12,
    phi_sec3,
    phi_sec3_gap,
    phi_sec4,
    phi_sec4_axis,
    predicted_toughness,
    proof_g2_case1,
    proof_g3_case2,
    proof_thm12_g3,
    proof_thm12_g3prime,
    quotient_B1,
    quotient_B2,
    quotient_B2prime,
    split_join_graph,
    thm11_extremal,
    thm12_extremal,
    toughness_target,
)
from qtough.graph_core import components_count, is_connected, make_complete
from qtough.spectral import Partition, characteristic_value, is_equitable, perron_root, q_index, quotient_matrix, signless_laplacian


def test_n_min_values() -> None:
    assert [n_min_thm11(1, 2), n_min_thm11(1, 3), n_min_thm11(2, 2)] == [11, 21, 29]
    assert [n_min_thm12(2, 3), n_min_thm12(2, 5), n_min_thm12(3, 4)] == [12, 24, 18]
    assert n_min(THM12, 2, 2) == 12


def test_theorem_parameter_ranges() -> None:
    with pytest.raises(InvalidParameters):
        n_min_thm11(0, 2)
    with pytest.raises(InvalidParameters):
        n_min_thm12(1, 3)
    with pytest.raises(InvalidParameters):
        n_min_thm11(1, 1)
    with pytest.raises(InvalidParameters):
        thm11_extremal(1, 2, 2)


def test_thm11_extremal_shape() -> None:
    g = thm11_extremal(1, 2, 11)
    assert g == split_join_graph(1, 9, 1)
    assert g.n == 11
    assert g.edge_count == 46
    assert g.degree(0) == 10
    assert g.degree(10) == 1
    assert split_join_graph(1, 8, 1).edge_count == 37


def test_thm11_threshold_exceeds_big_clique() -> None:
    for b, l in [(1, 2), (1, 3), (2, 2)]:
        n = n_min_thm11(b, l)
        assert q_index(thm11_extremal(b, l, n)) > 2 * n - 2 * l + 1e-9


def test_thm12_extremal_shapes() -> None:
    g = thm12_extremal(2, 3, 12)
    assert g == split_join_graph(1, 9, 2)
    disconnected = thm12_extremal(2, 2, 12)
    assert not is_connected(disconnected)
    assert components_count(disconnected) == 2
    assert q_index(disconnected) == pytest.approx(20.0, abs=1e-9)


def test_predictions_and_targets() -> None:
    assert predicted_toughness(THM11, 1, 2) == Fraction(1, 2)
    assert predicted_toughness(THM11, 2, 3) == Fraction(5, 3)
    assert predicted_toughness(THM12, 2, 3) == Fraction(1, 3)
    assert predicted_toughness(THM12, 3, 2) == 0
    assert toughness_target(THM11, 2) == 2
    assert toughness_target(THM12, 3) == Fraction(1, 3)


def test_describe() -> None:
    d = describe(THM11, 1, 2, 11)
    assert (d["join"], d["clique"], d["isolated"]) == (1, 9, 1)
    assert d["predicted_t_l"] == "1/2"
    assert d["n_min"] == 11
    assert d["connected"] is True
    assert describe(THM12, 2, 2, 12)["connected"] is False


def test_proof_graphs() -> None:
    g2 = proof_g2_case1(1, 3, 11)
    assert g2 == split_join_graph(2, 7, 2)
    assert g2.edge_count == 40
    assert case2_split(1, 11) == 7
    g3 = proof_g3_case2(1, 11)
    assert g3 == split_join_graph(4, 0, 7)
    assert 2 * g3.edge_count == (11 - 7) * (11 + 7 - 1)
    assert proof_g2_case1(1, 2, 11) == thm11_extremal(1, 2, 11)


def test_thm12_proof_graphs() -> None:
    assert proof_thm12_g3(2, 3, 12) == thm12_extremal(2, 3, 12)
    g3p = proof_thm12_g3prime(2, 4, 24)
    assert g3p == split_join_graph(1, 20, 3)
    assert g3p.is_spanning_subgraph_of(thm12_extremal(2, 4, 24))
    with pytest.raises(InvalidParameters):
        proof_thm12_g3prime(2, 3, 12)


@pytest.mark.parametrize("s,m,k", [(1, 9, 1), (2, 7, 3), (3, 5, 6), (1, 1, 1)])
def test_general_quotient_matches_graph(s: int, m: int, k: int) -> None:
    g = split_join_graph(s, m, k)
    p = Partition.blocks([s, m, k])
    q = signless_laplacian(g)
    assert is_equitable(q, p)
    assert np.array_equal(quotient_matrix(q, p).entries, general_quotient(s, m, k).entries)
    assert perron_root(general_quotient(s, m, k)) == pytest.approx(q_index(g), abs=1e-9)


@pytest.mark.parametrize("n,s,b", [(12, 1, 2), (12, 3, 2), (20, 2, 3), (11, 2, 1)])
def test_quotient_B1_is_g2_quotient(n: int, s: int, b: int) -> None:
    qm = quotient_B1(n, s, b)
    g = split_join_graph(s, n - b * s - s, b * s)
    assert np.array_equal(quotient_matrix(signless_laplacian(g), Partition.blocks(qm.class_sizes)).entries, qm.entries)


@pytest.mark.parametrize("x", [0.0, 1.0, 7.5, 12.0, 24.0, 36.0])
def test_transcribed_polynomials_match_determinants(x: float) -> None:
    n, b, l, s = 12, 2, 2, 3
    assert charpoly_fB1(n, s, b)(x) == pytest.approx(characteristic_value(quotient_B1(n, s, b).entries, x), rel=1e-9, abs=1e-6)
    assert charpoly_fB2(n, b, l)(x) == pytest.approx(characteristic_value(quotient_B2(n, b, l).entries, x), rel=1e-9, abs=1e-6)
    assert charpoly_fB2prime(n, b, l)(x) == pytest.approx(
        characteristic_value(quotient_B2prime(n, b, l).entries, x), rel=1e-9, abs=1e-6
    )
    assert charpoly_general(3, 3, 6)(x) == pytest.approx(charpoly_fB1(n, s, b)(x), rel=1e-12, abs=1e-9)


def test_fB1_exact_over_fractions() -> None:
    n, s, b = 20, 2, 3
    qm = general_quotient(s, n - b * s - s, b * s).entries
    x = Fraction(7, 3)
    m = [[Fraction(int(v)) for v in row] for row in qm]
    a = [[(x if i == j else 0) - m[i][j] for j in range(3)] for i in range(3)]
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    assert charpoly_fB1(n, s, b)(x) == det


def test_identity_4_2_exact() -> None:
    n, b, l = 24, 2, 4
    h = 2
    for s in range(h, 8):
        for x in (Fraction(0), Fraction(5, 2), Fraction(40), Fraction(71)):
            assert charpoly_fB1(n, s, b)(x) - charpoly_fB2(n, b, l)(x) == (s - h) * phi_sec4(x, n, b, s, l)


def test_eq45_difference_exact() -> None:
    for n, b, l in [(12, 2, 2), (24, 2, 4), (18, 3, 4)]:
        for x in (Fraction(0), Fraction(13, 2), Fraction(2 * n)):
            assert charpoly_fB2(n, b, l)(x) - charpoly_fB2prime(n, b, l)(x) == eq45_difference(x, n, b, l)


def test_phi_sec3_values() -> None:
    assert phi_sec3(3, 11, 1) == 170
    assert phi_sec3(6, 11, 1) == 170
    assert phi_sec3_gap(2, 11, 1) == 0
    for n in range(11, 30):
        assert phi_sec3(3, n, 1) - phi_sec3(Fraction(n + 1, 2), n, 1) == phi_sec3_gap(2, n, 1)


def test_phi_sec4_axis_and_positivity() -> None:
    n, b, l, s = 12, 2, 2, 2
    x0 = 2 * n - 2 * b - 2
    assert phi_sec4(x0, n, b, s, l) == 372
    assert phi_sec4_axis(n, b, s, l) == Fraction(16, 3)
    assert phi_sec4_axis(n, b, s, l) < x0


def test_q_of_g3_below_g3prime() -> None:
    assert q_index(proof_thm12_g3(2, 2, 12)) < q_index(proof_thm12_g3prime(2, 2, 12)) == pytest.approx(20.0)


def test_extremal_graph_dispatch() -> None:
    assert extremal_graph(THM11, 1, 2, 11) == thm11_extremal(1, 2, 11)
    assert extremal_graph(THM12, 2, 3, 12) == thm12_extremal(2, 3, 12)
    assert make_complete(11).n == extremal_graph(THM11, 1, 2, 11).n
