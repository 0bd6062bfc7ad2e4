import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmstrata.canonical import are_isomorphic, canonical_form
from dmstrata.checks import sequential_contract
from dmstrata.errors import (
    DegenerationError,
    DisconnectedGraphError,
    EdgeNotFoundError,
    StabilityError,
    UnstableTypeError,
)
from dmstrata.stable_graph import (
    ContractionMove,
    StableGraph,
    add_nonseparating_node,
    contract_edge,
    contract_set,
    smooth_graph,
    split_vertex,
    total_genus,
    validate,
)

from .conftest import DELTA1, DUMBBELL, LOOP11, THETA, TWO_LOOPS, stable_graphs


def test_validate_smooth_genus_two():
    assert validate(StableGraph((2,))) == []


def test_validate_unstable_sphere_with_two_points():
    kinds = {(v.kind, v.vertex) for v in validate(StableGraph((0,), (), (0, 0)))}
    assert ("unstable_vertex", 0) in kinds


def test_validate_theta():
    assert validate(THETA) == []
    assert total_genus(THETA) == 2


def test_validate_reports_disconnected():
    G = StableGraph((2, 2))
    assert [v.kind for v in validate(G)] == ["disconnected"]
    with pytest.raises(DisconnectedGraphError):
        total_genus(G)


def test_malformed_structure_rejected():
    with pytest.raises(ValueError):
        StableGraph((0,), ((0, 1),))
    with pytest.raises(ValueError):
        StableGraph((0,), (), (3,))
    with pytest.raises(ValueError):
        StableGraph(())


@pytest.mark.parametrize(
    "G, genus",
    [(StableGraph((5,)), 5), (StableGraph((0,), ((0, 0),)), 1), (THETA, 2), (DUMBBELL, 2)],
)
def test_total_genus(G, genus):
    assert total_genus(G) == genus


def test_edges_are_stored_smaller_first():
    assert StableGraph((1, 1), ((1, 0),)).edges == ((0, 1),)


def test_contract_theta_edge_gives_two_loops():
    H = contract_edge(THETA, 0)
    assert H == TWO_LOOPS


def test_contract_loop_of_one_one_boundary():
    assert contract_edge(LOOP11, 0) == StableGraph((1,), (), (0,))


def test_contract_delta1():
    assert contract_edge(DELTA1, 0) == StableGraph((2,))


def test_contract_missing_edge():
    with pytest.raises(EdgeNotFoundError):
        contract_edge(DELTA1, 1)
    with pytest.raises(EdgeNotFoundError):
        contract_set(THETA, [0, 7])


def test_contract_set_examples():
    assert contract_set(THETA, ContractionMove.of(0, 1, 2)) == StableGraph((2,))
    assert contract_set(THETA, ContractionMove()) == THETA
    assert contract_set(DUMBBELL, ContractionMove.of(0, 2)) == DELTA1


def test_split_genus_two_into_delta1():
    assert are_isomorphic(split_vertex(StableGraph((2,)), 0, (1, 1)), DELTA1)


def test_split_four_pointed_sphere():
    G = smooth_graph(0, 4)
    H = split_vertex(G, 0, (0, 0), legs=[1, 2])
    assert validate(H) == []
    assert H.legs == (0, 0, 1, 1)


def test_split_unstable_side_raises():
    with pytest.raises(StabilityError) as info:
        split_vertex(smooth_graph(0, 4), 0, (0, 0), legs=[1])
    assert info.value.violations[0].vertex == 0


def test_split_moves_loop_ends_apart():
    G = StableGraph((0,), ((0, 0),), (0, 0))
    H = split_vertex(G, 0, (0, 0), edge_ends=[(0, 0)], legs=[1])
    # the loop now joins the two halves alongside the new edge
    assert sorted(H.edges) == [(0, 1), (0, 1)]
    assert H.genera == (0, 0)
    assert H.legs == (0, 1)


def test_split_bad_arguments():
    with pytest.raises(DegenerationError):
        split_vertex(StableGraph((2,)), 0, (2, 1))
    with pytest.raises(ValueError):
        split_vertex(smooth_graph(0, 4), 0, (0, 0), legs=[9])


def test_add_nonseparating_node_examples():
    assert add_nonseparating_node(StableGraph((1,), (), (0,)), 0) == LOOP11
    assert add_nonseparating_node(StableGraph((2,)), 0) == StableGraph((1,), ((0, 0),))
    with pytest.raises(DegenerationError):
        add_nonseparating_node(StableGraph((0,), ((0, 0),)), 0)


def test_smooth_graph_rejects_unstable_types():
    for g, n in [(0, 0), (0, 1), (0, 2), (1, 0)]:
        with pytest.raises(UnstableTypeError):
            smooth_graph(g, n)


@given(stable_graphs())
@settings(max_examples=200, deadline=None)
def test_contraction_preserves_genus_and_validity(G):
    for e in range(G.num_edges):
        H = contract_edge(G, e)
        assert total_genus(H) == total_genus(G)
        assert validate(H) == []
        assert H.num_edges == G.num_edges - 1


@given(stable_graphs(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_contract_set_order_independent(G, rng):
    edges = list(range(G.num_edges))
    subset = [e for e in edges if rng.random() < 0.5]
    expected = canonical_form(contract_set(G, subset))
    order = subset[:]
    rng.shuffle(order)
    assert canonical_form(sequential_contract(G, order)) == expected
    assert contract_set(G, subset).num_edges == G.num_edges - len(subset)


@given(stable_graphs(max_depth=3), st.data())
@settings(max_examples=200, deadline=None)
def test_split_then_contract_round_trip(G, data):
    v = data.draw(st.integers(0, G.num_vertices - 1))
    ends = [(e, s) for e, pair in enumerate(G.edges) for s in (0, 1) if pair[s] == v]
    legs = list(G.legs_at(v))
    h1 = data.draw(st.integers(0, G.genera[v]))
    first_ends = [x for x in ends if data.draw(st.booleans())]
    first_legs = [x for x in legs if data.draw(st.booleans())]
    try:
        H = split_vertex(G, v, (h1, G.genera[v] - h1), first_ends, first_legs)
    except StabilityError:
        return
    assert total_genus(H) == total_genus(G)
    assert are_isomorphic(contract_edge(H, H.num_edges - 1), G)


@given(stable_graphs(max_depth=3), st.data())
@settings(max_examples=100, deadline=None)
def test_loop_then_contract_round_trip(G, data):
    candidates = [v for v, h in enumerate(G.genera) if h >= 1]
    if not candidates:
        return
    v = data.draw(st.sampled_from(candidates))
    H = add_nonseparating_node(G, v)
    assert validate(H) == []
    assert are_isomorphic(contract_edge(H, H.num_edges - 1), G)


def test_all_orders_on_theta():
    for r in range(4):
        for subset in itertools.combinations(range(3), r):
            expected = canonical_form(contract_set(THETA, subset))
            for order in itertools.permutations(subset):
                assert canonical_form(sequential_contract(THETA, order)) == expected
