import pytest

from dmstrata import oracle
from dmstrata.canonical import canonical_form
from dmstrata.enumeration import (
    all_strata,
    enumerate_strata,
    one_step_degenerations,
    strata_counts,
)
from dmstrata.errors import GuardRailError, UnstableTypeError
from dmstrata.stable_graph import contract_edge, smooth_graph, total_genus, validate

from .conftest import SMALL_TYPES


def _oracle_one_step(G):
    """Oracle classes with one more edge that contract back onto G along some edge."""
    target = oracle.exhaustive_key(oracle.raw(G))
    out = set()
    for key, H in oracle.all_stable_graphs(total_genus(G), G.n).items():
        if len(H[1]) != G.num_edges + 1:
            continue
        if any(oracle.exhaustive_key(oracle.raw_contract(H, [e])) == target for e in range(len(H[1]))):
            out.add(key)
    return out


@pytest.mark.parametrize("g, n, count", [(1, 1, 1), (2, 0, 2), (0, 4, 3)])
def test_one_step_from_smooth(g, n, count):
    found = one_step_degenerations(smooth_graph(g, n))
    assert len(found) == count
    assert len(_oracle_one_step(smooth_graph(g, n))) == count
    assert all(H.num_edges == 1 for H in found)


def test_one_step_from_smooth_one_one_is_the_loop():
    (H,) = one_step_degenerations(smooth_graph(1, 1))
    assert H.genera == (0,) and H.edges == ((0, 0),)


@pytest.mark.parametrize("g, n", [(2, 1), (1, 3), (0, 5)])
def test_one_step_matches_oracle_everywhere(g, n):
    for G in all_strata(g, n):
        found = {oracle.exhaustive_key(oracle.raw(H)) for H in one_step_degenerations(G)}
        assert found == _oracle_one_step(G)


@pytest.mark.parametrize(
    "g, n, counts",
    [
        (0, 3, [1]),
        (1, 1, [1, 1]),
        (2, 0, [1, 2, 2, 2]),
        (0, 4, [1, 3]),
        (0, 5, [1, 10, 15]),
        (1, 2, [1, 2, 2]),
        (2, 1, [1, 2, 5, 5, 3]),
    ],
)
def test_strata_counts_match_oracle(g, n, counts):
    assert oracle.strata_profile(g, n) == counts
    assert strata_counts(g, n) == counts


@pytest.mark.parametrize("g, n", SMALL_TYPES)
def test_enumeration_invariants(g, n):
    levels = enumerate_strata(g, n)
    keys = set()
    assert [c for c, _ in levels] == list(range(3 * g - 3 + n + 1))
    for codim, graphs in levels:
        assert [canonical_form(G) for G in graphs] == sorted(canonical_form(G) for G in graphs)
        for G in graphs:
            assert validate(G) == []
            assert total_genus(G) == g and G.n == n
            assert G.num_edges == codim
            keys.add(canonical_form(G))
            if g == 0:
                assert G.num_edges == G.num_vertices - 1 and not any(G.genera)
    for codim, graphs in levels[1:]:
        for G in graphs:
            assert any(canonical_form(contract_edge(G, e)) in keys for e in range(G.num_edges))
    assert sum(len(gs) for _, gs in levels) == len(keys)


def test_deterministic():
    assert enumerate_strata(2, 1) == enumerate_strata(2, 1)


def test_parallel_matches_serial(monkeypatch):
    import dmstrata.enumeration as enumeration

    monkeypatch.setattr(enumeration, "PARALLEL_MIN_FRONTIER", 2)
    assert enumerate_strata(1, 3, threads=2) == enumerate_strata(1, 3, threads=1)


def test_unstable_type_rejected():
    with pytest.raises(UnstableTypeError):
        enumerate_strata(0, 2)


def test_guard_rail():
    with pytest.raises(GuardRailError):
        enumerate_strata(9, 9)
    with pytest.raises(GuardRailError):
        enumerate_strata(0, 16)
