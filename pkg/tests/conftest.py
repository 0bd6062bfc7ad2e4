from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from dmstrata.enumeration import raw_degenerations
from dmstrata.stable_graph import StableGraph, relabel, smooth_graph

THETA = StableGraph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = StableGraph((0, 0), ((0, 0), (0, 1), (1, 1)))
DELTA0 = StableGraph((1,), ((0, 0),))
DELTA1 = StableGraph((1, 1), ((0, 1),))
TWO_LOOPS = StableGraph((0,), ((0, 0), (0, 0)))
SMOOTH2 = StableGraph((2,))
LOOP11 = StableGraph((0,), ((0, 0),), (0,))

SMALL_TYPES = [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 0), (2, 1), (1, 3)]


@pytest.fixture
def theta():
    return THETA


@pytest.fixture
def dumbbell():
    return DUMBBELL


def shuffled(G: StableGraph, rng: random.Random) -> StableGraph:
    perm = list(range(G.num_vertices))
    rng.shuffle(perm)
    H = relabel(G, perm)
    edges = list(H.edges)
    rng.shuffle(edges)
    return StableGraph(H.genera, tuple(edges), H.legs)


@st.composite
def stable_graphs(draw, max_depth: int = 5):
    """Random valid stable graph: random degenerations of a smooth graph, randomly relabeled."""
    g = draw(st.integers(0, 3))
    n = draw(st.integers(0 if g >= 2 else 3 - 2 * g, 4))
    G = smooth_graph(g, n)
    steps = draw(st.integers(0, min(max_depth, 3 * g - 3 + n)))
    for _ in range(steps):
        options = list(raw_degenerations(G))
        G = options[draw(st.integers(0, len(options) - 1))]
    seed = draw(st.integers(0, 2**16))
    return shuffled(G, random.Random(seed))
