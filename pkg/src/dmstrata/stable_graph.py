"""Stable dual graphs and the moves relating them.

A stable graph records the combinatorics of a nodal curve: one vertex per
irreducible component (decorated by its genus), one edge per node (a loop
for a non-separating node) and one leg per marked point.  Vertices and
edges are addressed positionally; comparing two graphs up to isomorphism
goes through :mod:`dmstrata.canonical`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    DegenerationError,
    DisconnectedGraphError,
    EdgeNotFoundError,
    StabilityError,
    UnstableTypeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Violation:
    kind: str
    vertex: int | None
    message: str


@dataclass(frozen=True)
class StableGraph:
    """Immutable stable graph.

    ``genera[v]`` is the genus of vertex ``v``; ``edges`` is a tuple of
    vertex pairs stored with the smaller index first (loops are ``(v, v)``,
    parallel edges repeat); ``legs[i]`` is the vertex carrying marking
    ``i + 1``.
    """

    genera: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    legs: tuple[int, ...] = ()

    def __post_init__(self):
        genera = tuple(int(h) for h in self.genera)
        nv = len(genera)
        if nv == 0:
            raise ValueError("a stable graph needs at least one vertex")
        if any(h < 0 for h in genera):
            raise ValueError(f"negative vertex genus in {genera}")
        edges = []
        for e in self.edges:
            a, b = (int(x) for x in e)
            if not (0 <= a < nv and 0 <= b < nv):
                raise ValueError(f"edge {e} references a missing vertex")
            edges.append((a, b) if a <= b else (b, a))
        legs = tuple(int(v) for v in self.legs)
        for i, v in enumerate(legs):
            if not 0 <= v < nv:
                raise ValueError(f"leg {i + 1} attached to missing vertex {v}")
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "legs", legs)

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return len(self.legs)

    def legs_at(self, v: int) -> tuple[int, ...]:
        """Marking labels (1-based) carried by ``v``."""
        return tuple(i + 1 for i, w in enumerate(self.legs) if w == v)

    def loops_at(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == b == v)

    def valence(self, v: int) -> int:
        """Edge-ends plus legs at ``v``; a loop contributes two edge-ends."""
        ends = sum((a == v) + (b == v) for a, b in self.edges)
        return ends + sum(1 for w in self.legs if w == v)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        nbrs: dict[int, list[int]] = {v: [] for v in range(self.num_vertices)}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def first_betti(self) -> int:
        return self.num_edges - self.num_vertices + 1

    @property
    def genus(self) -> int:
        return total_genus(self)


@dataclass(frozen=True)
class ContractionMove:
    """A set of edges (by index) to be contracted; the empty set is the identity."""

    edge_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edge_set", frozenset(int(e) for e in self.edge_set))

    @classmethod
    def of(cls, *edges: int) -> ContractionMove:
        return cls(frozenset(edges))

    def __len__(self) -> int:
        return len(self.edge_set)

    def __iter__(self):
        return iter(sorted(self.edge_set))

    @property
    def is_identity(self) -> bool:
        return not self.edge_set


def check_stable_type(g: int, n: int) -> None:
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise UnstableTypeError(g, n)


def smooth_graph(g: int, n: int) -> StableGraph:
    """The open stratum of type (g, n): one vertex of genus g carrying legs 1..n."""
    check_stable_type(g, n)
    return StableGraph((g,), (), (0,) * n)


def _unstable_vertices(G: StableGraph) -> list[Violation]:
    out = []
    for v, h in enumerate(G.genera):
        k = G.valence(v)
        if 2 * h - 2 + k <= 0:
            out.append(
                Violation(
                    "unstable_vertex",
                    v,
                    f"vertex {v}: 2*{h} - 2 + {k} = {2 * h - 2 + k} is not positive",
                )
            )
    return out


def validate(G: StableGraph) -> list[Violation]:
    """Return every violated invariant; an empty list means ``G`` is a valid stable graph."""
    violations = []
    connected = G.is_connected()
    if not connected:
        violations.append(Violation("disconnected", None, "graph is not connected"))
    violations.extend(_unstable_vertices(G))
    if connected:
        g = total_genus(G)
        if 2 * g - 2 + G.n <= 0:
            violations.append(
                Violation("unstable_type", None, f"ambient type ({g}, {G.n}) has 2g-2+n <= 0")
            )
    return violations


def is_valid(G: StableGraph) -> bool:
    return not validate(G)


def total_genus(G: StableGraph) -> int:
    if not G.is_connected():
        raise DisconnectedGraphError("total genus is only defined for connected graphs")
    return sum(G.genera) + G.first_betti()


def _check_edges(G: StableGraph, edges: Iterable[int]) -> list[int]:
    out = []
    for e in edges:
        if not isinstance(e, int) or not 0 <= e < G.num_edges:
            raise EdgeNotFoundError(f"edge {e!r} is not an edge of the graph ({G.num_edges} edges)")
        out.append(e)
    return out


def contract_with_map(G: StableGraph, edges: Iterable[int]) -> tuple[StableGraph, dict[int, int]]:
    """Contract a set of edges and report where each surviving edge went.

    Vertices of the result are the connected components of the contracted
    subgraph, numbered by their smallest original vertex; surviving edges
    keep their relative order.  The returned dict maps old edge index to new
    edge index for every edge not contracted.
    """
    chosen = set(_check_edges(G, edges))
    parent = list(range(G.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in chosen:
        a, b = G.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(v) for v in range(G.num_vertices)})
    new_index = {r: i for i, r in enumerate(roots)}
    genera = [0] * len(roots)
    comp_vertices = [0] * len(roots)
    comp_edges = [0] * len(roots)
    for v, h in enumerate(G.genera):
        c = new_index[find(v)]
        genera[c] += h
        comp_vertices[c] += 1
    for e in chosen:
        comp_edges[new_index[find(G.edges[e][0])]] += 1
    # each contracted component absorbs its own first Betti number
    for c in range(len(roots)):
        genera[c] += comp_edges[c] - comp_vertices[c] + 1

    new_edges = []
    survival = {}
    for e, (a, b) in enumerate(G.edges):
        if e in chosen:
            continue
        survival[e] = len(new_edges)
        new_edges.append((new_index[find(a)], new_index[find(b)]))
    legs = tuple(new_index[find(v)] for v in G.legs)
    return StableGraph(tuple(genera), tuple(new_edges), legs), survival


def contract_edge(G: StableGraph, e: int) -> StableGraph:
    """Smooth the node ``e``: merge its endpoints, or raise the genus for a loop."""
    return contract_with_map(G, [e])[0]


def contract_set(G: StableGraph, move: ContractionMove | Iterable[int]) -> StableGraph:
    edges = move.edge_set if isinstance(move, ContractionMove) else move
    return contract_with_map(G, edges)[0]


def split_vertex(
    G: StableGraph,
    v: int,
    genus_split: tuple[int, int],
    edge_ends: Iterable[tuple[int, int]] = (),
    legs: Iterable[int] = (),
) -> StableGraph:
    """Replace ``v`` by two vertices joined by a new edge.

    ``edge_ends`` lists half-edges ``(edge_index, end)`` at ``v`` (``end`` is
    0 or 1, selecting a side of the stored pair) and ``legs`` lists marking
    labels at ``v``; these stay on the first new vertex, which keeps index
    ``v``.  Everything else at ``v`` moves to the second vertex, appended at
    the end.  The connecting edge is appended last.
    """
    if not 0 <= v < G.num_vertices:
        raise ValueError(f"no vertex {v}")
    h1, h2 = genus_split
    if h1 < 0 or h2 < 0 or h1 + h2 != G.genera[v]:
        raise DegenerationError(f"genus split {genus_split} does not sum to {G.genera[v]}")
    first_ends = set()
    for e, end in edge_ends:
        _check_edges(G, [e])
        if end not in (0, 1) or G.edges[e][end] != v:
            raise ValueError(f"half-edge ({e}, {end}) is not at vertex {v}")
        first_ends.add((e, end))
    first_legs = set(legs)
    for label in first_legs:
        if not 1 <= label <= G.n or G.legs[label - 1] != v:
            raise ValueError(f"leg {label} is not at vertex {v}")

    w = G.num_vertices
    new_edges = []
    for e, (a, b) in enumerate(G.edges):
        if a == v and (e, 0) not in first_ends:
            a = w
        if b == v and (e, 1) not in first_ends:
            b = w
        new_edges.append((a, b))
    new_edges.append((v, w))
    new_legs = tuple(
        w if (x == v and i + 1 not in first_legs) else x for i, x in enumerate(G.legs)
    )
    genera = G.genera[:v] + (h1,) + G.genera[v + 1 :] + (h2,)
    out = StableGraph(genera, tuple(new_edges), new_legs)
    bad = [x for x in _unstable_vertices(out) if x.vertex in (v, w)]
    if bad:
        raise StabilityError("; ".join(x.message for x in bad), bad)
    return out


def add_nonseparating_node(G: StableGraph, v: int) -> StableGraph:
    """Pinch a non-separating curve on component ``v``: genus drops by one, a loop appears."""
    if not 0 <= v < G.num_vertices:
        raise ValueError(f"no vertex {v}")
    if G.genera[v] < 1:
        raise DegenerationError(f"vertex {v} has genus 0; no non-separating curve to pinch")
    genera = G.genera[:v] + (G.genera[v] - 1,) + G.genera[v + 1 :]
    return StableGraph(genera, G.edges + ((v, v),), G.legs)


def relabel(G: StableGraph, position: list[int] | tuple[int, ...]) -> StableGraph:
    """Move vertex ``v`` to ``position[v]``; edges are re-sorted."""
    genera = [0] * G.num_vertices
    for v, p in enumerate(position):
        genera[p] = G.genera[v]
    edges = sorted(
        tuple(sorted((position[a], position[b]))) for a, b in G.edges
    )
    legs = tuple(position[v] for v in G.legs)
    return StableGraph(tuple(genera), tuple(edges), legs)
