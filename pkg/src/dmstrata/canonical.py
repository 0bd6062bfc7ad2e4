"""Canonical forms, isomorphism and automorphisms of stable graphs.

Isomorphisms are genus-preserving multigraph isomorphisms that fix every
leg label.  The canonical key is the lexicographically smallest
serialization over the leaves of an individualization/refinement search
tree; since the tree is built from isomorphism-invariant data only, the
key is a complete invariant, and the leaves that attain it form a single
coset of the vertex automorphism group.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from .errors import StrataError
from .stable_graph import StableGraph, relabel, validate


@total_ordering
@dataclass(frozen=True)
class CanonicalForm:
    """Integer key identifying an isomorphism class.

    Layout: ``[|V|, genera..., leg placements..., |E|, a_1, b_1, a_2, b_2, ...]``
    with edges as sorted pairs in sorted order.
    """

    key: tuple[int, ...]

    def __lt__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.key < other.key

    def as_list(self) -> list[int]:
        return list(self.key)


def _serialize(G: StableGraph, position) -> tuple[int, ...]:
    nv = G.num_vertices
    genera = [0] * nv
    for v, p in enumerate(position):
        genera[p] = G.genera[v]
    legs = [position[v] for v in G.legs]
    edges = sorted(
        (position[a], position[b]) if position[a] <= position[b] else (position[b], position[a])
        for a, b in G.edges
    )
    return (nv, *genera, *legs, len(edges), *itertools.chain.from_iterable(edges))


def _rank(signatures) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


class _Searcher:
    def __init__(self, G: StableGraph):
        self.G = G
        nv = G.num_vertices
        self.adj: list[dict[int, int]] = [defaultdict(int) for _ in range(nv)]
        for a, b in G.edges:
            if a != b:
                self.adj[a][b] += 1
                self.adj[b][a] += 1
        initial = [
            (G.genera[v], G.legs_at(v), G.loops_at(v), G.valence(v)) for v in range(nv)
        ]
        self.root = _rank(initial)

    def refine(self, ranks: list[int]) -> list[int]:
        cells = len(set(ranks))
        while True:
            sigs = [
                (ranks[v], tuple(sorted((ranks[w], m) for w, m in self.adj[v].items())))
                for v in range(len(ranks))
            ]
            ranks = _rank(sigs)
            new_cells = len(set(ranks))
            if new_cells == cells:
                return ranks
            cells = new_cells

    def leaves(self, ranks: list[int]) -> Iterator[list[int]]:
        ranks = self.refine(ranks)
        counts = Counter(ranks)
        if len(counts) == len(ranks):
            yield ranks
            return
        target = min(r for r, c in counts.items() if c > 1)
        for v in range(len(ranks)):
            if ranks[v] != target:
                continue
            split = [2 * r + (r == target and u != v) for u, r in enumerate(ranks)]
            yield from self.leaves(split)

    def search(self) -> tuple[tuple[int, ...], list[int], int]:
        best = None
        best_pos = None
        hits = 0
        for pos in self.leaves(self.root):
            key = _serialize(self.G, pos)
            if best is None or key < best:
                best, best_pos, hits = key, pos, 1
            elif key == best:
                hits += 1
        return best, best_pos, hits


def _require_valid(G: StableGraph) -> None:
    bad = validate(G)
    if bad:
        raise StrataError("invalid stable graph: " + "; ".join(v.message for v in bad))


def canonical_labeling(G: StableGraph) -> tuple[CanonicalForm, list[int]]:
    """Canonical key plus a vertex map ``v -> position`` realizing it."""
    key, pos, _ = _Searcher(G).search()
    return CanonicalForm(key), pos


def canonical_form(G: StableGraph, *, check: bool = True) -> CanonicalForm:
    if check:
        _require_valid(G)
    return canonical_labeling(G)[0]


def canonical_graph(G: StableGraph) -> StableGraph:
    """The representative of G's class obtained by relabeling to canonical order."""
    _, pos = canonical_labeling(G)
    return relabel(G, pos)


def are_isomorphic(G: StableGraph, H: StableGraph) -> bool:
    if (G.num_vertices, G.num_edges, G.n) != (H.num_vertices, H.num_edges, H.n):
        return False
    return canonical_labeling(G)[0] == canonical_labeling(H)[0]


def vertex_automorphisms(G: StableGraph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving genera, legs and edge multiplicities.

    Returned as tuples ``perm`` with ``perm[v]`` the image of ``v``.
    """
    searcher = _Searcher(G)
    best, best_pos, _ = searcher.search()
    inverse_best = [0] * len(best_pos)
    for v, p in enumerate(best_pos):
        inverse_best[p] = v
    out = []
    for pos in searcher.leaves(searcher.root):
        if _serialize(G, pos) == best:
            # v -> pos[v] -> vertex of G occupying that slot in the best leaf
            out.append(tuple(inverse_best[pos[v]] for v in range(len(pos))))
    out.sort()
    return out


def _edge_multiplicity_factor(G: StableGraph) -> int:
    return math.prod(math.factorial(m) for m in Counter(G.edges).values())


def automorphism_count(G: StableGraph) -> int:
    """Order of Aut(G) acting on vertices and edges with legs fixed.

    Parallel edges and parallel loops may be permuted; the half-edge flip of
    a loop is not counted here, see :func:`automorphism_count_extended`.
    """
    _, _, hits = _Searcher(G).search()
    return hits * _edge_multiplicity_factor(G)


def automorphism_count_extended(G: StableGraph) -> int:
    """Automorphism count including a factor 2 per loop for its half-edge swap."""
    loops = sum(1 for a, b in G.edges if a == b)
    return automorphism_count(G) * 2**loops


def edge_automorphisms(G: StableGraph) -> Iterator[tuple[int, ...]]:
    """Yield every automorphism as an edge permutation ``perm[e] = image of e``.

    Distinct group elements that act identically on edges (possible only
    when the vertex action differs) are yielded once each, so the number of
    yielded tuples equals :func:`automorphism_count`.
    """
    classes: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e, pair in enumerate(G.edges):
        classes[pair].append(e)
    pairs = sorted(classes)
    for sigma in vertex_automorphisms(G):
        targets = []
        for pair in pairs:
            a, b = sigma[pair[0]], sigma[pair[1]]
            targets.append(classes[(a, b) if a <= b else (b, a)])
        choices = [itertools.permutations(t) for t in targets]
        for combo in itertools.product(*choices):
            perm = [0] * G.num_edges
            for pair, image in zip(pairs, combo):
                for e, f in zip(classes[pair], image):
                    perm[e] = f
            yield tuple(perm)
