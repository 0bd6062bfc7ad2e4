"""Brute-force reference implementations.

Nothing here imports the engine modules: graphs are plain tuples
``(genera, edges, legs)`` and every question is answered by exhaustive
search.  These routines back the ``oracle`` CLI command and the test
suite, and are only practical for small types.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

RawGraph = tuple[tuple[int, ...], tuple[tuple[int, int], ...], tuple[int, ...]]


def raw(G) -> RawGraph:
    """Plain-tuple view of anything with ``genera``, ``edges`` and ``legs``."""
    return (
        tuple(G.genera),
        tuple(tuple(sorted(e)) for e in G.edges),
        tuple(G.legs),
    )


def _image(G: RawGraph, perm) -> tuple:
    genera, edges, legs = G
    new_genera = [0] * len(genera)
    for v, h in enumerate(genera):
        new_genera[perm[v]] = h
    new_edges = sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges)
    return (tuple(new_genera), tuple(perm[v] for v in legs), tuple(new_edges))


def exhaustive_key(G: RawGraph) -> tuple:
    """Minimum relabeled serialization over all vertex permutations."""
    nv = len(G[0])
    return min(_image(G, p) for p in itertools.permutations(range(nv)))


def isomorphic(G: RawGraph, H: RawGraph) -> bool:
    """Try every vertex bijection; genus and leg placement must match, then edge multisets."""
    if len(G[0]) != len(H[0]) or len(G[1]) != len(H[1]) or len(G[2]) != len(H[2]):
        return False
    target_edges = Counter(H[1])
    for p in itertools.permutations(range(len(G[0]))):
        if any(G[0][v] != H[0][p[v]] for v in range(len(p))):
            continue
        if any(p[v] != w for v, w in zip(G[2], H[2])):
            continue
        if Counter(tuple(sorted((p[a], p[b]))) for a, b in G[1]) == target_edges:
            return True
    return False


def _count_edge_bijections(edges, perm) -> int:
    # backtrack over edge images so every automorphism is visited once
    m = len(edges)
    used = [False] * m
    mapped = [tuple(sorted((perm[a], perm[b]))) for a, b in edges]

    def go(i):
        if i == m:
            return 1
        total = 0
        for j in range(m):
            if not used[j] and edges[j] == mapped[i]:
                used[j] = True
                total += go(i + 1)
                used[j] = False
        return total

    return go(0)


def automorphism_count(G: RawGraph) -> int:
    """Count pairs (vertex bijection, edge bijection) preserving all structure, legs fixed."""
    genera, edges, legs = G
    edges = [tuple(sorted(e)) for e in edges]
    total = 0
    for p in itertools.permutations(range(len(genera))):
        if any(genera[v] != genera[p[v]] for v in range(len(p))):
            continue
        if any(p[v] != v for v in legs):
            continue
        total += _count_edge_bijections(edges, p)
    return total


def _connected(nv, edges) -> bool:
    seen = {0}
    grew = True
    while grew:
        grew = False
        for a, b in edges:
            if (a in seen) != (b in seen):
                seen.update((a, b))
                grew = True
    return len(seen) == nv


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def all_stable_graphs(g: int, n: int) -> dict[tuple, RawGraph]:
    """Bottom-up: every decorated multigraph of type (g, n), deduplicated by exhaustive key.

    Vertex counts run up to 2g-2+n and edge counts up to 3g-3+n.
    """
    found: dict[tuple, RawGraph] = {}
    for nv in range(1, 2 * g - 2 + n + 1):
        slots = [(a, b) for a in range(nv) for b in range(a, nv)]
        for ne in range(0, 3 * g - 3 + n + 1):
            betti = ne - nv + 1
            if betti < 0 or betti > g:
                continue
            for edges in itertools.combinations_with_replacement(slots, ne):
                if not _connected(nv, edges):
                    continue
                edge_val = [0] * nv
                for a, b in edges:
                    edge_val[a] += 1
                    edge_val[b] += 1
                for genera in _compositions(g - betti, nv):
                    # legs still needed at each vertex to become stable
                    need = [max(0, 3 - 2 * h - edge_val[v]) for v, h in enumerate(genera)]
                    if sum(need) > n:
                        continue
                    for legs in itertools.product(range(nv), repeat=n):
                        counts = Counter(legs)
                        if any(counts[v] < need[v] for v in range(nv)):
                            continue
                        G = (genera, tuple(edges), legs)
                        key = exhaustive_key(G)
                        if key not in found:
                            found[key] = G
    return found


def strata_profile(g: int, n: int) -> list[int]:
    """Number of classes by number of edges, as produced by :func:`all_stable_graphs`."""
    counts = Counter(len(G[1]) for G in all_stable_graphs(g, n).values())
    return [counts[c] for c in range(max(counts) + 1)]


def diff_against(g: int, n: int, graphs) -> tuple[list[tuple], list[tuple]]:
    """Compare engine output with the oracle; returns (missing, extra) exhaustive keys."""
    expected = set(all_stable_graphs(g, n))
    got = [exhaustive_key(raw(G)) for G in graphs]
    dupes = [k for k, c in Counter(got).items() if c > 1]
    got_set = set(got)
    missing = sorted(expected - got_set)
    extra = sorted((got_set - expected) | set(dupes))
    return missing, extra


def leaf_labeled_trees(n: int) -> set[frozenset]:
    """Trees with leaves 1..n and unlabeled internal vertices of degree >= 3.

    Built by inserting leaf k into each tree on leaves 1..k-1, either on an
    internal vertex or in the middle of an edge.  A tree is recorded by its
    set of nontrivial splits (the leaf sets on one side of each internal
    edge, normalized to exclude leaf 1), which determines it.
    """
    if n < 3:
        return set()
    # adjacency over vertices: leaves are ("L", i), internal vertices are ints
    trees = [{("L", 1): {0}, ("L", 2): {0}, ("L", 3): {0}, 0: {("L", 1), ("L", 2), ("L", 3)}}]
    for k in range(4, n + 1):
        grown = []
        for T in trees:
            internals = [v for v in T if isinstance(v, int)]
            fresh = max(internals) + 1
            for v in internals:
                U = {x: set(ys) for x, ys in T.items()}
                U[("L", k)] = {v}
                U[v].add(("L", k))
                grown.append(U)
            seen_edges = set()
            for x in T:
                for y in T[x]:
                    e = frozenset((x, y))
                    if e in seen_edges:
                        continue
                    seen_edges.add(e)
                    U = {a: set(bs) for a, bs in T.items()}
                    U[x].discard(y)
                    U[y].discard(x)
                    U[fresh] = {x, y, ("L", k)}
                    U[x].add(fresh)
                    U[y].add(fresh)
                    U[("L", k)] = {fresh}
                    grown.append(U)
        trees = grown
    return {_splits(T, n) for T in trees}


def _splits(T, n) -> frozenset:
    out = set()
    for x in T:
        for y in T[x]:
            if isinstance(x, int) and isinstance(y, int):
                side = _leaves_beyond(T, y, x)
                if 1 in side:
                    side = frozenset(range(1, n + 1)) - side
                out.add(side)
    return frozenset(out)


def _leaves_beyond(T, start, blocked) -> frozenset:
    seen = {start, blocked}
    stack = [start]
    leaves = set()
    while stack:
        v = stack.pop()
        if isinstance(v, tuple):
            leaves.add(v[1])
        for w in T[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(leaves)


def _det(M) -> int:
    # Bareiss fraction-free elimination
    A = [list(r) for r in M]
    k = len(A)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if A[i][i] == 0:
            for r in range(i + 1, k):
                if A[r][i]:
                    A[i], A[r] = A[r], A[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                A[r][c] = (A[r][c] * A[i][i] - A[r][i] * A[i][c]) // prev
        prev = A[i][i]
    return sign * A[k - 1][k - 1]


def rational_rank(M) -> int:
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def determinantal_divisors(M) -> list[int]:
    """gcd of all k x k minors for k = 1 .. rank."""
    m = len(M)
    n = len(M[0]) if m else 0
    out = []
    for k in range(1, min(m, n) + 1):
        d = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                d = math.gcd(d, _det([[M[r][c] for c in cols] for r in rows]))
                if d == 1:
                    break
            if d == 1:
                break
        if d == 0:
            break
        out.append(d)
    return out


def invariant_factors(M) -> list[int]:
    """Invariant factors from determinantal divisors, cross-checked against the rational rank."""
    divisors = determinantal_divisors(M)
    if len(divisors) != rational_rank(M):
        raise AssertionError("determinantal divisors disagree with rational rank")
    factors = []
    prev = 1
    for d in divisors:
        factors.append(d // prev)
        prev = d
    return factors


def strict_chains(elements, leq) -> list[list[tuple]]:
    """All strictly increasing chains of a finite poset, grouped by length - 1.

    Exhaustive over subsets; each chain is listed in the order of ``elements``.
    """
    elements = list(elements)
    out: list[list[tuple]] = []
    for size in range(1, len(elements) + 1):
        layer = []
        for subset in itertools.combinations(elements, size):
            if all(leq(a, b) or leq(b, a) for a, b in itertools.combinations(subset, 2)):
                layer.append(subset)
        if not layer:
            break
        out.append(layer)
    return out


def raw_contract(G: RawGraph, subset) -> RawGraph:
    """Contract the edges with indices in ``subset``; components are renumbered by smallest vertex."""
    genera, edges, legs = G
    subset = set(subset)
    label = list(range(len(genera)))
    # naive relabel-until-stable merging
    changed = True
    while changed:
        changed = False
        for e in subset:
            a, b = edges[e]
            lo = min(label[a], label[b])
            for v in (a, b):
                if label[v] != lo:
                    old = label[v]
                    label = [lo if x == old else x for x in label]
                    changed = True
    comps = sorted(set(label))
    where = {c: i for i, c in enumerate(comps)}
    new_genera = [0] * len(comps)
    sizes = Counter(label)
    inner = Counter(label[edges[e][0]] for e in subset)
    for v, h in enumerate(genera):
        new_genera[where[label[v]]] += h
    for c in comps:
        new_genera[where[c]] += inner[c] - sizes[c] + 1
    new_edges = tuple(
        tuple(sorted((where[label[a]], where[label[b]])))
        for e, (a, b) in enumerate(edges)
        if e not in subset
    )
    return (tuple(new_genera), new_edges, tuple(where[label[v]] for v in legs))


def contraction_counts(G: RawGraph) -> Counter:
    """Exhaustive key of ``G / A`` for every edge subset ``A``."""
    m = len(G[1])
    out: Counter = Counter()
    for r in range(m + 1):
        for subset in itertools.combinations(range(m), r):
            out[exhaustive_key(raw_contract(G, subset))] += 1
    return out
