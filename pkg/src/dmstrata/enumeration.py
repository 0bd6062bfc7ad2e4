"""Top-down enumeration of stable graphs of type (g, n).

Starting from the smooth graph, every admissible one-node degeneration is
applied level by level; classes are deduplicated by canonical form and
represented by their canonically relabeled graph, so the output does not
depend on discovery order.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor

from .canonical import CanonicalForm, canonical_labeling
from .errors import GuardRailError
from .stable_graph import (
    StableGraph,
    add_nonseparating_node,
    check_stable_type,
    relabel,
    smooth_graph,
    split_vertex,
)

log = logging.getLogger(__name__)

MAX_DEPTH = 12
# frontiers smaller than this are expanded in-process
PARALLEL_MIN_FRONTIER = 16

Strata = list[tuple[int, list[StableGraph]]]


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get("STRATA_THREADS")
        if env:
            threads = int(env)
        else:
            threads = os.cpu_count() or 1
    return max(1, int(threads))


def check_guard(g: int, n: int, force: bool = False) -> None:
    check_stable_type(g, n)
    depth = 3 * g - 3 + n
    if depth > MAX_DEPTH and not force:
        raise GuardRailError(
            f"type ({g}, {n}) has 3g-3+n = {depth} > {MAX_DEPTH}; pass force=True (--force) to override"
        )


def _splits(G: StableGraph, v: int):
    ends = [(e, side) for e, pair in enumerate(G.edges) for side in (0, 1) if pair[side] == v]
    legs = list(G.legs_at(v))
    items = [("e", x) for x in ends] + [("l", x) for x in legs]
    k = len(items)
    h = G.genera[v]
    for h1 in range(h + 1):
        h2 = h - h1
        for mask in range(1 << k):
            first = tuple(i for i in range(k) if mask >> i & 1)
            second = tuple(i for i in range(k) if not mask >> i & 1)
            # the two sides of the new edge are unordered
            if (h1, first) > (h2, second):
                continue
            if 2 * h1 - 2 + len(first) + 1 <= 0 or 2 * h2 - 2 + len(second) + 1 <= 0:
                continue
            yield split_vertex(
                G,
                v,
                (h1, h2),
                [items[i][1] for i in first if items[i][0] == "e"],
                [items[i][1] for i in first if items[i][0] == "l"],
            )


def raw_degenerations(G: StableGraph):
    """Every one-node degeneration of ``G``, with repetitions up to isomorphism."""
    for v in range(G.num_vertices):
        yield from _splits(G, v)
        if G.genera[v] >= 1:
            yield add_nonseparating_node(G, v)


def _classes(G: StableGraph) -> list[tuple[CanonicalForm, StableGraph]]:
    found: dict[CanonicalForm, StableGraph] = {}
    for H in raw_degenerations(G):
        key, pos = canonical_labeling(H)
        if key not in found:
            found[key] = relabel(H, pos)
    return sorted(found.items())


def one_step_degenerations(G: StableGraph) -> list[StableGraph]:
    """Isomorphism classes reachable from ``G`` by adding one node, sorted by canonical key."""
    return [H for _, H in _classes(G)]


def _expand(frontier: list[StableGraph], threads: int, pool_holder: list) -> list:
    if threads > 1 and len(frontier) >= PARALLEL_MIN_FRONTIER:
        if not pool_holder:
            pool_holder.append(ProcessPoolExecutor(max_workers=threads))
        chunk = max(1, len(frontier) // (4 * threads))
        return list(pool_holder[0].map(_classes, frontier, chunksize=chunk))
    return [_classes(G) for G in frontier]


def enumerate_strata(g: int, n: int, *, force: bool = False, threads: int | None = None) -> Strata:
    """All stable graphs of type (g, n) up to isomorphism, grouped by codimension.

    Returns ``[(codim, graphs), ...]`` for codim = 0 .. 3g-3+n, each list
    sorted by canonical key.
    """
    check_guard(g, n, force)
    threads = resolve_threads(threads)
    root = smooth_graph(g, n)
    key, pos = canonical_labeling(root)
    seen: dict[CanonicalForm, StableGraph] = {key: relabel(root, pos)}
    levels: Strata = [(0, [seen[key]])]
    pool_holder: list = []
    try:
        frontier = [seen[key]]
        codim = 0
        while frontier:
            codim += 1
            level: dict[CanonicalForm, StableGraph] = {}
            for classes in _expand(frontier, threads, pool_holder):
                for k, H in classes:
                    if k not in seen:
                        seen[k] = H
                        level[k] = H
            frontier = [level[k] for k in sorted(level)]
            if frontier:
                levels.append((codim, frontier))
            log.debug("codim %d: %d classes", codim, len(frontier))
    finally:
        for pool in pool_holder:
            pool.shutdown()
    return levels


def all_strata(g: int, n: int, **kwargs) -> list[StableGraph]:
    return [G for _, graphs in enumerate_strata(g, n, **kwargs) for G in graphs]


def strata_counts(g: int, n: int, **kwargs) -> list[int]:
    """Number of classes per codimension."""
    return [len(graphs) for _, graphs in enumerate_strata(g, n, **kwargs)]
