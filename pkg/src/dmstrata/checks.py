"""Invariant suites run by ``dmstrata check``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .canonical import canonical_form, canonical_labeling
from .fn_coords import verify_dimension_identities
from .nerve import (
    betti_euler_characteristic,
    boundary_matrices,
    boundary_squares_vanish,
    euler_characteristic,
    homology,
    order_complex,
)
from .serialize import parse_graph, serialize_graph
from .stable_graph import StableGraph, contract_set, contract_with_map, relabel, total_genus, validate
from .strata import StrataPoset, build_poset, contraction_profile


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def sequential_contract(G: StableGraph, order) -> StableGraph:
    """Contract edges one at a time in the given order, following surviving indices."""
    current = {e: e for e in range(G.num_edges)}
    H = G
    for e in order:
        H, survival = contract_with_map(H, [current[e]])
        current = {old: survival[new] for old, new in current.items() if new in survival}
    return H


def _orders(subset, limit=4):
    if len(subset) <= limit:
        return itertools.permutations(subset)
    return (subset, subset[::-1])


def check_validity(P: StrataPoset) -> list[str]:
    bad = []
    for i, G in enumerate(P.graphs):
        if validate(G):
            bad.append(f"#{i} invalid")
        elif total_genus(G) != P.g or G.n != P.n:
            bad.append(f"#{i} has wrong type")
        if P.g == 0 and (G.num_edges != G.num_vertices - 1 or any(G.genera)):
            bad.append(f"#{i} is not a genus-0 tree")
    return bad


def check_closure(P: StrataPoset) -> list[str]:
    has_cover = {c.source for c in P.covers}
    return [f"#{i} has no contraction in codim {P.codims[i] - 1}" for i in range(len(P)) if P.codims[i] and i not in has_cover]


def check_order_independence(P: StrataPoset) -> list[str]:
    bad = []
    for i, G in enumerate(P.graphs):
        for r in range(G.num_edges + 1):
            for subset in itertools.combinations(range(G.num_edges), r):
                expected = canonical_labeling(contract_set(G, subset))[0]
                for order in _orders(subset):
                    if canonical_labeling(sequential_contract(G, order))[0] != expected:
                        bad.append(f"#{i} order {order}")
    return bad


def check_subset_sums(P: StrataPoset) -> list[str]:
    bad = []
    for i, G in enumerate(P.graphs):
        profile = contraction_profile(G)
        if sum(profile.values()) != 2**G.num_edges:
            bad.append(f"#{i} subset total {sum(profile.values())}")
        reachable = {P.index[k] for k in profile}
        if reachable != set(P.up[i]):
            bad.append(f"#{i} reachability differs from cover closure")
    return bad


def check_poset(P: StrataPoset) -> list[str]:
    bad = []
    for c in P.covers:
        if P.codims[c.source] != P.codims[c.target] + 1:
            bad.append(f"cover {c.source}->{c.target} skips a codimension")
    for i, G in enumerate(P.graphs):
        if P.codims[i] != G.num_edges:
            bad.append(f"#{i} codim differs from edge count")
        if P.maximum not in P.up[i]:
            bad.append(f"#{i} is not below the smooth stratum")
    if [i for i, c in enumerate(P.codims) if c == 0] != [P.maximum]:
        bad.append("smooth stratum is not the unique codim-0 class")
    return bad


def check_dimensions(P: StrataPoset) -> list[str]:
    report = verify_dimension_identities(P.g, P.n, force=True)
    return [f"#{i}: {msg}" for i, msg in report.failures]


def check_nerve(P: StrataPoset) -> list[str]:
    bad = []
    X = order_complex(P)
    if not boundary_squares_vanish(boundary_matrices(X)):
        bad.append("boundary of boundary is nonzero")
    H = homology(X)
    if H[0].betti != 1 or H[0].torsion or any(h.betti or h.torsion for h in H[1:]):
        bad.append("order complex is not acyclic: " + ", ".join(f"H{h.degree}={h}" for h in H))
    if euler_characteristic(X) != betti_euler_characteristic(H):
        bad.append("Euler characteristic mismatch")
    Y = order_complex(P, boundary_only=True)
    if Y.simplices and euler_characteristic(Y) != betti_euler_characteristic(homology(Y)):
        bad.append("boundary-only Euler characteristic mismatch")
    return bad


def check_round_trip(P: StrataPoset) -> list[str]:
    bad = []
    for i, G in enumerate(P.graphs):
        H = parse_graph(serialize_graph(G))
        if H != G or canonical_form(H) != P.keys[i]:
            bad.append(f"#{i} does not survive serialization")
    return bad


def check_relabel_invariance(P: StrataPoset, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for i, G in enumerate(P.graphs):
        perm = list(range(G.num_vertices))
        rng.shuffle(perm)
        if canonical_form(relabel(G, perm)) != P.keys[i]:
            bad.append(f"#{i} key changes under relabeling {perm}")
    return bad


SUITES: list[tuple[str, Callable[[StrataPoset], list[str]]]] = [
    ("validity", check_validity),
    ("closure", check_closure),
    ("poset", check_poset),
    ("dimensions", check_dimensions),
    ("relabel-invariance", check_relabel_invariance),
    ("contraction-order", check_order_independence),
    ("contraction-subsets", check_subset_sums),
    ("nerve", check_nerve),
    ("round-trip", check_round_trip),
]


def run_checks(g: int, n: int, **kwargs) -> list[CheckResult]:
    P = build_poset(g, n, **kwargs)
    results = []
    for name, suite in SUITES:
        problems = suite(P)
        detail = "; ".join(problems[:5]) + (f" (+{len(problems) - 5} more)" if len(problems) > 5 else "")
        results.append(CheckResult(name, not problems, detail))
    return results
