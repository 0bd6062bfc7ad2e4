"""The strata poset: isomorphism classes ordered by edge contraction.

Order convention: ``A <= B`` when ``B`` is a contraction of ``A``, so the
smooth graph is the maximum and the deepest strata are minimal.  Node
indices follow ``(codim, canonical key)``, hence index 0 is the maximum.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Union

from .canonical import CanonicalForm, canonical_form, canonical_labeling, edge_automorphisms
from .enumeration import enumerate_strata
from .errors import IdentificationError, UnknownStratumError
from .stable_graph import ContractionMove, StableGraph, contract_edge, contract_set, contract_with_map

NodeRef = Union[int, StableGraph, CanonicalForm]


@dataclass(frozen=True)
class Cover:
    source: int  # more degenerate class (one more edge)
    target: int
    multiplicity: int


@dataclass
class StrataPoset:
    g: int
    n: int
    graphs: list[StableGraph]
    keys: list[CanonicalForm]
    codims: list[int]
    covers: list[Cover]
    index: dict[CanonicalForm, int] = field(repr=False)
    # up[i] = indices j with i <= j (reflexive)
    up: list[frozenset[int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.graphs)

    def resolve(self, ref: NodeRef) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < len(self.graphs):
                raise UnknownStratumError(f"no stratum with index {ref}")
            return ref
        key = ref if isinstance(ref, CanonicalForm) else canonical_form(ref)
        try:
            return self.index[key]
        except KeyError:
            raise UnknownStratumError(f"class {key.key} is not a stratum of type ({self.g}, {self.n})") from None

    @property
    def maximum(self) -> int:
        return 0

    @property
    def minimal(self) -> list[int]:
        has_below = {c.target for c in self.covers}
        return [i for i in range(len(self.graphs)) if i not in has_below]

    def leq(self, a: int, b: int) -> bool:
        return b in self.up[a]


def build_poset(g: int, n: int, **kwargs) -> StrataPoset:
    levels = enumerate_strata(g, n, **kwargs)
    graphs, codims = [], []
    for codim, members in levels:
        graphs.extend(members)
        codims.extend([codim] * len(members))
    keys = [canonical_form(G, check=False) for G in graphs]
    index = {k: i for i, k in enumerate(keys)}

    covers = []
    for i, G in enumerate(graphs):
        images = Counter(index[canonical_labeling(contract_edge(G, e))[0]] for e in range(G.num_edges))
        covers.extend(Cover(i, j, m) for j, m in sorted(images.items()))

    above: list[set[int]] = [set() for _ in graphs]
    for c in covers:
        above[c.source].add(c.target)
    up: list[frozenset[int]] = [frozenset()] * len(graphs)
    # targets always have smaller codim, hence smaller index
    for i in range(len(graphs)):
        acc = {i}
        for j in above[i]:
            acc |= up[j]
        up[i] = frozenset(acc)
    return StrataPoset(g, n, graphs, keys, codims, covers, index, up)


def closure_contains(P: StrataPoset, a: NodeRef, b: NodeRef) -> bool:
    """True iff ``b`` is obtained from ``a`` by contracting some set of edges."""
    return P.leq(P.resolve(a), P.resolve(b))


def contraction_profile(G: StableGraph) -> Counter:
    """Canonical class of ``G / A`` for every edge subset ``A``, with multiplicities."""
    out: Counter = Counter()
    for r in range(G.num_edges + 1):
        for subset in itertools.combinations(range(G.num_edges), r):
            out[canonical_labeling(contract_set(G, subset))[0]] += 1
    return out


def count_contraction_subsets(G: StableGraph, H: StableGraph) -> int:
    """Number of edge subsets ``A`` of ``G`` with ``G / A`` isomorphic to ``H``."""
    r = G.num_edges - H.num_edges
    if r < 0:
        return 0
    target = canonical_labeling(H)[0]
    return sum(
        1
        for subset in itertools.combinations(range(G.num_edges), r)
        if canonical_labeling(contract_set(G, subset))[0] == target
    )


def count_contraction_orbits(G: StableGraph, H: StableGraph) -> int:
    """Like :func:`count_contraction_subsets`, counting subsets up to Aut(G)."""
    r = G.num_edges - H.num_edges
    if r < 0:
        return 0
    target = canonical_labeling(H)[0]
    perms = list(edge_automorphisms(G))
    orbits = set()
    for subset in itertools.combinations(range(G.num_edges), r):
        if canonical_labeling(contract_set(G, subset))[0] != target:
            continue
        orbits.add(min(tuple(sorted(p[e] for e in subset)) for p in perms))
    return len(orbits)


def isotropy_rank(G: StableGraph) -> int:
    """Rank of the free abelian group of Dehn twists about the nodes."""
    return G.num_edges


def compose_contractions(
    G: StableGraph, first: ContractionMove | Iterable[int], second: ContractionMove | Iterable[int]
) -> ContractionMove:
    """Express "contract ``first`` on G, then ``second`` on the result" as one move on G.

    ``second`` uses the edge indices of ``G / first``.
    """
    first = first if isinstance(first, ContractionMove) else ContractionMove(frozenset(first))
    second = second if isinstance(second, ContractionMove) else ContractionMove(frozenset(second))
    _, survival = contract_with_map(G, first.edge_set)
    preimage = {new: old for old, new in survival.items()}
    missing = sorted(e for e in second.edge_set if e not in preimage)
    if missing:
        raise IdentificationError(f"edges {missing} are not edges of the contracted graph")
    return ContractionMove(first.edge_set | {preimage[e] for e in second.edge_set})


def hasse_dot(P: StrataPoset) -> str:
    """DOT digraph of the cover relation; arrows point from a class to its contractions."""
    lines = [f'digraph "strata_{P.g}_{P.n}" {{', "  rankdir=TB;"]
    for codim in sorted(set(P.codims)):
        members = [i for i, c in enumerate(P.codims) if c == codim]
        lines.append(f"  subgraph codim_{codim} {{")
        lines.append("    rank=same;")
        for i in members:
            G = P.graphs[i]
            label = f"V={G.num_vertices} E={G.num_edges} h={list(G.genera)}"
            lines.append(f'    n{i} [rank={codim}, label="{label}"];')
        lines.append("  }")
    for c in P.covers:
        lines.append(f'  n{c.source} -> n{c.target} [label="{c.multiplicity}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
