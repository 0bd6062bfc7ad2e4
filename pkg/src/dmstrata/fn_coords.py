"""Fenchel-Nielsen dimension bookkeeping for each stratum.

A vertex of genus h and valence k is a surface of type (h, k); a pants
decomposition of it uses 3h - 3 + k cut curves and 2h - 2 + k pairs of
pants.  Only dimensions are modeled: each cut curve contributes a
length/twist pair (real dimension 2) and so does each node.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .enumeration import enumerate_strata
from .errors import StrataError
from .stable_graph import StableGraph, total_genus, validate


@dataclass(frozen=True)
class ChartDims:
    cut_system_size: int
    node_count: int
    pants_count: int
    stratum_dim_complex: int
    chart_dim_real: int

    def as_dict(self) -> dict:
        return asdict(self)


def chart_dims(G: StableGraph, g: int, n: int) -> ChartDims:
    bad = validate(G)
    if bad:
        raise StrataError("invalid stable graph: " + "; ".join(v.message for v in bad))
    if total_genus(G) != g or G.n != n:
        raise StrataError(f"graph has type ({total_genus(G)}, {G.n}), expected ({g}, {n})")
    cuts = 0
    pants = 0
    for v, h in enumerate(G.genera):
        k = G.valence(v)
        cuts += 3 * h - 3 + k
        pants += 2 * h - 2 + k
    nodes = G.num_edges
    # complex dimension of the open stratum equals the number of cut curves
    return ChartDims(
        cut_system_size=cuts,
        node_count=nodes,
        pants_count=pants,
        stratum_dim_complex=cuts,
        chart_dim_real=2 * (cuts + nodes),
    )


def dimension_failures(dims: ChartDims, g: int, n: int) -> list[str]:
    top = 3 * g - 3 + n
    out = []
    if dims.cut_system_size + dims.node_count != top:
        out.append(f"|C| + |N| = {dims.cut_system_size + dims.node_count} != {top}")
    if dims.chart_dim_real != 2 * top:
        out.append(f"chart real dimension {dims.chart_dim_real} != {2 * top}")
    if dims.pants_count != 2 * g - 2 + n:
        out.append(f"pants count {dims.pants_count} != {2 * g - 2 + n}")
    if dims.stratum_dim_complex != top - dims.node_count:
        out.append(f"stratum dimension {dims.stratum_dim_complex} != {top - dims.node_count}")
    return out


def vertex_failures(G: StableGraph) -> list[str]:
    out = []
    for v, h in enumerate(G.genera):
        k = G.valence(v)
        if 3 * h - 3 + k < 0:
            out.append(f"vertex {v}: 3h-3+k = {3 * h - 3 + k} < 0")
        if 2 * h - 2 + k < 1:
            out.append(f"vertex {v}: 2h-2+k = {2 * h - 2 + k} < 1")
    return out


@dataclass
class DimensionReport:
    g: int
    n: int
    rows: list[tuple[int, StableGraph, ChartDims]] = field(default_factory=list)
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_dimension_identities(g: int, n: int, **kwargs) -> DimensionReport:
    """Check the chart dimension identities on every stratum of type (g, n)."""
    report = DimensionReport(g, n)
    i = 0
    for codim, graphs in enumerate_strata(g, n, **kwargs):
        for G in graphs:
            dims = chart_dims(G, g, n)
            report.rows.append((codim, G, dims))
            problems = dimension_failures(dims, g, n) + vertex_failures(G)
            if codim != dims.node_count:
                problems.append(f"codim {codim} != node count {dims.node_count}")
            report.failures.extend((i, p) for p in problems)
            i += 1
    return report
