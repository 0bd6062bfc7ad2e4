"""JSON and DOT encodings of stable graphs.

Document layout::

    {"genus_total": 2, "legs": 1,
     "vertices": [{"genus": 0}, {"genus": 1}],
     "edges": [[0, 0], [0, 1]],
     "leg_map": {"1": 0}}

Vertex indices are 0-based, each edge is stored smaller index first, the
edge list is sorted, and ``leg_map`` keys are exactly "1".."legs".
"""

from __future__ import annotations

import json
from typing import Any

from .errors import StrataError
from .stable_graph import StableGraph, total_genus, validate


class GraphParseError(StrataError, ValueError):
    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class MalformedJSONError(GraphParseError):
    pass


class SchemaError(GraphParseError):
    pass


class StabilityViolationError(GraphParseError):
    pass


FIELDS = ("genus_total", "legs", "vertices", "edges", "leg_map")


def graph_document(G: StableGraph) -> dict[str, Any]:
    return {
        "genus_total": total_genus(G),
        "legs": G.n,
        "vertices": [{"genus": h} for h in G.genera],
        "edges": [list(e) for e in sorted(G.edges)],
        "leg_map": {str(i + 1): v for i, v in enumerate(G.legs)},
    }


def serialize_graph(G: StableGraph, *, indent: int | None = None) -> str:
    return json.dumps(graph_document(G), indent=indent)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _schema_problems(doc) -> list[str]:
    if not isinstance(doc, dict):
        return ["document: expected a JSON object"]
    problems = []
    missing = [k for k in FIELDS if k not in doc]
    extra = sorted(k for k in doc if k not in FIELDS)
    problems += [f"{k}: missing field" for k in missing]
    problems += [f"{k}: unknown field" for k in extra]
    if missing:
        return problems

    for k in ("genus_total", "legs"):
        if not _is_int(doc[k]) or doc[k] < 0:
            problems.append(f"{k}: expected a nonnegative integer")

    vertices = doc["vertices"]
    nv = 0
    if not isinstance(vertices, list) or not vertices:
        problems.append("vertices: expected a nonempty array")
    else:
        nv = len(vertices)
        for i, v in enumerate(vertices):
            if not isinstance(v, dict) or set(v) != {"genus"}:
                problems.append(f"vertices[{i}]: expected an object with the single field 'genus'")
            elif not _is_int(v["genus"]) or v["genus"] < 0:
                problems.append(f"vertices[{i}].genus: expected a nonnegative integer")

    edges = doc["edges"]
    if not isinstance(edges, list):
        problems.append("edges: expected an array")
    else:
        for i, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
                problems.append(f"edges[{i}]: expected a pair of vertex indices")
            elif not all(0 <= x < nv for x in e):
                problems.append(f"edges[{i}]: vertex index out of range 0..{nv - 1}")

    leg_map = doc["leg_map"]
    if not isinstance(leg_map, dict):
        problems.append("leg_map: expected an object")
    elif _is_int(doc["legs"]):
        expected = {str(i) for i in range(1, doc["legs"] + 1)}
        for key in sorted(set(leg_map) - expected):
            problems.append(f"leg_map[{key!r}]: labels must be exactly '1'..'{doc['legs']}'")
        for key in sorted(expected - set(leg_map), key=int):
            problems.append(f"leg_map[{key!r}]: missing label")
        for key, v in leg_map.items():
            if not _is_int(v) or not 0 <= v < nv:
                problems.append(f"leg_map[{key!r}]: vertex index out of range 0..{nv - 1}")
    return problems


def parse_graph(text: str) -> StableGraph:
    """Parse and validate a graph document.

    Raises :class:`MalformedJSONError`, :class:`SchemaError` or
    :class:`StabilityViolationError`, each carrying ``problems``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJSONError([f"line {exc.lineno}, column {exc.colno}: {exc.msg}"]) from None
    problems = _schema_problems(doc)
    if problems:
        raise SchemaError(problems)

    n = doc["legs"]
    G = StableGraph(
        tuple(v["genus"] for v in doc["vertices"]),
        tuple(tuple(e) for e in doc["edges"]),
        tuple(doc["leg_map"][str(i)] for i in range(1, n + 1)),
    )
    violations = validate(G)
    if violations:
        raise StabilityViolationError([v.message for v in violations])
    if total_genus(G) != doc["genus_total"]:
        raise SchemaError([f"genus_total: document says {doc['genus_total']}, graph has genus {total_genus(G)}"])
    return G


def graphs_dot(graphs: list[tuple[int, StableGraph]], name: str = "strata") -> str:
    """One cluster per stratum, drawing the dual graph itself (legs as point nodes)."""
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    for i, (codim, G) in enumerate(graphs):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="#{i} codim {codim}";')
        lines.append(f"    codim={codim};")
        for v, h in enumerate(G.genera):
            lines.append(f'    s{i}v{v} [label="{h}"];')
        for j, v in enumerate(G.legs):
            lines.append(f'    s{i}l{j + 1} [shape=plaintext, label="{j + 1}"];')
            lines.append(f"    s{i}v{v} -- s{i}l{j + 1};")
        for a, b in sorted(G.edges):
            lines.append(f"    s{i}v{a} -- s{i}v{b};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
