"""Command-line interface.

Exit status: 0 on success, 1 when a check or oracle diff fails, 2 on
usage errors (including the desk-scale guard rail).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .canonical import automorphism_count, automorphism_count_extended
from .checks import run_checks
from .enumeration import MAX_DEPTH, check_guard, enumerate_strata
from .errors import GuardRailError, UnstableTypeError
from .fn_coords import verify_dimension_identities
from .nerve import boundary_matrices, boundary_squares_vanish, euler_characteristic, homology, order_complex
from .serialize import graph_document, graphs_dot
from .strata import build_poset, hasse_dot, isotropy_rank


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> tuple[int, str]:
    levels = enumerate_strata(args.genus, args.legs, force=args.force)
    flat = [(codim, G) for codim, graphs in levels for G in graphs]
    if args.format == "dot":
        return 0, graphs_dot(flat, f"strata_{args.genus}_{args.legs}")
    if args.format == "json":
        from .canonical import canonical_form

        strata = [
            {
                "codim": codim,
                "key": canonical_form(G).as_list(),
                "automorphisms": automorphism_count(G),
                "automorphisms_extended": automorphism_count_extended(G),
                "graph": graph_document(G),
            }
            for codim, G in flat
        ]
        doc = {"genus": args.genus, "legs": args.legs, "counts": [len(g) for _, g in levels], "strata": strata}
        return 0, _dump(doc)
    rows = [
        [codim, G.num_vertices, G.num_edges, automorphism_count(G), list(G.genera), [list(e) for e in G.edges], list(G.legs)]
        for codim, G in flat
    ]
    return 0, _table(["codim", "V", "E", "aut", "genera", "edges", "legs"], rows)


def cmd_poset(args) -> tuple[int, str]:
    P = build_poset(args.genus, args.legs, force=args.force)
    if args.dot:
        return 0, hasse_dot(P)
    doc = {
        "genus": P.g,
        "legs": P.n,
        "nodes": [
            {"index": i, "codim": P.codims[i], "isotropy_rank": isotropy_rank(G), "key": P.keys[i].as_list()}
            for i, G in enumerate(P.graphs)
        ],
        "covers": [{"source": c.source, "target": c.target, "multiplicity": c.multiplicity} for c in P.covers],
    }
    return 0, _dump(doc)


def cmd_dims(args) -> tuple[int, str]:
    report = verify_dimension_identities(args.genus, args.legs, force=args.force)
    fields = ["cut_system_size", "node_count", "pants_count", "stratum_dim_complex", "chart_dim_real"]
    if args.format == "json":
        rows = [{"index": i, "codim": codim, **dims.as_dict()} for i, (codim, _, dims) in enumerate(report.rows)]
        doc = {"genus": args.genus, "legs": args.legs, "rows": rows, "failures": [f"#{i}: {m}" for i, m in report.failures]}
        out = _dump(doc)
    else:
        rows = [[i, codim] + [getattr(dims, f) for f in fields] for i, (codim, _, dims) in enumerate(report.rows)]
        out = _table(["#", "codim", "|C|", "|N|", "pants", "dim_C", "chart_dim_R"], rows)
        out += "".join(f"FAIL #{i}: {m}\n" for i, m in report.failures)
    return (0 if report.ok else 1), out


def cmd_homology(args) -> tuple[int, str]:
    P = build_poset(args.genus, args.legs, force=args.force)
    X = order_complex(P, boundary_only=args.boundary_only)
    groups = homology(X)
    if args.format == "table":
        rows = [[h.degree, h.betti, list(h.torsion), str(h)] for h in groups]
        out = _table(["degree", "betti", "torsion", "group"], rows)
        out += f"euler_characteristic {euler_characteristic(X)}\n"
        return 0, out
    doc = {
        "genus": P.g,
        "legs": P.n,
        "boundary_only": args.boundary_only,
        "simplex_counts": X.counts(),
        "euler_characteristic": euler_characteristic(X),
        "boundary_squared_zero": boundary_squares_vanish(boundary_matrices(X)),
        "homology": [{"degree": h.degree, "betti": h.betti, "torsion": list(h.torsion)} for h in groups],
    }
    return 0, _dump(doc)


def cmd_check(args) -> tuple[int, str]:
    results = run_checks(args.genus, args.legs, force=args.force)
    out = "".join(r.line() + "\n" for r in results)
    return (0 if all(r.ok for r in results) else 1), out


def cmd_oracle(args) -> tuple[int, str]:
    check_guard(args.genus, args.legs, args.force)
    graphs = [G for _, gs in enumerate_strata(args.genus, args.legs, force=args.force) for G in gs]
    missing, extra = oracle.diff_against(args.genus, args.legs, graphs)
    lines = [f"engine {len(graphs)} strata, oracle {len(graphs) - len(extra) + len(missing)} strata"]
    lines += [f"missing {k}" for k in missing]
    lines += [f"extra {k}" for k in extra]
    lines.append("OK" if not (missing or extra) else "DIFF")
    return (0 if not (missing or extra) else 1), "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmstrata", description="Stable graph strata of moduli of stable curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--genus", "-g", type=int, required=True)
        p.add_argument("--legs", "-n", type=int, required=True)
        p.add_argument("--force", action="store_true", help=f"allow 3g-3+n > {MAX_DEPTH}")
        p.set_defaults(func=func)
        return p

    add("enumerate", cmd_enumerate, "list strata").add_argument("--format", choices=["json", "dot", "table"], default="table")
    add("poset", cmd_poset, "strata poset with cover multiplicities").add_argument("--dot", action="store_true", help="Hasse diagram in DOT")
    add("dims", cmd_dims, "Fenchel-Nielsen dimension table").add_argument("--format", choices=["json", "table"], default="table")
    p = add("homology", cmd_homology, "integral homology of the order complex")
    p.add_argument("--boundary-only", action="store_true", help="drop the smooth stratum")
    p.add_argument("--format", choices=["json", "table"], default="json")
    add("check", cmd_check, "run all invariant suites")
    add("oracle", cmd_oracle, "diff the engine against the brute-force enumerator")
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        code, out = args.func(args)
    except (GuardRailError, UnstableTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
