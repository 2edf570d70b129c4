"""Command-line front door.

Subcommands: rho, free, candidate, turan-number, brute, climb, audit.
Graphs come in as graph6 lines on stdin or via --in; reports go out as
JSON (schema 1, with the full run configuration embedded), CSV for brute
sweeps, or bare graph6 where that is the natural payload.  Exit codes:
0 success, 2 invalid parameters, 1 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .audit import structure_sets
from .constructions import extremal_candidate, linear_forest_turan_number, matching_candidate
from .forbidden import ForbiddenFamily, is_free
from .graph6 import g6_decode, g6_encode
from .search import brute_force_extremal, zykov_climb
from .spectral import DEFAULT_TOL, spectral_radius

SCHEMA_VERSION = 1


def _read_graphs(args) -> list:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    graphs = []
    for line in lines:
        line = line.strip()
        if line:
            graphs.append(g6_decode(line))
    if not graphs:
        raise ValueError("no input graphs (supply graph6 lines on stdin or --in)")
    return graphs


def _config(args) -> dict:
    skip = {"handler"}
    return {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in skip
    }


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n") if not out else None


def _emit_json(args, command: str, payload: dict) -> None:
    doc = {"schema": SCHEMA_VERSION, "command": command, "config": _config(args)}
    doc.update(payload)
    _emit(args, json.dumps(doc, indent=2) + "\n")


def _family(args) -> ForbiddenFamily:
    return ForbiddenFamily(args.k, args.s, getattr(args, "matching", False))


def _cmd_rho(args) -> int:
    results = []
    for g in _read_graphs(args):
        res = spectral_radius(g, args.tol)
        results.append(
            {
                "graph6": g6_encode(g),
                "n": g.n,
                "rho": res.rho,
                "lower": res.lower,
                "upper": res.upper,
                "z": res.z,
                "converged": res.converged,
            }
        )
    _emit_json(args, "rho", {"results": results})
    return 0


def _cmd_free(args) -> int:
    fam = _family(args)
    results = []
    for g in _read_graphs(args):
        verdict = is_free(g, fam)
        entry = {"graph6": g6_encode(g), "free": verdict.free}
        if verdict.witness is not None:
            entry["witness"] = {
                "kind": verdict.witness.kind,
                "vertices": list(verdict.witness.vertices),
                "edges": [list(e) for e in verdict.witness.edges],
            }
        results.append(entry)
    _emit_json(args, "free", {"results": results})
    return 0


def _cmd_candidate(args) -> int:
    if args.matching:
        cand = matching_candidate(args.n, args.k, args.s)
    else:
        cand = extremal_candidate(args.n, args.k, args.s)
    if args.format == "g6":
        _emit(args, g6_encode(cand.graph) + "\n")
        return 0
    payload = {
        "graph6": g6_encode(cand.graph),
        "case": cand.case,
        "n": cand.graph.n,
        "edges": cand.graph.edge_count,
        "partition": None
        if cand.partition is None
        else {
            "parts": list(cand.partition.parts),
            "remainder": cand.partition.remainder,
        },
    }
    _emit_json(args, "candidate", payload)
    return 0


def _cmd_turan_number(args) -> int:
    breakdown = linear_forest_turan_number(args.n, args.s)
    _emit_json(
        args,
        "turan-number",
        {
            "clique_term": breakdown.clique_term,
            "star_term": breakdown.star_term,
            "parity_constant": breakdown.parity_constant,
            "value": breakdown.value,
            "extremal_shape": breakdown.extremal_shape,
        },
    )
    return 0


def _cmd_brute(args) -> int:
    fam = _family(args)
    reports = [
        brute_force_extremal(
            n, fam, workers=args.workers, tol=args.tol, cap=args.cap
        )
        for n in args.n
    ]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "s", "candidate_rho", "best_rho", "verdict"])
        for rep in reports:
            writer.writerow(
                [rep.n, rep.k, rep.s, rep.candidate_rho, rep.best_rho, rep.verdict]
            )
        _emit(args, buf.getvalue())
        return 0
    _emit_json(args, "brute", {"reports": [rep.to_dict() for rep in reports]})
    return 0


def _cmd_climb(args) -> int:
    fam = _family(args)
    results = []
    for g in _read_graphs(args):
        end, trace = zykov_climb(g, fam, tol=args.tol)
        start_rho = spectral_radius(g, args.tol).rho
        end_rho = spectral_radius(end, args.tol).rho
        results.append(
            {
                "start_graph6": g6_encode(g),
                "end_graph6": g6_encode(end),
                "rho_start": start_rho,
                "rho_end": end_rho,
                "moves": trace,
            }
        )
    _emit_json(args, "climb", {"results": results})
    return 0


def _cmd_audit(args) -> int:
    fam = _family(args)
    results = [
        dict(structure_sets(g, fam, tol=args.tol).to_dict(), graph6=g6_encode(g))
        for g in _read_graphs(args)
    ]
    _emit_json(args, "audit", {"results": results})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specforest",
        description=(
            "spectral extremal toolkit for graphs avoiding large cliques "
            "and long linear forests"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graphs=False, family=False, tol=False):
        p.add_argument("--out", help="write the report to this path")
        if graphs:
            p.add_argument(
                "--in",
                dest="infile",
                help="file of graph6 lines (default: stdin)",
            )
        if family:
            p.add_argument("--k", type=int, required=True, help="clique parameter")
            p.add_argument("--s", type=int, required=True, help="edge parameter")
            p.add_argument(
                "--matching",
                action="store_true",
                help="forbid the (s+1)-edge matching instead of linear forests",
            )
        if tol:
            p.add_argument(
                "--tol", type=float, default=DEFAULT_TOL, help="bracket tolerance"
            )

    p = sub.add_parser("rho", help="spectral radius of input graphs")
    add_common(p, graphs=True, tol=True)
    p.set_defaults(handler=_cmd_rho)

    p = sub.add_parser("free", help="freeness check with witness")
    add_common(p, graphs=True, family=True)
    p.set_defaults(handler=_cmd_free)

    p = sub.add_parser("candidate", help="emit the extremal candidate graph")
    add_common(p, family=True)
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--format", choices=["json", "g6"], default="json")
    p.set_defaults(handler=_cmd_candidate)

    p = sub.add_parser("turan-number", help="linear-forest Turán number")
    add_common(p)
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--s", type=int, required=True, help="edge parameter")
    p.set_defaults(handler=_cmd_turan_number)

    p = sub.add_parser("brute", help="brute-force extremal search")
    add_common(p, family=True, tol=True)
    p.add_argument(
        "--n", type=int, nargs="+", required=True, help="orders to sweep"
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=8, help="enumeration cap")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=_cmd_brute)

    p = sub.add_parser("climb", help="certified local-search ascent")
    add_common(p, graphs=True, family=True, tol=True)
    p.set_defaults(handler=_cmd_climb)

    p = sub.add_parser("audit", help="structure sets and diagnostics")
    add_common(p, graphs=True, family=True, tol=True)
    p.set_defaults(handler=_cmd_audit)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
