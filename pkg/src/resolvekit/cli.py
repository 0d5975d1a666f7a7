"""Command-line front end.

Subcommands: ``gen`` (emit an edge list), ``twins``, ``check`` (verify a
vertex set from a file), ``solve``, ``kappa``, ``certify``, ``report``.
Output is deterministic text or JSON; vertices are addressed by label
only. Exit codes: 0 success/proven, 1 check failure / failed verdict /
infeasible k, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import generators
from .certificates import certify_benes, certify_butterfly, certify_all, \
    certify_silicate
from .graph import Graph, GraphError, all_pairs_distances, format_edge_list
from .resolvability import check_k_resolving, kappa as kappa_of, twin_partition
from .solver import InfeasibleKError, solve_k_metric_dimension


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int = 2):
        super().__init__(message)
        self.exit_code = exit_code


# family name -> (constructor, parameter names)
FAMILIES = {
    "bf": (generators.butterfly, ("r",)),
    "benes": (generators.benes, ("r",)),
    "sl": (generators.silicate, ("n",)),
    "hn": (generators.circumcoronene, ("n",)),
    "path": (generators.path, ("n",)),
    "cycle": (generators.cycle, ("n",)),
    "kn": (generators.complete, ("n",)),
    "kst": (generators.complete_bipartite, ("s", "t")),
    "ks-plus-empty": (generators.join_complete_empty, ("s", "t")),
    "ks-plus-k1kt": (generators.join_complete_k1_kt, ("s", "t")),
    "random": (generators.random_connected_graph, ("n",)),
}

CERTIFIERS = {
    "bf": certify_butterfly,
    "benes": certify_benes,
    "sl": certify_silicate,
}


def build_family(family: str, params: Sequence[int], seed: int) -> Graph:
    if family not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise CLIError(f"unknown family {family!r} (known: {known})")
    func, names = FAMILIES[family]
    if len(params) != len(names):
        raise CLIError(f"family {family!r} takes {len(names)} parameter(s) "
                       f"({' '.join(names)}), got {len(params)}")
    try:
        if family == "random":
            return func(params[0], seed=seed)
        return func(*params)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc


def _read_set_file(path: str, g: Graph) -> list[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CLIError(f"cannot read set file: {exc}") from exc
    members = []
    for raw in lines:
        label = raw.strip()
        if not label or label.startswith("#"):
            continue
        try:
            members.append(g.vertex(label))
        except GraphError:
            raise CLIError(f"unknown vertex label {label!r} in {path}") from None
    return members


def _emit(payload: dict, text: str, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_gen(args) -> int:
    g = build_family(args.family, args.params, args.seed)
    try:
        sys.stdout.write(format_edge_list(g))
    except GraphError as exc:
        raise CLIError(str(exc)) from exc
    return 0


def _cmd_twins(args) -> int:
    g = build_family(args.family, args.params, args.seed)
    part = twin_partition(g)
    nontrivial = part.nontrivial()
    singletons = sum(1 for c in part.classes if len(c.members) == 1)
    payload = {
        "schema": "1",
        "family": args.family,
        "params": list(args.params),
        "classes": [{"kind": c.kind, "labels": [g.labels[v] for v in c.members]}
                    for c in nontrivial],
        "twin_vertex_count": sum(len(c.members) for c in nontrivial),
        "singletons": singletons,
    }
    lines = [f"graph {args.family} {' '.join(map(str, args.params))} "
             f"(n={g.n}, m={g.m})"]
    for c in nontrivial:
        lines.append(f"{c.kind}: " + " ".join(g.labels[v] for v in c.members))
    lines.append(f"twin vertices: {payload['twin_vertex_count']} "
                 f"(singleton classes: {singletons})")
    _emit(payload, "\n".join(lines), args.output)
    return 0


def _cmd_check(args) -> int:
    g = build_family(args.family, args.params, args.seed)
    dm = all_pairs_distances(g)
    members = _read_set_file(args.set, g)
    result = check_k_resolving(g, dm, members, args.k)
    payload = {
        "schema": "1",
        "k": args.k,
        "set_size": len(set(members)),
        "pass": result.ok,
        "violating_pair": None,
    }
    if result.ok:
        _emit(payload, f"PASS: set of size {payload['set_size']} is "
                       f"{args.k}-resolving", args.output)
        return 0
    x, y = result.violating_pair
    payload["violating_pair"] = [g.labels[x], g.labels[y]]
    _emit(payload, f"FAIL: pair {g.labels[x]} {g.labels[y]} has fewer than "
                   f"{args.k} distinguishers in the set", args.output)
    return 1


def _cmd_solve(args) -> int:
    g = build_family(args.family, args.params, args.seed)
    dm = all_pairs_distances(g)
    try:
        result = solve_k_metric_dimension(g, dm, args.k, budget=args.budget)
    except InfeasibleKError as exc:
        if args.output == "json":
            pair = list(exc.pair) if exc.pair else None
            print(json.dumps({"schema": "1", "k": args.k, "infeasible": True,
                              "witness_pair": pair}, indent=2))
        else:
            print(f"INFEASIBLE: {exc}")
        return 1
    payload = result.to_json_dict(g)
    lines = [f"k={result.k} value={result.value} "
             f"complete={str(result.complete).lower()} "
             f"nodes={result.nodes_explored}",
             "forced  (" + str(len(result.forced)) + "): "
             + " ".join(g.labels[v] for v in result.forced),
             "witness (" + str(len(result.witness)) + "): "
             + " ".join(g.labels[v] for v in result.witness)]
    _emit(payload, "\n".join(lines), args.output)
    return 0


def _cmd_kappa(args) -> int:
    g = build_family(args.family, args.params, args.seed)
    dm = all_pairs_distances(g)
    try:
        value = kappa_of(g, dm)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    _emit({"schema": "1", "kappa": value}, f"kappa = {value}", args.output)
    return 0


def _cmd_certify(args) -> int:
    if args.family not in CERTIFIERS:
        known = ", ".join(sorted(CERTIFIERS))
        raise CLIError(f"certify supports families {known}, got {args.family!r}")
    if len(args.params) != 1:
        raise CLIError("certify takes exactly one parameter")
    try:
        cert = CERTIFIERS[args.family](args.params[0])
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    _emit(cert.to_json_dict(), cert.to_text(), args.output)
    return 0 if cert.verdict == "proven" else 1


def _cmd_report(args) -> int:
    report = certify_all(max_r=args.max_r, max_n=args.max_n)
    _emit(report.to_json_dict(), report.to_text(), args.output)
    return 0 if report.all_proven else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resolvekit",
        description="Interconnection-network resolvability toolkit: "
                    "generators, twin detection, k-resolving verification, "
                    "exact solving, and closed-form certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p, with_output=True):
        p.add_argument("family", help="graph family name")
        p.add_argument("params", nargs="*", type=int, help="family parameters")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized graph generation")
        if with_output:
            p.add_argument("--output", choices=("text", "json"),
                           default="text")

    p = sub.add_parser("gen", help="emit a graph as an edge list")
    add_family_args(p, with_output=False)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("twins", help="twin classes of a graph")
    add_family_args(p)
    p.set_defaults(func=_cmd_twins)

    p = sub.add_parser("check", help="verify a vertex-set file")
    add_family_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", required=True, metavar="PATH",
                   help="file with one vertex label per line ('#' comments)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="exact k-metric dimension")
    add_family_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, metavar="NODES",
                   help="search-node limit")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("kappa", help="largest feasible k")
    add_family_args(p)
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("certify", help="closed-form certificate for bf/benes/sl")
    add_family_args(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("report", help="run all certificates")
    p.add_argument("--max-r", type=int, default=5)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except InfeasibleKError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
