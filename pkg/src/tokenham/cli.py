"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 usage error,
3 a construction failed its own verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import graph as gc
from .errors import ConstructionInvalid, InvalidHamPath, RangeExceeded, TokenHamError
from .fanham import f2_fan_cycle, lift_to_join, m2_fan_cycle
from .formats import (
    dump_json,
    graph_to_json,
    load_graph,
    oracle_to_json,
    resolve_entry,
    result_to_json,
    to_dot,
    token_graph_to_json,
)
from .graph import Graph
from .oracle import (
    DEFAULT_NODE_BUDGET,
    brute_force_hamiltonian,
    cycle_violation,
    hamiltonian_path,
    verify_cut_certificate,
)
from .sweep import sweep
from .tokens import TokenGraph, multiset_token_graph, token_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


_ARITY = {"fan": 2, "bipartite": 2, "path": 1, "cycle": 1, "complete": 1, "empty": 1}


def build_family(name: str, args: Sequence[str]) -> Graph:
    """Graph from a family name and its arguments, e.g. ``("fan", ["3", "3"])``."""
    if name == "file":
        if len(args) != 1:
            raise UsageError("file takes exactly one path")
        g = load_graph(args[0])
        return g.graph if isinstance(g, TokenGraph) else g
    if name == "join":
        if len(args) != 2:
            raise UsageError("join takes two operands like empty:2 path:3")
        return gc.join(parse_operand(args[0]), parse_operand(args[1]))
    if name not in _ARITY:
        raise UsageError(f"unknown family {name!r}")
    if len(args) != _ARITY[name]:
        raise UsageError(f"{name} takes {_ARITY[name]} integer argument(s)")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise UsageError(f"{name} arguments must be integers") from None
    try:
        if name == "fan":
            return gc.fan(*nums)[0]
        maker = {
            "bipartite": gc.complete_bipartite,
            "path": gc.path_graph,
            "cycle": gc.cycle_graph,
            "complete": gc.complete_graph,
            "empty": gc.empty_graph,
        }[name]
        return maker(*nums)
    except TokenHamError as exc:
        raise UsageError(str(exc)) from None


def parse_operand(text: str) -> Graph:
    """``family:a,b`` or ``file:path``."""
    name, sep, rest = text.partition(":")
    if not sep:
        raise UsageError(f"operand {text!r} should look like family:args")
    args = [rest] if name == "file" else [a for a in rest.split(",") if a]
    return build_family(name, args)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n")


def cmd_build(ns: argparse.Namespace) -> int:
    g = build_family(ns.family, ns.args)
    _emit(dump_json(graph_to_json(g)), ns.out)
    if ns.dot:
        dot = to_dot(g, " ".join([ns.family, *ns.args]))
        if ns.out is None:
            print(dot, end="")
        else:
            Path(ns.out).with_suffix(".dot").write_text(dot)
    return EXIT_OK


def cmd_token(ns: argparse.Namespace) -> int:
    g = load_graph(ns.graph)
    if isinstance(g, TokenGraph):
        g = g.graph
    try:
        tg = multiset_token_graph(g, ns.k) if ns.multiset else token_graph(g, ns.k)
    except TokenHamError as exc:
        raise UsageError(str(exc)) from None
    _emit(dump_json(token_graph_to_json(tg)), ns.out)
    if ns.dot and ns.out is not None:
        Path(ns.out).with_suffix(".dot").write_text(to_dot(tg.graph, repr(tg)))
    print(f"{'M' if ns.multiset else 'F'}_{ns.k}: {tg.order} vertices, {tg.graph.size} edges", file=sys.stderr)
    return EXIT_OK


def _describe(res) -> str:
    head = f"{res.variant}(F_{{{res.m},{res.n}}})"
    if res.kind == "cycle":
        return f"{head}: Hamiltonian cycle on {len(res.cycle.cycle)} vertices\n{res.listing()}"
    if res.kind == "cut":
        c = res.cut
        return (
            f"{head}: not Hamiltonian, cut |A|={c.removed_size}, components={c.component_count}"
            f" > {c.removed_size}\nA = {res.listing()}"
        )
    return f"{head}: {res.reason}"


def cmd_ham(ns: argparse.Namespace) -> int:
    if ns.m < 1 or ns.n < 1:
        raise UsageError("m and n must be positive")
    res = (m2_fan_cycle if ns.variant == "M2" else f2_fan_cycle)(ns.m, ns.n)
    cert = result_to_json(res)
    if ns.out is not None:
        dump_json(cert, ns.out)
    print(dump_json(cert) if ns.format == "json" else _describe(res))
    return EXIT_OK


def _fail(msg: str) -> int:
    print(f"FAIL: {msg}")
    return EXIT_FAIL


def cmd_verify(ns: argparse.Namespace) -> int:
    obj = load_graph(ns.graph)
    cert = json.loads(Path(ns.cert).read_text())
    kind = cert.get("kind")
    variant = cert.get("variant")
    tg: TokenGraph | None
    if isinstance(obj, TokenGraph):
        tg, base = obj, obj.base
        if variant is not None and (variant == "M2") != tg.multiset:
            return _fail(f"certificate is for {variant} but the graph file holds the other variant")
    else:
        base = obj
        tg = None
        if variant in ("F2", "M2"):
            tg = multiset_token_graph(base, 2) if variant == "M2" else token_graph(base, 2)
    target = tg.graph if tg is not None else base
    labels = cert.get("labels", {})

    def to_id(entry) -> int:
        if tg is None:
            return int(entry)
        return tg.id_of([resolve_entry(x, labels, base) for x in entry])

    try:
        if kind == "cycle":
            seq = [to_id(e) for e in cert["cycle"]]
            problem = cycle_violation(target, seq)
            if problem is not None:
                return _fail(problem)
            print(f"OK: Hamiltonian cycle on {len(seq)} vertices")
            return EXIT_OK
        if kind == "cut":
            removed = [to_id(e) for e in cert["removed"]]
            ok, count = verify_cut_certificate(target, removed)
            size = len(set(removed))
            claimed = cert.get("component_count")
            if claimed is not None and claimed != count:
                return _fail(f"certificate claims {claimed} components, recomputed {count}")
            if not ok:
                return _fail(f"{count} components is not more than {size} removed")
            print(f"OK: {count} > {size}")
            return EXIT_OK
        if kind == "special" and variant == "M2":
            low = [i for i in range(target.order) if target.degree(i) < 2]
            if not low:
                return _fail("no vertex of degree < 2")
            print(f"OK: vertex {low[0]} has degree {target.degree(low[0])}")
            return EXIT_OK
        if kind in ("special", "exhausted-nonham"):
            out = brute_force_hamiltonian(target, ns.oracle_budget)
            if out.status != "not_hamiltonian":
                return _fail(f"oracle says {out.status}")
            print(f"OK: not Hamiltonian ({out.reason})")
            return EXIT_OK
    except (TokenHamError, KeyError, ValueError, TypeError) as exc:
        return _fail(f"malformed certificate: {exc}")
    raise UsageError(f"unknown certificate kind {kind!r}")


def cmd_sweep(ns: argparse.Namespace) -> int:
    report = sweep(
        ns.n_max,
        ns.m_slack,
        oracle_budget=ns.oracle_budget,
        oracle_max_order=ns.oracle_max_order,
        jobs=ns.jobs,
    )
    if ns.out is not None:
        dump_json(report.to_json(), ns.out)
    print(dump_json(report.to_json()) if ns.format == "json" else report.to_table())
    return EXIT_OK if not report.disagreements() else EXIT_FAIL


def _plain(path: str) -> Graph:
    g = load_graph(path)
    return g.graph if isinstance(g, TokenGraph) else g


def cmd_lift(ns: argparse.Namespace) -> int:
    g1, g2 = _plain(ns.g1), _plain(ns.g2)
    if ns.path is not None:
        ham_path = [int(x) for x in ns.path.split(",")]
    else:
        found = hamiltonian_path(g2, ns.oracle_budget)
        if not found.found:
            return _fail(f"second graph has no Hamiltonian path ({found.status})")
        ham_path = list(found.witness)
    try:
        res = lift_to_join(g1, g2, ham_path, multiset=ns.multiset)
    except (InvalidHamPath, RangeExceeded) as exc:
        return _fail(str(exc))
    cert = result_to_json(res)
    if ns.out is not None:
        dump_json(cert, ns.out)
    if ns.format == "json":
        print(dump_json(cert))
    else:
        print(f"{res.variant}(G1+G2), m={res.m}, n={res.n}: Hamiltonian cycle on {len(res.cycle.cycle)} vertices")
        print(res.listing())
    return EXIT_OK


def cmd_oracle(ns: argparse.Namespace) -> int:
    obj = load_graph(ns.graph)
    target = obj.graph if isinstance(obj, TokenGraph) else obj
    out = hamiltonian_path(target, ns.oracle_budget) if ns.path else brute_force_hamiltonian(target, ns.oracle_budget)
    data = oracle_to_json(out, obj)
    if ns.out is not None:
        dump_json(data, ns.out)
    print(dump_json(data) if ns.format == "json" else f"{out.status} ({out.nodes} nodes) {out.reason}".rstrip())
    return EXIT_OK if out.status != "budget_exceeded" else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tokenham", description="Token graphs of fans and joins: cycles, cuts, checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt: bool = True):
        sp.add_argument("--out", metavar="PATH", help="write the JSON result here")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("build", help="build a graph: fan M N | path N | cycle N | complete N | bipartite M N | empty N | join A B | file PATH")
    sp.add_argument("family")
    sp.add_argument("args", nargs="*")
    sp.add_argument("--dot", action="store_true", help="also emit DOT")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("token", help="token graph of a graph file")
    sp.add_argument("graph")
    sp.add_argument("-k", type=int, default=2)
    sp.add_argument("--multiset", action="store_true")
    sp.add_argument("--dot", action="store_true")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_token)

    sp = sub.add_parser("ham", help="cycle or non-Hamiltonicity certificate for F2/M2 of a fan")
    sp.add_argument("variant", choices=("F2", "M2"))
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    common(sp)
    sp.set_defaults(func=cmd_ham)

    sp = sub.add_parser("verify", help="check a certificate against a graph file")
    sp.add_argument("graph")
    sp.add_argument("cert")
    sp.add_argument("--oracle-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="cross-check constructions, verifier and oracle over (m, n)")
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--m-slack", type=int, default=2)
    sp.add_argument("--oracle-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--oracle-max-order", type=int, default=24)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("lift", help="Hamiltonian cycle of F2/M2 of a join G1+G2")
    sp.add_argument("g1")
    sp.add_argument("g2")
    sp.add_argument("--multiset", action="store_true")
    sp.add_argument("--path", help="comma-separated Hamiltonian path of G2 (found by search if omitted)")
    sp.add_argument("--oracle-budget", type=int, default=DEFAULT_NODE_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("oracle", help="exhaustive Hamiltonian cycle/path search on a graph file")
    sp.add_argument("graph")
    sp.add_argument("--path", action="store_true", help="search for a Hamiltonian path instead")
    sp.add_argument("--oracle-budget", type=int, default=DEFAULT_NODE_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tokenham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionInvalid as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OSError, json.JSONDecodeError) as exc:
        print(f"tokenham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
