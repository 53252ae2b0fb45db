"""JSON and DOT interchange for graphs, token graphs and certificates.

Graph JSON::

    {"order": 6, "edges": [[0, 3], ...], "labels": {"0": "w_1", ...}}

A token graph adds a ``"token"`` block with ``k``, ``multiset``, the base
graph and the ``index`` list (token of each id). Certificates::

    {"kind": "cycle" | "cut" | "special" | "exhausted-nonham",
     "variant": "F2" | "M2", "m": 3, "n": 3,
     "cycle": [["w_1", "v_2"], ...]  or  "removed": [...],
     "component_count": 37, "labels": {"w_1": 0, ...}}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping, Sequence

import numpy as np

from .fanham import FanHamResult
from .graph import Graph, make_graph
from .oracle import OracleOutcome
from .tokens import TokenGraph, TokenVertex, rank_token

__all__ = [
    "graph_to_json",
    "graph_from_json",
    "token_graph_to_json",
    "token_graph_from_json",
    "load_graph",
    "dump_json",
    "to_dot",
    "result_to_json",
    "oracle_to_json",
    "resolve_entry",
]


def graph_to_json(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"order": g.order, "edges": g.edge_array.tolist()}
    if g.labels is not None:
        out["labels"] = {str(i): name for i, name in enumerate(g.labels)}
    return out


def graph_from_json(data: Mapping[str, Any]) -> Graph:
    order = int(data["order"])
    labels = None
    if data.get("labels"):
        raw = data["labels"]
        labels = [str(raw.get(str(i), i)) for i in range(order)]
    return make_graph(order, [tuple(e) for e in data.get("edges", [])], labels)


def token_graph_to_json(tg: TokenGraph) -> dict[str, Any]:
    out = graph_to_json(tg.graph)
    out["token"] = {
        "k": tg.k,
        "multiset": tg.multiset,
        "base": graph_to_json(tg.base),
        "index": tg.tokens.tolist(),
    }
    return out


def token_graph_from_json(data: Mapping[str, Any]) -> TokenGraph:
    graph = graph_from_json(data)
    meta = data["token"]
    k, multiset = int(meta["k"]), bool(meta["multiset"])
    base = graph_from_json(meta["base"])
    tokens = np.array(meta["index"], dtype=np.int64).reshape(-1, k)
    if len(tokens) != graph.order:
        raise ValueError("token index length does not match the graph order")
    for i, t in enumerate(tokens.tolist()):
        if rank_token(t, multiset) != i:
            raise ValueError(f"token index entry {i} ({t}) is out of colex order")
    tokens.setflags(write=False)
    return TokenGraph(base, k, multiset, graph, tokens)


def load_graph(path: str | Path) -> Graph | TokenGraph:
    data = json.loads(Path(path).read_text())
    if "token" in data:
        return token_graph_from_json(data)
    return graph_from_json(data)


def dump_json(obj: Any, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=1)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {json.dumps(name)} {{"]
    for u in range(g.order):
        lines.append(f"  {u} [label={json.dumps(g.label(u))}];")
    for a, b in g.edge_array.tolist():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _entry(t: TokenVertex, names: Sequence[str] | None) -> list[Any]:
    if names is None:
        return [int(x) for x in t]
    return [names[x] for x in t]


def result_to_json(res: FanHamResult) -> dict[str, Any]:
    names = res.labeling.names() if res.labeling is not None else None
    out: dict[str, Any] = {"kind": res.kind, "m": res.m, "n": res.n, "variant": res.variant}
    if names is not None:
        out["labels"] = {name: i for i, name in enumerate(names)}
    if res.cycle is not None:
        out["cycle"] = [_entry(t, names) for t in res.cycle.cycle]
    elif res.cut is not None:
        out["removed"] = [_entry(t, names) for t in res.cut.removed]
        out["removed_size"] = res.cut.removed_size
        out["component_count"] = res.cut.component_count
    else:
        out["reason"] = res.reason
    return out


def oracle_to_json(outcome: OracleOutcome, g: Graph | TokenGraph) -> dict[str, Any]:
    kind = {"hamiltonian": "cycle", "not_hamiltonian": "exhausted-nonham"}.get(
        outcome.status, "budget-exceeded"
    )
    out: dict[str, Any] = {"kind": kind, "nodes": outcome.nodes, "reason": outcome.reason}
    if isinstance(g, TokenGraph):
        out["variant"] = "M2" if g.multiset else "F2"
        if outcome.witness is not None:
            out["cycle"] = [[int(x) for x in g.token_of(i)] for i in outcome.witness]
    elif outcome.witness is not None:
        out["cycle"] = [int(i) for i in outcome.witness]
    return out


def resolve_entry(x: Any, cert_labels: Mapping[str, int], base: Graph) -> int:
    """Map a certificate element (label or id) to a base-graph vertex id."""
    if isinstance(x, int):
        return x
    if x in cert_labels:
        return int(cert_labels[x])
    if base.labels is not None and x in base.labels:
        return base.labels.index(x)
    return int(x)
