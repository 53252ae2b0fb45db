"""Independent checks: cycle verification, cut certificates, exhaustive search.

Nothing here knows how the fan constructions work. The verifiers only
look at the graph, and the search is a plain backtracking search over
bitmask neighbourhoods.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import InvalidCut
from .graph import Graph, count_components, delete_vertices

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "OracleOutcome",
    "cycle_violation",
    "verify_hamiltonian_cycle",
    "path_violation",
    "verify_hamiltonian_path",
    "verify_cut_certificate",
    "brute_force_hamiltonian",
    "hamiltonian_path",
    "bipartite_sides",
]

DEFAULT_NODE_BUDGET = 10**8

Status = Literal["hamiltonian", "not_hamiltonian", "budget_exceeded"]


def _sequence_violation(g: Graph, seq: Sequence[int], closed: bool) -> str | None:
    what = "cycle" if closed else "path"
    if len(seq) != g.order:
        return f"{what} has {len(seq)} vertices but the graph has {g.order}"
    if closed and g.order < 3:
        return f"a cycle needs at least 3 vertices, graph has {g.order}"
    arr = np.asarray(seq, dtype=np.int64)
    out = (arr < 0) | (arr >= g.order)
    if out.any():
        i = int(np.flatnonzero(out)[0])
        return f"entry {i} ({int(arr[i])}) is not a vertex"
    seen: dict[int, int] = {}
    for i, v in enumerate(arr.tolist()):
        if v in seen:
            return f"vertex {v} repeats at positions {seen[v]} and {i}"
        seen[v] = i
    if len(arr) < 2:
        return None
    nxt = np.roll(arr, -1) if closed else arr[1:]
    cur = arr if closed else arr[:-1]
    ok = g.has_edges(cur, nxt)
    if not ok.all():
        i = int(np.flatnonzero(~ok)[0])
        j = (i + 1) % len(arr)
        return f"positions {i} and {j}: {int(cur[i])} and {int(nxt[i])} are not adjacent"
    return None


def cycle_violation(g: Graph, cycle: Sequence[int]) -> str | None:
    """First reason ``cycle`` is not a Hamiltonian cycle of ``g``, or None."""
    return _sequence_violation(g, cycle, closed=True)


def verify_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    return cycle_violation(g, cycle) is None


def path_violation(g: Graph, path: Sequence[int]) -> str | None:
    return _sequence_violation(g, path, closed=False)


def verify_hamiltonian_path(g: Graph, path: Sequence[int]) -> bool:
    return path_violation(g, path) is None


def verify_cut_certificate(g: Graph, removed: Iterable[int]) -> tuple[bool, int]:
    """Recompute the components of ``g - removed`` from scratch.

    Returns ``(count > |removed|, count)``; a true flag rules out a
    Hamiltonian cycle.
    """
    s = {int(x) for x in removed}
    if not s:
        raise InvalidCut("removed set is empty")
    if any(not 0 <= x < g.order for x in s):
        raise InvalidCut("removed set contains a non-vertex")
    if len(s) >= g.order:
        raise InvalidCut("removed set must be a proper subset of the vertices")
    rest, _ = delete_vertices(g, s)
    count = count_components(rest)
    return count > len(s), count


@dataclass(frozen=True)
class OracleOutcome:
    """Result of an exhaustive search.

    ``witness`` holds the cycle (or path) when one is found. ``reason``
    names the argument behind a negative answer.
    """

    status: Status
    nodes: int = 0
    witness: tuple[int, ...] | None = None
    kind: Literal["cycle", "path"] = "cycle"
    reason: str = field(default="", compare=False)

    @property
    def found(self) -> bool:
        return self.status == "hamiltonian"

    @property
    def exhausted(self) -> bool:
        return self.status == "not_hamiltonian"


class _BudgetExceeded(Exception):
    pass


def bipartite_sides(g: Graph) -> tuple[int, int] | None:
    """Colour class sizes if ``g`` is connected and bipartite, else None."""
    if g.order == 0:
        return None
    colour = [-1] * g.order
    colour[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u).tolist():
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                return None
    if -1 in colour:
        return None
    ones = sum(colour)
    return g.order - ones, ones


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycle_search(masks: list[int], start: int, budget: int) -> tuple[list[int] | None, int]:
    n = len(masks)
    full = (1 << n) - 1
    path = [start]
    nodes = 0

    def rec(cur: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        unvisited = full & ~visited
        if not unvisited:
            return bool(masks[cur] >> start & 1)
        if not masks[start] & unvisited:
            return False
        avail = unvisited | (1 << cur) | (1 << start)
        # free cycle slots: two for unvisited vertices, one each for the path ends
        need = {}
        forced = []
        for u in _iter_bits(unvisited):
            nb = masks[u] & avail
            d = nb.bit_count()
            if d < 2:
                return False
            if d == 2:
                for x in _iter_bits(nb):
                    need[x] = need.get(x, 0) + 1
                if cur != start and masks[u] >> cur & 1:
                    forced.append(u)
        for x, c in need.items():
            slots = 2 if (unvisited >> x & 1 or cur == start) else 1
            if c > slots:
                return False
        # the unvisited region must hang together through cur
        reach = masks[cur] & unvisited
        frontier = reach
        while frontier:
            grow = 0
            for b in _iter_bits(frontier):
                grow |= masks[b]
            frontier = grow & unvisited & ~reach
            reach |= frontier
        if reach != unvisited:
            return False
        if len(forced) > 1:
            return False
        candidates = [forced[0]] if forced else list(_iter_bits(masks[cur] & unvisited))
        for v in candidates:
            path.append(v)
            if rec(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        ok = rec(start, 1 << start)
    finally:
        sys.setrecursionlimit(limit)
    return (path if ok else None), nodes


def _degree_and_parity_refutation(g: Graph) -> str | None:
    if g.order < 3:
        return f"order {g.order} < 3"
    degs = g.degrees()
    if (degs < 2).any():
        return f"vertex {int(np.flatnonzero(degs < 2)[0])} has degree < 2"
    if count_components(g) > 1:
        return "graph is disconnected"
    sides = bipartite_sides(g)
    if sides is not None and sides[0] != sides[1]:
        return f"bipartite with unequal sides {sides[0]} and {sides[1]}"
    return None


def brute_force_hamiltonian(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleOutcome:
    """Exact Hamiltonian-cycle decision by backtracking.

    The search anchors at vertex 0 and tries neighbours in ascending id
    order, so the witness is deterministic. Prunes: every unvisited vertex
    keeps two usable neighbours, no vertex is demanded by more degree-2
    neighbours than it has free slots, the unvisited region stays connected
    to the current end, and a degree-2 neighbour of the current end is
    taken immediately. Exhausting ``node_budget`` yields ``budget_exceeded``,
    never a negative answer.
    """
    reason = _degree_and_parity_refutation(g)
    if reason is not None:
        return OracleOutcome("not_hamiltonian", 0, None, "cycle", reason)
    try:
        found, nodes = _cycle_search(g.adjacency_masks(), 0, node_budget)
    except _BudgetExceeded:
        return OracleOutcome("budget_exceeded", node_budget, None, "cycle", "node budget exhausted")
    if found is None:
        return OracleOutcome("not_hamiltonian", nodes, None, "cycle", "search exhausted")
    return OracleOutcome("hamiltonian", nodes, tuple(found), "cycle")


def hamiltonian_path(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleOutcome:
    """Exact Hamiltonian-path decision.

    Reduces to a cycle search in ``g`` plus one apex vertex adjacent to
    everything; the apex is the anchor, so the path starts at the lowest
    id that admits one.
    """
    n = g.order
    if n == 0:
        return OracleOutcome("not_hamiltonian", 0, None, "path", "empty graph")
    if n == 1:
        return OracleOutcome("hamiltonian", 0, (0,), "path")
    if count_components(g) > 1:
        return OracleOutcome("not_hamiltonian", 0, None, "path", "graph is disconnected")
    masks = g.adjacency_masks()
    apex = n
    masks = [m | (1 << apex) for m in masks] + [(1 << n) - 1]
    try:
        found, nodes = _cycle_search(masks, apex, node_budget)
    except _BudgetExceeded:
        return OracleOutcome("budget_exceeded", node_budget, None, "path", "node budget exhausted")
    if found is None:
        return OracleOutcome("not_hamiltonian", nodes, None, "path", "search exhausted")
    return OracleOutcome("hamiltonian", nodes, tuple(found[1:]), "path")
