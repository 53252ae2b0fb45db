"""Simple undirected graphs, standard families, joins and component counts.

Graphs are immutable. The edge set is held as a lexicographically sorted
``(E, 2)`` integer array with ``a < b`` in every row, which keeps token
graphs with millions of edges cheap to build and query.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InvalidEdge, InvalidOrder, InvalidVertex

__all__ = [
    "Graph",
    "FanLabeling",
    "make_graph",
    "path_graph",
    "empty_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite",
    "join",
    "fan",
    "delete_vertices",
    "count_components",
]


class Graph:
    """A simple undirected graph on vertex ids ``0 .. order-1``.

    Build instances through :func:`make_graph` or the family constructors;
    the constructor itself trusts its input to be canonical.
    """

    __slots__ = ("order", "labels", "_edges", "_codes", "_csr", "_edge_set")

    def __init__(
        self,
        order: int,
        edges: np.ndarray,
        labels: Sequence[str] | None = None,
    ) -> None:
        self.order = int(order)
        edges = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
        edges.setflags(write=False)
        self._edges = edges
        codes = edges[:, 0] * max(self.order, 1) + edges[:, 1]
        codes.setflags(write=False)
        self._codes = codes
        self.labels = tuple(labels) if labels is not None else None
        self._csr: tuple[np.ndarray, np.ndarray] | None = None
        self._edge_set: frozenset[tuple[int, int]] | None = None

    # -- basic queries -------------------------------------------------

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def edge_array(self) -> np.ndarray:
        """Read-only ``(E, 2)`` array of canonical edges, sorted."""
        return self._edges

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        if self._edge_set is None:
            self._edge_set = frozenset(map(tuple, self._edges.tolist()))
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.order and 0 <= v < self.order):
            return False
        return bool(self.has_edges(np.array([u]), np.array([v]))[0])

    def has_edges(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorised edge membership for pairs ``(us[i], vs[i])``."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        lo = np.minimum(us, vs)
        hi = np.maximum(us, vs)
        q = lo * max(self.order, 1) + hi
        if len(self._codes) == 0:
            return np.zeros(len(q), dtype=bool)
        pos = np.minimum(np.searchsorted(self._codes, q), len(self._codes) - 1)
        return (self._codes[pos] == q) & (lo != hi)

    def _adjacency(self) -> tuple[np.ndarray, np.ndarray]:
        if self._csr is None:
            src = np.concatenate([self._edges[:, 0], self._edges[:, 1]])
            dst = np.concatenate([self._edges[:, 1], self._edges[:, 0]])
            perm = np.argsort(src * max(self.order, 1) + dst, kind="stable")
            indices = dst[perm]
            indptr = np.zeros(self.order + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=self.order), out=indptr[1:])
            indices.setflags(write=False)
            indptr.setflags(write=False)
            self._csr = (indptr, indices)
        return self._csr

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbour ids of ``u``."""
        if not 0 <= u < self.order:
            raise InvalidVertex(f"vertex {u} not in [0, {self.order})")
        indptr, indices = self._adjacency()
        return indices[indptr[u] : indptr[u + 1]]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> np.ndarray:
        return np.diff(self._adjacency()[0])

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of the symmetric adjacency structure."""
        return self._adjacency()

    def adjacency_masks(self) -> list[int]:
        """Neighbourhoods as Python-int bitmasks (used by the exhaustive search)."""
        masks = [0] * self.order
        for a, b in self._edges.tolist():
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def label(self, u: int) -> str:
        if self.labels is not None:
            return self.labels[u]
        return str(u)

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        if labels is not None and len(labels) != self.order:
            raise ValueError("need exactly one label per vertex")
        return Graph(self.order, self._edges, labels)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._codes, other._codes)

    def __hash__(self) -> int:
        return hash((self.order, self._codes.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def _canonical(order: int, arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.int64).reshape(-1, 2)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    codes = np.unique(lo * max(order, 1) + hi)
    return np.stack([codes // max(order, 1), codes % max(order, 1)], axis=1)


def make_graph(
    order: int,
    edge_list: Iterable[tuple[int, int]] | np.ndarray,
    labels: Sequence[str] | None = None,
) -> Graph:
    """Validate and canonicalise an edge list.

    Duplicate pairs (in either orientation) collapse to a single edge.
    Raises :class:`InvalidEdge` on self-loops or out-of-range endpoints.
    """
    if order < 0:
        raise InvalidOrder(f"order must be non-negative, got {order}")
    if isinstance(edge_list, np.ndarray):
        arr = edge_list.astype(np.int64).reshape(-1, 2)
    else:
        pairs = [tuple(e) for e in edge_list]
        for e in pairs:
            if len(e) != 2:
                raise InvalidEdge(f"edge {e!r} is not a pair")
        arr = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    if len(arr):
        bad = (arr < 0) | (arr >= order)
        if bad.any():
            row = arr[bad.any(axis=1)][0]
            raise InvalidEdge(f"edge {tuple(row.tolist())} has an endpoint outside [0, {order})")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            raise InvalidEdge(f"self-loop at vertex {int(arr[loops][0, 0])}")
    if labels is not None and len(labels) != order:
        raise ValueError("need exactly one label per vertex")
    return Graph(order, _canonical(order, arr), labels)


def _require(n: int, least: int, what: str) -> None:
    if n < least:
        raise InvalidOrder(f"{what} needs at least {least} vertices, got {n}")


def path_graph(n: int) -> Graph:
    _require(n, 1, "path_graph")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(m: int) -> Graph:
    _require(m, 1, "empty_graph")
    return make_graph(m, [])


def cycle_graph(n: int) -> Graph:
    _require(n, 3, "cycle_graph")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _require(n, 1, "complete_graph")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """``K_{m,n}`` with parts ``[0, m)`` and ``[m, m+n)``."""
    _require(m, 1, "complete_bipartite")
    _require(n, 1, "complete_bipartite")
    return join(empty_graph(m), empty_graph(n))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    ``g2``'s ids are shifted by ``g1.order``.
    """
    m, n = g1.order, g2.order
    a, b = np.meshgrid(np.arange(m), np.arange(m, m + n), indexing="ij")
    cross = np.stack([a.ravel(), b.ravel()], axis=1)
    edges = np.concatenate([g1.edge_array, g2.edge_array + m, cross]).astype(np.int64)
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = [g1.label(u) for u in range(m)] + [g2.label(u) for u in range(n)]
        if len(set(labels)) != len(labels):
            labels = None
    return Graph(m + n, _canonical(m + n, edges), labels)


@dataclass(frozen=True)
class FanLabeling:
    """Naming map ``v_1..v_n`` (path side) and ``w_1..w_m`` (empty side) onto ids.

    ``vmap[i-1]`` is the id of ``v_i`` and ``wmap[j-1]`` the id of ``w_j``.
    """

    n: int
    m: int
    vmap: tuple[int, ...]
    wmap: tuple[int, ...]

    @classmethod
    def standard(cls, m: int, n: int) -> FanLabeling:
        # w_j -> j-1, v_i -> m+i-1
        return cls(n=n, m=m, vmap=tuple(range(m, m + n)), wmap=tuple(range(m)))

    def v(self, i: int) -> int:
        return self.vmap[i - 1]

    def w(self, j: int) -> int:
        return self.wmap[j - 1]

    def names(self) -> tuple[str, ...]:
        out = [""] * (self.n + self.m)
        for i, u in enumerate(self.vmap, 1):
            out[u] = f"v_{i}"
        for j, u in enumerate(self.wmap, 1):
            out[u] = f"w_{j}"
        return tuple(out)

    def name(self, u: int) -> str:
        return self.names()[u]

    def id_of(self, name: str) -> int:
        kind, _, idx = name.partition("_")
        if kind == "v":
            return self.v(int(idx))
        if kind == "w":
            return self.w(int(idx))
        raise KeyError(name)

    def relabel(self, vmap: Sequence[int], wmap: Sequence[int]) -> FanLabeling:
        return FanLabeling(self.n, self.m, tuple(vmap), tuple(wmap))

    def check(self, g: Graph, *, is_fan: bool = True) -> None:
        """Assert the labeling invariants against ``g``.

        With ``is_fan`` the w-side must be independent; joins only require
        the spanning fan edges to be present.
        """
        ids = list(self.vmap) + list(self.wmap)
        if sorted(ids) != list(range(g.order)):
            raise ValueError("labeling does not cover the vertex set exactly once")
        for i in range(1, self.n):
            if not g.has_edge(self.v(i), self.v(i + 1)):
                raise ValueError(f"v_{i} and v_{i + 1} are not adjacent")
        for j in range(1, self.m + 1):
            for i in range(1, self.n + 1):
                if not g.has_edge(self.w(j), self.v(i)):
                    raise ValueError(f"w_{j} and v_{i} are not adjacent")
            if is_fan:
                for k in range(j + 1, self.m + 1):
                    if g.has_edge(self.w(j), self.w(k)):
                        raise ValueError(f"w_{j} and w_{k} are adjacent in a fan")


def fan(m: int, n: int) -> tuple[Graph, FanLabeling]:
    """The fan graph ``E_m + P_n`` with its standard labeling."""
    if m < 1 or n < 1:
        raise InvalidOrder(f"fan graph needs m >= 1 and n >= 1, got m={m}, n={n}")
    labeling = FanLabeling.standard(m, n)
    g = join(empty_graph(m), path_graph(n)).with_labels(labeling.names())
    return g, labeling


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(g) - s``.

    Returns the subgraph and the map from surviving original ids to their
    new (order-preserving) ids.
    """
    s = np.fromiter((int(x) for x in s), dtype=np.int64)
    if len(s) and ((s < 0) | (s >= g.order)).any():
        bad = int(s[(s < 0) | (s >= g.order)][0])
        raise InvalidVertex(f"vertex {bad} not in [0, {g.order})")
    keep = np.ones(g.order, dtype=bool)
    keep[s] = False
    new_id = np.cumsum(keep) - 1
    e = g.edge_array
    alive = keep[e[:, 0]] & keep[e[:, 1]]
    edges = new_id[e[alive]]
    survivors = np.flatnonzero(keep)
    remap = dict(zip(survivors.tolist(), range(len(survivors))))
    labels = [g.labels[u] for u in survivors.tolist()] if g.labels is not None else None
    # order-preserving relabel keeps rows sorted and canonical
    return Graph(len(survivors), edges, labels), remap


def count_components(g: Graph) -> int:
    """Number of connected components (isolated vertices count as one each)."""
    if g.order == 0:
        return 0
    e = g.edge_array
    mat = coo_matrix(
        (np.ones(len(e), dtype=np.int8), (e[:, 0], e[:, 1])), shape=(g.order, g.order)
    )
    count, _ = connected_components(mat, directed=False)
    return int(count)
