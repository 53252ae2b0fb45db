"""k-token graphs ``F_k(G)`` and k-multiset graphs ``M_k(G)``.

Token vertices are sorted tuples of base-vertex ids. They are indexed by
their colexicographic rank, which does not depend on the base order:

    rank(c_0 < c_1 < ... < c_{k-1}) = sum_i C(c_i, i+1)

Multisets ``c_0 <= ... <= c_{k-1}`` are ranked through the shift
``c_i -> c_i + i``, which maps them bijectively onto k-subsets of
``[0, n+k-1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidK, InvalidPair, InvalidVertex
from .graph import Graph

TokenVertex = tuple[int, ...]

__all__ = [
    "TokenVertex",
    "TokenGraph",
    "check_token",
    "enumerate_tokens",
    "rank_token",
    "unrank_token",
    "token_count",
    "adjacent_tokens",
    "token_graph",
    "multiset_token_graph",
    "format_token",
    "parse_token",
]


def _check_params(n: int, k: int, multiset: bool) -> None:
    if k < 1:
        raise InvalidK(f"k must be positive, got {k}")
    if n < 1:
        raise InvalidK(f"base order must be positive, got {n}")
    if not multiset and k > n:
        raise InvalidK(f"cannot place {k} distinct tokens on {n} vertices")


def token_count(n: int, k: int, multiset: bool) -> int:
    return comb(n + k - 1, k) if multiset else comb(n, k)


def check_token(elems: Iterable[int], k: int, multiset: bool) -> TokenVertex:
    """Validate and return a token vertex as a sorted tuple."""
    t = tuple(sorted(int(x) for x in elems))
    if len(t) != k:
        raise InvalidPair(f"token {t} does not have {k} elements")
    if not multiset and len(set(t)) != k:
        raise InvalidPair(f"token {t} repeats an element but multisets are off")
    return t


def rank_token(t: Sequence[int], multiset: bool = False) -> int:
    """Colex rank of a sorted token."""
    shift = 1 if multiset else 0
    return sum(comb(c + shift * i, i + 1) for i, c in enumerate(t))


def unrank_token(r: int, k: int, multiset: bool = False) -> TokenVertex:
    """Inverse of :func:`rank_token`."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    out = []
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= r:
            c += 1
        r -= comb(c, i)
        out.append(c)
    out.reverse()
    if multiset:
        out = [c - i for i, c in enumerate(out)]
    return tuple(out)


def enumerate_tokens(n: int, k: int, multiset: bool = False) -> list[TokenVertex]:
    """All tokens on ``n`` base vertices in colex order (list index == rank)."""
    _check_params(n, k, multiset)
    gen = combinations_with_replacement(range(n), k) if multiset else combinations(range(n), k)
    return sorted(gen, key=lambda t: t[::-1])


def _token_array(n: int, k: int, multiset: bool) -> np.ndarray:
    return np.array(enumerate_tokens(n, k, multiset), dtype=np.int64).reshape(-1, k)


def _rank_rows(rows: np.ndarray, multiset: bool) -> np.ndarray:
    """Vectorised colex rank of sorted rows."""
    k = rows.shape[1]
    top = int(rows.max(initial=0)) + k + 1
    table = np.array([[comb(x, i) for i in range(k + 1)] for x in range(top + 1)], dtype=np.int64)
    ranks = np.zeros(len(rows), dtype=np.int64)
    for i in range(k):
        col = rows[:, i] + (i if multiset else 0)
        ranks += table[col, i + 1]
    return ranks


def adjacent_tokens(a: Sequence[int], b: Sequence[int], base: Graph) -> bool:
    """True iff the (multi)set symmetric difference of ``a`` and ``b`` is an edge of ``base``.

    Multiplicities are subtracted, so ``{u,u}`` and ``{u,v}`` differ by ``{u,v}``.
    """
    if len(a) != len(b):
        raise InvalidPair(f"tokens {tuple(a)} and {tuple(b)} have different sizes")
    for x in (*a, *b):
        if not 0 <= x < base.order:
            raise InvalidVertex(f"vertex {x} not in [0, {base.order})")
    ca, cb = Counter(a), Counter(b)
    only_a = list((ca - cb).elements())
    only_b = list((cb - ca).elements())
    if len(only_a) != 1 or len(only_b) != 1:
        return False
    return base.has_edge(only_a[0], only_b[0])


@dataclass(frozen=True, eq=False)
class TokenGraph:
    """A token graph together with its token <-> id bijection.

    ``tokens[i]`` is the token with id ``i``; ids are colex ranks.
    """

    base: Graph
    k: int
    multiset: bool
    graph: Graph
    tokens: np.ndarray

    @property
    def order(self) -> int:
        return self.graph.order

    def id_of(self, t: Sequence[int]) -> int:
        t = check_token(t, self.k, self.multiset)
        if t and (t[0] < 0 or t[-1] >= self.base.order):
            raise InvalidVertex(f"token {t} uses a vertex outside the base graph")
        return rank_token(t, self.multiset)

    def ids_of(self, ts: Iterable[Sequence[int]]) -> list[int]:
        return [self.id_of(t) for t in ts]

    def token_of(self, i: int) -> TokenVertex:
        return tuple(int(x) for x in self.tokens[i])

    def token_list(self) -> list[TokenVertex]:
        return [tuple(row) for row in self.tokens.tolist()]

    def name(self, i: int) -> str:
        return format_token(self.token_of(i), self.base)

    def __repr__(self) -> str:
        kind = "M" if self.multiset else "F"
        return f"TokenGraph({kind}_{self.k}, base={self.base!r}, order={self.order}, size={self.graph.size})"


def _build(base: Graph, k: int, multiset: bool) -> TokenGraph:
    n = base.order
    _check_params(n, k, multiset)
    tokens = _token_array(n, k, multiset)
    indptr, indices = base.csr()
    deg = np.diff(indptr)
    own = np.arange(len(tokens), dtype=np.int64)
    chunks = []
    for p in range(k):
        col = tokens[:, p]
        rows = np.arange(len(tokens))
        if multiset and p > 0:
            # a repeated element is moved once, from its first position
            rows = rows[tokens[:, p] != tokens[:, p - 1]]
        reps = deg[col[rows]]
        src = np.repeat(rows, reps)
        # neighbour c of the moved element, per repeated row
        starts = np.repeat(indptr[col[rows]], reps)
        offs = np.arange(len(src)) - np.repeat(np.cumsum(reps) - reps, reps)
        c = indices[starts + offs]
        moved = tokens[src].copy()
        if not multiset:
            ok = ~(moved == c[:, None]).any(axis=1)
            moved, src, c = moved[ok], src[ok], c[ok]
        moved[:, p] = c
        moved.sort(axis=1)
        dst = _rank_rows(moved, multiset)
        keep = dst > own[src]
        chunks.append(np.stack([own[src][keep], dst[keep]], axis=1))
    edges = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
    order = len(tokens)
    codes = np.unique(edges[:, 0] * order + edges[:, 1])
    edges = np.stack([codes // order, codes % order], axis=1)
    tokens.setflags(write=False)
    labels = None
    if base.labels is not None:
        labels = [format_token(tuple(t), base) for t in tokens.tolist()]
    return TokenGraph(base, k, multiset, Graph(order, edges, labels), tokens)


def token_graph(base: Graph, k: int) -> TokenGraph:
    """The k-token graph ``F_k(base)``."""
    return _build(base, k, multiset=False)


def multiset_token_graph(base: Graph, k: int) -> TokenGraph:
    """The k-multiset graph ``M_k(base)``."""
    return _build(base, k, multiset=True)


def format_token(t: Sequence[int], base: Graph | None = None) -> str:
    """Text form ``{a,b}``; uses base labels when the base graph has them."""
    if base is not None and base.labels is not None:
        return "{" + ",".join(base.labels[x] for x in t) + "}"
    return "{" + ",".join(str(x) for x in t) + "}"


def parse_token(text: str, base: Graph | None = None) -> TokenVertex:
    """Parse ``{a,b}`` (ids or base labels) back into a sorted token."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"not a token: {text!r}")
    parts = [p.strip() for p in body[1:-1].split(",") if p.strip()]
    lookup = {}
    if base is not None and base.labels is not None:
        lookup = {name: i for i, name in enumerate(base.labels)}
    return tuple(sorted(lookup[p] if p in lookup else int(p) for p in parts))
