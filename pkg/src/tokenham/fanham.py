"""Explicit Hamiltonian cycles in ``F_2`` and ``M_2`` of fan graphs and joins.

The fan ``F_{m,n}`` is ``E_m + P_n`` with the empty side named
``w_1..w_m`` and the path ``v_1 - ... - v_n``. Each cycle is assembled from
a family of vertex-disjoint paths, concatenated end to end:

* ``m == 1``: the paths ``T_i`` (resp. ``T'_i`` for multisets), alternately
  reversed.
* ``m`` at the upper bound (``2n`` for ``F_2``, ``2(n-1)`` for ``M_2``): the
  ``m = 1`` cycle opened into a path ``P_1`` followed by one path ``P_i`` per
  ``w_i``, whose ``w``-indices wrap around modulo the bound.
* ``m`` strictly between: the upper-bound paths with every ``{w_i, w_j}``,
  ``j > m``, dropped, after moving ``{w_m, w_1}`` to the end of ``P_m``.

Above the bound the tokens ``{w_i, v_j}`` form a vertex cut whose removal
leaves more components than its size. Every cycle is checked by the
independent verifier before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Literal, Sequence

from .errors import ConstructionInvalid, InvalidHamPath, InvalidOrder, RangeExceeded
from .graph import FanLabeling, Graph, delete_vertices, fan, join
from .oracle import brute_force_hamiltonian, cycle_violation, path_violation, verify_cut_certificate
from .tokens import TokenGraph, TokenVertex, format_token, multiset_token_graph, token_graph

__all__ = [
    "HamCycleCert",
    "CutCert",
    "FanHamResult",
    "decide_f2_fan",
    "decide_m2_fan",
    "f2_t_paths",
    "m2_tprime_paths",
    "f2_fan_paths",
    "m2_fan_paths",
    "f2_fan_cycle",
    "m2_fan_cycle",
    "lift_to_join",
]

Variant = Literal["F2", "M2"]

# Symbolic vertices ("v", i) / ("w", j) with 1-based indices; a symbolic
# token is a pair of them. They are turned into ids only at the end.
Sym = tuple[str, int]
SymToken = tuple[Sym, Sym]


def _v(i: int) -> Sym:
    return ("v", i)


def _w(j: int) -> Sym:
    return ("w", j)


def _wrap(x: int, modulus: int) -> int:
    """1-based residue: ``modulus`` maps to itself rather than to 0."""
    return (x - 1) % modulus + 1


@dataclass(frozen=True)
class HamCycleCert:
    """A claimed Hamiltonian cycle, listed as tokens, of ``target``."""

    cycle: tuple[TokenVertex, ...]
    target: TokenGraph = field(repr=False)

    def ids(self) -> list[int]:
        return self.target.ids_of(self.cycle)


@dataclass(frozen=True)
class CutCert:
    """A removal set whose deletion leaves more than ``removed_size`` components."""

    removed: tuple[TokenVertex, ...]
    component_count: int
    removed_size: int
    target: TokenGraph = field(repr=False)

    def ids(self) -> list[int]:
        return self.target.ids_of(self.removed)


@dataclass(frozen=True)
class FanHamResult:
    """Outcome for one ``(variant, m, n)``.

    Exactly one of ``cycle`` / ``cut`` / ``reason`` describes the answer;
    ``kind`` says which.
    """

    variant: Variant
    m: int
    n: int
    cycle: HamCycleCert | None = None
    cut: CutCert | None = None
    reason: str | None = None
    labeling: FanLabeling | None = field(default=None, repr=False)
    paths: tuple[tuple[TokenVertex, ...], ...] | None = field(default=None, repr=False)

    @property
    def kind(self) -> Literal["cycle", "cut", "special"]:
        if self.cycle is not None:
            return "cycle"
        if self.cut is not None:
            return "cut"
        return "special"

    @property
    def hamiltonian(self) -> bool:
        return self.cycle is not None

    def listing(self) -> str:
        """Human-readable token sequence in ``{v_i,w_j}`` notation."""
        if self.cycle is not None:
            return " ".join(_render(t, self.labeling, self.cycle.target.base) for t in self.cycle.cycle)
        if self.cut is not None:
            return " ".join(_render(t, self.labeling, self.cut.target.base) for t in self.cut.removed)
        return self.reason or ""


def _render(t: TokenVertex, labeling: FanLabeling | None, base: Graph) -> str:
    if labeling is None:
        return format_token(t, base)
    names = labeling.names()
    return "{" + ",".join(names[x] for x in t) + "}"


def decide_f2_fan(m: int, n: int) -> bool:
    """Whether ``F_2(F_{m,n})`` is Hamiltonian."""
    _check_mn(m, n)
    return (n >= 2 and m <= 2 * n) or (n == 1 and m == 3)


def decide_m2_fan(m: int, n: int) -> bool:
    """Whether ``M_2(F_{m,n})`` is Hamiltonian."""
    _check_mn(m, n)
    return n >= 2 and m <= 2 * (n - 1)


def _check_mn(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise InvalidOrder(f"fan parameters must be positive, got m={m}, n={n}")


# -- symbolic path families ---------------------------------------------


def _sym_t(n: int) -> list[list[SymToken]]:
    paths = []
    for i in range(1, n + 1):
        paths.append([(_v(i), _w(1))] + [(_v(i), _v(j)) for j in range(i + 1, n + 1)])
    return paths


def _sym_tprime(n: int) -> list[list[SymToken]]:
    paths = []
    for i in range(1, n + 1):
        paths.append(
            [(_v(i), _w(1)), (_v(i), _v(i))] + [(_v(i), _v(j)) for j in range(i + 1, n + 1)]
        )
    return paths


def _f2_m1_cycle(n: int) -> list[list[SymToken]]:
    # odd-indexed T_i reversed, even-indexed forward
    return [p[::-1] if i % 2 else p for i, p in enumerate(_sym_t(n), 1)]


def _m2_m1_cycle(n: int) -> list[list[SymToken]]:
    paths = _sym_tprime(n)
    hub: list[SymToken] = [(_w(1), _w(1))]
    if n % 2 == 0:
        oriented = [p if i % 2 else p[::-1] for i, p in enumerate(paths, 1)]
        return oriented + [hub]
    oriented = [p[::-1] if i % 2 else p for i, p in enumerate(paths, 1)]
    return [oriented[0], hub] + oriented[1:]


def _f2_p(i: int, n: int, bound: int) -> list[SymToken]:
    wi = _w(i)
    second = _w(1) if i <= n else _w(_wrap(i + n, bound))
    path = [(wi, _v(n)), (wi, second)]
    for j in range(n - 1, 0, -1):
        path += [(wi, _v(j)), (wi, _w(_wrap(i + j, bound)))]
    return path


def _m2_p(i: int, n: int, bound: int) -> list[SymToken]:
    wi = _w(i)
    path = [(wi, _v(n)), (wi, wi)]
    if i <= n - 1:
        path += [(wi, _v(n - 1)), (wi, _w(1))]
        top = n - 2
    else:
        top = n - 1
    for j in range(top, 0, -1):
        path += [(wi, _v(j)), (wi, _w(_wrap(i + j, bound)))]
    return path


def _prune(path: list[SymToken], i: int, m: int) -> list[SymToken]:
    """Drop ``{w_i, w_j}`` with ``j > m``; for ``i == m`` first swap
    ``{w_m, w_{m+1}}`` with ``{w_m, w_1}``."""
    path = list(path)
    if i == m:
        a = path.index((_w(m), _w(m + 1)))
        b = path.index((_w(m), _w(1)))
        path[a], path[b] = path[b], path[a]
    return [t for t in path if not (t[1][0] == "w" and t[1][1] > m)]


def _f2_family(m: int, n: int) -> list[list[SymToken]]:
    if n < 2 or not 1 <= m <= 2 * n:
        raise RangeExceeded(f"no F_2 path family for m={m}, n={n}")
    base = _f2_m1_cycle(n)
    if m == 1:
        return base
    bound = 2 * n
    p1 = list(chain.from_iterable(base))[::-1]
    family = [p1] + [_f2_p(i, n, bound) for i in range(2, m + 1)]
    if m < bound:
        family = [family[0]] + [_prune(p, i, m) for i, p in enumerate(family[1:], 2)]
    return family


def _m2_family(m: int, n: int) -> list[list[SymToken]]:
    if n < 2 or not 1 <= m <= 2 * (n - 1):
        raise RangeExceeded(f"no M_2 path family for m={m}, n={n}")
    base = _m2_m1_cycle(n)
    if m == 1:
        return base
    bound = 2 * (n - 1)
    cyc = list(chain.from_iterable(base))
    k = cyc.index((_v(n), _w(1)))
    p1 = cyc[k:] + cyc[:k]
    family = [p1] + [_m2_p(i, n, bound) for i in range(2, m + 1)]
    if m < bound:
        family = [family[0]] + [_prune(p, i, m) for i, p in enumerate(family[1:], 2)]
    return family


def _realize(path: Sequence[SymToken], labeling: FanLabeling) -> tuple[TokenVertex, ...]:
    def vid(s: Sym) -> int:
        return labeling.v(s[1]) if s[0] == "v" else labeling.w(s[1])

    return tuple(tuple(sorted((vid(a), vid(b)))) for a, b in path)


def _labeling_for(m: int, n: int, labeling: FanLabeling | None) -> FanLabeling:
    if labeling is None:
        return FanLabeling.standard(m, n)
    if labeling.n != n or labeling.m < m:
        raise ValueError(f"labeling for (m={labeling.m}, n={labeling.n}) does not fit n={n}")
    return labeling


def f2_t_paths(n: int, labeling: FanLabeling | None = None) -> list[tuple[TokenVertex, ...]]:
    """The paths ``T_1..T_n`` of ``F_2(F_{1,n})``; ``T_n`` is the single token ``{v_n, w_1}``."""
    if n < 2:
        raise InvalidOrder(f"T-paths need n >= 2, got {n}")
    lab = _labeling_for(1, n, labeling)
    return [_realize(p, lab) for p in _sym_t(n)]


def m2_tprime_paths(n: int, labeling: FanLabeling | None = None) -> list[tuple[TokenVertex, ...]]:
    """The paths ``T'_1..T'_n`` of ``M_2(F_{1,n})``: ``T_i`` with ``{v_i, v_i}`` after its first token."""
    if n < 2:
        raise InvalidOrder(f"T'-paths need n >= 2, got {n}")
    lab = _labeling_for(1, n, labeling)
    return [_realize(p, lab) for p in _sym_tprime(n)]


def f2_fan_paths(m: int, n: int, labeling: FanLabeling | None = None) -> list[tuple[TokenVertex, ...]]:
    """The oriented path family whose concatenation is the ``F_2`` cycle."""
    lab = _labeling_for(m, n, labeling)
    return [_realize(p, lab) for p in _f2_family(m, n)]


def m2_fan_paths(m: int, n: int, labeling: FanLabeling | None = None) -> list[tuple[TokenVertex, ...]]:
    """The oriented path family whose concatenation is the ``M_2`` cycle."""
    lab = _labeling_for(m, n, labeling)
    return [_realize(p, lab) for p in _m2_family(m, n)]


# -- results --------------------------------------------------------------


def _gated_cycle(
    variant: Variant,
    m: int,
    n: int,
    paths: list[tuple[TokenVertex, ...]],
    target: TokenGraph,
    labeling: FanLabeling | None,
) -> FanHamResult:
    cycle = tuple(chain.from_iterable(paths))
    cert = HamCycleCert(cycle, target)
    problem = cycle_violation(target.graph, cert.ids())
    if problem is not None:
        raise ConstructionInvalid(f"{variant} cycle for m={m}, n={n} failed verification: {problem}")
    return FanHamResult(variant, m, n, cycle=cert, labeling=labeling, paths=tuple(paths))


def _cut(variant: Variant, m: int, n: int, target: TokenGraph, labeling: FanLabeling) -> FanHamResult:
    removed = tuple(
        tuple(sorted((labeling.w(i), labeling.v(j)))) for i in range(1, m + 1) for j in range(1, n + 1)
    )
    ok, count = verify_cut_certificate(target.graph, target.ids_of(removed))
    if not ok:
        raise ConstructionInvalid(
            f"{variant} cut for m={m}, n={n} leaves {count} components, not more than {len(removed)}"
        )
    cert = CutCert(removed, count, len(removed), target)
    return FanHamResult(variant, m, n, cut=cert, labeling=labeling)


def f2_fan_cycle(m: int, n: int) -> FanHamResult:
    """Hamiltonian cycle or non-Hamiltonicity witness for ``F_2(F_{m,n})``."""
    _check_mn(m, n)
    g, labeling = fan(m, n)
    target = token_graph(g, 2)
    if n == 1:
        if m != 3:
            return FanHamResult(
                "F2", m, n,
                reason=f"F_2(K_1,{m}) is Hamiltonian only for a star with 3 leaves",
                labeling=labeling,
            )
        # F_2(K_{1,3}) is a 6-cycle; take the oracle's witness
        found = brute_force_hamiltonian(target.graph)
        if not found.found:
            raise ConstructionInvalid("oracle found no cycle in F_2(K_1,3)")
        path = tuple(target.token_of(i) for i in found.witness)
        return _gated_cycle("F2", m, n, [path], target, labeling)
    if m > 2 * n:
        return _cut("F2", m, n, target, labeling)
    return _gated_cycle("F2", m, n, f2_fan_paths(m, n, labeling), target, labeling)


def m2_fan_cycle(m: int, n: int) -> FanHamResult:
    """Hamiltonian cycle or non-Hamiltonicity witness for ``M_2(F_{m,n})``."""
    _check_mn(m, n)
    g, labeling = fan(m, n)
    if n == 1:
        return FanHamResult(
            "M2", m, n,
            reason="not Hamiltonian: vertex {w_i,w_i} has degree 1",
            labeling=labeling,
        )
    target = multiset_token_graph(g, 2)
    if m > 2 * (n - 1):
        return _cut("M2", m, n, target, labeling)
    return _gated_cycle("M2", m, n, m2_fan_paths(m, n, labeling), target, labeling)


def lift_to_join(
    g1: Graph,
    g2: Graph,
    ham_path: Sequence[int],
    multiset: bool = False,
) -> FanHamResult:
    """Hamiltonian cycle of ``F_2(g1 + g2)`` (or ``M_2``) from the fan construction.

    ``w_j`` is sent to vertex ``j-1`` of ``g1`` and ``v_i`` to the i-th
    vertex of ``ham_path`` (a Hamiltonian path of ``g2``); the fan is then
    a spanning subgraph of the join.
    """
    problem = path_violation(g2, list(ham_path))
    if problem is not None:
        raise InvalidHamPath(problem)
    m, n = g1.order, g2.order
    variant: Variant = "M2" if multiset else "F2"
    bound = 2 * (n - 1) if multiset else 2 * n
    if m < 1 or n < 2 or m > bound:
        raise RangeExceeded(f"{variant} lift needs 1 <= m <= {bound} and n >= 2, got m={m}, n={n}")
    g = join(g1, g2)
    labeling = FanLabeling(n, m, tuple(m + int(p) for p in ham_path), tuple(range(m)))
    labeling.check(g, is_fan=False)
    target = multiset_token_graph(g, 2) if multiset else token_graph(g, 2)
    family = m2_fan_paths(m, n, labeling) if multiset else f2_fan_paths(m, n, labeling)
    return _gated_cycle(variant, m, n, family, target, labeling)
