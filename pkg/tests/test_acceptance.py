"""End-to-end acceptance checks, one group per numbered criterion.

Each test tags itself with ``record_property("criterion", N)``; the conftest
hook prints one PASS/FAIL line per criterion at the end of the run.
"""

import time
from math import comb

import pytest
import worked_examples as wx
from conftest import corpus, naive_token_edges
from hypothesis import given, settings, strategies as st

from tokenham.cli import main
from tokenham.fanham import decide_f2_fan, decide_m2_fan, f2_fan_cycle, lift_to_join, m2_fan_cycle
from tokenham.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    fan,
    join,
    make_graph,
    path_graph,
)
from tokenham.oracle import (
    brute_force_hamiltonian,
    hamiltonian_path,
    verify_cut_certificate,
    verify_hamiltonian_cycle,
)
from tokenham.tokens import multiset_token_graph, token_graph

N_RANGE = range(2, 9)
ORACLE_MAX_ORDER = 24


@pytest.fixture
def criterion(record_property):
    def tag(n):
        record_property("criterion", n)

    return tag


class Clock:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.start


def _sorted_pairs(text):
    return [tuple(sorted(t)) for t in wx.parse(text)]


def _rotations(seq):
    return [seq[i:] + seq[:i] for i in range(len(seq))]


# -- 1 ---------------------------------------------------------------------

_GOLDEN_ELAPSED = []


@pytest.mark.parametrize("key", sorted(wx.GOLDEN))
def test_c1_golden_listings(criterion, capsys, key):
    criterion(1)
    variant, m, n = key
    clock = Clock()
    assert main(["ham", variant, str(m), str(n)]) == 0
    _GOLDEN_ELAPSED.append(clock.elapsed)
    lines = capsys.readouterr().out.splitlines()
    assert "Hamiltonian cycle" in lines[0]
    got = _sorted_pairs(lines[1])
    want = [tuple(sorted(t)) for t in wx.parse_all(wx.GOLDEN[key])]
    assert len(got) == len(want)
    assert got in _rotations(want)


def test_c1_golden_runtime(criterion):
    criterion(1)
    assert len(_GOLDEN_ELAPSED) == len(wx.GOLDEN)
    assert sum(_GOLDEN_ELAPSED) < 1.0


# -- 2 and 3 ---------------------------------------------------------------


def _range_sweep(build, bound, expected_count):
    for n in N_RANGE:
        top = bound(n)
        for m in range(1, top + 1):
            res = build(m, n)
            assert res.kind == "cycle", (m, n)
            tg = res.cycle.target
            assert verify_hamiltonian_cycle(tg.graph, res.cycle.ids()), (m, n)
        for m in range(top + 1, top + 5):
            res = build(m, n)
            assert res.kind == "cut", (m, n)
            tg = res.cut.target
            ok, count = verify_cut_certificate(tg.graph, res.cut.ids())
            assert ok and count > m * n, (m, n)
            assert res.cut.removed_size == m * n
            assert count == res.cut.component_count == expected_count(m), (m, n)


def test_c2_f2_sweep(criterion):
    criterion(2)
    clock = Clock()
    _range_sweep(f2_fan_cycle, lambda n: 2 * n, lambda m: comb(m, 2) + 1)
    assert clock.elapsed < 30


def test_c3_m2_sweep(criterion):
    criterion(3)
    clock = Clock()
    _range_sweep(m2_fan_cycle, lambda n: 2 * (n - 1), lambda m: comb(m + 1, 2) + 1)
    assert clock.elapsed < 30


# -- 4 ---------------------------------------------------------------------


def _sweep_instances():
    for n in N_RANGE:
        for m in range(1, 2 * n + 5):
            yield "F2", m, n
        for m in range(1, 2 * (n - 1) + 5):
            yield "M2", m, n


def test_c4_oracle_concordance(criterion):
    criterion(4)
    clock = Clock()
    checked = disagreements = 0
    for variant, m, n in _sweep_instances():
        base = fan(m, n)[0]
        tg = multiset_token_graph(base, 2) if variant == "M2" else token_graph(base, 2)
        if tg.order > ORACLE_MAX_ORDER:
            continue
        out = brute_force_hamiltonian(tg.graph)
        assert out.status != "budget_exceeded", (variant, m, n)
        decided = (decide_m2_fan if variant == "M2" else decide_f2_fan)(m, n)
        if out.found:
            assert verify_hamiltonian_cycle(tg.graph, out.witness)
        disagreements += out.found != decided
        checked += 1
    assert disagreements == 0
    # both sides of the n=2 boundary are small enough to be checked
    assert checked >= 10
    assert clock.elapsed < 300


# -- 5 ---------------------------------------------------------------------


def _oracle(g):
    out = brute_force_hamiltonian(g)
    assert out.status != "budget_exceeded"
    return out


def test_c5_known_results(criterion):
    criterion(5)
    clock = Clock()
    for n in (4, 6, 7):
        assert _oracle(token_graph(cycle_graph(n), 2).graph).exhausted, n
    star = token_graph(complete_bipartite(1, 3), 2).graph
    out = _oracle(star)
    assert out.found and len(out.witness) == 6
    assert verify_hamiltonian_cycle(star, out.witness)
    for n in (4, 5, 6):
        assert _oracle(multiset_token_graph(cycle_graph(n), 2).graph).exhausted, n
    assert clock.elapsed < 60


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 8) for b in range(1, 8) if a + b <= 8])
def test_c5_complete_bipartite(criterion, a, b):
    criterion(5)
    clock = Clock()
    out = _oracle(token_graph(complete_bipartite(a, b), 2).graph)
    assert out.found == ((a - b) ** 2 == a + b)
    assert clock.elapsed < 60


# -- 6 ---------------------------------------------------------------------

LIFT_LEFT = {"E2": empty_graph(2), "K2": complete_graph(2), "P2": path_graph(2)}
LIFT_RIGHT = {"P3": path_graph(3), "C3": cycle_graph(3), "C4": cycle_graph(4), "K4": complete_graph(4)}


@pytest.mark.parametrize("left", sorted(LIFT_LEFT))
@pytest.mark.parametrize("right", sorted(LIFT_RIGHT))
def test_c6_lift(criterion, left, right):
    criterion(6)
    clock = Clock()
    g1, g2 = LIFT_LEFT[left], LIFT_RIGHT[right]
    m, n = g1.order, g2.order
    walk = hamiltonian_path(g2)
    assert walk.found
    joined = join(g1, g2)
    variants = [(False, token_graph(joined, 2))]
    if m <= 2 * (n - 1):
        variants.append((True, multiset_token_graph(joined, 2)))
    for multiset, tg in variants:
        res = lift_to_join(g1, g2, list(walk.witness), multiset=multiset)
        ids = tg.ids_of(res.cycle.cycle)
        assert verify_hamiltonian_cycle(tg.graph, ids)
        if tg.order <= ORACLE_MAX_ORDER:
            assert _oracle(tg.graph).found
    assert clock.elapsed < 60


# -- 7 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(corpus()))
def test_c7_edge_count_closed_forms(criterion, graph_corpus, name):
    criterion(7)
    g = graph_corpus[name]
    n = g.order
    if n >= 2:
        f2 = token_graph(g, 2)
        toks, naive = naive_token_edges(g, 2, False)
        assert f2.order == len(toks)
        assert f2.graph.size == len(naive) == (n - 2) * g.size
    m2 = multiset_token_graph(g, 2)
    mtoks, mnaive = naive_token_edges(g, 2, True)
    assert m2.order == len(mtoks)
    assert m2.graph.size == len(mnaive) == n * g.size


@st.composite
def _graphs(draw):
    order = draw(st.integers(2, 10))
    pairs = [(a, b) for a in range(order) for b in range(a + 1, order)]
    return make_graph(order, draw(st.lists(st.sampled_from(pairs), unique=True)))


@given(_graphs())
@settings(max_examples=60, deadline=None)
def _edge_count_property(g):
    n = g.order
    assert token_graph(g, 2).graph.size == len(naive_token_edges(g, 2, False)[1]) == (n - 2) * g.size
    assert multiset_token_graph(g, 2).graph.size == len(naive_token_edges(g, 2, True)[1]) == n * g.size


def test_c7_edge_count_property(criterion):
    criterion(7)
    _edge_count_property()


def _partition_ok(res):
    tokens = [t for p in res.paths for t in p]
    target = res.cycle.target
    if not (len(tokens) == len(set(tokens)) == target.order):
        return False
    if set(tokens) != set(target.token_list()):
        return False
    # within each path consecutive tokens are adjacent
    return all(
        target.graph.has_edge(target.id_of(a), target.id_of(b)) for p in res.paths for a, b in zip(p, p[1:])
    )


def test_c7_path_partitions(criterion):
    criterion(7)
    for n in N_RANGE:
        for m in range(1, 2 * n + 1):
            assert _partition_ok(f2_fan_cycle(m, n)), ("F2", m, n)
        for m in range(1, 2 * (n - 1) + 1):
            assert _partition_ok(m2_fan_cycle(m, n)), ("M2", m, n)


# -- 8 ---------------------------------------------------------------------


@pytest.mark.parametrize("build,m,n", [(f2_fan_cycle, 200, 100), (m2_fan_cycle, 198, 100)])
def test_c8_large_instances(criterion, build, m, n):
    criterion(8)
    clock = Clock()
    res = build(m, n)
    assert res.kind == "cycle"
    tg = res.cycle.target
    assert verify_hamiltonian_cycle(tg.graph, res.cycle.ids())
    assert len(res.cycle.cycle) == tg.order == (comb(m + n, 2) if build is f2_fan_cycle else comb(m + n + 1, 2))
    assert clock.elapsed < 10
