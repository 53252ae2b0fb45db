import itertools
import sys
from collections import Counter
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tokenham.graph import (  # noqa: E402
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    fan,
    join,
    make_graph,
    path_graph,
)


def naive_token_edges(base, k, multiset):
    """Every adjacent token pair, by comparing all pairs directly."""
    pool = (
        itertools.combinations_with_replacement(range(base.order), k)
        if multiset
        else itertools.combinations(range(base.order), k)
    )
    toks = list(pool)
    edges = set()
    for a, b in itertools.combinations(toks, 2):
        da = Counter(a) - Counter(b)
        db = Counter(b) - Counter(a)
        if sum(da.values()) == 1 and sum(db.values()) == 1:
            (x,), (y,) = da.keys(), db.keys()
            if (min(x, y), max(x, y)) in base.edges:
                edges.add((a, b))
    return toks, edges


def corpus(max_order=10):
    """Named base graphs used by the structural checks."""
    out = {}
    for n in range(1, max_order + 1):
        out[f"P{n}"] = path_graph(n)
        out[f"K{n}"] = complete_graph(n)
        out[f"E{n}"] = empty_graph(n)
        if n >= 3:
            out[f"C{n}"] = cycle_graph(n)
    for m in range(1, max_order):
        for n in range(1, max_order - m + 1):
            out[f"K{m},{n}"] = complete_bipartite(m, n)
            out[f"F{m},{n}"] = fan(m, n)[0]
    out["K2+C3"] = join(complete_graph(2), cycle_graph(3))
    out["petersen"] = make_graph(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)],
    )
    return out


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()


# -- acceptance summary -------------------------------------------------

_ACCEPTANCE: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _ACCEPTANCE.setdefault(value, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        outcomes = _ACCEPTANCE[crit]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status} ({len(outcomes)} check(s))")
