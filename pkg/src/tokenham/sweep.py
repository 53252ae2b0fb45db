"""Parameter sweep over fan instances, cross-checking construction, verifier and oracle."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb
from typing import Any

from .errors import ConstructionInvalid
from .fanham import decide_f2_fan, decide_m2_fan, f2_fan_cycle, m2_fan_cycle
from .graph import fan
from .oracle import (
    DEFAULT_NODE_BUDGET,
    brute_force_hamiltonian,
    verify_cut_certificate,
    verify_hamiltonian_cycle,
)
from .tokens import multiset_token_graph, token_graph

__all__ = ["SweepRow", "SweepReport", "run_instance", "sweep", "token_order"]


@dataclass(frozen=True)
class SweepRow:
    variant: str
    m: int
    n: int
    order: int
    decision: bool
    construction: str  # cycle | cut | special | invalid
    verifier: str  # pass | fail | n/a
    oracle: str  # hamiltonian | not_hamiltonian | budget_exceeded | skipped
    components: int | None
    seconds: float

    @property
    def agrees(self) -> bool:
        """Construction, verifier and (if run) oracle all agree with the decision."""
        if self.construction == "invalid" or self.verifier == "fail":
            return False
        if (self.construction == "cycle") != self.decision:
            return False
        if self.oracle == "hamiltonian":
            return self.decision
        if self.oracle == "not_hamiltonian":
            return not self.decision
        return True


def token_order(variant: str, m: int, n: int) -> int:
    return comb(m + n + 1, 2) if variant == "M2" else comb(m + n, 2)


def run_instance(
    variant: str,
    m: int,
    n: int,
    oracle_budget: int = DEFAULT_NODE_BUDGET,
    oracle_max_order: int = 24,
) -> SweepRow:
    start = time.perf_counter()
    decide, build = (decide_m2_fan, m2_fan_cycle) if variant == "M2" else (decide_f2_fan, f2_fan_cycle)
    decision = decide(m, n)
    components = None
    try:
        res = build(m, n)
    except ConstructionInvalid:
        construction, verifier = "invalid", "fail"
    else:
        construction = res.kind
        verifier = "n/a"
        if res.cycle is not None:
            ok = verify_hamiltonian_cycle(res.cycle.target.graph, res.cycle.ids())
            verifier = "pass" if ok else "fail"
        elif res.cut is not None:
            ok, components = verify_cut_certificate(res.cut.target.graph, res.cut.ids())
            verifier = "pass" if ok and components == res.cut.component_count else "fail"
    order = token_order(variant, m, n)
    oracle = "skipped"
    if order <= oracle_max_order:
        g, _ = fan(m, n)
        tg = multiset_token_graph(g, 2) if variant == "M2" else token_graph(g, 2)
        oracle = brute_force_hamiltonian(tg.graph, oracle_budget).status
    return SweepRow(
        variant, m, n, order, decision, construction, verifier, oracle, components,
        round(time.perf_counter() - start, 4),
    )


def _run(args: tuple) -> SweepRow:
    return run_instance(*args)


@dataclass
class SweepReport:
    rows: list[SweepRow]

    def disagreements(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.agrees]

    def skipped(self) -> list[SweepRow]:
        return [r for r in self.rows if r.oracle in ("skipped", "budget_exceeded")]

    def budget_exceeded(self) -> list[SweepRow]:
        return [r for r in self.rows if r.oracle == "budget_exceeded"]

    def to_json(self) -> dict[str, Any]:
        return {
            "rows": [asdict(r) | {"agrees": r.agrees} for r in self.rows],
            "disagreements": len(self.disagreements()),
            "oracle_skipped": len(self.skipped()),
            "oracle_budget_exceeded": len(self.budget_exceeded()),
        }

    def to_table(self) -> str:
        head = f"{'var':<4}{'m':>4}{'n':>4}{'order':>7}  {'decide':<7}{'built':<9}{'verify':<7}{'oracle':<17}{'comps':>6}{'sec':>9}  ok"
        lines = [head]
        for r in self.rows:
            comps = "" if r.components is None else str(r.components)
            lines.append(
                f"{r.variant:<4}{r.m:>4}{r.n:>4}{r.order:>7}  {str(r.decision):<7}{r.construction:<9}"
                f"{r.verifier:<7}{r.oracle:<17}{comps:>6}{r.seconds:>9.3f}  {'yes' if r.agrees else 'NO'}"
            )
        lines.append(
            f"{len(self.rows)} rows, {len(self.disagreements())} disagreements, "
            f"{len(self.skipped())} without oracle ({len(self.budget_exceeded())} over budget)"
        )
        return "\n".join(lines)


def sweep(
    n_max: int,
    m_slack: int = 2,
    oracle_budget: int = DEFAULT_NODE_BUDGET,
    oracle_max_order: int = 24,
    jobs: int = 1,
    n_min: int = 1,
    variants: tuple[str, ...] = ("F2", "M2"),
) -> SweepReport:
    """Run every ``(variant, m, n)`` with ``n_min <= n <= n_max`` and ``1 <= m <= 2n + m_slack``."""
    tasks = [
        (v, m, n, oracle_budget, oracle_max_order)
        for n in range(n_min, n_max + 1)
        for v in variants
        for m in range(1, 2 * n + m_slack + 1)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run, tasks))
    else:
        rows = [_run(t) for t in tasks]
    return SweepReport(rows)
