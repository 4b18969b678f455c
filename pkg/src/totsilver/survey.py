"""Parameter sweeps over the families, checked against their known verdicts.

Each plan yields survey points (a family member plus the verdict the theory
predicts); :func:`run_survey` evaluates them and reports one row per point.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .families import ColoredGraph, FamilySpec
from .graph import bipartite_double_cover, bipartition, girth, is_connected, vertex_connectivity_at_least
from .silver import DEFAULT_BUDGET, BudgetExceeded, Coloring, solve_totally_silver, verify_totally_silver

__all__ = ["PLANS", "SurveyPoint", "SurveyRow", "plan_points", "evaluate", "run_survey", "format_tsv", "TSV_COLUMNS"]

TSV_COLUMNS = ("family", "params", "order", "silver", "girth", "3conn", "bipartite", "predicted", "agrees")


@dataclass(frozen=True)
class SurveyPoint:
    spec: FamilySpec
    predicted: bool
    cover: bool = False  # take the bipartite double cover of the member

    @property
    def family(self) -> str:
        return "doublecover" if self.cover else self.spec.family

    @property
    def params(self) -> str:
        names = ("r", "copies", "n", "d", "m", "a", "b")
        return ",".join(f"{k}={getattr(self.spec, k)}" for k in names if getattr(self.spec, k) is not None)

    def build(self) -> ColoredGraph:
        cg = self.spec.build()
        if not self.cover:
            return cg
        h = bipartite_double_cover(cg.graph)
        col = None
        if cg.coloring is not None:
            col = Coloring(cg.coloring.colors * 2, cg.coloring.k)
        return ColoredGraph(h, col)


@dataclass(frozen=True)
class SurveyRow:
    family: str
    params: str
    order: int
    silver: str  # yes / no / budget-exceeded
    girth: float
    three_connected: bool
    bipartite: bool
    predicted: str
    agrees: bool | None

    def cells(self) -> list[str]:
        g = "inf" if self.girth == math.inf else str(int(self.girth))
        agrees = "n/a" if self.agrees is None else ("yes" if self.agrees else "no")
        return [
            self.family,
            self.params,
            str(self.order),
            self.silver,
            g,
            "yes" if self.three_connected else "no",
            "yes" if self.bipartite else "no",
            self.predicted,
            agrees,
        ]


def _span(rng: Iterable[int] | None, default: Iterable[int]) -> list[int]:
    return list(default if rng is None else rng)


def plan_points(plan: str, n_range: Iterable[int] | None = None, d_range: Iterable[int] | None = None) -> list[SurveyPoint]:
    """Survey points for a named plan; ``d_range=None`` means every legal ``d``."""
    if plan == "petersen":
        pts = []
        for n in _span(n_range, range(4, 17)):
            ds = range(1, (n - 1) // 2 + 1) if d_range is None else [d for d in d_range if 1 <= d <= (n - 1) // 2]
            for d in ds:
                pts.append(SurveyPoint(FamilySpec("petersen", n=n, d=d), n % 4 == 0 and d % 2 == 1))
        return pts
    if plan == "E":
        return [SurveyPoint(FamilySpec("E", n=n), n % 3 == 0) for n in _span(n_range, range(3, 10))]
    if plan == "M":
        return [SurveyPoint(FamilySpec("M", n=n), n % 3 != 0) for n in _span(n_range, range(3, 9))]
    if plan == "L":
        return [SurveyPoint(FamilySpec("L", n=n), n % 4 == 0) for n in _span(n_range, range(4, 13))]
    if plan == "moebius":
        return [SurveyPoint(FamilySpec("moebius", n=n), n % 4 == 2) for n in _span(n_range, range(2, 11))]
    if plan == "D":
        return [SurveyPoint(FamilySpec("D", n=n), n % 2 == 1) for n in _span(n_range, range(2, 6))]
    if plan == "cyclestar9":
        return [SurveyPoint(FamilySpec("cyclestar", n=n, a=7, b=20), True) for n in _span(n_range, range(15, 18))]
    if plan == "cyclestar10":
        return [SurveyPoint(FamilySpec("cyclestar", n=n, a=8, b=22), True) for n in _span(n_range, range(22, 24))]
    if plan == "doublecover":
        return [
            SurveyPoint(FamilySpec("cyclestar", n=n, a=7, b=20), True, cover=True) for n in _span(n_range, range(15, 16))
        ]
    raise ValueError(f"unknown survey plan {plan!r}; choose from {', '.join(PLANS)}")


PLANS = ("petersen", "E", "M", "L", "moebius", "D", "cyclestar9", "cyclestar10", "doublecover")


def evaluate(point: SurveyPoint, budget: int = DEFAULT_BUDGET) -> SurveyRow:
    """Decide one point: a verifying built-in coloring settles "yes", otherwise
    the exact solver decides."""
    cg = point.build()
    g = cg.graph
    if cg.coloring is not None and verify_totally_silver(g, cg.coloring):
        verdict = "yes"
    else:
        try:
            verdict = "yes" if solve_totally_silver(g, budget) is not None else "no"
        except BudgetExceeded:
            verdict = "budget-exceeded"
    predicted = "yes" if point.predicted else "no"
    agrees = None if verdict == "budget-exceeded" else verdict == predicted
    three = is_connected(g) and vertex_connectivity_at_least(g, 3)
    return SurveyRow(
        point.family,
        point.params,
        g.n,
        verdict,
        girth(g),
        three,
        bipartition(g) is not None,
        predicted,
        agrees,
    )


def run_survey(points: list[SurveyPoint], budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[SurveyRow]:
    """Evaluate points, in parallel when ``jobs > 1``; rows keep input order."""
    if jobs <= 1:
        return [evaluate(p, budget) for p in points]
    fn: Callable[[SurveyPoint], SurveyRow] = _Evaluator(budget)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, points))


class _Evaluator:
    def __init__(self, budget: int):
        self.budget = budget

    def __call__(self, point: SurveyPoint) -> SurveyRow:
        return evaluate(point, self.budget)


def format_tsv(rows: list[SurveyRow]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines += ["\t".join(r.cells()) for r in rows]
    return "\n".join(lines) + "\n"
