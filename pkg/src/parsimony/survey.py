"""Batch check of ``gamma(G) >= 1 - 2/(3 g_odd + 2)`` over a graph corpus."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from .generators import NAMED, petersen, random_cubic
from .graph import INFINITE, Graph, are_isomorphic, is_connected, odd_girth
from .solver import SolveReport, exact_s, format_fraction, heuristic_colouring
from .structure import bound_value

MEETS_BOUND = "meets_bound"
PETERSEN_EXCEPTION = "petersen_exception"
UNKNOWN = "unknown"
VIOLATION = "violation"


@dataclass(frozen=True)
class SurveyRow:
    source: str
    n: int
    m: int
    g_odd: Optional[int]
    s: int
    gamma: str
    bound: str
    verdict: str

    def dumps(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def loads(cls, line: str) -> "SurveyRow":
        return cls(**json.loads(line))


class BoundViolation(RuntimeError):
    """A non-Petersen graph with ``gamma`` below the bound."""

    def __init__(self, row: SurveyRow, report: SolveReport):
        super().__init__(f"bound violated on {row.source}: gamma={row.gamma} < {row.bound}")
        self.row = row
        self.report = report

    def bundle(self) -> dict:
        return {"row": json.loads(self.row.dumps()), "report": self.report.to_json()}


def random_corpus(count: int, min_n: int, max_n: int, seed: int) -> list[tuple[str, Graph]]:
    """``count`` connected random cubic graphs, cycling through the even ``n`` in range."""
    sizes = [n for n in range(max(min_n, 4), max_n + 1) if n % 2 == 0]
    if count and not sizes:
        raise ValueError(f"no even n in {min_n}..{max_n}")
    out = []
    sub = 0
    for i in range(count):
        n = sizes[i % len(sizes)]
        while True:
            gseed = seed * 1_000_003 + sub
            sub += 1
            g = random_cubic(n, gseed)
            if is_connected(g):
                break
        out.append((f"cubic:n={n}:seed={gseed}", g))
    return out


def named_corpus(names: Iterable[str]) -> list[tuple[str, Graph]]:
    out = []
    for name in names:
        if name not in NAMED:
            raise ValueError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}")
        out.append((name, NAMED[name]()))
    return out


def survey_row(source: str, g: Graph, budget: Optional[int] = None) -> tuple[SurveyRow, SolveReport]:
    report = exact_s(g, budget=budget, incumbent=heuristic_colouring(g, seed=0))
    go = odd_girth(g)
    b = bound_value(go)
    if not report.optimal:
        verdict = UNKNOWN
    elif report.gamma >= b:
        verdict = MEETS_BOUND
    elif g.n == 10 and are_isomorphic(g, petersen()):
        verdict = PETERSEN_EXCEPTION
    else:
        verdict = VIOLATION
    row = SurveyRow(
        source=source,
        n=g.n,
        m=g.m,
        g_odd=None if go == INFINITE else int(go),
        s=report.s,
        gamma=format_fraction(report.gamma),
        bound=format_fraction(b),
        verdict=verdict,
    )
    return row, report


def _row_task(args):
    return survey_row(*args)


def run_survey(items: list[tuple[str, Graph]], budget: Optional[int] = None, jobs: int = 1) -> list[SurveyRow]:
    """Solve every graph exactly and classify it; rows keep the input order.

    Raises:
        BoundViolation: on the first (in input order) non-Petersen graph
            below the bound.
    """
    tasks = [(src, g, budget) for src, g in items]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row_task, tasks, chunksize=4))
    else:
        results = [_row_task(t) for t in tasks]
    rows = []
    for row, report in results:
        if row.verdict == VIOLATION:
            raise BoundViolation(row, report)
        rows.append(row)
    return rows


def summarise(rows: list[SurveyRow]) -> dict:
    counts = {v: 0 for v in (MEETS_BOUND, PETERSEN_EXCEPTION, UNKNOWN, VIOLATION)}
    for r in rows:
        counts[r.verdict] += 1
    return {"rows": len(rows), **counts}
