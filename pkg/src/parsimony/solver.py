"""Exact and heuristic computation of ``s(G)``, the fewest delta edges in a
proper 4-edge-colouring, and of ``gamma(G) = 1 - s(G)/m``.
"""

from __future__ import annotations

import json
import os
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .colouring import (
    DELTA,
    THREE,
    Colour,
    ColouringError,
    DeltaClass,
    EdgeColouring,
    classify_delta_edges,
    delta_count,
    is_proper,
    kempe_component_at,
    kempe_swap,
    shift_delta_along_cycle,
)
from .graph import Graph, build_graph

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "PARSIMONY_BUDGET"

EXACT = "exact"
HEURISTIC = "heuristic"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def gamma_of(g: Graph, s: int) -> Fraction:
    """Fraction of edges that can be 3-edge-coloured, ``1 - s/m`` (1 when m = 0)."""
    if not 0 <= s <= g.m:
        raise ValueError(f"s={s} outside 0..{g.m}")
    if g.m == 0:
        return Fraction(1)
    return 1 - Fraction(s, g.m)


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solve.

    ``optimal`` is True only for an exact search that ran to completion; a
    heuristic report, or an exact search that ran out of budget, gives an
    upper bound on ``s``.
    """

    graph: Graph
    s: int
    gamma: Fraction
    witness: EdgeColouring
    method: str
    nodes: int = 0
    optimal: bool = False

    @property
    def is_three_colourable(self) -> bool:
        return self.s == 0

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "s": self.s,
            "gamma": format_fraction(self.gamma),
            "method": self.method,
            "optimal": self.optimal,
            "witness": self.witness.symbols(),
            "nodes": self.nodes,
            "edges": [list(p) for p in self.graph.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> "SolveReport":
        if isinstance(data, str):
            data = json.loads(data)
        g = build_graph(data["n"], [tuple(p) for p in data["edges"]])
        return cls(
            graph=g,
            s=data["s"],
            gamma=Fraction(data["gamma"]),
            witness=EdgeColouring.from_sequence(g, data["witness"]),
            method=data["method"],
            nodes=data["nodes"],
            optimal=data["optimal"],
        )


class BudgetExhausted(RuntimeError):
    """Raised by callers that insist on optimality when the budget runs out."""

    def __init__(self, report: SolveReport):
        super().__init__(f"search budget exhausted after {report.nodes} nodes; best s <= {report.s}")
        self.report = report


# ---------------------------------------------------------------------------
# Heuristic: greedy colouring followed by Kempe-chain local search
# ---------------------------------------------------------------------------


def _free(c: list[int], g: Graph, v: int) -> list[int]:
    present = {c[f] for f in g.incidence[v]}
    return [x for x in range(3) if x not in present]


def _try_remove_delta(col: EdgeColouring, e: int) -> Optional[EdgeColouring]:
    """Recolour delta edge ``e`` with a basic colour, using at most one Kempe swap."""
    g = col.graph
    u, v = g.edges[e]
    cols = list(col.colours)
    fu, fv = _free(cols, g, u), _free(cols, g, v)
    common = [x for x in fu if x in fv]
    if common:
        return col.recolour({e: Colour(common[0])})
    for x in fu:
        for y in fv:
            # v lacks y but has x: swapping the (x, y)-path at v frees x there.
            comp = kempe_component_at(col, v, Colour(x), Colour(y))
            if u not in comp.vertices:
                return kempe_swap(col, comp).recolour({e: Colour(x)})
            comp = kempe_component_at(col, u, Colour(x), Colour(y))
            if v not in comp.vertices:
                return kempe_swap(col, comp).recolour({e: Colour(y)})
    return None


def _fan_colour(g: Graph, cols: list[int], e: int) -> None:
    """Colour the uncoloured edge ``e`` with one of four colours (Misra-Gries).

    Builds a maximal fan at one end, inverts a two-colour path through that
    end and rotates a prefix of the fan. Always succeeds when ``max degree
    <= 3``.
    """
    u, v0 = g.edges[e]

    def free(x: int) -> set[int]:
        return set(range(4)) - {cols[f] for f in g.incidence[x]}

    def uedge(w: int) -> int:
        return g.edge_id(u, w)

    fan = [v0]
    while True:
        last = fan[-1]
        nxt = [w for w in g.neighbours(u) if w not in fan and cols[uedge(w)] >= 0 and cols[uedge(w)] in free(last)]
        if not nxt:
            break
        fan.append(nxt[0])
    c = min(free(u))
    d = min(free(fan[-1]))
    if c != d:
        # Invert the maximal c/d path starting at u (c is free at u).
        path, x, want, prev = [], u, d, -1
        while True:
            step = [f for f in g.incidence[x] if f != prev and cols[f] == want]
            if not step:
                break
            f = step[0]
            path.append(f)
            prev, x, want = f, g.other_end(f, x), (c if want == d else d)
        for f in path:
            cols[f] = c if cols[f] == d else d
    for i, w in enumerate(fan):
        if i > 0 and cols[uedge(w)] not in free(fan[i - 1]):
            break
        if d in free(w):
            for j in range(i):
                cols[uedge(fan[j])] = cols[uedge(fan[j + 1])]
            cols[uedge(w)] = d
            return
    raise AssertionError("fan recolouring failed")


def greedy_colouring(g: Graph, rng: random.Random) -> EdgeColouring:
    """Random-order greedy colouring preferring the three basic colours."""
    order = list(range(g.m))
    rng.shuffle(order)
    cols = [-1] * g.m
    for e in order:
        u, v = g.edges[e]
        used = {cols[f] for f in g.incidence[u]} | {cols[f] for f in g.incidence[v]}
        palette = [0, 1, 2]
        rng.shuffle(palette)
        x = next((x for x in palette + [3] if x not in used), None)
        if x is None:
            _fan_colour(g, cols, e)
        else:
            cols[e] = x
    return EdgeColouring(g, tuple(Colour(x) for x in cols))


def heuristic_colouring(g: Graph, seed: int = 0, max_moves: Optional[int] = None) -> SolveReport:
    """Greedy assignment then Kempe-chain hill climbing; deterministic in ``seed``.

    Each round tries to eliminate a delta edge with a single Kempe swap at
    one of its ends. When every delta edge is stuck the search makes a
    neutral move (shifting a delta edge around its odd cycle, or a random
    Kempe swap) and carries on, up to ``max_moves`` neutral moves.
    """
    rng = random.Random(seed)
    col = greedy_colouring(g, rng)
    if max_moves is None:
        max_moves = 20 * g.m + 50
    best = col
    moves = 0
    while True:
        improved = True
        while improved and delta_count(col):
            improved = False
            for e in col.edges_with(DELTA):
                nxt = _try_remove_delta(col, e)
                if nxt is not None:
                    col, improved = nxt, True
                    break
        if delta_count(col) < delta_count(best):
            best = col
        if delta_count(col) == 0 or moves >= max_moves:
            break
        moves += 1
        col = _neutral_move(col, rng)
    assert is_proper(best)
    return SolveReport(g, delta_count(best), gamma_of(g, delta_count(best)), best, HEURISTIC, moves, False)


def _neutral_move(col: EdgeColouring, rng: random.Random) -> EdgeColouring:
    g = col.graph
    deltas = col.edges_with(DELTA)
    e = rng.choice(deltas)
    if rng.random() < 0.5:
        cls = classify_delta_edges(col)
        members = cls.members(e)
        if members:
            klass = rng.choice(members)
            target = rng.choice(cls.cycle(e, klass))
            try:
                return shift_delta_along_cycle(col, e, klass, target)
            except ColouringError:
                pass
    # Random Kempe swap near a delta edge.
    v = rng.choice(g.edges[e] + tuple(w for x in g.edges[e] for w in g.neighbours(x)))
    x, y = rng.sample(THREE, 2)
    return kempe_swap(col, kempe_component_at(col, v, x, y))


# ---------------------------------------------------------------------------
# Exact branch and bound
# ---------------------------------------------------------------------------


def bfs_edge_order(g: Graph) -> list[int]:
    """Edges in breadth-first discovery order from vertex 0, ties by edge id."""
    order: list[int] = []
    placed = [False] * g.m
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in sorted(g.incidence[v]):
                if not placed[e]:
                    placed[e] = True
                    order.append(e)
                w = g.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def exact_s(g: Graph, budget: Optional[int] = None, incumbent: Optional[SolveReport] = None) -> SolveReport:
    """Exact minimum number of delta edges, by depth-first branch and bound.

    Edges are assigned in :func:`bfs_edge_order`, colours tried in the order
    alpha, beta, gamma, delta. A branch is cut once its delta edges (plus
    neighbouring edges already forced to delta) reach the incumbent, which
    starts from :func:`heuristic_colouring`. The colour permutation symmetry
    is broken by fixing the first edge to alpha and allowing its first
    neighbouring edge only beta or delta.

    If more than ``budget`` nodes are expanded the search stops and returns
    the incumbent with ``optimal=False``.
    """
    if budget is None:
        budget = default_budget()
    if incumbent is None:
        incumbent = heuristic_colouring(g, seed=0)
    best_s = incumbent.s
    best_cols = list(incumbent.witness.colours)
    nodes = 0
    if best_s == 0 or g.m == 0:
        return SolveReport(g, best_s, gamma_of(g, best_s), incumbent.witness, EXACT, 0, True)

    order = bfs_edge_order(g)
    m = len(order)
    ends = [g.edges[e] for e in order]
    allowed = [0b1111] * m
    allowed[0] = 0b0001
    first = set(g.adjacent_edges(order[0]))
    for i in range(1, m):
        if order[i] in first:
            allowed[i] = 0b1010  # beta or delta
            break
    # Unassigned neighbours of each position, for forward checking.
    pos = {e: i for i, e in enumerate(order)}
    later_nbrs = [[pos[f] for f in g.adjacent_edges(order[i]) if pos[f] > i] for i in range(m)]

    used = [0] * g.n
    assign = [-1] * m
    choice = [0] * m  # next colour index to try at each depth
    n_delta = 0
    i = 0
    exhausted = False
    while i >= 0:
        if i == m:
            # Strictly better than the incumbent by construction of the cut.
            best_s = n_delta
            best_cols = [Colour.ALPHA] * g.m
            for j, e in enumerate(order):
                best_cols[e] = Colour(assign[j])
            i -= 1
            if best_s == 0:
                break
            continue
        u, v = ends[i]
        if assign[i] >= 0:
            # Undo the previous choice at this depth before trying the next one.
            bit = 1 << assign[i]
            used[u] ^= bit
            used[v] ^= bit
            if assign[i] == 3:
                n_delta -= 1
            assign[i] = -1
        placed = False
        free = allowed[i] & ~(used[u] | used[v])
        while choice[i] < 4:
            x = choice[i]
            choice[i] += 1
            if not (free >> x) & 1:
                continue
            if x == 3 and n_delta + 1 >= best_s:
                continue
            nodes += 1
            if nodes > budget:
                exhausted = True
                break
            bit = 1 << x
            used[u] |= bit
            used[v] |= bit
            d = n_delta + (x == 3)
            # Forward check: neighbours with no basic colour left must take delta.
            forced = 0
            dead = False
            for j in later_nbrs[i]:
                a, b = ends[j]
                avail = allowed[j] & ~(used[a] | used[b])
                if not avail & 0b0111:
                    forced += 1
                    if not avail & 0b1000:
                        dead = True
                        break
            if dead or (forced and d + forced >= best_s):
                used[u] ^= bit
                used[v] ^= bit
                continue
            assign[i] = x
            n_delta = d
            placed = True
            break
        if exhausted:
            break
        if placed:
            i += 1
            if i < m:
                choice[i] = 0
                assign[i] = -1
        else:
            choice[i] = 0
            i -= 1

    witness = EdgeColouring(g, tuple(Colour(x) for x in best_cols))
    assert is_proper(witness) and delta_count(witness) == best_s
    return SolveReport(g, best_s, gamma_of(g, best_s), witness, EXACT, nodes, not exhausted)


def solve(g: Graph, exact: bool = True, seed: int = 0, budget: Optional[int] = None) -> SolveReport:
    start = heuristic_colouring(g, seed=seed)
    if not exact:
        return start
    return exact_s(g, budget=budget, incumbent=start)


# ---------------------------------------------------------------------------
# Maximising the total length of the associated odd cycles
# ---------------------------------------------------------------------------


def family_length(c: EdgeColouring) -> int:
    """Sum over delta edges of the longest associated odd cycle."""
    cls = classify_delta_edges(c)
    return sum(max((len(cls.cycle(e, k)) for k in cls.members(e)), default=0) for e in cls.delta_edges)


def _shift_variants(c: EdgeColouring):
    cls = classify_delta_edges(c)
    for e in cls.delta_edges:
        for k in cls.members(e):
            for t in cls.cycle(e, k):
                if t == e:
                    continue
                try:
                    yield shift_delta_along_cycle(c, e, k, t)
                except ColouringError:
                    continue


def maximize_family_length(g: Graph, c: EdgeColouring) -> EdgeColouring:
    """Greedily increase :func:`family_length` while keeping the delta count.

    Accepted moves are single shifts of a delta edge around its odd cycle
    and the two-cycle recolouring of a Petersen-minus-an-edge configuration
    (tried after shifting the two delta edges into position). Stops at a
    local maximum; each accepted move strictly increases a quantity bounded
    by ``m``.
    """
    from .structure import apply_figure2_recolouring, detect_figure1_configuration

    if c.graph != g:
        raise ValueError("colouring belongs to a different graph")
    current, score = c, family_length(c)
    while delta_count(current):
        nxt = None
        for cand in _shift_variants(current):
            if family_length(cand) > score:
                nxt = cand
                break
        if nxt is None:
            for cand in _pair_alignments(current):
                config = detect_figure1_configuration(g, cand)
                if config is None:
                    continue
                out = apply_figure2_recolouring(g, cand, config)
                if family_length(out) > score:
                    nxt = out
                    break
        if nxt is None:
            break
        current, score = nxt, family_length(nxt)
    return current


def _pair_alignments(c: EdgeColouring):
    """The colouring itself, then every way of shifting two delta edges along 5-cycles."""
    yield c
    cls = classify_delta_edges(c)
    fives = [(e, k) for e in cls.delta_edges for k in cls.members(e) if len(cls.cycle(e, k)) == 5]
    for e1, k1 in fives:
        for e2, k2 in fives:
            if e1 == e2:
                continue
            for t1 in cls.cycle(e1, k1):
                try:
                    c1 = shift_delta_along_cycle(c, e1, k1, t1)
                except ColouringError:
                    continue
                for t2 in cls.cycle(e2, k2):
                    try:
                        yield shift_delta_along_cycle(c1, e2, k2, t2)
                    except ColouringError:
                        continue


__all__ = [
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "SolveReport",
    "bfs_edge_order",
    "exact_s",
    "family_length",
    "format_fraction",
    "gamma_of",
    "heuristic_colouring",
    "maximize_family_length",
    "solve",
]
