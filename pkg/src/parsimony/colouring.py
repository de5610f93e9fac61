"""Proper 4-edge-colourings, Kempe chains and the classification of delta edges.

Colours are ``ALPHA, BETA, GAMMA`` plus the parsimony colour ``DELTA``,
which a good colouring uses as rarely as possible.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graph import Graph, build_graph


class Colour(enum.IntEnum):
    ALPHA = 0
    BETA = 1
    GAMMA = 2
    DELTA = 3

    @property
    def symbol(self) -> str:
        return "abgd"[self]

    @classmethod
    def from_symbol(cls, s: str) -> "Colour":
        try:
            return cls("abgd".index(s))
        except ValueError:
            raise ValueError(f"unknown colour symbol {s!r}") from None


ALPHA, BETA, GAMMA, DELTA = Colour.ALPHA, Colour.BETA, Colour.GAMMA, Colour.DELTA
THREE = (ALPHA, BETA, GAMMA)


class DeltaClass(enum.Enum):
    """Which bicoloured path closes a delta edge into an odd cycle."""

    A = (ALPHA, BETA)
    B = (BETA, GAMMA)
    C = (ALPHA, GAMMA)

    @property
    def pair(self) -> tuple[Colour, Colour]:
        return self.value

    @property
    def outside(self) -> Colour:
        """The third colour, carried by every edge hanging off the cycle."""
        (c,) = set(THREE) - set(self.value)
        return c


class ColouringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColouring:
    """Total map edge id -> :class:`Colour` over ``graph``.

    Instances are values; every modifying operation returns a new colouring.
    Properness is not enforced on construction so that :func:`is_proper`
    and the lemma verifiers can inspect arbitrary candidates.
    """

    graph: Graph
    colours: tuple[Colour, ...]

    def __post_init__(self):
        if len(self.colours) != self.graph.m:
            raise ColouringError(f"{len(self.colours)} colours given for {self.graph.m} edges")

    @classmethod
    def from_sequence(cls, g: Graph, seq: Iterable) -> "EdgeColouring":
        out = []
        for c in seq:
            out.append(Colour.from_symbol(c) if isinstance(c, str) else Colour(c))
        return cls(g, tuple(out))

    def __getitem__(self, e: int) -> Colour:
        return self.colours[e]

    def recolour(self, changes: Mapping[int, Colour]) -> "EdgeColouring":
        cols = list(self.colours)
        for e, c in changes.items():
            cols[e] = Colour(c)
        return EdgeColouring(self.graph, tuple(cols))

    def edges_with(self, colour: Colour) -> list[int]:
        return [e for e, c in enumerate(self.colours) if c == colour]

    def colours_at(self, v: int) -> list[Colour]:
        return [self.colours[e] for e in self.graph.incidence[v]]

    def edge_at(self, v: int, colour: Colour) -> Optional[int]:
        for e in self.graph.incidence[v]:
            if self.colours[e] == colour:
                return e
        return None

    def missing(self, v: int) -> list[Colour]:
        """Colours of ``ALPHA, BETA, GAMMA`` not present at ``v``."""
        present = set(self.colours_at(v))
        return [c for c in THREE if c not in present]

    def diff(self, other: "EdgeColouring") -> list[int]:
        return [e for e, (a, b) in enumerate(zip(self.colours, other.colours)) if a != b]

    def symbols(self) -> list[str]:
        return [c.symbol for c in self.colours]

    def to_json(self) -> dict:
        return {"n": self.graph.n, "edges": [list(p) for p in self.graph.edges], "colours": self.symbols()}

    @classmethod
    def from_json(cls, data: dict | str) -> "EdgeColouring":
        if isinstance(data, str):
            data = json.loads(data)
        g = build_graph(data["n"], [tuple(p) for p in data["edges"]])
        return cls.from_sequence(g, data["colours"])


def is_proper(c: EdgeColouring) -> bool:
    g = c.graph
    for v in range(g.n):
        cols = c.colours_at(v)
        if len(set(cols)) != len(cols):
            return False
    return True


def delta_count(c: EdgeColouring) -> int:
    return sum(1 for x in c.colours if x == DELTA)


def _require_proper(c: EdgeColouring) -> None:
    if not is_proper(c):
        raise ColouringError("operation requires a proper edge-colouring")


class ComponentKind(enum.Enum):
    PATH = "path"
    EVEN_CYCLE = "even_cycle"


@dataclass(frozen=True)
class KempeComponent:
    """A connected component of the subgraph spanned by two colours.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]``; for a cycle
    the last edge closes back to ``vertices[0]``.
    """

    colours: frozenset
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    kind: ComponentKind

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def ends(self) -> tuple[int, int]:
        if self.kind is not ComponentKind.PATH:
            raise ValueError("a cycle has no ends")
        return self.vertices[0], self.vertices[-1]


def _walk(c: EdgeColouring, start: int, first_edge: int, pair: frozenset) -> tuple[list[int], list[int], bool]:
    g = c.graph
    verts, edges = [start], []
    v, e = start, first_edge
    while True:
        edges.append(e)
        w = g.other_end(e, v)
        if w == start:
            return verts, edges, True
        verts.append(w)
        nxt = [f for f in g.incidence[w] if f != e and c.colours[f] in pair]
        if not nxt:
            return verts, edges, False
        v, e = w, nxt[0]


def kempe_component_at(c: EdgeColouring, v: int, x: Colour, y: Colour) -> KempeComponent:
    """Component of the ``(x, y)``-subgraph containing ``v``.

    Paths are reported from one end to the other; when ``v`` is interior the
    walk direction is fixed by the lower edge id at ``v``. A vertex with no
    ``x``/``y`` edge yields the trivial path ``(v,)``.
    """
    if x == y:
        raise ColouringError("Kempe components need two distinct colours")
    _require_proper(c)
    pair = frozenset((Colour(x), Colour(y)))
    g = c.graph
    start_edges = sorted(e for e in g.incidence[v] if c.colours[e] in pair)
    if not start_edges:
        return KempeComponent(pair, (v,), (), ComponentKind.PATH)
    verts, edges, closed = _walk(c, v, start_edges[0], pair)
    if closed:
        return KempeComponent(pair, tuple(verts), tuple(edges), ComponentKind.EVEN_CYCLE)
    if len(start_edges) == 2:
        back_v, back_e, _ = _walk(c, v, start_edges[1], pair)
        verts = back_v[::-1][:-1] + verts
        edges = back_e[::-1] + edges
    return KempeComponent(pair, tuple(verts), tuple(edges), ComponentKind.PATH)


def kempe_swap(c: EdgeColouring, comp: KempeComponent) -> EdgeColouring:
    """Exchange the two colours of ``comp`` on its edges.

    Raises:
        ColouringError: if ``comp`` is not a component of ``c``.
    """
    x, y = sorted(comp.colours)
    current = kempe_component_at(c, comp.vertices[0], x, y)
    if set(current.edges) != set(comp.edges):
        raise ColouringError("stale Kempe component: it does not match the colouring")
    return c.recolour({e: (y if c.colours[e] == x else x) for e in comp.edges})


@dataclass(frozen=True)
class DeltaClassification:
    """Class memberships of the delta edges, each with its odd cycle.

    ``cycles[e][cls]`` is the edge list of the odd cycle formed by ``e``
    followed by the even bicoloured path from one end of ``e`` to the other.
    A delta edge with no entry is reported in :attr:`unclassified`.
    """

    cycles: dict

    @property
    def delta_edges(self) -> list[int]:
        return sorted(self.cycles)

    def members(self, e: int) -> list[DeltaClass]:
        return [cls for cls in DeltaClass if cls in self.cycles.get(e, {})]

    def cycle(self, e: int, cls: DeltaClass) -> tuple[int, ...]:
        try:
            return self.cycles[e][cls]
        except KeyError:
            raise ColouringError(f"edge {e} is not in class {cls.name}") from None

    @property
    def unclassified(self) -> list[int]:
        return [e for e in self.delta_edges if not self.cycles[e]]

    def in_class(self, cls: DeltaClass) -> list[int]:
        return [e for e in self.delta_edges if cls in self.cycles[e]]


def closing_path(c: EdgeColouring, e: int, cls: DeltaClass) -> Optional[KempeComponent]:
    """The even ``cls``-coloured path joining the ends of ``e``, if any."""
    u, v = c.graph.edges[e]
    x, y = cls.pair
    comp = kempe_component_at(c, u, x, y)
    if comp.kind is ComponentKind.PATH and comp.length > 0 and comp.length % 2 == 0 and set(comp.ends) == {u, v}:
        return comp
    return None


def classify_delta_edges(c: EdgeColouring) -> DeltaClassification:
    _require_proper(c)
    cycles: dict = {}
    for e in c.edges_with(DELTA):
        u, _ = c.graph.edges[e]
        cycles[e] = {}
        for cls in DeltaClass:
            path = closing_path(c, e, cls)
            if path is None:
                continue
            # Orient the cycle as e, then the path starting at the end shared with e's first vertex.
            edges = list(path.edges) if path.vertices[0] == u else list(path.edges[::-1])
            cycles[e][cls] = (e, *edges)
    return DeltaClassification(cycles)


def cycle_vertices(g: Graph, cycle: Iterable[int]) -> list[int]:
    """Vertex sequence of a cycle given as consecutive edge ids."""
    cycle = list(cycle)
    if len(cycle) == 1:
        raise ValueError("a cycle needs at least three edges")
    a, b = g.edges[cycle[0]]
    # Start at the end of the first edge not shared with the second.
    start = b if a in g.edges[cycle[1]] else a
    verts = [start]
    v = start
    for e in cycle[:-1]:
        v = g.other_end(e, v)
        verts.append(v)
    return verts


def shift_delta_along_cycle(c: EdgeColouring, e: int, cls: DeltaClass, e_target: int) -> EdgeColouring:
    """Move the delta colour from ``e`` to ``e_target`` around ``e``'s odd cycle.

    With the cycle written ``e = f0, f1, ..., f2t`` and ``e_target = fj``,
    the edges ``f0..f(j-1)`` take the old colours of ``f1..fj`` and ``fj``
    becomes ``DELTA``; every edge off the cycle keeps its colour.

    Raises:
        ColouringError: when ``e`` is not a delta edge, is not in ``cls``,
            ``e_target`` is not on the cycle, or the result is improper
            (which cannot happen for a delta-minimum colouring).
    """
    if c.colours[e] != DELTA:
        raise ColouringError(f"edge {e} is not coloured delta")
    path = closing_path(c, e, cls)
    if path is None:
        raise ColouringError(f"edge {e} is not in class {cls.name}")
    u, _ = c.graph.edges[e]
    cyc = [e] + (list(path.edges) if path.vertices[0] == u else list(path.edges[::-1]))
    if e_target not in cyc:
        raise ColouringError(f"edge {e_target} is not on the cycle of edge {e}")
    j = cyc.index(e_target)
    if j == 0:
        return c
    changes = {cyc[i]: c.colours[cyc[i + 1]] for i in range(j)}
    changes[e_target] = DELTA
    out = c.recolour(changes)
    if not is_proper(out):
        raise ColouringError("shift produced an improper colouring; the input is not delta-minimum")
    return out
