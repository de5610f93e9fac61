"""Immutable simple graphs of maximum degree three.

Vertices are the integers ``0..n-1`` and edges carry the identifiers
``0..m-1`` in the order they were given, so an edge-colouring can be stored
as a flat tuple indexed by edge id.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

MAX_DEGREE = 3

#: Odd girth of a bipartite graph.
INFINITE = math.inf


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple subcubic graph."""


@dataclass(frozen=True)
class Graph:
    """A validated simple graph with ``max degree <= 3``.

    Build instances with :func:`build_graph`; the constructor trusts its
    arguments.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def neighbours(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.incidence[v]]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        """Identifier of edge ``uv``, or ``None`` when absent."""
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def adjacent_edges(self, e: int) -> Iterator[int]:
        """Edges sharing an end with ``e`` (excluding ``e``)."""
        for v in self.edges[e]:
            for f in self.incidence[v]:
                if f != e:
                    yield f

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = set(vertices)
        return sum(1 for a, b in self.edges if a in vs and b in vs)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge ids are kept."""
        return build_graph(self.n, [(perm[a], perm[b]) for a, b in self.edges])

    def without_edge(self, e: int) -> "Graph":
        return build_graph(self.n, [p for i, p in enumerate(self.edges) if i != e])

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_pairs`` and return the corresponding :class:`Graph`.

    Raises:
        GraphError: on out-of-range vertices, self-loops, duplicate edges or
            a vertex of degree four or more.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    incidence: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in index:
            raise GraphError(f"duplicate edge ({u}, {v})")
        e = len(edges)
        index[key] = e
        edges.append((u, v))
        for w in (u, v):
            incidence[w].append(e)
            if len(incidence[w]) > MAX_DEGREE:
                raise GraphError(f"vertex {w} has degree {len(incidence[w])} > {MAX_DEGREE}")
    return Graph(n, tuple(edges), tuple(tuple(es) for es in incidence), index)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_cubic(g: Graph) -> bool:
    return all(g.degree(v) == 3 for v in range(g.n))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one connected component."""
    return len(components(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def odd_girth(g: Graph) -> float | int:
    """Length of a shortest odd cycle, or :data:`INFINITE` for bipartite graphs.

    Runs a breadth-first search on the bipartite double cover from every
    vertex: the distance from ``(s, even)`` to ``(s, odd)`` is the length of
    a shortest odd closed walk through ``s``, and the minimum over ``s`` is
    the odd girth.
    """
    best: float | int = INFINITE
    for s in range(g.n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            d = dist[(v, p)]
            if d + 1 >= best:
                break
            for w in g.neighbours(v):
                state = (w, 1 - p)
                if state not in dist:
                    dist[state] = d + 1
                    if state == (s, 1):
                        best = d + 1
                        queue.clear()
                        break
                    queue.append(state)
    return best


def shortest_odd_cycle(g: Graph) -> Optional[list[int]]:
    """Vertex sequence of one shortest odd cycle, or ``None`` if bipartite."""
    target = odd_girth(g)
    if target == INFINITE:
        return None
    for s in range(g.n):
        parent = {(s, 0): None}
        queue = deque([(s, 0)])
        while queue:
            state = queue.popleft()
            v, p = state
            for w in g.neighbours(v):
                nxt = (w, 1 - p)
                if nxt in parent:
                    continue
                parent[nxt] = state
                if nxt == (s, 1):
                    walk = []
                    cur = nxt
                    while cur is not None:
                        walk.append(cur[0])
                        cur = parent[cur]
                    walk = walk[:-1]
                    if len(walk) == target and len(set(walk)) == target:
                        return walk[::-1]
                    queue.clear()
                    break
                queue.append(nxt)
    raise AssertionError("odd girth finite but no odd cycle recovered")


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """A vertex bijection ``f`` with ``uv in E(g1) <=> f(u)f(v) in E(g2)``.

    Colour refinement prunes candidates, then a backtracking search extends
    partial maps vertex by vertex, checking adjacency against every vertex
    already mapped. Intended for ``n <= ~20``.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return None
    c1 = _refine_joint(g1, g2)
    if c1 is None:
        return None
    col1, col2 = c1
    if sorted(col1) != sorted(col2):
        return None

    # Map vertices in BFS order so each new vertex usually has a mapped neighbour.
    order: list[int] = []
    seen = [False] * g1.n
    for comp in components(g1):
        comp_sorted = sorted(comp, key=lambda v: (sum(1 for c in col1 if c == col1[v]), v))
        start = comp_sorted[0]
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g1.neighbours(v)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    mapping = [-1] * g1.n
    used = [False] * g2.n
    adj1 = [set(g1.neighbours(v)) for v in range(g1.n)]
    adj2 = [set(g2.neighbours(v)) for v in range(g2.n)]
    by_colour: dict[int, list[int]] = {}
    for v in range(g2.n):
        by_colour.setdefault(col2[v], []).append(v)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        mapped_nbrs = [mapping[w] for w in adj1[v] if mapping[w] >= 0]
        if mapped_nbrs:
            candidates = [x for x in adj2[mapped_nbrs[0]] if col2[x] == col1[v]]
        else:
            candidates = by_colour.get(col1[v], [])
        for x in candidates:
            if used[x]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if (w in adj1[v]) != (mapping[w] in adj2[x]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = x
            used[x] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[x] = False
        return False

    return list(mapping) if extend(0) else None


def _refine_joint(g1: Graph, g2: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Refine both graphs with a shared palette so colour ids are comparable."""
    n1 = g1.n
    nbrs = [g1.neighbours(v) for v in range(n1)] + [[w + n1 for w in g2.neighbours(v)] for v in range(g2.n)]
    colour = [len(ns) for ns in nbrs]
    while True:
        sigs = [(colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in range(len(nbrs))]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if sorted(new[:n1]) != sorted(new[n1:]):
            return None
        if len(set(new)) == len(set(colour)):
            return new[:n1], new[n1:]
        colour = new


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
