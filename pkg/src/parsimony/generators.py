"""Named graphs, permutation graphs and random subcubic graphs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, are_isomorphic, build_graph


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def g5() -> Graph:
    """The 5-cycle 0-1-2-3-4 with chords 0-2 and 1-4; vertex 3 has degree 2."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)])


def p_prime() -> Graph:
    """Two copies of :func:`g5` joined by an edge between their degree-2 vertices."""
    a = g5()
    edges = list(a.edges) + [(u + 5, v + 5) for u, v in a.edges] + [(3, 8)]
    return build_graph(10, edges)


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else path(n)


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def petersen_minus_edge() -> Graph:
    return petersen().without_edge(0)


@dataclass(frozen=True)
class PermutationSpec:
    """Two ``(2k+1)``-cycles ``a_i`` and ``b_i`` plus the matching ``a_i b_sigma(i)``.

    ``drop_edge`` removes the matching edge at ``a_{drop_edge}``.
    """

    k: int
    sigma: tuple[int, ...]
    drop_edge: Optional[int] = None

    def __post_init__(self):
        size = 2 * self.k + 1
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if sorted(self.sigma) != list(range(size)):
            raise ValueError(f"sigma {self.sigma} is not a permutation of 0..{size - 1}")
        if self.drop_edge is not None and not 0 <= self.drop_edge < size:
            raise ValueError(f"drop_edge {self.drop_edge} outside 0..{size - 1}")


def permutation_graph(spec: PermutationSpec) -> Graph:
    """Vertices ``a_i = i`` and ``b_i = 2k+1+i``."""
    size = 2 * spec.k + 1
    a = [(i, (i + 1) % size) for i in range(size)]
    b = [(size + i, size + (i + 1) % size) for i in range(size)]
    match = [(i, size + spec.sigma[i]) for i in range(size) if i != spec.drop_edge]
    return build_graph(2 * size, a + b + match)


def permutation_specs(k: int, fix_first: bool = True) -> Iterator[tuple[int, ...]]:
    """Matchings to enumerate; ``fix_first`` keeps only ``sigma(0) = 0``.

    Rotating cycle B maps any spec onto one with ``sigma(0) = 0`` without
    changing the graph up to isomorphism.
    """
    size = 2 * k + 1
    if fix_first:
        for rest in itertools.permutations(range(1, size)):
            yield (0,) + rest
    else:
        yield from itertools.permutations(range(size))


def enumerate_permutation_graphs(k: int, near: bool = False, fix_first: bool = True) -> Iterator[tuple[PermutationSpec, Graph]]:
    """All permutation graphs (``near=False``) or near-permutation graphs for ``k``.

    Near-permutation graphs drop each matching edge in turn.
    """
    if k > 4:
        raise ValueError("enumeration is limited to k <= 4")
    for sigma in permutation_specs(k, fix_first):
        drops: Sequence[Optional[int]] = range(2 * k + 1) if near else (None,)
        for d in drops:
            spec = PermutationSpec(k, sigma, d)
            yield spec, permutation_graph(spec)


def dedupe(graphs) -> list:
    """Keep the first graph of each isomorphism class."""
    reps: list[Graph] = []
    for g in graphs:
        if not any(are_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def random_cubic(n: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Random simple 3-regular graph by the pairing model with rejection.

    Stubs are paired uniformly; any pairing producing a loop or a repeated
    edge is discarded and redrawn.
    """
    if n < 4 or n % 2:
        raise ValueError(f"a cubic graph needs an even n >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        keys = {(min(p), max(p)) for p in pairs}
        if len(keys) == len(pairs) and all(u != v for u, v in pairs):
            return build_graph(n, pairs)
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}")


def random_subcubic(n: int, m: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Random simple graph with ``n`` vertices, ``m`` edges and max degree 3.

    Edges are drawn one at a time among pairs whose ends both have spare
    degree; a draw that gets stuck before ``m`` edges is restarted.
    """
    if n < 0 or m < 0 or m > 3 * n // 2 or m > n * (n - 1) // 2:
        raise ValueError(f"no simple subcubic graph with n={n}, m={m}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        deg = [0] * n
        chosen: set[tuple[int, int]] = set()
        edges = []
        while len(edges) < m:
            cands = [(u, v) for u in range(n) if deg[u] < 3 for v in range(u + 1, n) if deg[v] < 3 and (u, v) not in chosen]
            if not cands:
                break
            u, v = rng.choice(cands)
            chosen.add((u, v))
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        if len(edges) == m:
            return build_graph(n, edges)
    raise RuntimeError(f"could not draw a subcubic graph with n={n}, m={m}")


#: Petersen-minus-an-edge layout: (end, end, colour symbol).
_FIGURE1 = [
    (0, 1, "d"), (1, 2, "b"), (2, 3, "g"), (3, 4, "b"), (4, 0, "g"),  # x0..x4
    (5, 8, "d"), (8, 6, "b"), (6, 9, "g"), (9, 7, "b"), (7, 5, "g"),  # y0 y3 y1 y4 y2
    (1, 6, "a"), (2, 7, "a"), (3, 8, "a"), (4, 9, "a"),  # x_i y_i
    (0, 10, "a"), (5, 11, "a"),  # x0 a, y0 b
]


def figure1_instance():
    """Cubic graph holding two delta 5-cycles in the Petersen-minus-edge layout.

    Vertices ``x0..x4 = 0..4`` and ``y0..y4 = 5..9`` span the Petersen graph
    minus ``x0y0``; ``x0`` hangs off ``a = 10`` and ``y0`` off ``b = 11``,
    where ``a, b`` are the ends of a removed edge of a cube on ``10..17``.
    Any 3-edge-colouring of the cube minus an edge gives its two pendant
    edges the same colour, which makes the returned colouring
    delta-minimum (``s = 2``) while keeping odd girth 5.

    Returns the graph and that colouring.
    """
    from .colouring import EdgeColouring

    edges = [(u, v) for u, v, _ in _FIGURE1]
    cols = [s for _, _, s in _FIGURE1]
    for u in range(8):
        for bit in range(3):
            w = u ^ (1 << bit)
            if u < w and (u, w) != (0, 1):
                edges.append((10 + u, 10 + w))
                cols.append("abg"[bit])
    g = build_graph(18, edges)
    return g, EdgeColouring.from_sequence(g, cols)


NAMED = {
    "petersen": petersen,
    "g5": g5,
    "p_prime": p_prime,
    "k4": lambda: complete(4),
    "petersen_minus_edge": petersen_minus_edge,
    "pme_configuration": lambda: figure1_instance()[0],
}


__all__ = [
    "NAMED",
    "PermutationSpec",
    "complete",
    "cycle",
    "dedupe",
    "enumerate_permutation_graphs",
    "figure1_instance",
    "g5",
    "p_prime",
    "path",
    "permutation_graph",
    "permutation_specs",
    "petersen",
    "petersen_minus_edge",
    "random_cubic",
    "random_subcubic",
]
