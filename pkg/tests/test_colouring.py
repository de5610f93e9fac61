import random

import pytest

from parsimony.colouring import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    THREE,
    Colour,
    ColouringError,
    ComponentKind,
    DeltaClass,
    EdgeColouring,
    classify_delta_edges,
    cycle_vertices,
    delta_count,
    is_proper,
    kempe_component_at,
    kempe_swap,
    shift_delta_along_cycle,
)
from parsimony.generators import complete, cycle, g5, path, petersen, random_cubic
from parsimony.graph import build_graph
from parsimony.solver import exact_s, heuristic_colouring

# A delta-minimum colouring of g5() with delta on edge 2-3 (vertex 3 has
# degree 2), picked from a brute-force listing of all 4^7 assignments.
G5_DEG2 = "abdabgg"


def col(g, symbols):
    return EdgeColouring.from_sequence(g, symbols)


def test_colour_symbols():
    assert [c.symbol for c in Colour] == list("abgd")
    assert Colour.from_symbol("g") is GAMMA
    with pytest.raises(ValueError):
        Colour.from_symbol("x")
    assert DeltaClass.B.pair == (BETA, GAMMA) and DeltaClass.B.outside is ALPHA


def test_is_proper_triangle():
    k3 = cycle(3)
    assert is_proper(col(k3, "abg"))
    assert not is_proper(col(k3, "aab"))


def test_wrong_length_rejected():
    with pytest.raises(ColouringError):
        col(cycle(3), "ab")


def test_delta_count_examples():
    k4 = col(complete(4), "abggba")  # the three perfect matchings
    assert is_proper(k4) and delta_count(k4) == 0
    assert delta_count(exact_s(petersen()).witness) == 2
    assert delta_count(col(g5(), G5_DEG2)) == 1


def test_petersen_witness_is_proper():
    w = exact_s(petersen()).witness
    assert is_proper(w)


def test_kempe_even_cycle():
    c4 = cycle(4)
    comp = kempe_component_at(col(c4, "abab"), 2, ALPHA, BETA)
    assert comp.kind is ComponentKind.EVEN_CYCLE and comp.length == 4
    with pytest.raises(ValueError):
        comp.ends


def test_kempe_single_edge_path():
    comp = kempe_component_at(col(path(2), "a"), 0, ALPHA, BETA)
    assert comp.kind is ComponentKind.PATH
    assert set(comp.ends) == {0, 1} and comp.edges == (0,)


def test_kempe_rejects_bad_input():
    with pytest.raises(ColouringError):
        kempe_component_at(col(path(3), "ab"), 0, ALPHA, ALPHA)
    with pytest.raises(ColouringError):
        kempe_component_at(col(path(3), "aa"), 0, ALPHA, BETA)


def test_kempe_components_alternate():
    g = random_cubic(16, 4)
    c = heuristic_colouring(g, seed=1).witness
    for v in range(g.n):
        for x, y in [(ALPHA, BETA), (BETA, GAMMA), (ALPHA, GAMMA)]:
            comp = kempe_component_at(c, v, x, y)
            cols = [c[e] for e in comp.edges]
            assert all(a != b for a, b in zip(cols, cols[1:]))
            assert set(cols) <= {x, y}
            if comp.kind is ComponentKind.EVEN_CYCLE:
                assert comp.length % 2 == 0


def test_kempe_swap_involution():
    g = cycle(6)
    c = col(g, "ababab")
    comp = kempe_component_at(c, 0, ALPHA, BETA)
    once = kempe_swap(c, comp)
    assert once.symbols() == list("bababa")
    assert kempe_swap(once, kempe_component_at(once, 0, ALPHA, BETA)) == c
    with pytest.raises(ColouringError):
        kempe_swap(c.recolour({0: GAMMA}), comp)


def test_kempe_swap_k4():
    k4 = complete(4)
    c = heuristic_colouring(k4).witness
    assert delta_count(c) == 0
    out = kempe_swap(c, kempe_component_at(c, 0, ALPHA, BETA))
    assert is_proper(out) and delta_count(out) == 0


def _random_proper(g, rng):
    """Each edge in random order takes a random colour free at both ends."""
    cols = {}
    order = list(range(g.m))
    rng.shuffle(order)
    for e in order:
        used = {cols[f] for f in g.adjacent_edges(e) if f in cols}
        free = [x for x in Colour if x not in used]
        if not free:
            return None
        cols[e] = rng.choice(free)
    return EdgeColouring(g, tuple(cols[e] for e in range(g.m)))


def test_kempe_swap_removes_a_delta_edge():
    rng = random.Random(11)
    moves = 0
    for trial in range(60):
        g = random_cubic(12 + 2 * (trial % 5), trial)
        c = _random_proper(g, rng)
        if c is None:
            continue
        for e in c.edges_with(DELTA):
            u, v = g.edges[e]
            mu, mv = c.missing(u), c.missing(v)
            if not mu or not mv or set(mu) & set(mv):
                continue
            x, y = mu[0], mv[0]
            comp = kempe_component_at(c, u, x, y)
            if comp.kind is ComponentKind.PATH and v in comp.ends:
                continue
            out = kempe_swap(c, comp).recolour({e: y})
            assert is_proper(out)
            assert delta_count(out) == delta_count(c) - 1
            moves += 1
    assert moves > 0


def test_classification_empty_without_delta():
    cls = classify_delta_edges(heuristic_colouring(complete(4)).witness)
    assert cls.delta_edges == [] and cls.unclassified == []


def test_g5_degree2_delta_edge_in_two_classes():
    g = g5()
    c = col(g, G5_DEG2)
    cls = classify_delta_edges(c)
    (e,) = cls.delta_edges
    assert 3 in g.edges[e] and g.degree(3) == 2
    assert len(cls.members(e)) == 2
    for k in cls.members(e):
        cyc = cls.cycle(e, k)
        assert len(cyc) % 2 == 1 and cyc[0] == e


def test_petersen_classified_and_disjoint():
    c = exact_s(petersen()).witness
    cls = classify_delta_edges(c)
    assert len(cls.delta_edges) == 2 and not cls.unclassified
    vs = [set(cycle_vertices(c.graph, cls.cycle(e, cls.members(e)[0]))) for e in cls.delta_edges]
    assert not vs[0] & vs[1]


def test_shift_identity():
    c = col(g5(), G5_DEG2)
    cls = classify_delta_edges(c)
    (e,) = cls.delta_edges
    assert shift_delta_along_cycle(c, e, cls.members(e)[0], e) == c


def test_shift_g5_one_step():
    c = col(g5(), G5_DEG2)
    cls = classify_delta_edges(c)
    (e,) = cls.delta_edges
    k = cls.members(e)[0]
    out = shift_delta_along_cycle(c, e, k, cls.cycle(e, k)[1])
    assert is_proper(out) and delta_count(out) == 1
    assert out[cls.cycle(e, k)[1]] is DELTA


def test_petersen_shifts_distinct():
    c = exact_s(petersen()).witness
    cls = classify_delta_edges(c)
    seen = set()
    for e in cls.delta_edges:
        k = cls.members(e)[0]
        for t in cls.cycle(e, k):
            out = shift_delta_along_cycle(c, e, k, t)
            assert is_proper(out) and delta_count(out) == 2
            seen.add(out.colours)
    # the two identity shifts coincide
    assert len(seen) == 2 * 5 - 1


def test_shift_rejects_bad_arguments():
    c = col(g5(), G5_DEG2)
    cls = classify_delta_edges(c)
    (e,) = cls.delta_edges
    k = cls.members(e)[0]
    with pytest.raises(ColouringError):
        shift_delta_along_cycle(c, 0, k, e)
    missing = next(x for x in DeltaClass if x not in cls.members(e))
    with pytest.raises(ColouringError):
        shift_delta_along_cycle(c, e, missing, e)
    off = next(f for f in range(c.graph.m) if f not in cls.cycle(e, k))
    with pytest.raises(ColouringError):
        shift_delta_along_cycle(c, e, k, off)


def test_json_roundtrip():
    c = exact_s(petersen()).witness
    assert EdgeColouring.from_json(c.to_json()) == c


def test_missing_and_edge_at():
    g = build_graph(3, [(0, 1), (1, 2)])
    c = col(g, "ad")
    assert c.missing(1) == [BETA, GAMMA]
    assert c.edge_at(1, DELTA) == 1 and c.edge_at(0, GAMMA) is None
    assert set(THREE) == {ALPHA, BETA, GAMMA}
