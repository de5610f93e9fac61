from fractions import Fraction

import pytest

from oracles import brute_force_s
from parsimony.colouring import delta_count, is_proper
from parsimony.generators import complete, cycle, g5, p_prime, path, petersen, random_cubic, random_subcubic
from parsimony.graph import build_graph, is_bipartite
from parsimony.solver import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    SolveReport,
    bfs_edge_order,
    default_budget,
    exact_s,
    family_length,
    format_fraction,
    gamma_of,
    heuristic_colouring,
    maximize_family_length,
    solve,
)


@pytest.mark.parametrize(
    "g, s, gamma",
    [
        (complete(4), 0, Fraction(1)),
        (petersen(), 2, Fraction(13, 15)),
        (g5(), 1, Fraction(6, 7)),
        (p_prime(), 2, Fraction(13, 15)),
        (cycle(5), 0, Fraction(1)),  # alpha, beta, alpha, beta, gamma
        (build_graph(1, []), 0, Fraction(1)),
    ],
)
def test_exact_values(g, s, gamma):
    r = exact_s(g)
    assert r.optimal and r.method == "exact"
    assert (r.s, r.gamma) == (s, gamma)
    assert is_proper(r.witness) and delta_count(r.witness) == s


def test_exact_against_brute_force_small_named():
    for g in (petersen(), g5(), cycle(7), complete(4), p_prime()):
        assert exact_s(g).s == brute_force_s(g.edges, max_m=15)


def test_exact_ignores_weak_incumbent():
    g = petersen()
    bad = heuristic_colouring(g, seed=0, max_moves=0)
    r = exact_s(g, incumbent=bad)
    assert r.s == 2


def test_gamma_of():
    assert gamma_of(petersen(), 2) == Fraction(13, 15)
    assert gamma_of(g5(), 1) == Fraction(6, 7)
    assert gamma_of(build_graph(3, []), 0) == 1
    with pytest.raises(ValueError):
        gamma_of(g5(), 8)
    assert format_fraction(Fraction(13, 15)) == "13/15"
    assert format_fraction(Fraction(1)) == "1"


def test_budget_exhaustion_on_petersen():
    g = petersen()
    r = exact_s(g, budget=3, incumbent=heuristic_colouring(g, max_moves=0))
    assert not r.optimal and r.s >= 2


def test_budget_env(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    assert default_budget() == DEFAULT_BUDGET
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert default_budget() == 123


@pytest.mark.parametrize("g", [path(6), cycle(8), build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])])
def test_heuristic_bipartite_zero(g):
    for seed in range(5):
        assert heuristic_colouring(g, seed=seed).s == 0


def test_heuristic_never_below_exact():
    for seed in range(5):
        r = heuristic_colouring(petersen(), seed=seed)
        assert r.s >= 2 and not r.optimal and r.method == "heuristic"
    for n in (3, 5, 7, 9):
        assert heuristic_colouring(cycle(n)).s == brute_force_s(cycle(n).edges) == 0


def test_heuristic_deterministic():
    g = random_cubic(30, 5)
    assert heuristic_colouring(g, seed=3) == heuristic_colouring(g, seed=3)


def test_heuristic_random_graphs_proper():
    for seed in range(50):
        g = random_subcubic(12, 15, seed)
        r = heuristic_colouring(g, seed=seed)
        assert is_proper(r.witness) and delta_count(r.witness) == r.s
        if is_bipartite(g):
            assert r.s == 0


def test_bfs_edge_order_is_permutation():
    g = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    order = bfs_edge_order(g)
    assert sorted(order) == list(range(g.m))


def test_report_json_roundtrip():
    r = exact_s(petersen())
    back = SolveReport.from_json(r.dumps())
    assert back == r
    assert back.dumps() == r.dumps()


def test_solve_modes():
    assert solve(petersen(), exact=False).method == "heuristic"
    assert solve(petersen()).optimal


def test_maximize_family_length_noop_on_zero():
    c = heuristic_colouring(complete(4)).witness
    assert maximize_family_length(complete(4), c) == c


def test_maximize_family_length_petersen():
    g = petersen()
    c = exact_s(g).witness
    out = maximize_family_length(g, c)
    assert is_proper(out) and delta_count(out) == 2
    assert family_length(out) >= family_length(c) == 10


def test_maximize_family_length_rejects_foreign_colouring():
    with pytest.raises(ValueError):
        maximize_family_length(g5(), exact_s(petersen()).witness)
