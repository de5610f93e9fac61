from fractions import Fraction

import pytest

from parsimony.colouring import ColouringError, DeltaClass, DeltaClassification, EdgeColouring, delta_count, is_proper
from parsimony.generators import complete, cycle, figure1_instance, g5, p_prime, petersen, random_cubic
from parsimony.graph import odd_girth
from parsimony.solver import exact_s, family_length, heuristic_colouring
from parsimony.structure import (
    ALL_LEMMAS,
    CycleFamily,
    FamilyError,
    Verdict,
    analyse_free_and_extremal,
    apply_figure2_recolouring,
    bound_value,
    build_cycle_family,
    class_choices,
    detect_figure1_configuration,
    make_family_cycle,
    verify_all,
    verify_counting,
    verify_lemma_1,
    verify_lemma_2,
    verify_lemma_3_disjoint,
    verify_lemma_4_degree2,
    verify_lemma_5_6_induced,
    verify_theorem_1,
)

G5_DEG2 = "abdabgg"  # see test_colouring


@pytest.fixture(scope="module")
def petersen_report():
    return exact_s(petersen())


def test_family_empty_for_three_colourable():
    g = complete(4)
    fam = build_cycle_family(g, heuristic_colouring(g).witness)
    assert fam.cycles == () and fam.total_length == 0 and fam.k == 0


def test_family_petersen(petersen_report):
    fam = build_cycle_family(petersen(), petersen_report.witness)
    assert [c.length for c in fam.cycles] == [5, 5]
    assert fam.total_length == 10 and fam.k == 0 and len(fam.c3) == 2
    assert not set(fam.cycles[0].vertices) & set(fam.cycles[1].vertices)


def test_family_g5_tagged_c2():
    g = g5()
    fam = build_cycle_family(g, EdgeColouring.from_sequence(g, G5_DEG2))
    (cyc,) = fam.cycles
    assert cyc.length == 5 and 3 in cyc.vertices and cyc.has_degree2
    assert fam.k == 1 and fam.to_json()["cycles"][0]["tag"] == "C2"


def test_family_cycles_odd_and_long_enough():
    for seed in range(30):
        g = random_cubic(10 + 2 * (seed % 5), seed)
        r = exact_s(g)
        if r.s == 0:
            continue
        fam = build_cycle_family(g, r.witness)
        for cyc in fam.cycles:
            assert cyc.length % 2 == 1 and cyc.length >= odd_girth(g)
        assert 0 <= fam.k <= r.s


def test_family_choices():
    g = g5()
    c = EdgeColouring.from_sequence(g, G5_DEG2)
    cls = build_cycle_family(g, c)
    from parsimony.colouring import classify_delta_edges

    choices = list(class_choices(classify_delta_edges(c)))
    assert len(choices) == 2
    for ch in choices:
        assert build_cycle_family(g, c, ch).cycles[0].cls == ch[2]
    with pytest.raises(FamilyError):
        build_cycle_family(g, c, {2: DeltaClass.B})
    assert cls.total_length == 5


def test_family_rejects_non_minimum():
    g = complete(4)
    bad = EdgeColouring.from_sequence(g, "dbggba")
    with pytest.raises(FamilyError):
        build_cycle_family(g, bad)


def test_lemma_1(petersen_report):
    assert verify_lemma_1(complete(4), heuristic_colouring(complete(4)).witness).verdict is Verdict.PASS
    assert verify_lemma_1(petersen(), petersen_report.witness).verdict is Verdict.PASS
    cert = verify_lemma_1(g5(), EdgeColouring.from_sequence(g5(), G5_DEG2))
    assert cert.ok and cert.witness["degree2_ends"] == [2]


def test_lemma_1_negative():
    # delta on an edge of a 3-edge-coloured K4: both ends miss alpha
    g = complete(4)
    cert = verify_lemma_1(g, EdgeColouring.from_sequence(g, "dbggba"))
    assert cert.verdict is Verdict.FAIL and cert.witness["edges"] == [0]
    assert verify_lemma_1(g, EdgeColouring.from_sequence(g, "aaaaaa")).verdict is Verdict.FAIL


def test_lemma_2(petersen_report):
    cert = verify_lemma_2(petersen(), petersen_report.witness)
    assert cert.ok and cert.detail == "10 shifts checked"
    assert verify_lemma_2(g5(), EdgeColouring.from_sequence(g5(), G5_DEG2)).ok


def test_lemma_3_negative():
    g = g5()
    c = EdgeColouring.from_sequence(g, G5_DEG2)
    one = build_cycle_family(g, c).cycles[0]
    other = make_family_cycle(g, 2, DeltaClass.C, (2, 5, 0, 6, 3))
    assert verify_lemma_3_disjoint(CycleFamily((one, other))).verdict is Verdict.FAIL
    assert verify_lemma_3_disjoint(CycleFamily((one,))).ok


C6_TWO = "dadaba"  # delta on 01 and 23, joined by 12


def test_lemma_4():
    g = g5()
    assert verify_lemma_4_degree2(g, EdgeColouring.from_sequence(g, G5_DEG2)).ok
    c6 = cycle(6)
    c = EdgeColouring.from_sequence(c6, C6_TWO)
    assert is_proper(c)
    assert verify_lemma_4_degree2(c6, c).verdict is Verdict.FAIL


def test_lemma_5_6(petersen_report):
    assert verify_lemma_5_6_induced(petersen(), petersen_report.witness).ok
    c6 = cycle(6)
    cyc = tuple(range(6))
    # different classes, not an induced 2K2
    c = EdgeColouring.from_sequence(c6, C6_TWO)
    split = DeltaClassification({0: {DeltaClass.A: cyc}, 2: {DeltaClass.B: cyc}})
    assert verify_lemma_5_6_induced(c6, c, split).lemma == "L5"
    assert verify_lemma_5_6_induced(c6, c, split).verdict is Verdict.FAIL
    # three same-class edges, pairwise joined once, inducing six edges
    c3 = EdgeColouring.from_sequence(c6, "dadada")
    same = DeltaClassification({e: {DeltaClass.A: cyc} for e in (0, 2, 4)})
    cert = verify_lemma_5_6_induced(c6, c3, same)
    assert cert.lemma == "L6" and cert.verdict is Verdict.FAIL


def test_counting_examples(petersen_report):
    g = g5()
    cert = verify_counting(g, exact_s(g))
    assert cert.verdict is Verdict.PASS and cert.witness["required"] == "11/2"
    assert bound_value(3) == Fraction(9, 11) <= Fraction(6, 7)
    cert = verify_counting(petersen(), petersen_report)
    assert cert.verdict is Verdict.EXCLUDED
    assert (cert.witness["m"], cert.witness["required"]) == (15, "17")
    assert verify_counting(complete(4), exact_s(complete(4))).verdict is Verdict.PASS


def test_counting_needs_optimal_report():
    g = petersen()
    r = heuristic_colouring(g)
    assert verify_counting(g, r).verdict is Verdict.FAIL


def test_theorem_1(petersen_report):
    assert verify_theorem_1(petersen(), petersen_report).verdict is Verdict.EXCLUDED
    assert verify_theorem_1(p_prime(), exact_s(p_prime())).verdict is Verdict.PASS
    assert bound_value(5) == Fraction(15, 17) and bound_value(float("inf")) == 1


def test_verify_all_selection(petersen_report):
    certs = verify_all(petersen(), petersen_report)
    assert [c.lemma for c in certs] == ["L1", "L2", "L3", "L4", "L5/L6", "counting", "T1"]
    assert all(c.ok for c in certs)
    assert [c.lemma for c in verify_all(petersen(), petersen_report, ["L1"])] == ["L1"]
    assert set(ALL_LEMMAS) >= {"L1", "T1"}


def test_extremal_petersen(petersen_report):
    g = petersen()
    fam = build_cycle_family(g, petersen_report.witness)
    an = analyse_free_and_extremal(g, fam)
    assert set(an.extremal_pairs) == {(0, 1), (1, 0)}
    assert an.free_edges == frozenset()


def test_extremal_all_c2():
    g = g5()
    fam = build_cycle_family(g, EdgeColouring.from_sequence(g, G5_DEG2))
    an = analyse_free_and_extremal(g, fam)
    assert an.free_edges == frozenset(range(g.m)) and an.extremal_pairs == ()


def test_extremal_invariants_random():
    seen = 0
    for seed in range(60):
        g = random_cubic(10 + 2 * (seed % 6), seed)
        r = exact_s(g)
        if r.s == 0:
            continue
        fam = build_cycle_family(g, r.witness)
        an = analyse_free_and_extremal(g, fam)
        on_c3 = {v for c in fam.c3 for v in c.vertices}
        for e in an.free_edges:
            assert sum(v in on_c3 for v in g.edges[e]) <= 1
        for i, j in an.extremal_pairs:
            ci, cj = fam.cycles[i], fam.cycles[j]
            assert ci.length == odd_girth(g)
            attached = [v for v in ci.vertices if any(w in cj.vertices for w in g.neighbours(v))]
            assert len(attached) >= ci.length - 1
        if r.s == 1:
            assert an.extremal_pairs == ()
        seen += 1
    assert seen > 0


def test_detect_none_cases(petersen_report):
    assert detect_figure1_configuration(petersen(), petersen_report.witness) is None
    g = complete(4)
    assert detect_figure1_configuration(g, heuristic_colouring(g).witness) is None


def test_recolouring_on_constructed_instance():
    g, c = figure1_instance()
    assert is_proper(c) and delta_count(c) == 2 == exact_s(g).s
    config = detect_figure1_configuration(g, c)
    assert config is not None
    assert sorted(config.labels) == sorted([f"x{i}" for i in range(5)] + [f"y{i}" for i in range(5)] + ["a", "b"])
    out = apply_figure2_recolouring(g, c, config)
    assert is_proper(out) and delta_count(out) == 2
    before = build_cycle_family(g, c).total_length
    assert family_length(out) >= before + 2
    assert len(out.diff(c)) <= 14
    # not an involution
    again = detect_figure1_configuration(g, out)
    assert again is None or again != config
    with pytest.raises(ColouringError):
        apply_figure2_recolouring(g, out, config)


def test_recolouring_without_configuration():
    with pytest.raises(ColouringError):
        apply_figure2_recolouring(petersen(), exact_s(petersen()).witness, None)
