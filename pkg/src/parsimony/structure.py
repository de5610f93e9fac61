"""Odd-cycle families of delta-minimum colourings and certificate checks.

Every check returns a :class:`LemmaCertificate`; a failing certificate
always names the offending edges or vertices in ``witness``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .colouring import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    THREE,
    Colour,
    ColouringError,
    DeltaClass,
    DeltaClassification,
    EdgeColouring,
    classify_delta_edges,
    cycle_vertices,
    delta_count,
    is_proper,
    shift_delta_along_cycle,
)
from .graph import INFINITE, Graph, are_isomorphic, odd_girth


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    #: The inequality fails on the Petersen graph, which the bound excludes.
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class LemmaCertificate:
    lemma: str
    verdict: Verdict
    witness: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_json(self) -> dict:
        return {"lemma": self.lemma, "verdict": self.verdict.value, "witness": self.witness, "detail": self.detail}


def _pass(lemma: str, detail: str = "", **witness) -> LemmaCertificate:
    return LemmaCertificate(lemma, Verdict.PASS, dict(witness), detail)


def _fail(lemma: str, detail: str, **witness) -> LemmaCertificate:
    return LemmaCertificate(lemma, Verdict.FAIL, dict(witness), detail)


# ---------------------------------------------------------------------------
# Cycle families
# ---------------------------------------------------------------------------


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyCycle:
    delta_edge: int
    cls: DeltaClass
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    has_degree2: bool

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CycleFamily:
    """One odd cycle per delta edge, split by whether it meets a degree-2 vertex."""

    cycles: tuple[FamilyCycle, ...]

    @property
    def total_length(self) -> int:
        return sum(c.length for c in self.cycles)

    @property
    def c2(self) -> list[FamilyCycle]:
        return [c for c in self.cycles if c.has_degree2]

    @property
    def c3(self) -> list[FamilyCycle]:
        return [c for c in self.cycles if not c.has_degree2]

    @property
    def k(self) -> int:
        return len(self.c2)

    def to_json(self) -> dict:
        return {
            "total_length": self.total_length,
            "k": self.k,
            "cycles": [
                {"delta_edge": c.delta_edge, "class": c.cls.name, "edges": list(c.edges), "tag": "C2" if c.has_degree2 else "C3"}
                for c in self.cycles
            ],
        }


def make_family_cycle(g: Graph, e: int, cls: DeltaClass, edges) -> FamilyCycle:
    verts = tuple(cycle_vertices(g, edges))
    return FamilyCycle(e, cls, tuple(edges), verts, any(g.degree(v) == 2 for v in verts))


def build_cycle_family(
    g: Graph,
    c: EdgeColouring,
    choice: Optional[Mapping[int, DeltaClass]] = None,
    classification: Optional[DeltaClassification] = None,
) -> CycleFamily:
    """Odd-cycle family of ``c``; each delta edge uses ``choice[e]`` or its first class.

    Raises:
        FamilyError: when a delta edge has no class (``c`` is not
            delta-minimum), a chosen class does not hold, or two cycles of
            the family share a vertex.
    """
    cls = classification or classify_delta_edges(c)
    choice = dict(choice or {})
    cycles = []
    for e in cls.delta_edges:
        members = cls.members(e)
        if not members:
            raise FamilyError(f"delta edge {e} closes no even bicoloured path; colouring is not delta-minimum")
        k = choice.get(e, members[0])
        if k not in members:
            raise FamilyError(f"delta edge {e} is not in class {k.name}")
        cycles.append(make_family_cycle(g, e, k, cls.cycle(e, k)))
    fam = CycleFamily(tuple(cycles))
    cert = verify_lemma_3_disjoint(fam)
    if not cert.ok:
        raise FamilyError(f"family cycles intersect: {cert.witness}")
    return fam


def class_choices(classification: DeltaClassification):
    """Every assignment of one member class per delta edge."""
    edges = classification.delta_edges
    for combo in itertools.product(*(classification.members(e) for e in edges)):
        yield dict(zip(edges, combo))


# ---------------------------------------------------------------------------
# Lemma checks
# ---------------------------------------------------------------------------


def verify_lemma_1(g: Graph, c: EdgeColouring) -> LemmaCertificate:
    """Each delta edge closes an even bicoloured path and has a degree-3 end."""
    if not is_proper(c):
        return _fail("L1", "colouring is not proper")
    cls = classify_delta_edges(c)
    if cls.unclassified:
        return _fail("L1", "delta edge with no even bicoloured path between its ends", edges=cls.unclassified)
    both2 = [e for e in cls.delta_edges if all(g.degree(v) == 2 for v in g.edges[e])]
    if both2:
        return _fail("L1", "delta edge with both ends of degree 2", edges=both2)
    deg2 = [e for e in cls.delta_edges if any(g.degree(v) == 2 for v in g.edges[e])]
    # degree-2 vertices a shift along an associated cycle can bring delta onto
    on_cycles = sorted({
        v for e in cls.delta_edges for k in cls.members(e)
        for v in cycle_vertices(g, cls.cycle(e, k)) if g.degree(v) == 2
    })
    return _pass("L1", f"{len(cls.delta_edges)} delta edges classified", degree2_ends=deg2, degree2_on_cycles=on_cycles)


def verify_lemma_2(g: Graph, c: EdgeColouring) -> LemmaCertificate:
    """Shift every delta edge to every position of each of its odd cycles.

    Each shift must stay proper, keep the delta count, change colours only
    on the cycle, leave the moved edge in the same class with the same
    cycle, and every edge hanging off the cycle must carry the third colour.
    """
    cls = classify_delta_edges(c)
    s = delta_count(c)
    checked = 0
    for e in cls.delta_edges:
        for k in cls.members(e):
            cyc = cls.cycle(e, k)
            cyc_set = set(cyc)
            verts = set(cycle_vertices(g, cyc))
            hanging = {f for v in verts for f in g.incidence[v] if f not in cyc_set}
            wrong = [f for f in hanging if c.colours[f] != k.outside]
            if wrong:
                return _fail("L2", f"edges off the {k.name}-cycle of {e} not coloured {k.outside.name}", edge=e, edges=wrong)
            for t in cyc:
                try:
                    out = shift_delta_along_cycle(c, e, k, t)
                except ColouringError as exc:
                    return _fail("L2", str(exc), edge=e, target=t)
                changed = set(out.diff(c))
                new_cycle = classify_delta_edges(out).cycles.get(t, {}).get(k)
                if not is_proper(out) or delta_count(out) != s:
                    return _fail("L2", "shift broke properness or delta count", edge=e, target=t)
                if not changed <= cyc_set:
                    return _fail("L2", "shift changed colours off the cycle", edge=e, target=t, edges=sorted(changed - cyc_set))
                if new_cycle is None or set(new_cycle) != cyc_set:
                    return _fail("L2", "shifted edge lost its class or cycle", edge=e, target=t)
                checked += 1
    return _pass("L2", f"{checked} shifts checked")


def _disjoint_pair(fam: CycleFamily):
    for a, b in itertools.combinations(fam.cycles, 2):
        common = set(a.vertices) & set(b.vertices)
        if common:
            return a, b, common
    return None


def verify_lemma_3_disjoint(family: CycleFamily) -> LemmaCertificate:
    bad = _disjoint_pair(family)
    if bad:
        a, b, common = bad
        return _fail("L3", "two family cycles share vertices", delta_edges=[a.delta_edge, b.delta_edge], vertices=sorted(common))
    return _pass("L3", f"{len(family.cycles)} cycles pairwise vertex-disjoint")


def _endpoints(g: Graph, edges) -> set[int]:
    return {v for e in edges for v in g.edges[e]}


def _induces_2k2(g: Graph, e1: int, e2: int) -> bool:
    vs = _endpoints(g, (e1, e2))
    return len(vs) == 4 and g.induced_edge_count(vs) == 2


def _joining_edges(g: Graph, e1: int, e2: int) -> int:
    a, b = set(g.edges[e1]), set(g.edges[e2])
    return sum(1 for u, v in g.edges if (u in a and v in b) or (u in b and v in a))


def verify_lemma_4_degree2(g: Graph, c: EdgeColouring) -> LemmaCertificate:
    """A delta edge ``uv`` with ``d(v) = 2``: ``v`` is the only degree-2
    neighbour of ``u``, and the edge induces ``2K2`` with every other delta edge."""
    deltas = c.edges_with(DELTA)
    for e in deltas:
        for u, v in (g.edges[e], g.edges[e][::-1]):
            if g.degree(v) != 2:
                continue
            others = [w for w in g.neighbours(u) if w != v and g.degree(w) == 2]
            if others:
                return _fail("L4", "second degree-2 neighbour", edge=e, vertex=u, neighbours=others)
            for f in deltas:
                if f != e and not _induces_2k2(g, e, f):
                    return _fail("L4", "delta edges do not induce 2K2", edges=[e, f])
    return _pass("L4")


def verify_lemma_5_6_induced(g: Graph, c: EdgeColouring, classification: Optional[DeltaClassification] = None) -> LemmaCertificate:
    """Pairs in different classes induce ``2K2``; same-class pairs are joined
    by at most one edge; same-class triples induce at most four edges."""
    cls = classification or classify_delta_edges(c)
    deltas = cls.delta_edges
    for e1, e2 in itertools.combinations(deltas, 2):
        m1, m2 = set(cls.members(e1)), set(cls.members(e2))
        different = any(x != y for x in m1 for y in m2)
        if different and not _induces_2k2(g, e1, e2):
            return _fail("L5", "delta edges in different classes do not induce 2K2", edges=[e1, e2])
        if m1 & m2 and _joining_edges(g, e1, e2) > 1:
            return _fail("L5", "same-class delta edges joined by more than one edge", edges=[e1, e2])
    for k in DeltaClass:
        for trio in itertools.combinations(cls.in_class(k), 3):
            cnt = g.induced_edge_count(_endpoints(g, trio))
            if cnt > 4:
                return _fail("L6", f"{k.name}-class triple induces {cnt} edges", edges=list(trio))
    return _pass("L5/L6", f"{len(deltas)} delta edges")


# ---------------------------------------------------------------------------
# Counting and the bound
# ---------------------------------------------------------------------------


def bound_value(g_odd) -> Fraction:
    """``1 - 2/(3 g_odd + 2)``; 1 for bipartite graphs."""
    if g_odd == INFINITE:
        return Fraction(1)
    return 1 - Fraction(2, 3 * int(g_odd) + 2)


def _is_petersen(g: Graph) -> bool:
    from .generators import petersen

    return g.n == 10 and g.m == 15 and are_isomorphic(g, petersen())


def verify_counting(g: Graph, report) -> LemmaCertificate:
    """``m >= s (3/2 g_odd + 1)`` in exact arithmetic.

    Requires an optimal report. A failure on the Petersen graph is reported
    as :attr:`Verdict.EXCLUDED` rather than ``FAIL``.
    """
    if not report.optimal:
        return _fail("counting", "s is not known exactly", s_upper=report.s)
    s, m = report.s, g.m
    go = odd_girth(g)
    if s == 0:
        return _pass("counting", "s = 0")
    need = s * (Fraction(3, 2) * int(go) + 1)
    witness = {"m": m, "s": s, "g_odd": int(go), "required": str(need)}
    if m >= need:
        return _pass("counting", f"{m} >= {need}", **witness)
    if _is_petersen(g):
        return LemmaCertificate("counting", Verdict.EXCLUDED, witness, f"{m} < {need}: Petersen graph")
    return _fail("counting", f"{m} < {need}", colouring=report.witness.symbols(), **witness)


def verify_theorem_1(g: Graph, report) -> LemmaCertificate:
    """``gamma(G) >= 1 - 2/(3 g_odd + 2)`` unless ``G`` is the Petersen graph."""
    if not report.optimal:
        return _fail("T1", "s is not known exactly", s_upper=report.s)
    go = odd_girth(g)
    b = bound_value(go)
    witness = {"gamma": str(report.gamma), "bound": str(b), "g_odd": None if go == INFINITE else int(go)}
    if report.gamma >= b:
        return _pass("T1", f"{report.gamma} >= {b}", **witness)
    if _is_petersen(g):
        return LemmaCertificate("T1", Verdict.EXCLUDED, witness, f"{report.gamma} < {b}: Petersen graph")
    return _fail("T1", f"{report.gamma} < {b}", colouring=report.witness.symbols(), **witness)


def verify_all(g: Graph, report, lemmas=None) -> list[LemmaCertificate]:
    """Run the selected checks (default: all) on an optimal witness."""
    c = report.witness
    wanted = set(lemmas or ALL_LEMMAS)
    certs = []
    if "L1" in wanted:
        certs.append(verify_lemma_1(g, c))
    if "L2" in wanted:
        certs.append(verify_lemma_2(g, c))
    if "L3" in wanted:
        try:
            fam = build_cycle_family(g, c)
            certs.append(verify_lemma_3_disjoint(fam))
        except FamilyError as exc:
            certs.append(_fail("L3", str(exc)))
    if "L4" in wanted:
        certs.append(verify_lemma_4_degree2(g, c))
    if "L5" in wanted or "L6" in wanted:
        certs.append(verify_lemma_5_6_induced(g, c))
    if "counting" in wanted:
        certs.append(verify_counting(g, report))
    if "T1" in wanted:
        certs.append(verify_theorem_1(g, report))
    return certs


ALL_LEMMAS = ("L1", "L2", "L3", "L4", "L5", "L6", "counting", "T1")


# ---------------------------------------------------------------------------
# Free edges and extremal cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalAnalysis:
    free_edges: frozenset
    #: (i, j) indexes into ``family.cycles``: cycle i is extremal for cycle j.
    extremal_pairs: tuple[tuple[int, int], ...]


def analyse_free_and_extremal(g: Graph, family: CycleFamily) -> ExtremalAnalysis:
    """Free edges have at most one end on an all-degree-3 family cycle.

    Cycle ``i`` is extremal for cycle ``j`` when both are all-degree-3, ``i``
    has length ``g_odd`` and no chord, at most one free edge meets ``i``, and
    all vertices of ``i`` but at most one have a neighbour on ``j``.
    """
    owner = {}
    for idx, cyc in enumerate(family.cycles):
        if not cyc.has_degree2:
            for v in cyc.vertices:
                owner[v] = idx
    free = frozenset(e for e, (u, v) in enumerate(g.edges) if (u in owner) + (v in owner) <= 1)
    go = odd_girth(g)
    pairs = []
    for i, ci in enumerate(family.cycles):
        if ci.has_degree2 or ci.length != go:
            continue
        vs = set(ci.vertices)
        if g.induced_edge_count(vs) != ci.length:
            continue
        incident_free = {f for v in vs for f in g.incidence[v] if f in free and f not in ci.edges}
        if len(incident_free) > 1:
            continue
        for j, cj in enumerate(family.cycles):
            if j == i or cj.has_degree2:
                continue
            wj = set(cj.vertices)
            attached = sum(1 for v in vs if any(w in wj for w in g.neighbours(v)))
            if attached >= ci.length - 1:
                pairs.append((i, j))
    return ExtremalAnalysis(free, tuple(pairs))


# ---------------------------------------------------------------------------
# Petersen-minus-an-edge configuration and its recolouring
# ---------------------------------------------------------------------------

# Layout of the configuration in role colours (alpha, beta, gamma, delta);
# the colour actually used for each role is fixed by ``Figure1Configuration.roles``.
_BEFORE_I = {("x0", "x1"): DELTA, ("x1", "x2"): BETA, ("x2", "x3"): GAMMA, ("x3", "x4"): BETA, ("x4", "x0"): GAMMA}
_MATCHING = {("x1", "y1"): ALPHA, ("x2", "y2"): ALPHA, ("x3", "y3"): ALPHA, ("x4", "y4"): ALPHA}
_HANGING = {("x0", "a"): ALPHA, ("y0", "b"): ALPHA}
_CYCLE_J = [("y0", "y3"), ("y3", "y1"), ("y1", "y4"), ("y4", "y2"), ("y2", "y0")]
_AFTER = {
    ("x0", "x4"): DELTA, ("x1", "x2"): DELTA,
    ("x4", "y4"): BETA, ("y0", "y2"): BETA, ("x2", "x3"): BETA, ("y1", "y3"): BETA,
    ("x1", "y1"): ALPHA, ("x3", "y3"): ALPHA, ("y4", "y2"): ALPHA,
    ("x0", "x1"): GAMMA, ("x3", "x4"): GAMMA, ("y0", "y3"): GAMMA, ("y1", "y4"): GAMMA, ("x2", "y2"): GAMMA,
}


@dataclass(frozen=True)
class Figure1Configuration:
    """Two delta 5-cycles inducing the Petersen graph minus one edge.

    ``labels`` maps ``x0..x4, y0..y4, a, b`` to vertices; ``roles`` maps the
    role colours alpha/beta/gamma to the colours used by the colouring;
    ``expected`` records the colours of the configuration edges the record
    was detected on, so a stale record can be rejected.
    """

    labels: dict
    roles: dict
    expected: dict

    def edge(self, g: Graph, p: str, q: str) -> int:
        e = g.edge_id(self.labels[p], self.labels[q])
        if e is None:
            raise ColouringError(f"no edge {p}{q} in graph")
        return e


def _label_pair(g: Graph, c: EdgeColouring, ci, cj) -> Optional[Figure1Configuration]:
    vi, vj = set(ci.vertices), set(cj.vertices)
    union = vi | vj
    if len(union) != 10 or g.induced_edge_count(union) != 14:
        return None
    partner = {}
    for v in vi:
        ws = [w for w in g.neighbours(v) if w in vj]
        if len(ws) > 1:
            return None
        if ws:
            partner[v] = ws[0]
    if len(partner) != 4 or len(set(partner.values())) != 4:
        return None
    (x0,) = vi - set(partner)
    (y0,) = vj - set(partner.values())
    outside = lambda v: [w for w in g.neighbours(v) if w not in union]
    ax, by = outside(x0), outside(y0)
    if len(ax) != 1 or len(by) != 1 or ax[0] == by[0]:
        return None
    ei, ej = ci.delta_edge, cj.delta_edge
    if x0 not in g.edges[ei] or y0 not in g.edges[ej]:
        return None
    x1 = g.other_end(ei, x0)
    xs = [x0, x1]
    prev, cur = x0, x1
    for _ in range(3):
        nxt = [w for w in g.neighbours(cur) if w in vi and w != prev]
        prev, cur = cur, nxt[0]
        xs.append(cur)
    labels = {f"x{i}": v for i, v in enumerate(xs)}
    labels["y0"] = y0
    for i in range(1, 5):
        labels[f"y{i}"] = partner[xs[i]]
    labels["a"], labels["b"] = ax[0], by[0]
    if any(not g.has_edge(labels[p], labels[q]) for p, q in _CYCLE_J):
        return None
    col = lambda p, q: c.colours[g.edge_id(labels[p], labels[q])]
    roles = {ALPHA: col("x1", "y1"), BETA: col("x1", "x2"), GAMMA: col("x2", "x3"), DELTA: DELTA}
    if sorted(roles.values()) != [ALPHA, BETA, GAMMA, DELTA]:
        return None
    layout = {**_BEFORE_I, **_MATCHING, **_HANGING}
    if any(col(p, q) != roles[r] for (p, q), r in layout.items()):
        return None
    # The second cycle may alternate in either phase.
    j_cols = [col(p, q) for p, q in _CYCLE_J]
    if j_cols[0] != DELTA or {j_cols[1], j_cols[2]} != {roles[BETA], roles[GAMMA]}:
        return None
    if j_cols[3] != j_cols[1] or j_cols[4] != j_cols[2]:
        return None
    expected = {pq: col(*pq) for pq in list(layout) + _CYCLE_J}
    return Figure1Configuration(labels, roles, expected)


def detect_figure1_configuration(g: Graph, c: EdgeColouring, family: Optional[CycleFamily] = None) -> Optional[Figure1Configuration]:
    """Find two delta 5-cycles laid out as the Petersen graph minus an edge.

    All associated cycles of every delta edge are considered (``family``, if
    given, restricts the search to its cycles). The colouring must already
    carry delta on ``x0x1`` and ``y0y3``; callers wanting other positions
    shift first.
    """
    if delta_count(c) < 2 or odd_girth(g) != 5:
        return None
    if family is not None:
        cands = [cy for cy in family.cycles if cy.length == 5]
    else:
        cls = classify_delta_edges(c)
        cands = [make_family_cycle(g, e, k, cls.cycle(e, k)) for e in cls.delta_edges for k in cls.members(e)]
        cands = [cy for cy in cands if cy.length == 5]
    for ci, cj in itertools.permutations(cands, 2):
        if ci.delta_edge == cj.delta_edge or set(ci.vertices) & set(cj.vertices):
            continue
        conf = _label_pair(g, c, ci, cj)
        if conf is not None:
            return conf
    return None


def apply_figure2_recolouring(g: Graph, c: EdgeColouring, config: Optional[Figure1Configuration]) -> EdgeColouring:
    """Recolour the 14 edges of the configuration, keeping everything else.

    Delta moves to ``x0x4`` and ``x1x2``; the rest follows the fixed
    replacement table. The result is checked for properness and delta count.

    Raises:
        ColouringError: with no configuration, or one that no longer
            matches ``c``.
    """
    if config is None:
        raise ColouringError("no Petersen-minus-edge configuration to recolour")
    for (p, q), colour in config.expected.items():
        if c.colours[config.edge(g, p, q)] != colour:
            raise ColouringError(f"stale configuration: edge {p}{q} changed colour")
    out = c.recolour({config.edge(g, p, q): config.roles[r] for (p, q), r in _AFTER.items()})
    if not is_proper(out) or delta_count(out) != delta_count(c):
        raise ColouringError("recolouring failed to preserve properness or delta count")
    return out
