"""Discharging engine: initial charges, transfer rules, hypothesis
checks and the reducible-configuration finder.

All charge arithmetic is exact rational (denominators divide 60);
floating point never enters a ledger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Optional

from .embed import PlaneEmbedding, face_profiles
from .graph import Graph, GraphError, is_biconnected, neighborhood_of_set

Element = tuple[str, int]  # ("v", id) or ("f", id)
Mode = Literal["planar-lemma1", "k5-lemma3"]


class ContextError(GraphError):
    pass


@dataclass(frozen=True)
class DischargingContext:
    embedding: PlaneEmbedding
    Y: frozenset[int]

    @property
    def graph(self) -> Graph:
        return self.embedding.graph

    @property
    def X(self) -> frozenset[int]:
        return frozenset(range(self.graph.n)) - self.Y

    def is_hi(self, v: int) -> bool:
        """A hi-vertex: a 7-vertex of X or any vertex of Y."""
        return v in self.Y or self.graph.degree(v) == 7

    def n_y(self, v: int) -> list[int]:
        return [w for w in self.graph.adj[v] if w in self.Y]

    def n_x(self, v: int) -> list[int]:
        return [w for w in self.graph.adj[v] if w not in self.Y]


def make_context(emb: PlaneEmbedding, Y: Iterable[int]) -> DischargingContext:
    """Validate Y (independent, on f0, 1 <= |Y| <= 3, H keeps an edge)."""
    g = emb.graph
    ys = frozenset(Y)
    if not 1 <= len(ys) <= 3:
        raise ContextError(f"|Y| must be 1..3, got {len(ys)}")
    for v in ys:
        if not 0 <= v < g.n:
            raise ContextError(f"Y vertex {v} out of range")
    for u in ys:
        for v in ys:
            if u < v and g.has_edge(u, v):
                raise ContextError(f"Y is not independent: edge ({u},{v})")
    f0_vertices = set(emb.faces[emb.outer_face])
    missing = ys - f0_vertices
    if missing:
        raise ContextError(f"Y vertices {sorted(missing)} are not on the outer face")
    h_edges = [e for e in g.edges if e[0] not in ys and e[1] not in ys]
    if not h_edges:
        raise ContextError("G minus Y has no edge")
    return DischargingContext(embedding=emb, Y=ys)


@dataclass(frozen=True)
class Transfer:
    source: Element
    sink: Element
    amount: Fraction
    rule: str


@dataclass
class ChargeLedger:
    charge: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(dict(self.charge), list(self.transfers), list(self.notes))


def initial_charges(ctx: DischargingContext) -> ChargeLedger:
    """ch(v) = d(v)-6, ch(f) = 2d(f)-6 for inner faces, ch(f0) = 2d(f0)+6.

    The total is exactly zero on every connected plane graph.
    """
    emb = ctx.embedding
    g = ctx.graph
    charge: dict[Element, Fraction] = {}
    for v in range(g.n):
        charge[("v", v)] = Fraction(g.degree(v) - 6)
    for fid, walk in enumerate(emb.faces):
        if fid == emb.outer_face:
            charge[("f", fid)] = Fraction(2 * len(walk) + 6)
        else:
            charge[("f", fid)] = Fraction(2 * len(walk) - 6)
    ledger = ChargeLedger(charge=charge)
    assert ledger.total() == 0, "initial charges must sum to zero"
    return ledger


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def apply_rules(ctx: DischargingContext, ledger: ChargeLedger) -> ChargeLedger:
    """Apply transfer rules R1.1-R2.5, each once per qualifying incidence.

    Transfers are computed from the initial configuration (degrees and
    faces), never cascaded; the sum of charges is invariant.
    """
    emb = ctx.embedding
    g = ctx.graph
    f0 = emb.outer_face
    out = ledger.copy()
    transfers: list[Transfer] = []

    deg = g.degrees()
    profiles = face_profiles(emb)
    face_deg = [p.degree for p in profiles]
    f0_vertices = set(emb.faces[f0])

    def two_3faces(u: int, v: int) -> bool:
        fs = emb.faces_of_edge(u, v)
        return len(fs) == 2 and all(face_deg[f] == 3 for f in fs)

    def count_557(u: int, v: int) -> int:
        return sum(1 for f in emb.faces_of_edge(u, v)
                   if face_deg[f] == 3 and profiles[f].vertex_degrees == (5, 5, 7))

    def both_677(u: int, v: int) -> bool:
        fs = emb.faces_of_edge(u, v)
        return (len(fs) == 2
                and all(face_deg[f] == 3 and profiles[f].vertex_degrees == (6, 7, 7)
                        for f in fs))

    # R1.1: the outer face pays its boundary vertices
    for x in sorted(f0_vertices):
        if x in ctx.Y:
            transfers.append(Transfer(("f", f0), ("v", x), Fraction(6), "R1.1"))
        else:
            z = [w for w in g.adj[x] if w in f0_vertices and w not in ctx.Y]
            if len(z) == 1:
                transfers.append(Transfer(("f", f0), ("v", x), Fraction(1), "R1.1"))
            elif len(z) == 2:
                transfers.append(Transfer(("f", f0), ("v", x), Fraction(2), "R1.1"))

    # R1.2: big inner faces pay 1/2 per boundary occurrence; their
    # incident hi-vertices pass 1/4 along boundary edges to small
    # X-neighbors.  The secondary clause assumes each edge borders a
    # face at most once, which holds for 2-connected plane graphs.
    biconnected = is_biconnected(g)
    if not biconnected:
        out.notes.append("graph not 2-connected: R1.2 secondary clause skipped")
    for fid, walk in enumerate(emb.faces):
        if fid == f0 or len(walk) < 4:
            continue
        for x in walk:
            transfers.append(Transfer(("f", fid), ("v", x), Fraction(1, 2), "R1.2"))
        if not biconnected:
            continue
        boundary = {_edge_key(walk[i], walk[(i + 1) % len(walk)])
                    for i in range(len(walk))}
        for v in sorted(set(walk)):
            if not ctx.is_hi(v):
                continue
            for u in ctx.n_x(v):
                if deg[u] <= 6 and _edge_key(u, v) in boundary:
                    transfers.append(
                        Transfer(("v", v), ("v", u), Fraction(1, 4), "R1.2"))

    for x in sorted(ctx.X):
        # R2.1: every Y-neighbor pays 1
        for y in ctx.n_y(x):
            transfers.append(Transfer(("v", y), ("v", x), Fraction(1), "R2.1"))
        nx_x = ctx.n_x(x)
        dx = deg[x]
        if dx == 3:
            for y in nx_x:
                if deg[y] == 6:
                    transfers.append(Transfer(("v", y), ("v", x), Fraction(1), "R2.2"))
                elif deg[y] == 7:
                    amt = Fraction(1) if two_3faces(x, y) else Fraction(1, 2)
                    transfers.append(Transfer(("v", y), ("v", x), amt, "R2.2"))
        elif dx == 4:
            if any(deg[z] == 5 for z in nx_x):
                for y in nx_x:
                    if deg[y] == 7:
                        transfers.append(
                            Transfer(("v", y), ("v", x), Fraction(2, 3), "R2.3"))
            else:
                for y in nx_x:
                    if deg[y] == 6:
                        transfers.append(
                            Transfer(("v", y), ("v", x), Fraction(2, 5), "R2.3"))
                    elif deg[y] == 7:
                        amt = Fraction(3, 5) if two_3faces(x, y) else Fraction(1, 5)
                        transfers.append(Transfer(("v", y), ("v", x), amt, "R2.3"))
        elif dx == 5:
            if any(deg[z] == 4 for z in nx_x):
                for y in nx_x:
                    if deg[y] == 7:
                        transfers.append(
                            Transfer(("v", y), ("v", x), Fraction(1, 3), "R2.4"))
            else:
                for y in nx_x:
                    if deg[y] >= 6 and two_3faces(x, y):
                        amt = Fraction(2, 5) if count_557(x, y) == 1 else Fraction(1, 5)
                        transfers.append(Transfer(("v", y), ("v", x), amt, "R2.4"))
        elif dx == 6:
            three = sorted(z for z in nx_x if deg[z] == 3)
            if three:
                # several 3-neighbors cannot occur in hypothesis-
                # satisfying inputs; the smallest id is the fixed choice
                z = three[0]
                nz = set(ctx.n_x(z))
                for y in nx_x:
                    if deg[y] == 7 and y not in nz:
                        transfers.append(
                            Transfer(("v", y), ("v", x), Fraction(1, 3), "R2.5"))
            else:
                for y in nx_x:
                    if deg[y] == 7 and two_3faces(x, y) and not both_677(x, y):
                        transfers.append(
                            Transfer(("v", y), ("v", x), Fraction(1, 5), "R2.5"))

    transfers.sort(key=lambda t: (t.rule, t.source, t.sink))
    for t in transfers:
        out.charge[t.source] -= t.amount
        out.charge[t.sink] += t.amount
    out.transfers.extend(transfers)
    for value in out.charge.values():
        assert 60 % value.denominator == 0, "charge denominator must divide 60"
    return out


@dataclass(frozen=True)
class OutcomeReport:
    conserved: bool
    total: Fraction
    negative: tuple[tuple[Element, Fraction], ...]


def verify_outcome(ledger: ChargeLedger) -> OutcomeReport:
    """Conservation must always hold; negative final charges are
    evidence about the input (hypothesis violation or configuration),
    not an engine error."""
    total = ledger.total()
    negative = tuple(sorted(
        (el, ch) for el, ch in ledger.charge.items() if ch < 0))
    return OutcomeReport(conserved=(total == 0), total=total, negative=negative)


def replay_transfers(initial: ChargeLedger, transfers: Iterable[Transfer]
                     ) -> ChargeLedger:
    out = initial.copy()
    for t in transfers:
        out.charge[t.source] -= t.amount
        out.charge[t.sink] += t.amount
        out.transfers.append(t)
    return out


# ---------------------------------------------------------------------------
# hypotheses (a)-(c)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConditionResult:
    passed: bool
    violations: tuple[tuple, ...]


@dataclass(frozen=True)
class HypothesisReport:
    mode: Mode
    conditions: dict[str, ConditionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions.values())


def check_hypotheses(g: Graph, Y: Iterable[int], mode: Mode,
                     embedding: Optional[PlaneEmbedding] = None) -> HypothesisReport:
    """Per-condition pass/fail for the discharging hypotheses.

    planar-lemma1: Y nonempty independent (on f0 when an embedding is
    supplied); second neighborhoods in condition (c) are taken in H.
    k5-lemma3: Y must be empty; second neighborhoods are taken in G.
    """
    ys = frozenset(Y)
    if mode == "k5-lemma3":
        if ys:
            raise ContextError("k5-lemma3 mode requires empty Y")
    elif mode == "planar-lemma1":
        if not 1 <= len(ys) <= 3:
            raise ContextError(f"planar-lemma1 mode requires 1 <= |Y| <= 3, got {len(ys)}")
        for u in ys:
            for v in ys:
                if u < v and g.has_edge(u, v):
                    raise ContextError(f"Y is not independent: edge ({u},{v})")
        if embedding is not None:
            on_face = set(embedding.faces[embedding.outer_face])
            missing = ys - on_face
            if missing:
                raise ContextError(
                    f"Y vertices {sorted(missing)} are not on the outer face")
    else:
        raise ContextError(f"unknown mode {mode!r}")

    x_set = [v for v in range(g.n) if v not in ys]
    h_edges = [e for e in g.edges if e[0] not in ys and e[1] not in ys]
    if not h_edges:
        raise ContextError("G minus Y has no edge")
    deg = g.degrees()

    delta_viol = tuple() if g.max_degree() == 7 else ((g.max_degree(),),)
    cond_delta = ConditionResult(passed=not delta_viol, violations=delta_viol)

    viol_a = tuple((v, deg[v]) for v in x_set if deg[v] < 3)
    cond_a = ConditionResult(passed=not viol_a, violations=viol_a)

    viol_b = []
    for e in h_edges:
        for x, y in (e, e[::-1]):
            n_y_x = [w for w in g.adj[x] if w in ys]
            need = 8 - deg[y] - (len(n_y_x) if mode == "planar-lemma1" else 0)
            if need <= 0:
                continue
            excluded = {y} | set(n_y_x)
            have = sum(1 for w in g.adj[x]
                       if deg[w] == 7 and w not in excluded)
            if have < need:
                viol_b.append((x, y, need, have))
    cond_b = ConditionResult(passed=not viol_b, violations=tuple(viol_b))

    viol_c = []
    for x, y in h_edges:
        if deg[x] < 7 and deg[y] < 7 and deg[x] + deg[y] == 9:
            if mode == "planar-lemma1":
                def nbhd(s):
                    return {w for w in neighborhood_of_set(g, s) if w not in ys}
            else:
                def nbhd(s):
                    return neighborhood_of_set(g, s)
            second = nbhd(nbhd({x, y})) - {x, y}
            bad = sorted(w for w in second if deg[w] != 7)
            if bad:
                viol_c.append((x, y, tuple(bad)))
    cond_c = ConditionResult(passed=not viol_c, violations=tuple(viol_c))

    return HypothesisReport(mode=mode, conditions={
        "max_degree_7": cond_delta,
        "a_min_degree": cond_a,
        "b_hi_neighbors": cond_b,
        "c_second_neighborhood": cond_c,
    })


# ---------------------------------------------------------------------------
# reducible configurations (1)-(3)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReducibleConfiguration:
    kind: str  # "C1", "C2", "C3"
    witness: tuple[int, ...]


def find_configuration(g: Graph, members: Optional[Iterable[int]] = None
                       ) -> Optional[ReducibleConfiguration]:
    """First reducible configuration, scanning vertices in ascending
    order and kinds C1, C2, C3 per vertex.

    `members` restricts the named vertices (x, y, z, v, w) to a subset
    (the H-side of a discharging context); triangle counts for C1 use
    common neighbors in the whole graph, excluding y.
    """
    allowed = set(range(g.n)) if members is None else set(members)
    deg = g.degrees()
    adj = g._adj_sets
    for x in sorted(allowed):
        nbrs = [w for w in g.adj[x] if w in allowed]
        # C1
        for y in nbrs:
            for z in nbrs:
                if z == y:
                    continue
                if deg[z] < 16 - deg[x] - deg[y]:
                    need = deg[x] + deg[y] - 9
                    if need <= 0:
                        return ReducibleConfiguration("C1", (x, y, z))
                    tri = sum(1 for w in adj[x] & adj[z] if w != y)
                    if tri >= need:
                        return ReducibleConfiguration("C1", (x, y, z))
        # C2: vwx and xyz triangles, d(w)<=5, d(y)=d(z)=5
        fives = [w for w in nbrs if deg[w] == 5]
        yz_pairs = [(y, z) for i, y in enumerate(fives) for z in fives[i + 1:]
                    if g.has_edge(y, z)]
        for y, z in yz_pairs:
            for v in nbrs:
                if v in (y, z):
                    continue
                for w in nbrs:
                    if w in (y, z, v) or deg[w] > 5:
                        continue
                    if g.has_edge(v, w):
                        return ReducibleConfiguration("C2", (x, v, w, y, z))
        # C3: xyz triangle, d(y)=d(z)=5, two more small neighbors
        for y, z in yz_pairs:
            small = [v for v in nbrs if v not in (y, z) and deg[v] < 7]
            if len(small) >= 2:
                return ReducibleConfiguration(
                    "C3", (x, small[0], small[1], y, z))
    return None
