"""Critical-graph detectors: necessary conditions a Delta-critical graph
must satisfy, plus reductions and a brute-force criticality oracle.

A reported violation certifies the graph is NOT Delta-critical; no
violation is inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .color import SolveBudget, chromatic_index_exact
from .graph import (
    Graph,
    GraphError,
    build_graph,
    is_connected,
    neighborhood_of_set,
    remove_edge,
)


@dataclass(frozen=True)
class AuditFinding:
    lemma: str  # VAL-a, VAL-b, COR-a..d, ZHANG-a, ZHANG-b, SZ-1..3, EDGE-MIAO, EDGE-MADER
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class CriticalityCertificate:
    status: str  # "critical", "not-critical", "unknown"
    is_class2: Optional[bool]
    chromatic_index: Optional[int]
    per_edge: tuple[tuple[tuple[int, int], int], ...]  # e -> chi'(G-e)
    conclusion: str


def is_delta_critical_oracle(g: Graph, budget: SolveBudget | None = None
                             ) -> CriticalityCertificate:
    """Exact criticality decision: class 2 and chi'(G-e) < chi'(G) for
    every edge."""
    if not is_connected(g):
        raise GraphError("criticality is defined for connected graphs")
    if g.m < 2:
        raise GraphError("criticality oracle needs at least 2 edges")
    res = chromatic_index_exact(g, budget)
    if res.status == "exhausted":
        return CriticalityCertificate("unknown", None, None, (), "budget exhausted")
    chi = res.chromatic_index
    assert chi is not None
    if chi == g.max_degree():
        return CriticalityCertificate(
            "not-critical", False, chi, (), "class 1, hence not critical")
    per_edge = []
    critical = True
    for e in g.edges:
        sub = remove_edge(g, *e)
        sub_res = chromatic_index_exact(sub, budget)
        if sub_res.status == "exhausted":
            return CriticalityCertificate(
                "unknown", True, chi, tuple(per_edge), "budget exhausted on G-e")
        per_edge.append((e, sub_res.chromatic_index))
        if sub_res.chromatic_index >= chi:
            critical = False
    if critical:
        return CriticalityCertificate(
            "critical", True, chi, tuple(per_edge),
            "class 2 and every edge deletion lowers the chromatic index")
    return CriticalityCertificate(
        "not-critical", True, chi, tuple(per_edge),
        "some edge deletion keeps the chromatic index")


def audit_adjacency(g: Graph) -> list[AuditFinding]:
    """Vizing's adjacency lemma plus its degree corollaries."""
    findings = []
    delta = g.max_degree()
    deg = g.degrees()
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            k = deg[b]
            big = sum(1 for w in g.adj[a] if deg[w] == delta and w != b)
            if deg[b] == delta:
                big += 1  # b itself is a Delta-neighbor of a
            if k < delta and big < delta - k + 1:
                findings.append(AuditFinding(
                    "VAL-a", (a, b),
                    f"vertex {a} has {big} Delta-neighbors, needs {delta - k + 1}"))
            if k == delta and big < 2:
                findings.append(AuditFinding(
                    "VAL-b", (a, b),
                    f"vertex {a} has {big} Delta-neighbors, needs 2"))
    for v in range(g.n):
        if deg[v] < 2:
            findings.append(AuditFinding("COR-a", (v,), f"degree {deg[v]} < 2"))
    for v in range(g.n):
        if deg[v] == 0:
            continue
        # the 2-vertex bound follows from the adjacency condition on
        # non-maximum neighbors, so it is vacuous when Delta = 2
        twos = sum(1 for w in g.adj[v] if deg[w] == 2 and deg[w] < delta)
        bigs = sum(1 for w in g.adj[v] if deg[w] == delta)
        if twos > 1:
            findings.append(AuditFinding(
                "COR-b", (v,), f"adjacent to {twos} 2-vertices"))
        if bigs < 2:
            findings.append(AuditFinding(
                "COR-b", (v,), f"adjacent to {bigs} Delta-vertices, needs 2"))
    for u, v in g.edges:
        if deg[u] + deg[v] < delta + 2:
            findings.append(AuditFinding(
                "COR-c", (u, v),
                f"degree sum {deg[u] + deg[v]} < Delta+2 = {delta + 2}"))
        elif deg[u] + deg[v] == delta + 2:
            bad = sorted(w for w in neighborhood_of_set(g, {u, v})
                         if deg[w] != delta)
            if bad:
                findings.append(AuditFinding(
                    "COR-d", (u, v, *bad),
                    f"first neighborhood of ({u},{v}) has non-Delta vertices {bad}"))
    return findings


def audit_neighborhood(g: Graph) -> list[AuditFinding]:
    """Second-neighborhood degree conditions for edges with
    d(u)+d(v) = Delta+2."""
    findings = []
    delta = g.max_degree()
    deg = g.degrees()
    for u, v in g.edges:
        if deg[u] + deg[v] != delta + 2:
            continue
        second = neighborhood_of_set(g, neighborhood_of_set(g, {u, v})) - {u, v}
        low = sorted(w for w in second if deg[w] < delta - 1)
        if low:
            findings.append(AuditFinding(
                "ZHANG-a", (u, v, *low),
                f"second neighborhood of ({u},{v}) has degree<Delta-1 vertices {low}"))
        if deg[u] < delta and deg[v] < delta:
            bad = sorted(w for w in second if deg[w] != delta)
            if bad:
                findings.append(AuditFinding(
                    "ZHANG-b", (u, v, *bad),
                    f"second neighborhood of ({u},{v}) has non-Delta vertices {bad}"))
    return findings


def detect_sz_configs(g: Graph) -> list[AuditFinding]:
    """The three forbidden triangle configurations.

    SZ-1: x~y, x~z, d(z) < 2Delta-d(x)-d(y)+2, and xz in at least
    d(x)+d(y)-Delta-2 triangles avoiding y.
    SZ-2: vwz and xyz triangles sharing z, d(w) <= Delta-2,
    d(x)+d(y) <= Delta+3, d(x), d(y) >= 5.
    SZ-3: xyz triangle, z adjacent to v and w, d(v), d(w) <= Delta-1,
    d(x)+d(y) <= Delta+3, d(x), d(y) >= 4.
    """
    findings = []
    delta = g.max_degree()
    deg = g.degrees()
    adj = g._adj_sets
    for x in range(g.n):
        for y in g.adj[x]:
            for z in g.adj[x]:
                if z == y or deg[z] >= 2 * delta - deg[x] - deg[y] + 2:
                    continue
                need = deg[x] + deg[y] - delta - 2
                tri = sum(1 for w in adj[x] & adj[z] if w != y)
                if need <= 0 or tri >= need:
                    findings.append(AuditFinding(
                        "SZ-1", (x, y, z),
                        f"d(z)={deg[z]} < {2 * delta - deg[x] - deg[y] + 2}, "
                        f"{tri} triangles on xz (need {max(need, 0)})"))
    # triangle pairs sharing one vertex z
    tri_at: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                for z, pair in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
                    tri_at[z].append(pair)
    for z in range(g.n):
        for (v, w), (x, y) in combinations(tri_at[z], 2):
            if {v, w} & {x, y}:
                continue
            for (vv, ww) in ((v, w), (w, v)):
                for (xx, yy) in ((x, y), (y, x)):
                    if (deg[ww] <= delta - 2 and deg[xx] + deg[yy] <= delta + 3
                            and deg[xx] >= 5 and deg[yy] >= 5):
                        findings.append(AuditFinding(
                            "SZ-2", (vv, ww, xx, yy, z),
                            f"triangles ({vv},{ww},{z}) and ({xx},{yy},{z})"))
    seen_sz3 = set()
    for x, y in g.edges:
        if not (deg[x] + deg[y] <= delta + 3 and deg[x] >= 4 and deg[y] >= 4):
            continue
        for z in sorted(adj[x] & adj[y]):
            cands = [v for v in g.adj[z]
                     if v not in (x, y) and deg[v] <= delta - 1]
            for v, w in combinations(cands, 2):
                key = (v, w, x, y, z)
                if key not in seen_sz3:
                    seen_sz3.add(key)
                    findings.append(AuditFinding(
                        "SZ-3", key,
                        f"triangle ({x},{y},{z}), z adjacent to low-degree {v},{w}"))
    return findings


def edge_bound_checks(g: Graph, k5_minor_free: bool | None = None
                      ) -> list[AuditFinding]:
    """Edge-count bounds: the critical-graph lower bound for Delta >= 8
    and the 3n-6 upper bound for K5-minor-free graphs.

    For a K5-minor-free input with Delta >= 8 the two bounds are
    incompatible, so EDGE-MIAO always fires there.
    """
    findings = []
    n, m = g.n, g.m
    delta = g.max_degree()
    if delta >= 8 and m < 3 * (n + delta - 8):
        findings.append(AuditFinding(
            "EDGE-MIAO", (),
            f"m={m} < 3(n+Delta-8)={3 * (n + delta - 8)}: not Delta-critical"))
    if k5_minor_free and m > 3 * n - 6:
        findings.append(AuditFinding(
            "EDGE-MADER", (),
            f"m={m} > 3n-6={3 * n - 6}: graph cannot be K5-minor-free"))
    return findings


def contract_2_vertices(g: Graph) -> Graph:
    graph, _ = contract_2_vertices_map(g)
    return graph


def contract_2_vertices_map(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Remove every 2-vertex, replacing it by an edge between its two
    neighbors (deduplicated); chains are processed iteratively in
    ascending id order.

    Returns the reduced graph and the map old id -> new id for the
    surviving vertices.
    """
    labels = list(range(g.n))
    edges = set(g.edges)

    def degrees_of(edge_set: set, ids: list[int]) -> dict[int, int]:
        d = {v: 0 for v in ids}
        for a, b in edge_set:
            d[a] += 1
            d[b] += 1
        return d

    ids = list(range(g.n))
    while True:
        deg = degrees_of(edges, ids)
        low = [v for v in ids if deg[v] <= 1]
        if low:
            raise GraphError(
                f"vertex {low[0]} has degree {deg[low[0]]}; "
                "outside the critical-graph model")
        twos = [v for v in ids if deg[v] == 2]
        if not twos:
            break
        u = twos[0]
        nbrs = sorted({a if b == u else b for a, b in edges if u in (a, b)})
        assert len(nbrs) == 2
        a, b = nbrs
        edges = {e for e in edges if u not in e}
        edges.add((a, b) if a < b else (b, a))
        ids.remove(u)
    index = {v: i for i, v in enumerate(ids)}
    new_edges = sorted((min(index[a], index[b]), max(index[a], index[b]))
                       for a, b in edges)
    return build_graph(len(ids), new_edges), index


def lemma3_reduction(g: Graph, u: int, w: int, s: tuple[int, int, int]) -> Graph:
    """Delete the twin 3-vertices u, w and complete their common
    neighborhood S into a triangle.  The result is a minor of g.
    """
    su = set(s)
    if len(su) != 3:
        raise GraphError("S must contain three distinct vertices")
    if g.degree(u) != 3 or g.degree(w) != 3:
        raise GraphError(f"u and w must be 3-vertices, got {g.degree(u)},{g.degree(w)}")
    if set(g.adj[u]) != su or set(g.adj[w]) != su:
        raise GraphError("u and w must both have neighborhood exactly S")
    for a in s:
        for b in s:
            if a < b and g.has_edge(a, b):
                raise GraphError(f"S is not independent: edge ({a},{b})")
    keep = [v for v in range(g.n) if v not in (u, w)]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if u not in (a, b) and w not in (a, b)]
    s_new = sorted(index[a] for a in s)
    edges += [(s_new[0], s_new[1]), (s_new[1], s_new[2]), (s_new[0], s_new[2])]
    return build_graph(len(keep), edges)
