"""Simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Vertices are 0..n-1.  `edges` is a sorted tuple of (u, v) pairs with
    u < v; `adj` is a per-vertex tuple of neighbors in ascending order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    @property
    def _adj_sets(self) -> list[set[int]]:
        cached = self.__dict__.get("_adj_sets_cache")
        if cached is None:
            cached = [set(a) for a in self.adj]
            self.__dict__["_adj_sets_cache"] = cached
        return cached

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, deduplicating edges.

    Rejects out-of-range ids and self-loops.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj_lists[u].append(v)
        adj_lists[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in adj_lists)
    return Graph(n=n, edges=edges, adj=adj)


def add_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    return build_graph(g.n, list(g.edges) + list(extra))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    key = (u, v) if u < v else (v, u)
    if key not in g.edge_set():
        raise GraphError(f"edge {key} not in graph")
    return build_graph(g.n, [e for e in g.edges if e != key])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on `vertices`, relabeled densely.

    Returns the subgraph and the list mapping new id -> old id.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return build_graph(len(keep), edges), keep


def remove_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge e: identify its endpoints, delete multiple edges.

    The merged vertex takes the smaller endpoint's slot; ids are
    relabeled to stay dense 0..n-2.
    """
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in g.edge_set():
        raise GraphError(f"cannot contract non-edge {key}")
    lo, hi = key
    # hi disappears; every vertex above hi shifts down by one
    def relabel(x: int) -> int:
        if x == hi:
            return lo if lo < hi else lo - 1
        return x if x < hi else x - 1

    edges = set()
    for a, b in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            edges.add((ra, rb) if ra < rb else (rb, ra))
    return build_graph(g.n - 1, sorted(edges))


def neighborhood_of_set(g: Graph, x: Iterable[int]) -> set[int]:
    """N_G(X): union of neighborhoods of X, minus X itself."""
    xs = set(x)
    if not xs:
        raise GraphError("neighborhood of empty set is undefined")
    out: set[int] = set()
    for v in xs:
        out.update(g.adj[v])
    return out - xs


def neighborhood_closure(g: Graph, x: Iterable[int]) -> set[int]:
    """Alias of neighborhood_of_set: N_G(X), composable for second
    neighborhoods."""
    return neighborhood_of_set(g, x)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def is_biconnected(g: Graph) -> bool:
    """True if g is connected, has >= 3 vertices and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    # iterative Tarjan lowpoint computation
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    root_children = 0
    stack: list[tuple[int, int]] = [(0, 0)]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, i = stack.pop()
        if i < len(g.adj[v]):
            stack.append((v, i + 1))
            w = g.adj[v][i]
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, 0))
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        else:
            p = parent[v]
            if p != -1:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return False
    return root_children <= 1


def triangles_through_edge(g: Graph, u: int, v: int) -> list[int]:
    """Third vertices of triangles containing edge uv, ascending."""
    return sorted(set(g.adj[u]) & set(g.adj[v]))


def degree_sum(g: Graph) -> int:
    return sum(len(a) for a in g.adj)
