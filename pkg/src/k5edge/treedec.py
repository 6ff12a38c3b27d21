"""3-simple tree decompositions of edge-maximal K5-minor-free graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, connected_components, induced_subgraph, is_connected
from .minor import has_k5_minor, is_planar_triangulation, is_wagner


@dataclass(frozen=True)
class TreeDecomposition:
    """Tree of bags; separators[i] is the bag intersection on tree edge i."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def separators(self) -> tuple[frozenset[int], ...]:
        return tuple(self.bags[a] & self.bags[b] for a, b in self.tree_edges)


class DecompositionError(GraphError):
    pass


def _is_clique(g: Graph, vs: tuple[int, ...]) -> bool:
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def _smallest_clique_separator(g: Graph, vertices: list[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest clique of size <= 3 (in original ids)
    separating the induced subgraph on `vertices`."""
    sub, ids = induced_subgraph(g, vertices)
    n = sub.n
    candidates: list[tuple[int, ...]] = [(v,) for v in range(n)]
    candidates += [e for e in sub.edges]
    adj = sub._adj_sets
    tris = []
    for u, v in sub.edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                tris.append((u, v, w))
    candidates += tris
    candidates.sort(key=lambda s: tuple(ids[v] for v in s))
    for cand in candidates:
        rest = [v for v in range(n) if v not in set(cand)]
        if len(rest) < 2:
            continue
        rest_sub, _ = induced_subgraph(sub, rest)
        if not is_connected(rest_sub):
            return tuple(ids[v] for v in cand)
    return None


def tree_decompose_3simple(g: Graph) -> TreeDecomposition:
    """Recursively split on <=3-clique separators.

    Requires a connected edge-maximal K5-minor-free input with at least
    4 vertices; every resulting part must be a planar triangulation, the
    Wagner graph, or a degenerate part of <= 4 vertices (these are
    complete in edge-maximal inputs).
    """
    if g.n < 4:
        raise DecompositionError(f"need |V| >= 4, got {g.n}")
    if not is_connected(g):
        raise DecompositionError("input graph is disconnected")
    if has_k5_minor(g):
        raise DecompositionError("input graph has a K5 minor")

    bags: list[frozenset[int]] = []
    tree_edges: list[tuple[int, int]] = []

    def decompose(vertices: list[int]) -> int:
        """Decompose the induced subgraph; return the id of one of its
        bags (any bag — callers re-search for the bag holding a clique)."""
        sep = _smallest_clique_separator(g, vertices)
        if sep is None:
            bags.append(frozenset(vertices))
            return len(bags) - 1
        vset = set(vertices)
        rest = sorted(vset - set(sep))
        rest_sub, rest_ids = induced_subgraph(g, rest)
        child_roots = []
        for comp in connected_components(rest_sub):
            part = sorted({rest_ids[v] for v in comp} | set(sep))
            start = len(bags)
            decompose(part)
            child_roots.append(_bag_with(range(start, len(bags)), sep))
        anchor = child_roots[0]
        for other in child_roots[1:]:
            tree_edges.append((anchor, other))
        return anchor

    def _bag_with(bag_range, clique) -> int:
        want = set(clique)
        for i in bag_range:
            if want <= bags[i]:
                return i
        raise AssertionError("clique not covered by any bag of the sub-decomposition")

    decompose(sorted(range(g.n)))

    td = TreeDecomposition(bags=tuple(bags), tree_edges=tuple(tree_edges))
    for bag in td.bags:
        part, _ = induced_subgraph(g, bag)
        if len(bag) <= 4:
            continue  # degenerate small part, treated as planar
        if not (is_planar_triangulation(part) or is_wagner(part)):
            raise DecompositionError(
                "input is not edge-maximal K5-minor-free: part "
                f"{sorted(bag)} is neither a planar triangulation nor the Wagner graph")
    return td


def validate_tree_decomposition(g: Graph, td: TreeDecomposition,
                                 max_separator: int = 3) -> list[str]:
    """Check (T1)-(T3) and k-simpleness; return a list of violations."""
    problems = []
    covered = set().union(*td.bags) if td.bags else set()
    if covered != set(range(g.n)):
        problems.append(f"(T1) bags cover {sorted(covered)}, not all of V")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in td.bags):
            problems.append(f"(T2) edge ({u},{v}) in no bag")
    # (T3): bags containing any vertex form a subtree
    nbag = len(td.bags)
    tadj: list[list[int]] = [[] for _ in range(nbag)]
    for a, b in td.tree_edges:
        tadj[a].append(b)
        tadj[b].append(a)
    if nbag > 1 and len(td.tree_edges) != nbag - 1:
        problems.append("tree has wrong edge count")
    for v in range(g.n):
        holders = [i for i in range(nbag) if v in td.bags[i]]
        if not holders:
            continue
        seen = {holders[0]}
        stack = [holders[0]]
        hset = set(holders)
        while stack:
            t = stack.pop()
            for s in tadj[t]:
                if s in hset and s not in seen:
                    seen.add(s)
                    stack.append(s)
        if seen != hset:
            problems.append(f"(T3) bags containing {v} are not a subtree")
    for (a, b), sep in zip(td.tree_edges, td.separators):
        svs = tuple(sorted(sep))
        if len(svs) > max_separator:
            problems.append(f"separator {svs} larger than {max_separator}")
        if not _is_clique(g, svs):
            problems.append(f"separator {svs} is not a clique")
    return problems
