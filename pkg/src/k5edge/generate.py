"""Random generators: planar triangulations and K5-minor-free clique-sums."""

from __future__ import annotations

import random

from .graph import Graph, GraphError, build_graph, is_connected
from .minor import has_k5_minor, wagner_graph


def random_planar_triangulation(n: int, rng: random.Random,
                                hub_bias: float = 0.0) -> Graph:
    """Grow a triangulation from K4 by inserting vertices into faces.

    With probability `hub_bias` the chosen face is one incident with the
    current maximum-degree vertex, which drives the maximum degree up.
    """
    if n < 4:
        raise GraphError(f"triangulation needs n >= 4, got {n}")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    deg = [3, 3, 3, 3]
    for k in range(4, n):
        if hub_bias > 0 and rng.random() < hub_bias:
            hub = max(range(k), key=lambda v: (deg[v], -v))
            options = [i for i, f in enumerate(faces) if hub in f]
            idx = rng.choice(options)
        else:
            idx = rng.randrange(len(faces))
        a, b, c = faces.pop(idx)
        faces.extend([(a, b, k), (a, c, k), (b, c, k)])
        edges.extend([(a, k), (b, k), (c, k)])
        deg.append(3)
        for v in (a, b, c):
            deg[v] += 1
    return build_graph(n, edges)


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g._adj_sets
    for u, v in g.edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def clique_sum(g1: Graph, g2: Graph, clique1: tuple[int, ...],
               clique2: tuple[int, ...]) -> Graph:
    """Glue g2 onto g1 by identifying clique2 with clique1 (no edges
    deleted)."""
    if len(clique1) != len(clique2):
        raise GraphError("cliques must have equal size")
    ident = dict(zip(clique2, clique1))
    mapping = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in ident:
            mapping[v] = ident[v]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges += [(mapping[u], mapping[v]) for u, v in g2.edges]
    return build_graph(nxt, edges)


def sample_k5_free(n_target: int, parts: int = 1, wagner_probability: float = 0.0,
                   delete_fraction: float = 0.0, seed: int = 0,
                   min_delta: int | None = None, max_tries: int = 200) -> Graph:
    """Random K5-minor-free graph built as clique-sums of random planar
    triangulations and Wagner copies, optionally with edges deleted.

    Reproducible per seed.  When `min_delta` is set, generation retries
    with derived seeds (and degree-biased triangulations) until the
    maximum degree reaches the threshold.
    """
    if n_target < 4:
        raise GraphError(f"n_target must be >= 4, got {n_target}")
    if parts < 1:
        raise GraphError("parts must be >= 1")
    base_rng = random.Random(seed)
    hub_bias = 0.0 if min_delta is None else 0.7
    for attempt in range(max_tries):
        rng = random.Random(base_rng.getrandbits(64))
        g = _sample_once(n_target, parts, wagner_probability, delete_fraction,
                         rng, hub_bias)
        if min_delta is None or g.max_degree() >= min_delta:
            return g
    raise GraphError(
        f"could not reach max degree {min_delta} in {max_tries} tries "
        f"(n_target={n_target}, parts={parts})")


def _sample_once(n_target: int, parts: int, wagner_probability: float,
                 delete_fraction: float, rng: random.Random,
                 hub_bias: float) -> Graph:
    sizes = _part_sizes(n_target, parts, rng)
    g: Graph | None = None
    for size in sizes:
        use_wagner = rng.random() < wagner_probability
        if use_wagner:
            part = wagner_graph()
        else:
            part = random_planar_triangulation(max(size, 4), rng, hub_bias)
        if g is None:
            g = part
            continue
        g = _glue(g, part, rng, part_is_wagner=use_wagner)
    assert g is not None
    if delete_fraction > 0:
        g = _delete_edges(g, delete_fraction, rng)
    return g


def _part_sizes(n_target: int, parts: int, rng: random.Random) -> list[int]:
    if parts == 1:
        return [n_target]
    base = max(4, n_target // parts + 2)
    return [base + rng.randint(0, 2) for _ in range(parts)]


def _glue(g: Graph, part: Graph, rng: random.Random, part_is_wagner: bool) -> Graph:
    # the Wagner graph is triangle-free, so Wagner parts attach along an
    # edge; triangulation parts attach along a triangle when one exists
    if not part_is_wagner:
        host_tris = _triangles(g)
        if host_tris:
            c1 = list(rng.choice(host_tris))
            part_tris = _triangles(part)
            c2 = list(rng.choice(part_tris))
            rng.shuffle(c2)
            return clique_sum(g, part, tuple(c1), tuple(c2))
    c1 = list(rng.choice(list(g.edges)))
    c2 = list(rng.choice(list(part.edges)))
    rng.shuffle(c2)
    return clique_sum(g, part, tuple(c1), tuple(c2))


def _delete_edges(g: Graph, fraction: float, rng: random.Random) -> Graph:
    edges = list(g.edges)
    rng.shuffle(edges)
    target = int(len(edges) * fraction)
    removed = 0
    keep = set(g.edges)
    for e in edges:
        if removed >= target:
            break
        trial = keep - {e}
        cand = build_graph(g.n, sorted(trial))
        if is_connected(cand):
            keep = trial
            removed += 1
    return build_graph(g.n, sorted(keep))


def random_connected_planar(n: int, seed: int, delete_fraction: float = 0.3) -> Graph:
    """Random connected plane-embeddable graph: a triangulation with a
    fraction of edges removed (connectivity preserved)."""
    rng = random.Random(seed)
    g = random_planar_triangulation(max(n, 4), rng)
    return _delete_edges(g, delete_fraction, rng)
