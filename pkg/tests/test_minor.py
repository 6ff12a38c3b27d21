import random

from k5edge.graph import build_graph
from k5edge.minor import (
    find_k5_minor_witness,
    has_k5_minor,
    is_planar,
    is_planar_triangulation,
    is_wagner,
    maximalize_k5_free,
    wagner_graph,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete(n):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_fixed_points():
    assert has_k5_minor(complete(5))
    assert has_k5_minor(complete(6))
    assert has_k5_minor(petersen())
    assert not has_k5_minor(wagner_graph())
    assert not has_k5_minor(complete(4))


def test_witness_validates():
    w = find_k5_minor_witness(petersen())
    assert w is not None
    assert w.check(petersen())


def test_wagner_recognizer():
    w = wagner_graph()
    assert is_wagner(w)
    assert not is_wagner(complete(8))
    planar, _ = is_planar(w)
    assert not planar


def test_planarity_and_triangulation():
    assert is_planar(complete(4))[0]
    assert not is_planar(complete(5))[0]
    octahedron = build_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                                 if (u, v) not in [(0, 5), (1, 4), (2, 3)]])
    assert is_planar_triangulation(octahedron)
    assert not is_planar_triangulation(wagner_graph())


def test_maximalize_preserves_k5_freeness():
    rng = random.Random(0)
    for _ in range(10):
        n = rng.randint(5, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = build_graph(n, edges)
        if has_k5_minor(g):
            continue
        h = maximalize_k5_free(g)
        assert not has_k5_minor(h)
        assert h.m >= g.m
        assert h.m <= 3 * h.n - 6


def test_disconnected_input():
    g = build_graph(10, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert has_k5_minor(g)
