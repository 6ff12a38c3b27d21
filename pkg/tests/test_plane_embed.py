import pytest

from k5edge.embed import (
    EmbeddingError,
    build_embedding,
    charge_identity_terms,
    designate_outer,
    face_profiles,
    outer_face_by_vertices,
)
from k5edge.graph import build_graph
from k5edge.ioformats import format_rotation, parse_rotation

K4_ROTATION = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_k4_faces():
    emb = build_embedding(k4(), K4_ROTATION)
    assert len(emb.faces) == 4
    assert all(len(f) == 3 for f in emb.faces)


def test_euler_violation_rejected():
    # planar rotation of K4 with two neighbors swapped at vertex 0
    rot = [[2, 1, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
    with pytest.raises(EmbeddingError):
        build_embedding(k4(), rot)


def test_cut_edge_face_counted_twice():
    g = build_graph(2, [(0, 1)])
    emb = build_embedding(g, [[1], [0]])
    assert len(emb.faces) == 1
    assert emb.face_degree(0) == 2


def test_charge_identity_on_tree():
    g = build_graph(4, [(0, 1), (1, 2), (1, 3)])
    emb = build_embedding(g, [[1], [0, 2, 3], [1], [1]])
    vsum, fsum = charge_identity_terms(emb)
    assert vsum + fsum == -12


def test_designate_and_lookup_outer():
    emb = build_embedding(k4(), K4_ROTATION)
    face = outer_face_by_vertices(emb, [1, 2, 3])
    emb2 = designate_outer(emb, face)
    assert set(emb2.faces[emb2.outer_face]) == {1, 2, 3}


def test_face_profiles_sorted_degrees():
    emb = build_embedding(k4(), K4_ROTATION)
    for p in face_profiles(emb):
        assert p.vertex_degrees == (3, 3, 3)


def test_rotation_round_trip():
    g = k4()
    text = format_rotation(K4_ROTATION)
    assert parse_rotation(text, g) == K4_ROTATION
