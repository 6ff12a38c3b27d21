"""Combinatorial plane embeddings: rotation systems and face tracing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph, is_connected


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class FaceProfile:
    face: int
    degree: int
    vertex_degrees: tuple[int, ...]  # sorted multiset of boundary d_G values


@dataclass(frozen=True)
class PlaneEmbedding:
    """A rotation system with its traced faces.

    `rotation[v]` is the clockwise cyclic order of neighbors of v.
    `faces[i]` is the boundary walk of face i as a vertex sequence;
    the walk length is the face degree (cut edges traversed twice).
    Face tracing follows the next-edge-clockwise-after-reversal rule.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    outer_face: int = 0

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    def face_vertices(self, f: int) -> set[int]:
        return set(self.faces[f])

    @property
    def _edge_faces(self) -> dict[tuple[int, int], list[int]]:
        """Map undirected edge -> face ids of its two directed traversals."""
        cached = self.__dict__.get("_edge_faces_cache")
        if cached is None:
            cached = {}
            for fid, walk in enumerate(self.faces):
                k = len(walk)
                for i in range(k):
                    u, v = walk[i], walk[(i + 1) % k]
                    key = (u, v) if u < v else (v, u)
                    cached.setdefault(key, []).append(fid)
            self.__dict__["_edge_faces_cache"] = cached
        return cached

    def faces_of_edge(self, u: int, v: int) -> list[int]:
        """Face ids on the two sides of edge uv (equal for a cut edge)."""
        key = (u, v) if u < v else (v, u)
        return self._edge_faces[key]

    def faces_at_vertex(self, v: int) -> list[int]:
        out = []
        for fid, walk in enumerate(self.faces):
            if v in walk:
                out.append(fid)
        return out


def trace_faces(rotation: list[list[int]]) -> list[list[int]]:
    """Trace the face walks of a rotation system.

    From directed edge (u, v) the walk continues along (v, w) where w
    is the successor of u in rotation[v].
    """
    succ: dict[tuple[int, int], int] = {}
    for v, nbrs in enumerate(rotation):
        k = len(nbrs)
        for i, u in enumerate(nbrs):
            succ[(v, u)] = nbrs[(i + 1) % k]
    faces: list[list[int]] = []
    visited: set[tuple[int, int]] = set()
    for start in sorted(succ):
        if start in visited:
            continue
        walk_vertices = []
        u, v = start
        while (u, v) not in visited:
            visited.add((u, v))
            walk_vertices.append(u)
            u, v = v, succ[(v, u)]
        faces.append(walk_vertices)
    return faces


def build_embedding(g: Graph, rotation: list[list[int]], outer_face: int = 0) -> PlaneEmbedding:
    """Validate a rotation system and trace its faces.

    Rejects disconnected graphs, malformed rotations, and rotations
    whose face count fails Euler's formula (genus != 0).
    """
    if g.n == 0 or g.m == 0:
        raise EmbeddingError("embedding requires at least one edge")
    if not is_connected(g):
        raise EmbeddingError("graph is disconnected; embed components upstream")
    if len(rotation) != g.n:
        raise EmbeddingError(f"rotation has {len(rotation)} rows, graph has {g.n} vertices")
    for v, nbrs in enumerate(rotation):
        if sorted(nbrs) != list(g.adj[v]):
            raise EmbeddingError(
                f"rotation for vertex {v} is {sorted(nbrs)}, expected {list(g.adj[v])}")
    faces = trace_faces([list(r) for r in rotation])
    n_faces = len(faces)
    if g.n - g.m + n_faces != 2:
        raise EmbeddingError(
            f"rotation is not planar: |V|-|E|+|F| = {g.n}-{g.m}+{n_faces} != 2")
    total = sum(len(w) for w in faces)
    assert total == 2 * g.m, "face walks must traverse each directed edge once"
    if not (0 <= outer_face < n_faces):
        raise EmbeddingError(f"outer face id {outer_face} out of range (F={n_faces})")
    return PlaneEmbedding(
        graph=g,
        rotation=tuple(tuple(r) for r in rotation),
        faces=tuple(tuple(w) for w in faces),
        outer_face=outer_face,
    )


def designate_outer(emb: PlaneEmbedding, face: int) -> PlaneEmbedding:
    if not (0 <= face < len(emb.faces)):
        raise EmbeddingError(f"face id {face} out of range (F={len(emb.faces)})")
    return PlaneEmbedding(
        graph=emb.graph, rotation=emb.rotation, faces=emb.faces, outer_face=face)


def face_profiles(emb: PlaneEmbedding) -> list[FaceProfile]:
    """Per-face degree and multiset of boundary vertex degrees (d_G)."""
    g = emb.graph
    out = []
    for fid, walk in enumerate(emb.faces):
        degs = tuple(sorted(g.degree(v) for v in walk))
        out.append(FaceProfile(face=fid, degree=len(walk), vertex_degrees=degs))
    return out


def outer_face_by_vertices(emb: PlaneEmbedding, vertices: list[int]) -> int:
    """Find the face whose boundary contains all the given vertices."""
    want = set(vertices)
    hits = [fid for fid, walk in enumerate(emb.faces) if want <= set(walk)]
    if not hits:
        raise EmbeddingError(f"no face contains all of {sorted(want)}")
    return hits[0]


def charge_identity_terms(emb: PlaneEmbedding) -> tuple[int, int]:
    """Return (vertex term, face term) of the Euler-derived identity.

    For a connected plane graph the two terms sum to -12.
    """
    g = emb.graph
    v_term = sum(g.degree(v) - 6 for v in range(g.n))
    f_term = sum(2 * len(w) - 6 for w in emb.faces)
    return v_term, f_term
