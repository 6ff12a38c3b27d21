"""Text formats: edge-list graphs and rotation files."""

from __future__ import annotations

from .graph import Graph, build_graph


class ParseError(ValueError):
    def __init__(self, path: str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_edge_list(text: str, path: str = "<string>") -> Graph:
    """Parse "n m" header followed by m lines "u v" (0-based)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError(path, 1, "empty file")
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(path, line_no, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(path, line_no, f"non-integer header {header!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(path, line_no, f"header declares {m} edges, file has {len(body)}")
    edges = []
    for line_no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(path, line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(path, line_no, f"non-integer edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(path, line_no, f"vertex id out of range in {line!r}")
        if u == v:
            raise ParseError(path, line_no, f"self-loop {line!r}")
        edges.append((u, v))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_rotation(text: str, g: Graph, path: str = "<string>") -> list[list[int]]:
    """Parse rotation lines "v: u1 u2 ... uk" (clockwise neighbor order)."""
    rotation: list[list[int] | None] = [None] * g.n
    for line_no, line in _content_lines(text):
        if ":" not in line:
            raise ParseError(path, line_no, f"expected 'v: u1 u2 ...', got {line!r}")
        head, tail = line.split(":", 1)
        try:
            v = int(head.strip())
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError:
            raise ParseError(path, line_no, f"non-integer id in {line!r}") from None
        if not (0 <= v < g.n):
            raise ParseError(path, line_no, f"vertex {v} out of range")
        if rotation[v] is not None:
            raise ParseError(path, line_no, f"duplicate rotation line for vertex {v}")
        if sorted(nbrs) != list(g.adj[v]):
            raise ParseError(
                path, line_no,
                f"rotation for {v} lists {sorted(nbrs)}, graph has {list(g.adj[v])}")
        rotation[v] = nbrs
    for v in range(g.n):
        if rotation[v] is None:
            if g.degree(v) == 0:
                rotation[v] = []
            else:
                raise ParseError(path, 1, f"missing rotation line for vertex {v}")
    return [list(r) for r in rotation]  # type: ignore[union-attr]


def format_rotation(rotation: list[list[int]]) -> str:
    lines = [f"{v}: " + " ".join(str(u) for u in nbrs) for v, nbrs in enumerate(rotation)]
    return "\n".join(lines) + "\n"
