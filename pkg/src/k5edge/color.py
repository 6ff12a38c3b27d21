"""Edge coloring: constructive Delta+1 coloring, exact chromatic index."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Graph, GraphError


@dataclass(frozen=True)
class EdgeColoring:
    palette: int
    colors: dict[tuple[int, int], int] = field(compare=False)

    def color(self, u: int, v: int) -> int:
        return self.colors[(u, v) if u < v else (v, u)]

    def used_colors(self) -> set[int]:
        return set(self.colors.values())


@dataclass
class SolveBudget:
    node_limit: int = 50_000_000
    time_limit_ms: int = 60_000

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit_ms <= 0:
            raise ValueError("budget limits must be positive")


def validate_coloring(g: Graph, c: EdgeColoring) -> tuple[bool, tuple | None]:
    """Properness check; on failure returns the lexicographically first
    conflicting pair of edges."""
    for e in g.edges:
        if e not in c.colors:
            raise GraphError(f"edge {e} is uncolored")
    conflicts = []
    for v in range(g.n):
        inc = sorted((min(v, w), max(v, w)) for w in g.adj[v])
        by_color: dict[int, tuple[int, int]] = {}
        for e in inc:
            col = c.colors[e]
            if col in by_color:
                conflicts.append((by_color[col], e))
            else:
                by_color[col] = e
    if conflicts:
        return False, min(conflicts)
    return True, None


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most Delta+1 colors (Misra-Gries
    fan rotation with Kempe-chain inversions).  Deterministic: edges are
    inserted in ascending (min, max) order."""
    if g.m == 0:
        return EdgeColoring(palette=0, colors={})
    delta = g.max_degree()
    k = delta + 1
    color_at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # v -> {color: nbr}
    colors: dict[tuple[int, int], int] = {}

    def free(v: int) -> list[int]:
        used = color_at[v]
        return [c for c in range(1, k + 1) if c not in used]

    def set_color(u: int, v: int, c: int) -> None:
        key = (u, v) if u < v else (v, u)
        old = colors.get(key)
        if old is not None:
            del color_at[u][old]
            del color_at[v][old]
        colors[key] = c
        color_at[u][c] = v
        color_at[v][c] = u

    def unset_color(u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        old = colors.pop(key)
        del color_at[u][old]
        del color_at[v][old]

    def maximal_fan(u: int, v: int) -> list[int]:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            ext = None
            for c in free(last):
                w = color_at[u].get(c)
                if w is not None and w not in in_fan:
                    ext = w
                    break
            if ext is None:
                return fan
            fan.append(ext)
            in_fan.add(ext)

    def invert_path(u: int, c: int, d: int) -> None:
        """Invert the maximal path from u alternating colors d, c."""
        path = []
        cur, col = u, d
        while True:
            nxt = color_at[cur].get(col)
            if nxt is None:
                break
            path.append((cur, nxt, col))
            cur, col = nxt, (c if col == d else d)
        for a, b, col in path:
            unset_color(a, b)
        for a, b, col in path:
            set_color(a, b, c if col == d else d)

    def fan_prefix_ok(u: int, fan: list[int], j: int) -> bool:
        for i in range(1, j + 1):
            key = (u, fan[i]) if u < fan[i] else (fan[i], u)
            col = colors.get(key)
            if col is None or col in color_at[fan[i - 1]]:
                return False
        return True

    for u, v in g.edges:
        fan = maximal_fan(u, v)
        c = free(u)[0]
        d = free(fan[-1])[0]
        if d not in color_at[u]:
            # d free at both ends: rotate whole fan and finish with d
            w_idx = len(fan) - 1
        else:
            invert_path(u, c, d)
            w_idx = None
            for j in range(len(fan) - 1, -1, -1):
                if d not in color_at[fan[j]] and fan_prefix_ok(u, fan, j):
                    w_idx = j
                    break
            assert w_idx is not None, "fan/path invariant violated"
        for i in range(w_idx):
            key = (u, fan[i + 1]) if u < fan[i + 1] else (fan[i + 1], u)
            col = colors[key]
            unset_color(u, fan[i + 1])
            set_color(u, fan[i], col)
        set_color(u, fan[w_idx], d)

    used = max(colors.values())
    return EdgeColoring(palette=used, colors=dict(colors))


def _decide_k_colorable(g: Graph, k: int, budget: SolveBudget
                        ) -> tuple[str, dict[tuple[int, int], int] | None]:
    """Backtracking decision: does g admit a proper edge k-coloring?

    Returns ("sat", colors), ("unsat", None) or ("unknown", None).
    Symmetry is broken by pre-coloring the edges around one maximum-
    degree vertex.
    """
    if g.m == 0:
        return "sat", {}
    if k < g.max_degree():
        return "unsat", None
    full = (1 << k) - 1
    avail = [full] * g.n
    assignment: dict[tuple[int, int], int] = {}

    delta = g.max_degree()
    hub = min(v for v in range(g.n) if g.degree(v) == delta)
    for i, w in enumerate(g.adj[hub]):
        e = (hub, w) if hub < w else (w, hub)
        bit = 1 << i
        assignment[e] = i + 1
        avail[hub] &= ~bit
        avail[w] &= ~bit

    rest = [e for e in g.edges if e not in assignment]
    rest.sort(key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))
    # adjacency between remaining edges, for forward checking
    edges_at: list[list[int]] = [[] for _ in range(g.n)]
    for i, (a, b) in enumerate(rest):
        edges_at[a].append(i)
        edges_at[b].append(i)

    deadline = time.monotonic() + budget.time_limit_ms / 1000.0
    nodes = 0
    state = "sat"

    def backtrack(idx: int) -> bool:
        nonlocal nodes, state
        if idx == len(rest):
            return True
        nodes += 1
        if nodes > budget.node_limit:
            state = "unknown"
            return False
        if nodes % 2048 == 0 and time.monotonic() > deadline:
            state = "unknown"
            return False
        a, b = rest[idx]
        options = avail[a] & avail[b]
        while options:
            bit = options & -options
            options ^= bit
            avail[a] &= ~bit
            avail[b] &= ~bit
            ok = True
            for v in (a, b):
                for j in edges_at[v]:
                    if j > idx:
                        x, y = rest[j]
                        if avail[x] & avail[y] == 0:
                            ok = False
                            break
                if not ok:
                    break
            if ok and backtrack(idx + 1):
                assignment[(a, b)] = bit.bit_length()
                return True
            avail[a] |= bit
            avail[b] |= bit
            if state == "unknown":
                return False
        return False

    if backtrack(0):
        return "sat", dict(assignment)
    return (state, None) if state == "unknown" else ("unsat", None)


@dataclass(frozen=True)
class ExactResult:
    status: str  # "ok" or "exhausted"
    chromatic_index: int | None
    coloring: EdgeColoring | None


def chromatic_index_exact(g: Graph, budget: SolveBudget | None = None) -> ExactResult:
    """Exact chromatic index with a witness coloring.

    Tests Delta-colorability by backtracking; on failure the answer is
    Delta+1 with the constructive coloring as witness.  A blown budget
    yields an explicit "exhausted" result, never a guess.
    """
    if budget is None:
        budget = SolveBudget()
    if g.m == 0:
        return ExactResult("ok", 0, EdgeColoring(palette=0, colors={}))
    delta = g.max_degree()
    status, colors = _decide_k_colorable(g, delta, budget)
    if status == "sat":
        assert colors is not None
        return ExactResult("ok", delta, EdgeColoring(palette=delta, colors=colors))
    if status == "unknown":
        return ExactResult("exhausted", None, None)
    witness = vizing_color(g)
    ok, _ = validate_coloring(g, witness)
    assert ok and witness.palette <= delta + 1
    return ExactResult("ok", delta + 1, witness)


def classify(g: Graph, budget: SolveBudget | None = None) -> str:
    """"class1", "class2" or "unknown"."""
    if g.m == 0:
        raise GraphError("classification requires at least one edge")
    res = chromatic_index_exact(g, budget)
    if res.status == "exhausted":
        return "unknown"
    return "class1" if res.chromatic_index == g.max_degree() else "class2"
