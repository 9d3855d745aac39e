"""Undirected simple graphs and their Dynkin / affine / wild classification.

The kind comes from the Tits form ``q(x) = sum x_v^2 - sum_{uv} x_u x_v``:
positive definite for Dynkin diagrams, positive semidefinite of corank one
for affine diagrams, indefinite otherwise.  Shape names are read off the
arm lengths afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact import DefKind, Matrix, int_definiteness

DYNKIN = "dynkin"
AFFINE = "affine"
WILD = "wild"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            norm.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(norm)))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def tits_rows(self) -> list[list[int]]:
        m = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for u, v in self.edges:
            m[u][v] -= 1
            m[v][u] -= 1
        return m

    def tits_matrix(self) -> Matrix:
        return Matrix(self.tits_rows(), self.n)


def underlying_graph(P) -> Graph:
    """Undirected Hasse diagram of a poset."""
    return Graph(P.n, tuple(sorted(P.covers)))


@dataclass(frozen=True)
class GraphClass:
    kind: str
    shape: str | None = None

    def __str__(self):
        return f"{self.kind}({self.shape})" if self.shape else self.kind


def _arms(adj: list[set[int]], center: int) -> list[int]:
    out = []
    for start in adj[center]:
        prev, cur, length = center, start, 1
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur, length = cur, nxt, length + 1
        out.append(length if len(adj[cur]) == 1 else -1)
    return sorted(out)


def _shape_name(g: Graph, kind: str) -> str | None:
    """Name a Dynkin or affine graph from its arm structure."""
    n, adj = g.n, g.adjacency()
    deg = [len(a) for a in adj]
    m = len(g.edges)
    if kind == AFFINE and m == n:
        return f"A{n - 1}(1)"
    branch = [v for v in range(n) if deg[v] >= 3]
    if not branch:
        return f"A{n}" if kind == DYNKIN else None
    if len(branch) == 1:
        arms = _arms(adj, branch[0])
        if kind == DYNKIN:
            if arms[:2] == [1, 1]:
                return f"D{n}"
            return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms))
        if arms == [1, 1, 1, 1]:
            return "D4(1)"
        return {(2, 2, 2): "E6(1)", (1, 3, 3): "E7(1)", (1, 2, 5): "E8(1)"}.get(tuple(arms))
    if kind == AFFINE and len(branch) == 2:
        return f"D{n - 1}(1)"
    return None


def graph_class(g: Graph) -> GraphClass:
    """Dynkin, affine or wild, decided by the Tits form."""
    if not g.is_connected():
        raise ValueError("graph_class needs a connected graph")
    d = int_definiteness(g.tits_rows())
    if d.kind is DefKind.POSITIVE_DEFINITE:
        return GraphClass(DYNKIN, _shape_name(g, DYNKIN))
    if d.kind is DefKind.POSITIVE_SEMIDEFINITE and d.corank == 1:
        return GraphClass(AFFINE, _shape_name(g, AFFINE))
    return GraphClass(WILD)


def cycle_with_pendants(g: Graph) -> tuple[int, int] | None:
    """``(cycle length, number of pendant vertices)`` for a cycle with leaves hung on it."""
    adj = g.adjacency()
    leaves = [v for v in range(g.n) if len(adj[v]) == 1]
    core = [v for v in range(g.n) if len(adj[v]) != 1]
    core_set = set(core)
    if len(g.edges) != g.n:
        return None
    if any(len(adj[v] & core_set) != 2 for v in core):
        return None
    if any(not (adj[v] <= core_set) for v in leaves):
        return None
    return len(core), len(leaves)


def induced_cycles(adj: list[set[int]], max_len: int, min_len: int = 3):
    """Yield induced (chordless) cycles as vertex lists, shortest first.

    Each cycle is reported once, starting at its smallest vertex and with its
    second vertex smaller than its last.
    """
    n = len(adj)
    for length in range(min_len, max_len + 1):
        for s in range(n):
            path = [s]
            on_path = {s}

            def extend():
                last = path[-1]
                if len(path) == length:
                    if s in adj[last] and path[1] < path[-1]:
                        yield list(path)
                    return
                for w in sorted(adj[last]):
                    if w <= s or w in on_path:
                        continue
                    # chordless: besides `last`, w may touch only s, and only as the closing vertex
                    extra = (adj[w] & on_path) - {last}
                    if extra and (extra != {s} or len(path) + 1 != length):
                        continue
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

            yield from extend()
