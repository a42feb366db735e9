"""Graph instances: wheels, complete split graphs, generic graphs.

Vertices are 1-based ([n]); the hub of a wheel is vertex n. Rim indices of a
wheel live in [n-1] and wrap modulo n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Tuple[int, int]]
    family: str = "generic"
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad edge ({i},{j}) for n={self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.edges

    def edge_list(self) -> list[Tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edge_list()],
            "family": self.family,
            "params": list(self.params),
        }

    @staticmethod
    def from_json(data: dict) -> "Graph":
        return Graph(
            n=data["n"],
            edges=frozenset((min(i, j), max(i, j)) for i, j in data["edges"]),
            family=data.get("family", "generic"),
            params=tuple(data.get("params", [])),
        )


def generic(n: int, edges) -> Graph:
    return Graph(n, frozenset((min(i, j), max(i, j)) for i, j in edges))


def wheel(m: int) -> Graph:
    """Wheel with m rim vertices 1..m (cycle) and hub m+1 joined to the rim."""
    if m < 3:
        raise ValueError("wheel needs at least 3 rim vertices")
    n = m + 1
    edges = set()
    for i in range(1, m + 1):
        j = i % m + 1
        edges.add((min(i, j), max(i, j)))
        edges.add((i, n))
    return Graph(n, frozenset(edges), family="wheel", params=(m,))


def rim_successor(g: Graph, i: int) -> int:
    """i+1 on the rim of a wheel, wrapping modulo n-1."""
    m = g.n - 1
    return i % m + 1


def rim_predecessor(g: Graph, i: int) -> int:
    m = g.n - 1
    return (i - 2) % m + 1


def complete_split(n1: int, n2: int) -> Graph:
    """Clique on [n1] completely joined to an independent set of size n2."""
    if n1 < 1:
        raise ValueError("clique part must be nonempty")
    if n2 < 0:
        raise ValueError("independent part size cannot be negative")
    n = n1 + n2
    edges = set()
    for i in range(1, n1 + 1):
        for j in range(i + 1, n1 + 1):
            edges.add((i, j))
        for j in range(n1 + 1, n + 1):
            edges.add((i, j))
    return Graph(n, frozenset(edges), family="complete_split", params=(n1, n2))


def triangles(g: Graph) -> list[Tuple[int, int, int]]:
    """All 3-cliques, lexicographically sorted."""
    out = []
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}
    for i, j in g.edge_list():
        for k in sorted(adj[i] & adj[j]):
            if k > j:
                out.append((i, j, k))
    out.sort()
    return out


@dataclass(frozen=True)
class BipartiteResult:
    is_bipartite: bool
    coloring: Optional[dict] = field(default=None)
    odd_cycle: Optional[list] = field(default=None)


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring; returns an odd closed walk witness on failure."""
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        parent[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    # walk both vertices up to the root; the two paths plus
                    # edge (v,w) contain an odd cycle
                    def path_to_root(u):
                        path = [u]
                        while parent[path[-1]] != 0:
                            path.append(parent[path[-1]])
                        return path

                    pv, pw = path_to_root(v), path_to_root(w)
                    common = set(pv) & set(pw)
                    lca = next(u for u in pv if u in common)
                    cycle = pv[: pv.index(lca) + 1] + list(reversed(pw[: pw.index(lca)]))
                    return BipartiteResult(False, odd_cycle=cycle)
    return BipartiteResult(True, coloring=color)


def all_pairs(n: int) -> list[Tuple[int, int]]:
    """E*(V): every unordered pair over [n]."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_set(vertices) -> list[Tuple[int, int]]:
    """E*(W) for a vertex set W."""
    vs = sorted(vertices)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
