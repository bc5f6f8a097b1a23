"""Simple undirected graphs and the constructions used throughout the package.

A :class:`Graph` stores one neighbourhood bitmask per vertex, so ``rows[v] >> u & 1``
is the ``(u, v)`` adjacency entry.  Graphs are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} refers to a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
                w ^= low

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee a symmetric loop-free row set.
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(rows)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a)):
            raise ValueError("adjacency matrix must have a zero diagonal")
        if np.any((a != 0) & (a != 1)):
            raise ValueError("adjacency matrix must be 0/1")
        rows = []
        for i in range(a.shape[0]):
            r = 0
            for j in np.flatnonzero(a[i]):
                r |= 1 << int(j)
            rows.append(r)
        return cls._trusted(rows)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.rows[v]) if u < v]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        if len(pos) != self.n or sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        rows = [0] * self.n
        for new, old in enumerate(order):
            r = 0
            for u in bits(self.rows[old]):
                r |= 1 << pos[u]
            rows[new] = r
        return Graph._trusted(rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        pos = {old: new for new, old in enumerate(vertices)}
        rows = []
        for old in vertices:
            r = 0
            for u in bits(self.rows[old]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(rows)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.rows[v] == 0]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# basic families


def empty(n: int) -> Graph:
    """``n`` isolated vertices."""
    if n < 0:
        raise ValueError(f"empty graph needs n >= 0, got {n}")
    return Graph._trusted([0] * n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph._trusted([full & ~(1 << v) for v in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with side of size ``s`` on ``0..s-1``."""
    if s < 1 or t < 1:
        raise ValueError(f"complete bipartite graph needs s, t >= 1, got ({s}, {t})")
    left = (1 << s) - 1
    right = ((1 << t) - 1) << s
    return Graph._trusted([right] * s + [left] * t)


def star(n: int) -> Graph:
    """K_{1,n-1}, centre 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return complete_bipartite(1, n - 1)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(list(g.rows) + [r << shift for r in h.rows])


def join(g: Graph, h: Graph) -> Graph:
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    rows = [r | right for r in g.rows] + [(r << g.n) | left for r in h.rows]
    return Graph._trusted(rows)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def split_graph(n: int, k: int) -> Graph:
    """S_{n,k}: a clique on ``k`` vertices joined to ``n-k`` independent vertices."""
    if not 1 <= k <= n:
        raise ValueError(f"split graph needs 1 <= k <= n, got n={n}, k={k}")
    return join(complete(k), empty(n - k))


def t_tree(a: int, b: int, c: int) -> Graph:
    """Spider with centre 0 and legs of lengths a <= b <= c."""
    if not 1 <= a <= b <= c:
        raise ValueError(f"t_tree needs 1 <= a <= b <= c, got ({a}, {b}, {c})")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(a + b + c + 1, edges)


def blow_up(base: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``v`` of ``base`` by ``sizes[v]`` independent vertices.

    Classes are laid out contiguously in base-vertex order; empty classes are
    allowed and simply drop the base vertex.
    """
    if len(sizes) != base.n:
        raise ValueError(f"need one class size per base vertex ({base.n}), got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValueError(f"class sizes must be non-negative, got {list(sizes)}")
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int).tolist()
    masks = [((1 << s) - 1) << offsets[v] for v, s in enumerate(sizes)]
    rows = []
    for v, s in enumerate(sizes):
        r = 0
        for u in bits(base.rows[v]):
            r |= masks[u]
        rows.extend([r] * s)
    return Graph._trusted(rows)


def rk_bipartite(k: int, s: int, t: int) -> Graph:
    """K_{s,t} with one edge ``uv`` replaced by a path on 2k+1 vertices.

    Labels: side X is ``0..s-1`` with ``u = 0``, side Y is ``s..s+t-1`` with
    ``v = s``, and the 2k-1 interior path vertices come last in path order.
    """
    if k < 1:
        raise ValueError(f"rk_bipartite needs k >= 1, got {k}")
    if s < 2 or t < 2:
        raise ValueError(f"rk_bipartite needs s, t >= 2, got ({s}, {t})")
    n = s + t + 2 * k - 1
    u, v = 0, s
    edges = [(x, y) for x in range(s) for y in range(s, s + t) if (x, y) != (u, v)]
    route = [u] + list(range(s + t, n)) + [v]
    edges += list(zip(route, route[1:]))
    return Graph.from_edges(n, edges)


BASES: dict[str, Graph] = {
    "p2k1": disjoint_union(path(2), empty(1)),
    "2p2k1": union_all([path(2), path(2), empty(1)]),
    "p4k1": disjoint_union(path(4), empty(1)),
    "p5k1": disjoint_union(path(5), empty(1)),
}

BASE_LABELS = {
    "p2k1": "P2∪K1",
    "2p2k1": "2P2∪K1",
    "p4k1": "P4∪K1",
    "p5k1": "P5∪K1",
}


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict


_KINDS = (
    "empty", "path", "cycle", "complete", "complete_bipartite", "star", "t_tree",
    "blow_up", "rk_bipartite", "split", "join", "disjoint_union",
)


def construct(spec: ConstructionSpec) -> Graph:
    """Build a graph from a kind name plus keyword parameters."""
    p = dict(spec.params)
    kind = spec.kind
    try:
        if kind == "empty":
            return empty(p["n"])
        if kind == "path":
            return path(p["n"])
        if kind == "cycle":
            return cycle(p["n"])
        if kind == "complete":
            return complete(p["n"])
        if kind == "complete_bipartite":
            return complete_bipartite(p["s"], p["t"])
        if kind == "star":
            return star(p["n"])
        if kind == "t_tree":
            return t_tree(p["a"], p["b"], p["c"])
        if kind == "blow_up":
            base = p["base"]
            if isinstance(base, str):
                if base not in BASES:
                    raise ValueError(f"unknown base {base!r}; expected one of {sorted(BASES)}")
                base = BASES[base]
            return blow_up(base, p["sizes"])
        if kind == "rk_bipartite":
            return rk_bipartite(p["k"], p["s"], p["t"])
        if kind == "split":
            return split_graph(p["n"], p["k"])
        if kind == "join":
            return join(p["left"], p["right"])
        if kind == "disjoint_union":
            return disjoint_union(p["left"], p["right"])
    except KeyError as exc:
        raise ValueError(f"{kind}: missing parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown construction kind {kind!r}; expected one of {_KINDS}")


def construct_basic(kind: str, **params) -> Graph:
    return construct(ConstructionSpec(kind, params))
