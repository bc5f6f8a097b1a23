"""Bipartiteness, odd girth and short-odd-cycle tests.

Odd girth is reported as an ``int``, or ``math.inf`` for bipartite graphs, so
``odd_girth(g) >= 2 * k + 3`` reads the same either way.
"""

from __future__ import annotations

import math
from collections import deque

from .graph import Graph, bits

BIPARTITE = math.inf


def bfs_distances(g: Graph, root: int) -> list[int]:
    """Distances from ``root``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in bits(g.rows[x]):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a list of 0/1, or ``None`` if ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in bits(g.rows[x]):
                if color[y] < 0:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def odd_girth_from(g: Graph, root: int) -> float:
    """Shortest odd closed walk found by layering from ``root``.

    Never exceeds the length of any odd cycle through ``root``, and every
    finite value bounds some odd cycle of ``g`` from above.
    """
    return _root_odd_girth(g, root)[0]


def _root_odd_girth(g: Graph, root: int) -> tuple[float, list[int]]:
    dist = bfs_distances(g, root)
    best = math.inf
    for u, v in g.edges():
        if dist[u] >= 0 and dist[u] == dist[v]:
            best = min(best, 2 * dist[u] + 1)
    return best, dist


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, or ``math.inf`` when ``g`` is bipartite.

    Runs a BFS from every root; an edge inside one BFS layer closes an odd walk
    of length ``2 * depth + 1``, and the minimum over all roots is attained on
    a shortest odd cycle.
    """
    if is_bipartite(g):
        return BIPARTITE
    return min(_root_odd_girth(g, r)[0] for r in range(g.n))


def is_forbidden_free(g: Graph, k: int) -> bool:
    """True iff ``g`` has no odd cycle of length 3, 5, ..., 2k+1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return odd_girth(g) >= 2 * k + 3


def shortest_odd_cycle(g: Graph) -> list[int] | None:
    """A shortest odd cycle as a vertex sequence (first vertex not repeated).

    Ties break by lowest starting vertex, then lexicographically smallest
    sequence.  Returns ``None`` for bipartite graphs.
    """
    if is_bipartite(g):
        return None
    per_root = [_root_odd_girth(g, r) for r in range(g.n)]
    girth = min(length for length, _ in per_root)
    root = next(r for r, (length, _) in enumerate(per_root) if length == girth)
    return _lex_cycle(g, root, int(girth), per_root[root][1])


def _lex_cycle(g: Graph, root: int, length: int, dist: list[int]) -> list[int]:
    # On a shortest odd cycle through root, position i sits at distance min(i, length - i).
    seq = [root]
    used = 1 << root

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == length:
            return g.has_edge(seq[-1], root)
        want = min(pos, length - pos)
        for y in bits(g.rows[seq[-1]] & ~used):
            if dist[y] != want:
                continue
            seq.append(y)
            used |= 1 << y
            if extend(pos + 1):
                return True
            used &= ~(1 << y)
            seq.pop()
        return False

    if not extend(1):
        raise AssertionError("failed to trace a shortest odd cycle")
    return seq


def is_induced_cycle(g: Graph, seq: list[int]) -> bool:
    """True iff the vertices of ``seq`` induce exactly a cycle (no chords)."""
    if len(set(seq)) != len(seq) or len(seq) < 3:
        return False
    if not all(g.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
        return False
    return g.induced(seq).m == len(seq)


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Whether ``g`` contains ``C_length`` as a (not necessarily induced) subgraph."""
    if length < 3 or length > g.n:
        return False
    rows = g.rows

    def dfs(start: int, cur: int, used: int, depth: int) -> bool:
        if depth == length:
            return bool(rows[cur] >> start & 1)
        # only vertices above start may appear, so each cycle is rooted at its minimum
        cand = rows[cur] & ~used & ~((1 << (start + 1)) - 1)
        for y in bits(cand):
            if dfs(start, y, used | 1 << y, depth + 1):
                return True
        return False

    for s in range(g.n):
        if dfs(s, s, 1 << s, 1):
            return True
    return False
