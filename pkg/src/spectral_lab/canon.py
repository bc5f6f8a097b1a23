"""Canonical labelling by individualisation and refinement.

The canonical graph is the relabelling with the smallest graph6 bit string
among the leaves of the search tree.  The tree starts from the vertex
partition by degree, cells ordered by decreasing degree, so the last canonical
vertex always has minimum degree; the enumerator relies on that.

Subtrees are skipped when an explored sibling is a twin of the candidate
(the transposition is an automorphism) or lies in its orbit under the
automorphisms found so far that fix the current prefix.
"""

from __future__ import annotations

from .graph import Graph
from .graph6 import to_graph6

DEFAULT_MAX_N = 12


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                r = rows[v]
                groups.setdefault(tuple((r & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                for key in sorted(groups, reverse=True):
                    out.append(groups[key])
        if len(out) == len(cells):
            return out
        cells = out


def certificate(rows: tuple[int, ...], order: list[int]) -> int:
    """graph6 adjacency bits of the relabelled graph, read as one integer."""
    cert = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            cert = cert << 1 | (rj >> order[i] & 1)
    return cert


def _orbit(seeds: list[int], gens: list[list[int]]) -> set[int]:
    orbit = set(seeds)
    stack = list(seeds)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(order, cert)``: ``g.relabel(order)`` is the canonical graph."""
    n = g.n
    rows = g.rows
    if n <= 1:
        return list(range(n)), 0
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree, reverse=True)]

    best: list = [None, None]
    leaves: dict[int, list[int]] = {}
    autos: list[list[int]] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(rows, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = certificate(rows, order)
            prev = leaves.get(cert)
            if prev is None:
                leaves[cert] = order
            else:
                perm = [0] * n
                for a, b in zip(prev, order):
                    perm[a] = b
                autos.append(perm)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[ti]
        explored: list[int] = []
        for v in cell:
            rv = rows[v]
            if any(((rows[u] ^ rv) & ~(1 << u | 1 << v)) == 0 for u in explored):
                continue
            if explored and autos:
                gens = [p for p in autos if all(p[x] == x for x in fixed)]
                if gens and v in _orbit(explored, gens):
                    continue
            explored.append(v)
            rest = [x for x in cell if x != v]
            search(cells[:ti] + [[v], rest] + cells[ti + 1:], fixed + [v])

    search(cells, [])
    return best[1], best[0]


def canonical_graph(g: Graph, max_n: int = DEFAULT_MAX_N) -> Graph:
    if g.n > max_n:
        raise ValueError(f"canonical form supports n <= {max_n}, got n={g.n}")
    order, _ = canonical_labeling(g)
    return g.relabel(order)


def canonical_form(g: Graph, max_n: int = DEFAULT_MAX_N) -> str:
    """graph6 string of the canonical relabelling; equal strings iff isomorphic."""
    return to_graph6(canonical_graph(g, max_n))


def is_isomorphic(g: Graph, h: Graph, max_n: int = 64) -> bool:
    if max(g.n, h.n) > max_n:
        raise ValueError(f"isomorphism test supports n <= {max_n}, got n={max(g.n, h.n)}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g)[1] == canonical_labeling(h)[1]
