"""Independent reference implementations used only by the tests.

These are deliberately naive: brute force over permutations or cycles,
Fraction arithmetic, numpy object-dtype matrix powers.  None of them share
code with the package beyond the Graph container.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from spectral_lab.graph import Graph


def edge_list_n(n):
    return list(itertools.combinations(range(n), 2))


def graph_from_code(n, code):
    """Labelled graph whose edge i (in combinations order) is bit i of ``code``."""
    edges = [e for i, e in enumerate(edge_list_n(n)) if code >> i & 1]
    return Graph.from_edges(n, edges)


def simple_cycle_lengths(g):
    """Lengths of all simple cycles, by DFS from each cycle's minimum vertex."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    lengths = set()

    def dfs(start, cur, seen, depth):
        for y in adj[cur]:
            if y == start and depth >= 3:
                lengths.add(depth)
            elif y > start and y not in seen:
                seen.add(y)
                dfs(start, y, seen, depth + 1)
                seen.discard(y)

    for s in range(g.n):
        dfs(s, s, {s}, 1)
    return lengths


def brute_odd_girth(g):
    odd = [c for c in simple_cycle_lengths(g) if c % 2]
    return min(odd) if odd else math.inf


def fraction_rank(g):
    m = [[Fraction(int(g.has_edge(i, j))) for j in range(g.n)] for i in range(g.n)]
    rank = 0
    for col in range(g.n):
        piv = next((r for r in range(rank, g.n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(g.n):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def object_matrix(g):
    a = np.zeros((g.n, g.n), dtype=object)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def object_power(a, t):
    out = np.identity(a.shape[0], dtype=object)
    for _ in range(t):
        out = out.dot(a)
    return out


def trace_power(g, t):
    return int(np.trace(object_power(object_matrix(g), t))) if g.n else 0


def walk_count(g, t):
    """Walks with t vertices: sum of entries of A^(t-1)."""
    return int(object_power(object_matrix(g), t - 1).sum()) if g.n else 0


def brute_canonical_bits(g):
    """Lexicographically smallest upper-triangle bit tuple over all n! relabellings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(int(g.has_edge(perm[i], perm[j])) for j in range(1, g.n) for i in range(j))
        if best is None or key < best:
            best = key
    return best


def labelled_class_count(n):
    """Number of isomorphism classes by literal dedup of all labelled graphs."""
    return len({brute_canonical_bits(graph_from_code(n, c)) for c in range(1 << (n * (n - 1) // 2))})


def burnside_class_count(n):
    """Unlabelled graph count via Burnside: average of 2^(edge orbits) over S_n."""
    edges = edge_list_n(n)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        orbits = 0
        for e in edges:
            if e in seen:
                continue
            orbits += 1
            x = e
            while x not in seen:
                seen.add(x)
                a, b = perm[x[0]], perm[x[1]]
                x = (min(a, b), max(a, b))
        total += 2**orbits
    assert total % math.factorial(n) == 0
    return total // math.factorial(n)


def automorphism_count(g):
    """|Aut(g)| by plain backtracking over degree-preserving partial maps."""
    n = g.n
    deg = g.degrees()
    adj = [[g.has_edge(i, j) for j in range(n)] for i in range(n)]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return 1
        count = 0
        for c in range(n):
            if used[c] or deg[c] != deg[i]:
                continue
            if all(adj[i][j] == adj[c][image[j]] for j in range(i)):
                image[i] = c
                used[c] = True
                count += extend(i + 1)
                used[c] = False
        return count

    return extend(0)


def charpoly_coeffs(g):
    """Integer characteristic polynomial coefficients via numpy (rounded)."""
    return [round(x) for x in np.poly(g.adjacency_matrix(dtype=float))]


def labelled_codes_without_triangles_n7():
    """All labelled triangle-free graphs on 7 vertices, as edge-bit codes (numpy)."""
    n = 7
    idx = {e: i for i, e in enumerate(edge_list_n(n))}
    codes = np.arange(1 << len(idx), dtype=np.int64)
    keep = np.ones(codes.shape, dtype=bool)
    for a, b, c in itertools.combinations(range(n), 3):
        mask = (1 << idx[(a, b)]) | (1 << idx[(a, c)]) | (1 << idx[(b, c)])
        keep &= (codes & mask) != mask
    return codes[keep]


def to_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def iso_classes_networkx(graphs):
    """Dedup with networkx: WL-hash buckets, then VF2 inside each bucket."""
    import networkx as nx

    buckets = {}
    reps = []
    for g in graphs:
        h = to_networkx(g)
        key = (g.m, tuple(sorted(g.degrees())), nx.weisfeiler_lehman_graph_hash(h))
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
            reps.append(g)
    return reps
