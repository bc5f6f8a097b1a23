"""Isomorphism-free generation of small graphs by canonical augmentation.

Level ``n`` is built from the canonical graphs of level ``n-1``: a new vertex is
attached to every neighbour subset, and a child is kept only when deleting
its last canonical vertex gives back the parent.  Children of one parent are
deduplicated locally, so no table spanning the whole level is ever needed.

A hereditary :class:`Family` (closed under vertex deletion) is applied at every
level, which restricts the tree to the family without losing any member.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .canon import canonical_labeling, certificate
from .cycles import is_forbidden_free, odd_girth_from
from .graph import Graph, bits

DEFAULT_MAX_N = 10
ENV_MAX_N = "SPECTRAL_LAB_MAX_N"


def enumeration_cap() -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


class Family:
    """All graphs; subclasses narrow this to a hereditary class."""

    name = "all"

    def contains(self, g: Graph) -> bool:
        return True

    def extends(self, child: Graph, v: int) -> bool:
        """Membership of ``child`` given that ``child - v`` is a member."""
        return self.contains(child)


@dataclass(frozen=True)
class ForbiddenFree(Family):
    """Graphs with no odd cycle of length at most 2k+1."""

    k: int

    @property
    def name(self) -> str:
        return f"odd_girth>={2 * self.k + 3}"

    def contains(self, g: Graph) -> bool:
        return is_forbidden_free(g, self.k)

    def extends(self, child: Graph, v: int) -> bool:
        return odd_girth_from(child, v) >= 2 * self.k + 3


@dataclass(frozen=True)
class CliqueFree(Family):
    """Graphs with no clique on r+1 vertices."""

    r: int

    @property
    def name(self) -> str:
        return f"K{self.r + 1}-free"

    def contains(self, g: Graph) -> bool:
        from .bounds import clique_number

        return clique_number(g) <= self.r

    def extends(self, child: Graph, v: int) -> bool:
        from .bounds import clique_number

        nb = bits(child.rows[v])
        return clique_number(child.induced(nb)) <= self.r - 1


ALL = Family()


def _children(parent: Graph, family: Family) -> list[Graph]:
    n = parent.n + 1
    new = n - 1
    prow = parent.rows
    pdeg = [r.bit_count() for r in prow]
    pcert = certificate(prow, list(range(parent.n)))
    top = 1 << new
    seen: set[int] = set()
    out: list[Graph] = []
    for s in range(1 << parent.n):
        d = s.bit_count()
        # the new vertex must have minimum degree in the child
        if any(pdeg[u] + (s >> u & 1) < d for u in range(parent.n)):
            continue
        rows = [r | top if s >> u & 1 else r for u, r in enumerate(prow)]
        rows.append(s)
        child = Graph._trusted(rows)
        if not family.extends(child, new):
            continue
        order, cert = canonical_labeling(child)
        w = order[-1]
        if w != new and canonical_labeling(child.delete_vertex(w))[1] != pcert:
            continue
        if cert in seen:
            continue
        seen.add(cert)
        out.append(child.relabel(order))
    return out


def _children_batch(args: tuple[list[Graph], Family]) -> list[Graph]:
    parents, family = args
    out = []
    for p in parents:
        out.extend(_children(p, family))
    return out


def _level_key(g: Graph) -> tuple[int, ...]:
    return g.rows


def _next_level(level: list[Graph], family: Family, pool) -> list[Graph]:
    if pool is None or len(level) < 8:
        kids = _children_batch((level, family))
    else:
        nchunks = min(len(level), 64)
        chunks = [level[i::nchunks] for i in range(nchunks)]
        kids = [g for part in pool.map(_children_batch, [(c, family) for c in chunks]) for g in part]
    kids.sort(key=_level_key)
    return kids


def enumerate_levels(
    n: int, family: Family = ALL, workers: int = 1, max_n: int | None = None
) -> list[list[Graph]]:
    """Canonical representatives of ``family`` on 0..n vertices, one list per order."""
    cap = enumeration_cap() if max_n is None else max_n
    if n > cap:
        raise ValueError(f"enumeration is capped at n <= {cap} (set {ENV_MAX_N} to override), got {n}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    levels = [[Graph._trusted([])]]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for _ in range(n):
            levels.append(_next_level(levels[-1], family, pool))
    finally:
        if pool is not None:
            pool.shutdown()
    return levels


def enumerate_graphs(
    n: int,
    accept: Callable[[Graph], bool] | None = None,
    family: Family = ALL,
    workers: int = 1,
    max_n: int | None = None,
) -> Iterator[Graph]:
    """One canonical graph per isomorphism class on ``n`` vertices.

    ``family`` prunes the generation tree and must be hereditary; ``accept``
    is an arbitrary final filter.
    """
    for g in enumerate_levels(n, family, workers, max_n)[n]:
        if accept is None or accept(g):
            yield g
