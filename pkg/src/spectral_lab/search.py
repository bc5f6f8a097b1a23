"""Exhaustive searches over isomorphism classes of small graphs.

Reports are deterministic: graph lists are sorted by canonical graph6 text
and the JSON form leaves out wall-clock time and worker count, so the same
parameters always give byte-identical output.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Iterable, Sequence

from . import certify as _certify
from .canon import canonical_form
from .certify import (
    HOLDS_EQUALITY,
    ROOT_ATOL,
    VIOLATED,
    certify_sum_of_powers,
    extremal_parts,
    is_tie,
    json_number,
    recognize_blowup_base,
)
from .claims import ClaimParams, get_claim
from .cycles import is_bipartite
from .enumeration import ALL, ForbiddenFree, enumerate_graphs, enumerate_levels, enumeration_cap
from .graph import Graph, rk_bipartite
from .graph6 import to_graph6
from .spectral import rk_spectral_radius, spectrum

MAX_TIE = 1e-7
SCAN_MAX_N = 9

__all__ = [
    "SearchReport",
    "canonical_form",
    "counterexample_scan",
    "enumerate_graphs",
    "equality_census",
    "extremal_radius_search",
]


@dataclass
class SearchReport:
    mode: str
    n: int
    k: int
    total_canonical: int = 0
    admissible: int = 0
    extremal_value: float | None = None
    extremal_graphs: list[str] = field(default_factory=list)
    equality_graphs: list[str] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    claim_id: str | None = None
    params: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, Any] = field(default_factory=dict)
    runtime_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples and all(v is not False for v in self.checks.values())

    def to_dict(self, include_runtime: bool = False) -> dict[str, Any]:
        out = {
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "claim_id": self.claim_id,
            "params": {key: json_number(v) for key, v in self.params.items()},
            "total_canonical": self.total_canonical,
            "admissible": self.admissible,
            "extremal_value": json_number(self.extremal_value),
            "extremal_graphs": list(self.extremal_graphs),
            "equality_graphs": list(self.equality_graphs),
            "counterexamples": list(self.counterexamples),
            "checks": {key: json_number(v) for key, v in self.checks.items()},
        }
        if include_runtime:
            out["runtime_ms"] = round(self.runtime_ms, 1)
        return out

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2, ensure_ascii=False)


def _map(fn: Callable, items: Sequence, workers: int) -> list:
    # results come back in input order whatever the worker count
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def _sorted_g6(graphs: Iterable[Graph]) -> list[str]:
    return sorted({to_graph6(g) for g in graphs})


def _universe_size(n: int, family, workers: int, prune: bool) -> tuple[list[Graph], int]:
    if prune:
        level = enumerate_levels(n, family, workers)[n]
        return level, len(level)
    full = enumerate_levels(n, ALL, workers)[n]
    return [g for g in full if family.contains(g)], len(full)


# ---------------------------------------------------------------------------
# extremal spectral radius


def _radius_row(g: Graph) -> float:
    return spectrum(g).lambda1


def extremal_radius_search(n: int, k: int, workers: int = 1, prune: bool = True) -> SearchReport:
    """Maximise lambda_1 over non-bipartite graphs of odd girth >= 2k+3 on n vertices."""
    start = time.perf_counter()
    cap = enumeration_cap()
    if k < 1 or n < 2 * k + 4 or n > cap:
        raise ValueError(f"extremal search needs k >= 1 and 2k+4 <= n <= {cap}, got n={n}, k={k}")
    family = ForbiddenFree(k)
    pool, total = _universe_size(n, family, workers, prune)
    admissible = [g for g in pool if not is_bipartite(g)]
    radii = _map(_radius_row, admissible, workers)
    report = SearchReport("extremal", n, k, total_canonical=total, admissible=len(admissible))
    report.params = {"prune": prune, "tie_band": MAX_TIE}
    s, t = extremal_parts(n, k)
    root = rk_spectral_radius(k, s, t)
    expected = canonical_form(rk_bipartite(k, s, t))
    if admissible:
        best = max(radii)
        near = [g for g, lam in zip(admissible, radii) if best - lam <= MAX_TIE]
        maximizers = sorted({canonical_form(g) for g in near})
        report.extremal_value = best
        report.extremal_graphs = maximizers
        report.checks = {
            "expected_name": f"R_{k}(K_{s},{t})",
            "expected_graph": expected,
            "quotient_root": root,
            "unique_maximizer": len(maximizers) == 1,
            "matches_expected": maximizers == [expected],
            "root_agreement": abs(best - root) <= ROOT_ATOL,
        }
        report.counterexamples = _sorted_g6(g for g, lam in zip(admissible, radii) if lam > root + ROOT_ATOL)
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


# ---------------------------------------------------------------------------
# equality census


def _census_row(g: Graph, k: int) -> tuple[str, bool, bool]:
    cert = certify_sum_of_powers(g, k)
    tie = cert.applicable and is_tie(cert.lhs, cert.rhs)
    recognised = recognize_blowup_base(g).in_family
    return cert.verdict, tie, recognised


def equality_census(n: int, k: int, workers: int = 1, prune: bool = True) -> SearchReport:
    """Compare numerical equality in the sum-of-powers bound with blow-up recognition."""
    start = time.perf_counter()
    if k < 1 or n < 2 * k + 1 or n > SCAN_MAX_N:
        raise ValueError(f"census needs k >= 1 and 2k+1 <= n <= {SCAN_MAX_N}, got n={n}, k={k}")
    family = ForbiddenFree(k)
    pool, total = _universe_size(n, family, workers, prune)
    rows = _map(partial(_census_row, k=k), pool, workers)
    report = SearchReport("census", n, k, total_canonical=total, admissible=len(pool))
    report.params = {"prune": prune, "rtol": _certify.EQ_RTOL}
    ties = [g for g, (_, tie, _) in zip(pool, rows) if tie]
    recognised = [g for g, (_, _, rec) in zip(pool, rows) if rec]
    report.equality_graphs = _sorted_g6(g for g, (v, _, _) in zip(pool, rows) if v == HOLDS_EQUALITY)
    report.counterexamples = _sorted_g6(g for g, (v, _, _) in zip(pool, rows) if v == VIOLATED)
    tie_set, rec_set = set(_sorted_g6(ties)), set(_sorted_g6(recognised))
    report.checks = {
        "numerical_ties": len(tie_set),
        "recognised_blowups": len(rec_set),
        "ties_equal_recognised": tie_set == rec_set,
        "equality_equals_recognised": set(report.equality_graphs) == rec_set,
    }
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


# ---------------------------------------------------------------------------
# counterexample scan


def _scan_row(g: Graph, claim_id: str, params: ClaimParams) -> tuple[bool, bool, bool]:
    certs = get_claim(claim_id).run(g, params)
    applicable = any(c.applicable for c in certs)
    violated = any(c.verdict == VIOLATED for c in certs)
    equality = any(c.verdict == HOLDS_EQUALITY for c in certs)
    return applicable, violated, equality


def counterexample_scan(
    n: int, k: int, claim_id: str, r: int = 2, workers: int = 1, prune: bool = True
) -> SearchReport:
    """Run one registered claim on every class of the claim's universe on n vertices."""
    start = time.perf_counter()
    claim = get_claim(claim_id)
    if n < 1 or n > SCAN_MAX_N:
        raise ValueError(f"scan needs 1 <= n <= {SCAN_MAX_N}, got n={n}")
    params = ClaimParams(k=k, r=r)
    family = claim.family(params)
    pool, total = _universe_size(n, family, workers, prune)
    rows = _map(partial(_scan_row, claim_id=claim.claim_id, params=params), pool, workers)
    report = SearchReport("scan", n, k, total_canonical=total, claim_id=claim.claim_id)
    report.params = {"prune": prune, "r": r, "probe": claim.probe}
    report.admissible = sum(1 for a, _, _ in rows if a)
    report.counterexamples = _sorted_g6(g for g, (_, bad, _) in zip(pool, rows) if bad)
    report.equality_graphs = _sorted_g6(g for g, (_, _, eq) in zip(pool, rows) if eq)
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report

