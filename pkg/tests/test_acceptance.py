"""Acceptance checks, one per criterion, each printing a single PASS/FAIL line.

Run under pytest (lines appear inline) or directly:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import sys
import time
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from spectral_lab.bounds import classical_bounds_report, is_union_of_balanced_bicliques
from spectral_lab.canon import canonical_form
from spectral_lab.certify import (
    HOLDS_EQUALITY,
    HOLDS_STRICT,
    VIOLATED,
    certify_edge_bound,
    certify_nonbipartite_power,
    verify_radius_monotonicity,
    verify_walk_identity,
)
from spectral_lab.enumeration import ForbiddenFree, enumerate_levels
from spectral_lab.graph import complete, cycle, disjoint_union, empty, rk_bipartite, star, t_tree
from spectral_lab.search import counterexample_scan, equality_census, extremal_radius_search
from spectral_lab.spectral import rk_spectral_radius, spectrum

ROOT_TOL = 1e-9
EXTREMAL_CASES = [(6, 1), (7, 1), (8, 1), (9, 1), (8, 2), (9, 2)]


@lru_cache(maxsize=None)
def all_levels(n):
    return enumerate_levels(n)


@lru_cache(maxsize=None)
def forbidden_levels(n, k):
    return enumerate_levels(n, ForbiddenFree(k))


@lru_cache(maxsize=None)
def census(n, k, workers=1):
    # k = 1 scans every class; for k = 2 the hereditary family is exactly the applicable set
    return equality_census(n, k, workers=workers, prune=(k != 1))


@lru_cache(maxsize=None)
def extremal(n, k, workers=1):
    return extremal_radius_search(n, k, workers=workers)


def report(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    return ok, line


def criterion_1():
    start = time.perf_counter()
    ok = all(verify_walk_identity(k) for k in range(1, 11))
    elapsed = time.perf_counter() - start
    return report(1, ok and elapsed < 1.0, f"walk identity exact for k=1..10 in {elapsed:.3f}s")


def criterion_2():
    runs = [census(n, 1) for n in range(3, 9)] + [census(n, 2) for n in range(5, 10)]
    bad = sum(len(r.counterexamples) for r in runs)
    agree = all(r.checks["ties_equal_recognised"] and r.checks["equality_equals_recognised"] for r in runs)
    n8 = census(8, 1).total_canonical
    ok = bad == 0 and agree and n8 == 12346
    return report(2, ok, f"sum-of-powers bound: {bad} violations, equality set = blow-up set: {agree}, "
                         f"{n8} classes at n=8")


def criterion_3():
    details = []
    ok = True
    for n, k in EXTREMAL_CASES:
        r = extremal(n, k)
        s, t = (n - 2 * k + 1) // 2, n - 2 * k + 1 - (n - 2 * k + 1) // 2
        good = (
            r.checks["unique_maximizer"]
            and r.extremal_graphs == [canonical_form(rk_bipartite(k, s, t))]
            and abs(r.extremal_value - rk_spectral_radius(k, s, t)) <= ROOT_TOL
            and not r.counterexamples
        )
        ok &= good
        details.append(f"({n},{k})" + ("" if good else "!"))
    return report(3, ok, "unique maximizer R_k(K_floor,ceil) with quotient root agreement " + " ".join(details))


def criterion_4():
    targets = {canonical_form(disjoint_union(cycle(5), empty(i))) for i in range(4)}
    found = set()
    bad_k1 = 0
    for n in range(1, 9):
        for g in forbidden_levels(8, 1)[n]:
            c = certify_nonbipartite_power(g, 1)
            if c.verdict == HOLDS_EQUALITY:
                found.add(canonical_form(g))
            bad_k1 += c.verdict == VIOLATED
    strict_k2 = True
    for n in range(1, 10):
        for g in forbidden_levels(9, 2)[n]:
            c = certify_nonbipartite_power(g, 2)
            if c.applicable and c.verdict != HOLDS_STRICT:
                strict_k2 = False
    c5 = certify_nonbipartite_power(cycle(5), 1)
    exact = c5.lhs == 4 and c5.rhs == 4 and isinstance(c5.lhs, int) and isinstance(c5.rhs, (int, Fraction))
    ok = found == targets and bad_k1 == 0 and strict_k2 and exact and c5.verdict == HOLDS_EQUALITY
    return report(4, ok, f"k=1 equality set is C5+iK1 (i<=3): {found == targets}; k=2 all strict: {strict_k2}; "
                         f"C5 gives {c5.lhs} = {c5.rhs} exactly")


def criterion_5():
    cases = 0
    ok = True
    for k in range(1, 5):
        for s in range(2, 23):
            for t in range(s + 2, 25 - s):
                result = verify_radius_monotonicity(k, s, t)
                ok &= result is True
                cases += 1
    return report(5, ok and cases > 0, f"radius monotonicity holds on {cases} cases, both routes within 1e-9")


def criterion_6():
    worst = 0.0
    for c in range(1, 21):
        vals = np.sort(spectrum(t_tree(1, 1, c)).values)
        expected = np.sort([0.0] + [2 * math.cos((2 * j - 1) * math.pi / (2 * c + 4)) for j in range(1, c + 3)])
        worst = max(worst, float(np.max(np.abs(vals - expected))))
    l122 = spectrum(t_tree(1, 2, 2)).lambda1
    l123 = spectrum(t_tree(1, 2, 3)).lambda1
    l124 = spectrum(t_tree(1, 2, 4)).lambda1
    ok = (
        worst <= ROOT_TOL
        and abs(l122 - 2 * math.cos(math.pi / 12)) <= ROOT_TOL
        and abs(l123 - 2 * math.cos(math.pi / 18)) <= ROOT_TOL
        and 2 * math.cos(math.pi / 31) > l124 > 2 * math.cos(math.pi / 30)
    )
    return report(6, ok, f"T(1,1,c) spectra max error {worst:.1e}; T(1,2,2), T(1,2,3), T(1,2,4) radii as stated")


def criterion_7():
    bad = 0
    for n in range(1, 9):
        for g in all_levels(8)[n]:
            c = certify_edge_bound(g, 1)
            bad += c.verdict == VIOLATED
    for n in range(1, 10):
        for g in forbidden_levels(9, 2)[n]:
            bad += certify_edge_bound(g, 2).verdict == VIOLATED
    eq = (certify_edge_bound(cycle(5), 1).verdict == HOLDS_EQUALITY
          and certify_edge_bound(rk_bipartite(1, 3, 3), 1).verdict == HOLDS_EQUALITY)
    return report(7, bad == 0 and eq, f"edge bound: {bad} violations; equality at C5 and R_1(K_3,3): {eq}")


def criterion_8():
    violations = 0
    hong_ok = True
    chen_ok = True
    nosal_checked = 0
    for n in range(1, 9):
        for g in all_levels(8)[n]:
            for c in classical_bounds_report(g):
                if c.probe:
                    continue
                violations += c.verdict == VIOLATED
                if c.claim_id == "hong" and c.verdict == HOLDS_EQUALITY:
                    hong_ok &= c.structure_note in ("star", "complete graph")
                if c.claim_id == "nosal":
                    nosal_checked += 1
                if c.claim_id == "chen_qian" and c.inputs["l"] % 2 == 0 and g.m:
                    chen_ok &= (c.verdict == HOLDS_EQUALITY) == is_union_of_balanced_bicliques(g, max(g.degrees()))
    triangle_free = sum(len(forbidden_levels(8, 1)[n]) for n in range(1, 9))
    stars = all(_verdict(star(n), "hong") == HOLDS_EQUALITY for n in range(2, 9))
    completes = all(_verdict(complete(n), "hong") == HOLDS_EQUALITY for n in range(2, 9))
    wilf = all(_verdict(complete(n), "wilf") == HOLDS_EQUALITY for n in range(1, 9))
    ok = violations == 0 and hong_ok and chen_ok and stars and completes and wilf and nosal_checked == triangle_free
    return report(8, ok, f"{violations} classical violations over n<=8; Hong/Wilf equality cases: "
                         f"{stars and completes and wilf}; Chen-Qian equality iff K_D,D unions: {chen_ok}; "
                         f"Nosal checked on {nosal_checked} triangle-free classes")


def _verdict(g, claim_id):
    return next(c.verdict for c in classical_bounds_report(g) if c.claim_id == claim_id)


def criterion_9():
    rng = np.random.default_rng(20240917)
    worst = 0.0
    for _ in range(200):
        k = int(rng.integers(1, 6))
        s = int(rng.integers(2, 16))
        t = int(rng.integers(2, 16))
        dense = spectrum(rk_bipartite(k, s, t)).lambda1
        worst = max(worst, abs(dense - rk_spectral_radius(k, s, t)))
    return report(9, worst <= ROOT_TOL, f"quotient root vs dense radius on 200 samples, max error {worst:.1e}")


def criterion_10():
    same = census(8, 1).to_json() == equality_census(8, 1, workers=2, prune=False).to_json()
    same &= census(9, 2).to_json() == equality_census(9, 2, workers=3).to_json()
    for n, k in EXTREMAL_CASES:
        same &= extremal(n, k).to_json() == extremal_radius_search(n, k, workers=2).to_json()
    same &= counterexample_scan(8, 1, "thm1.1", workers=1).to_json() == \
        counterexample_scan(8, 1, "thm1.1", workers=2).to_json()
    return report(10, same, "census, extremal and scan reports byte-identical across worker counts")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


# T(1,2,4) is the E8 diagram; its characteristic polynomial is the minimal
# polynomial of 2cos(pi/30), so the strict lower bound in criterion 6 is false.
UNATTAINABLE = {
    6: "lambda1(T(1,2,4)) equals 2cos(pi/30) exactly; the strict lower bound cannot hold",
}


def _params():
    for i, check in enumerate(CRITERIA, start=1):
        marks = [pytest.mark.xfail(strict=True, reason=UNATTAINABLE[i])] if i in UNATTAINABLE else []
        yield pytest.param(check, id=f"criterion_{i}", marks=marks)


@pytest.mark.slow
@pytest.mark.parametrize("check", list(_params()))
def test_acceptance(check, capsys):
    ok, line = check()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
