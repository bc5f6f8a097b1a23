"""Classical spectral bounds and probes of open conjectures.

Every function here returns :class:`~spectral_lab.certify.Certificate` objects
with the same verdict conventions as the theorem certifiers.  Probe
certificates carry ``probe=True``; their violations are findings and never
count as failures.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .certify import (
    HOLDS_EQUALITY,
    HOLDS_STRICT,
    VIOLATED,
    Certificate,
    _check_size,
    _not_applicable,
    _sub,
    compare,
    cos_term,
    is_tie,
    lambda1_of,
)
from .canon import is_isomorphic
from .cycles import has_cycle_of_length, is_bipartite, odd_girth
from .graph import Graph, split_graph
from .graph6 import to_graph6
from .spectral import Spectrum, closed_walks, inertia_sums, spectrum, walks


def _color_sort(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    # greedy sequential colouring; vertices come out grouped by colour number
    order: list[int] = []
    colors: list[int] = []
    color = 0
    left = cand
    while left:
        color += 1
        avail = left
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v) & ~rows[v]
            left &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound with a greedy-colouring bound."""
    if g.n > 64:
        raise ValueError(f"clique number is limited to n <= 64, got n={g.n}")
    rows = g.rows
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colors = _color_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            sub = cand & rows[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if g.n:
        expand(0, (1 << g.n) - 1)
    return best


def _inputs(g: Graph, **extra) -> dict:
    return {"graph6": to_graph6(g), **extra}


def _cert(claim, g, lhs, rhs, formula, note=None, **extra) -> Certificate:
    verdict = compare(lhs, rhs)
    if verdict == HOLDS_EQUALITY and note is None:
        note = "numerical tie"
    return Certificate(claim, True, lhs, rhs, _sub(rhs, lhs), verdict, note, _inputs(g, **extra), formula)


def _stanley_rhs(m: int) -> float:
    return (math.sqrt(8 * m + 1) - 1) / 2


def stanley(g: Graph, spec: Spectrum) -> Certificate:
    return _cert("stanley", g, lambda1_of(g, spec), _stanley_rhs(g.m), "lambda1 <= (sqrt(8m+1)-1)/2")


def wu_elphick(g: Graph, spec: Spectrum) -> Certificate:
    s_plus = inertia_sums(spec).s_plus
    return _cert("wu_elphick", g, math.sqrt(s_plus), _stanley_rhs(g.m), "sqrt(s+) <= (sqrt(8m+1)-1)/2")


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degrees()) == g.n - 1


def hong(g: Graph, spec: Spectrum) -> Certificate:
    formula = "lambda1 <= sqrt(2m-n+1), G connected"
    if not g.is_connected():
        return _not_applicable("hong", _inputs(g), "disconnected", formula)
    lhs = lambda1_of(g, spec)
    rhs = math.sqrt(2 * g.m - g.n + 1)
    cert = _cert("hong", g, lhs, rhs, formula)
    if cert.verdict == HOLDS_EQUALITY:
        if _is_complete(g) or _is_star(g):
            cert.structure_note = "complete graph" if _is_complete(g) else "star"
        else:
            cert.verdict = HOLDS_STRICT
            cert.structure_note = "numerical tie on a graph that is neither complete nor a star"
    return cert


def nikiforov_delta(g: Graph, spec: Spectrum) -> Certificate:
    d = min(g.degrees())
    rhs = (d - 1) / 2 + math.sqrt(2 * g.m - g.n * d + (1 + d) ** 2 / 4)
    return _cert("nikiforov_delta", g, lambda1_of(g, spec), rhs,
                 "lambda1 <= (delta-1)/2 + sqrt(2m - n*delta + (1+delta)^2/4)")


def wilf(g: Graph, spec: Spectrum, omega: int) -> Certificate:
    rhs = Fraction(omega - 1, omega) * g.n
    return _cert("wilf", g, lambda1_of(g, spec), rhs, "lambda1 <= (omega-1)/omega * n", omega=omega)


def spectral_turan(g: Graph, spec: Spectrum, omega: int, s: int) -> Certificate:
    lhs = lambda1_of(g, spec) ** s
    rhs = Fraction(omega - 1, omega) * walks(g, s)
    return _cert("spectral_turan", g, lhs, rhs, "lambda1^s <= (omega-1)/omega * alpha_s", s=s, omega=omega)


def is_union_of_balanced_bicliques(g: Graph, delta: int) -> bool:
    """Every component with an edge is K_{delta,delta}; isolated vertices are allowed."""
    for comp in g.components():
        if len(comp) == 1:
            continue
        if len(comp) != 2 * delta or any(g.degree(v) != delta for v in comp):
            return False
        if not is_bipartite(g.induced(comp)):
            return False
    return True


def chen_qian(g: Graph, length: int) -> Certificate:
    formula = "beta_l <= 2m * Delta^(l-2)"
    delta = max(g.degrees())
    lhs = closed_walks(g, length)
    rhs = 2 * g.m * delta ** (length - 2)
    margin = rhs - lhs
    inputs = _inputs(g, l=length)
    if margin < 0:
        return Certificate("chen_qian", True, lhs, rhs, margin, VIOLATED, None, inputs, formula)
    if margin > 0:
        return Certificate("chen_qian", True, lhs, rhs, margin, HOLDS_STRICT, None, inputs, formula)
    if g.m == 0:
        note = "edgeless"
    elif is_union_of_balanced_bicliques(g, delta):
        note = f"every non-trivial component is K_{delta},{delta}"
    else:
        note = "exact equality but components are not all balanced complete bipartite"
    return Certificate("chen_qian", True, lhs, rhs, margin, HOLDS_EQUALITY, note, inputs, formula)


def nosal(g: Graph, spec: Spectrum) -> Certificate:
    formula = "lambda1 <= sqrt(m), G triangle-free"
    if odd_girth(g) == 3:
        return _not_applicable("nosal", _inputs(g), "contains a triangle", formula)
    return _cert("nosal", g, lambda1_of(g, spec), math.sqrt(g.m), formula)


def cor001(g: Graph, spec: Spectrum, k: int) -> Certificate:
    """lambda1 < (m Delta^(2k-2) - (2cos(pi/(k+2)))^(2k))^(1/(2k)), strict."""
    formula = "lambda1 < (m*Delta^(2k-2) - (2cos(pi/(k+2)))^(2k))^(1/(2k))"
    inputs = _inputs(g, k=k)
    og = odd_girth(g)
    if og == math.inf:
        return _not_applicable("cor001", inputs, "bipartite", formula)
    if og < 2 * k + 3:
        return _not_applicable("cor001", inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    delta = max(g.degrees())
    inner = _sub(g.m * delta ** (2 * k - 2), cos_term(k))
    lhs = lambda1_of(g, spec)
    rhs = float(inner) ** (1.0 / (2 * k))
    margin = rhs - float(lhs)
    # compare the 2k-th powers so exact cases stay exact
    power = lhs ** (2 * k)
    if is_tie(power, inner) or _sub(inner, power) < 0:
        return Certificate("cor001", True, lhs, rhs, margin, VIOLATED, "strict inequality fails", inputs, formula)
    return Certificate("cor001", True, lhs, rhs, margin, HOLDS_STRICT, None, inputs, formula)


def conj_elphick(g: Graph, spec: Spectrum) -> Certificate:
    formula = "min(s+, s-) >= n-1, G connected"
    if not g.is_connected():
        return _not_applicable("conj_elphick", _inputs(g), "disconnected", formula, probe=True)
    sums = inertia_sums(spec)
    cert = _cert("conj_elphick", g, g.n - 1, min(sums.s_plus, sums.s_minus), formula)
    cert.probe = True
    return cert


def classical_bounds_report(g: Graph, spec: Spectrum | None = None) -> list[Certificate]:
    """One certificate per applicable classical bound, in a fixed order."""
    _check_size(g)
    if g.n == 0:
        return []
    spec = spec or spectrum(g)
    omega = clique_number(g)
    out = [stanley(g, spec), wu_elphick(g, spec)]
    if g.is_connected():
        out.append(hong(g, spec))
    out.append(nikiforov_delta(g, spec))
    out.append(wilf(g, spec, omega))
    out.extend(spectral_turan(g, spec, omega, s) for s in range(2, 7))
    out.extend(chen_qian(g, length) for length in range(3, 9))
    og = odd_girth(g)
    if og > 3:
        out.append(nosal(g, spec))
    if og != math.inf:
        out.extend(cor001(g, spec, k) for k in range(2, (int(og) - 3) // 2 + 1))
    if g.is_connected():
        out.append(conj_elphick(g, spec))
    return out


# ---------------------------------------------------------------------------
# conjecture probes


def probe_bollobas_nikiforov(g: Graph, r: int, spec: Spectrum | None = None) -> Certificate:
    """lambda1^2 + lambda2^2 <= (r-1)/r * 2m for K_{r+1}-free graphs."""
    _check_size(g)
    formula = "lambda1^2 + lambda2^2 <= (r-1)/r * 2m"
    inputs = _inputs(g, r=r)
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if g.n < r + 1:
        return _not_applicable("conj_bollobas_nikiforov", inputs, f"n < r+1 = {r + 1}", formula, probe=True)
    omega = clique_number(g)
    if omega > r:
        return _not_applicable("conj_bollobas_nikiforov", inputs, f"contains K_{r + 1}", formula, probe=True)
    spec = spec or spectrum(g)
    lam1 = lambda1_of(g, spec)
    lhs = lam1 * lam1 + spec.lambda2**2
    rhs = Fraction(r - 1, r) * 2 * g.m
    cert = _cert("conj_bollobas_nikiforov", g, lhs, rhs, formula, r=r)
    cert.probe = True
    return cert


def split_exception(m: int, k: int) -> Graph | None:
    """S_{m/k+(k+1)/2, k} when its order is an integer, else ``None``."""
    twice = 2 * m + k * (k + 1)
    if twice % (2 * k):
        return None
    order = twice // (2 * k)
    if order < k:
        return None
    return split_graph(order, k)


def probe_zls(g: Graph, k: int, spec: Spectrum | None = None) -> Certificate:
    """Above the radius threshold, C_l should exist for every 3 <= l <= 2k+2."""
    _check_size(g)
    claim = "conj_zls"
    formula = "lambda1 >= (k-1+sqrt(4m-k^2+1))/2 => C_l subset G for l <= 2k+2, or G = S_{m/k+(k+1)/2,k}"
    inputs = _inputs(g, k=k)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if g.isolated_vertices():
        return _not_applicable(claim, inputs, "has isolated vertices", formula, probe=True)
    if g.n < 2 * k + 2:
        return _not_applicable(claim, inputs, f"n < 2k+2 = {2 * k + 2}; recorded as non-refuting", formula, probe=True)
    spec = spec or spectrum(g)
    lhs = lambda1_of(g, spec)
    disc = 4 * g.m - k * k + 1
    rhs = (k - 1 + math.sqrt(disc)) / 2 if disc >= 0 else float(k - 1) / 2
    margin = rhs - float(lhs)

    def make(verdict: str, note: str) -> Certificate:
        return Certificate(claim, True, lhs, rhs, margin, verdict, note, inputs, formula, probe=True)

    if float(lhs) < rhs and not is_tie(lhs, rhs):
        return make(HOLDS_STRICT, "below the radius threshold")
    missing = [c for c in range(3, 2 * k + 3) if not has_cycle_of_length(g, c)]
    if not missing:
        return make(HOLDS_STRICT, f"contains C_3..C_{2 * k + 2}")
    exc = split_exception(g.m, k)
    if exc is not None and exc.n == g.n and is_isomorphic(g, exc):
        return make(HOLDS_EQUALITY, f"exception graph S_{exc.n},{k}")
    return make(VIOLATED, f"missing cycle lengths {missing}; small m is non-refuting")
