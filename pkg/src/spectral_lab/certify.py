"""Certificates for the spectral inequalities on graphs without short odd cycles.

Each certifier evaluates both sides of one inequality on a concrete graph and
returns a :class:`Certificate`.  Exact quantities (closed-walk counts, edge
counts) are kept as ``int``/``Fraction``; eigenvalues are floats.

Equality is decided in two phases: a numerical near-tie (relative ``EQ_RTOL``)
triggers a structural check, and ``holds_equality`` is issued only when that
check confirms the characterised extremal structure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from .canon import is_isomorphic
from .cycles import is_bipartite, is_forbidden_free, odd_girth
from .graph import BASE_LABELS, BASES, Graph, blow_up, cycle, rk_bipartite
from .graph6 import to_graph6
from .spectral import (
    Spectrum,
    closed_walks,
    rank_exact,
    rk_spectral_radius,
    spectrum,
)

EQ_RTOL = 1e-8
ROOT_ATOL = 1e-9
MAX_CERT_N = 64

HOLDS_STRICT = "holds_strict"
HOLDS_EQUALITY = "holds_equality"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"

Number = int | float | Fraction


@dataclass
class Certificate:
    claim_id: str
    applicable: bool
    lhs: Number | None
    rhs: Number | None
    margin: Number | None
    verdict: str
    structure_note: str | None = None
    inputs: dict[str, Any] = field(default_factory=dict)
    formula: str = ""
    probe: bool = False

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "applicable": self.applicable,
            "lhs": json_number(self.lhs),
            "rhs": json_number(self.rhs),
            "margin": json_number(self.margin),
            "verdict": self.verdict,
            "structure_note": self.structure_note,
            "inputs": {k: json_number(v) for k, v in self.inputs.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def json_number(x):
    """Round floats to 12 significant digits so output is byte-stable."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        x = float(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            return str(x)
        v = float(f"{x:.12g}")
        return 0.0 if v == 0 else v
    return x


def _not_applicable(claim: str, inputs: dict, why: str, formula: str = "", probe=False) -> Certificate:
    return Certificate(claim, False, None, None, None, NOT_APPLICABLE, why, inputs, formula, probe)


def _check_size(g: Graph) -> None:
    if g.n > MAX_CERT_N:
        raise ValueError(f"certificates are limited to n <= {MAX_CERT_N}, got n={g.n}")


def is_tie(lhs: Number, rhs: Number, rtol: float | None = None) -> bool:
    """Exact equality for exact operands, else agreement within ``rtol`` relative."""
    rtol = EQ_RTOL if rtol is None else rtol
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        return lhs == rhs
    return abs(float(rhs) - float(lhs)) <= rtol * max(1.0, abs(float(lhs)), abs(float(rhs)))


def compare(lhs: Number, rhs: Number, rtol: float | None = None) -> str:
    """Verdict for ``lhs <= rhs`` with a relative near-tie band."""
    if is_tie(lhs, rhs, rtol):
        return HOLDS_EQUALITY
    return HOLDS_STRICT if rhs > lhs else VIOLATED


def exact_lambda1(g: Graph) -> int | None:
    """lambda_1 as an exact integer when some component is regular of maximum degree."""
    if g.n == 0:
        return None
    delta = max(g.degrees())
    for comp in g.components():
        if all(g.degree(v) == delta for v in comp):
            return delta
    return None


def lambda1_of(g: Graph, spec: Spectrum) -> Number:
    exact = exact_lambda1(g)
    return exact if exact is not None else spec.lambda1


def cos_term(k: int) -> Number:
    """(2 cos(pi/(k+2)))^(2k), exact for the k where it is an integer."""
    exact = {1: 1, 2: 4, 4: 81}
    if k in exact:
        return exact[k]
    return (2.0 * math.cos(math.pi / (k + 2))) ** (2 * k)


def _sub(a: Number, b: Number) -> Number:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a - b
    return float(a) - float(b)


# ---------------------------------------------------------------------------
# blow-up recognition


@dataclass(frozen=True)
class BlowupBase:
    base: str
    class_sizes: tuple[int, ...]
    rank: int

    @property
    def in_family(self) -> bool:
        return self.base in BASE_LABELS.values()


def twin_classes(g: Graph) -> list[list[int]]:
    """Vertices grouped by identical open neighbourhood, in order of first vertex."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v], []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def _path_order(reduced: Graph, comp: list[int]) -> list[int] | None:
    if len(comp) == 1:
        return None
    ends = [v for v in comp if reduced.degree(v) == 1]
    if len(ends) != 2 or any(reduced.degree(v) > 2 for v in comp):
        return None
    seq = [min(ends)]
    prev = -1
    while len(seq) < len(comp):
        nxt = [u for u in reduced.neighbors(seq[-1]) if u != prev]
        prev = seq[-1]
        seq.append(nxt[0])
    return seq


def recognize_blowup_base(g: Graph) -> BlowupBase:
    """Identify ``g`` as a blow-up of P2+K1, 2P2+K1, P4+K1 or P5+K1 (classes may be empty).

    Twin classes are contracted, the isolated class is dropped, and the residue
    is matched against P2, 2P2, P4 and P5.  A positive answer is confirmed by
    rebuilding the blow-up and comparing adjacency under the induced labelling.
    The edgeless graph is the blow-up of P2+K1 with both path classes empty.
    """
    rank = rank_exact(g)
    classes = twin_classes(g)
    isolated = [c for c in classes if g.rows[c[0]] == 0]
    iso = isolated[0] if isolated else []
    live = [c for c in classes if g.rows[c[0]] != 0]
    if not live:
        return BlowupBase(BASE_LABELS["p2k1"], (0, 0, len(iso)), rank)
    rep = [c[0] for c in live]
    reduced = g.induced(rep)
    comps = reduced.components()
    paths = [_path_order(reduced, c) for c in comps]
    key = None
    if all(p is not None for p in paths):
        lengths = sorted(len(p) for p in paths)
        key = {(2,): "p2k1", (2, 2): "2p2k1", (4,): "p4k1", (5,): "p5k1"}.get(tuple(lengths))
    if key is None:
        nontrivial = any(len(c) > 1 for c in classes)
        return BlowupBase("other" if nontrivial else "none", tuple(len(c) for c in classes), rank)
    paths.sort(key=lambda p: min(v for i in p for v in live[i]))
    ordered = [live[i] for p in paths for i in p]
    sizes = tuple(len(c) for c in ordered) + (len(iso),)
    order = [v for c in ordered for v in c] + iso
    if g.relabel(order) != blow_up(BASES[key], sizes):
        raise AssertionError("blow-up reconstruction does not match the input graph")
    return BlowupBase(BASE_LABELS[key], sizes, rank)


# ---------------------------------------------------------------------------
# theorem certifiers


def certify_sum_of_powers(g: Graph, k: int, spec: Spectrum | None = None) -> Certificate:
    """lambda_1^(2k) + lambda_2^(2k) <= Tr(A^(2k))/2 on graphs with odd girth >= 2k+3."""
    _check_size(g)
    claim = "thm1.1"
    formula = "lambda1^(2k)+lambda2^(2k) <= Tr(A^(2k))/2"
    inputs = {"graph6": to_graph6(g), "k": k}
    if g.n < 2 * k + 1:
        return _not_applicable(claim, inputs, f"n < 2k+1 = {2 * k + 1}", formula)
    if not is_forbidden_free(g, k):
        return _not_applicable(claim, inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    spec = spec or spectrum(g)
    lhs = spec.lambda1 ** (2 * k) + spec.lambda2 ** (2 * k)
    rhs = Fraction(closed_walks(g, 2 * k), 2)
    margin = float(rhs) - lhs
    tie = is_tie(lhs, rhs)
    base = recognize_blowup_base(g)
    if tie and base.in_family:
        verdict = HOLDS_EQUALITY
        note = f"blow-up of {base.base}, class sizes {list(base.class_sizes)}"
    elif tie:
        verdict = HOLDS_STRICT
        note = f"numerical tie without structural confirmation (base {base.base})"
    elif margin < 0:
        verdict = VIOLATED
        note = f"margin {margin:.3e}"
    else:
        verdict = HOLDS_STRICT
        note = None
        if base.in_family:
            note = f"recognised as blow-up of {base.base} but margin {margin:.3e}"
    return Certificate(claim, True, lhs, rhs, margin, verdict, note, inputs, formula)


def _is_c5_plus_isolated(g: Graph) -> bool:
    comps = [c for c in g.components() if len(c) > 1]
    if len(comps) != 1 or len(comps[0]) != 5:
        return False
    c = comps[0]
    return all(g.degree(v) == 2 for v in c) and g.induced(c).m == 5


def certify_nonbipartite_power(g: Graph, k: int, spec: Spectrum | None = None) -> Certificate:
    """lambda_1^(2k) <= Tr(A^(2k))/2 - (2cos(pi/(k+2)))^(2k) on non-bipartite graphs of odd girth >= 2k+3."""
    _check_size(g)
    claim = "thm1.3"
    formula = "lambda1^(2k) <= Tr(A^(2k))/2 - (2cos(pi/(k+2)))^(2k)"
    inputs = {"graph6": to_graph6(g), "k": k}
    if is_bipartite(g):
        return _not_applicable(claim, inputs, "bipartite", formula)
    if not is_forbidden_free(g, k):
        return _not_applicable(claim, inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    spec = spec or spectrum(g)
    lam = lambda1_of(g, spec)
    lhs = lam ** (2 * k)
    rhs = _sub(Fraction(closed_walks(g, 2 * k), 2), cos_term(k))
    margin = _sub(rhs, lhs)
    if is_tie(lhs, rhs):
        if k == 1 and _is_c5_plus_isolated(g):
            return Certificate(claim, True, lhs, rhs, margin, HOLDS_EQUALITY,
                               "C5 plus isolated vertices", inputs, formula)
        return Certificate(claim, True, lhs, rhs, margin, HOLDS_STRICT,
                           "numerical tie without structural confirmation", inputs, formula)
    verdict = HOLDS_STRICT if margin > 0 else VIOLATED
    return Certificate(claim, True, lhs, rhs, margin, verdict, None, inputs, formula)


def certify_edge_bound(g: Graph, k: int) -> Certificate:
    """|E| <= ((n-2k+1)/2)^2 + 2k - 1 for non-bipartite graphs of odd girth >= 2k+3."""
    _check_size(g)
    claim = "thm1.04"
    formula = "m <= ((n-2k+1)/2)^2 + 2k - 1"
    inputs = {"graph6": to_graph6(g), "k": k}
    if is_bipartite(g):
        return _not_applicable(claim, inputs, "bipartite", formula)
    if not is_forbidden_free(g, k):
        return _not_applicable(claim, inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    lhs = g.m
    rhs = Fraction((g.n - 2 * k + 1) ** 2, 4) + 2 * k - 1
    margin = rhs - lhs
    verdict = HOLDS_EQUALITY if margin == 0 else HOLDS_STRICT if margin > 0 else VIOLATED
    return Certificate(claim, True, lhs, rhs, margin, verdict, None, inputs, formula)


def extremal_parts(n: int, k: int) -> tuple[int, int]:
    total = n - 2 * k + 1
    return total // 2, total - total // 2


def certify_extremal_radius(g: Graph, k: int, spec: Spectrum | None = None) -> Certificate:
    """lambda_1(G) <= lambda_1(R_k(K_{floor, ceil})) for non-bipartite graphs of odd girth >= 2k+3, n >= 2k+4."""
    _check_size(g)
    claim = "thm1.4"
    formula = "lambda1(G) <= lambda1(R_k(K_{floor((n-2k+1)/2), ceil((n-2k+1)/2)}))"
    inputs = {"graph6": to_graph6(g), "k": k}
    if is_bipartite(g):
        return _not_applicable(claim, inputs, "bipartite", formula)
    if not is_forbidden_free(g, k):
        return _not_applicable(claim, inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    if g.n < 2 * k + 4:
        return _not_applicable(claim, inputs, f"n < 2k+4 = {2 * k + 4}", formula)
    spec = spec or spectrum(g)
    s, t = extremal_parts(g.n, k)
    lhs = lambda1_of(g, spec)
    rhs = rk_spectral_radius(k, s, t)
    margin = rhs - float(lhs)
    if is_tie(lhs, rhs):
        if is_isomorphic(g, rk_bipartite(k, s, t)):
            return Certificate(claim, True, lhs, rhs, margin, HOLDS_EQUALITY,
                               f"isomorphic to R_{k}(K_{s},{t})", inputs, formula)
        return Certificate(claim, True, lhs, rhs, margin, HOLDS_STRICT,
                           f"numerical tie but not isomorphic to R_{k}(K_{s},{t})", inputs, formula)
    verdict = HOLDS_STRICT if margin > 0 else VIOLATED
    return Certificate(claim, True, lhs, rhs, margin, verdict, None, inputs, formula)


def certify_odd_cycle_criterion(g: Graph, k: int, spec: Spectrum | None = None) -> Certificate:
    """lambda_1^(2k) < Tr(A^(2k))/2 for graphs of odd girth >= 2k+3 that are not blow-ups of P2+K1."""
    _check_size(g)
    claim = "cor1.2"
    formula = "lambda1^(2k) < Tr(A^(2k))/2"
    inputs = {"graph6": to_graph6(g), "k": k}
    if not is_forbidden_free(g, k):
        return _not_applicable(claim, inputs, f"contains an odd cycle of length <= {2 * k + 1}", formula)
    base = recognize_blowup_base(g)
    if base.base == BASE_LABELS["p2k1"]:
        return _not_applicable(claim, inputs, "blow-up of P2∪K1", formula)
    spec = spec or spectrum(g)
    lhs = spec.lambda1 ** (2 * k)
    rhs = Fraction(closed_walks(g, 2 * k), 2)
    margin = float(rhs) - lhs
    if is_tie(lhs, rhs) or margin < 0:
        return Certificate(claim, True, lhs, rhs, margin, VIOLATED, "strict inequality fails", inputs, formula)
    return Certificate(claim, True, lhs, rhs, margin, HOLDS_STRICT, None, inputs, formula)


def has_short_odd_closed_walk(g: Graph, k: int) -> bool:
    """Whether Tr(A^(2k+1)) > 0, i.e. some odd cycle has length <= 2k+1."""
    return g.n > 0 and closed_walks(g, 2 * k + 1) > 0


# ---------------------------------------------------------------------------
# parameter-only checks


def verify_walk_identity(k: int) -> bool:
    """Tr(A^(2k)(C_{2k+3})) == (2k+3) * C(2k, k), exactly."""
    if not 1 <= k <= 10:
        raise ValueError(f"k must be in 1..10, got {k}")
    return closed_walks(cycle(2 * k + 3), 2 * k) == (2 * k + 3) * comb(2 * k, k)


GAP_GUARD = 1e-6


def verify_gap_inequality(k: int) -> bool:
    """4^k < (2k+3)C(2k,k)/2 - (2cos(pi/(k+2)))^(2k); for k >= 10 also 4 < (2k+3)C(2k,k)/4^k."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    lhs = 4**k
    rhs = _sub(Fraction((2 * k + 3) * comb(2 * k, k), 2), cos_term(k))
    if isinstance(rhs, Fraction):
        ok = lhs < rhs
    else:
        ok = rhs - lhs > GAP_GUARD * max(1.0, abs(rhs))
    if k >= 10:
        ok = ok and Fraction((2 * k + 3) * comb(2 * k, k), 4**k) > 4
    return ok


def verify_radius_monotonicity(k: int, s: int, t: int, dense_limit: int = 40) -> bool | None:
    """lambda_1(R_k(K_{s+1,t-1})) > lambda_1(R_k(K_{s,t})) when t - s >= 2.

    Uses the quotient-polynomial root and, for graphs with at most
    ``dense_limit`` vertices, the dense eigensolver as well; both routes must
    agree to ``ROOT_ATOL``.  Returns ``None`` outside the hypothesis t - s >= 2.
    """
    if s < 2 or t < s:
        raise ValueError(f"need t >= s >= 2, got s={s}, t={t}")
    if t - s < 2:
        return None
    lo = rk_spectral_radius(k, s, t)
    hi = rk_spectral_radius(k, s + 1, t - 1)
    ok = hi > lo
    if s + t + 2 * k - 1 <= dense_limit:
        d_lo = spectrum(rk_bipartite(k, s, t)).lambda1
        d_hi = spectrum(rk_bipartite(k, s + 1, t - 1)).lambda1
        ok = ok and d_hi > d_lo and abs(d_lo - lo) <= ROOT_ATOL and abs(d_hi - hi) <= ROOT_ATOL
    return ok


def odd_girth_value(g: Graph) -> int | None:
    og = odd_girth(g)
    return None if og == math.inf else int(og)
