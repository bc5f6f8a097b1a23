"""Registry mapping claim identifiers to certifiers.

A claim runner takes a graph and :class:`ClaimParams` and returns a list of
certificates (several for parametrised families such as Chen–Qian).  Each
claim also names the hereditary family outside of which it is never
applicable, so exhaustive scans can prune the generation tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import bounds
from .certify import (
    Certificate,
    certify_edge_bound,
    certify_extremal_radius,
    certify_nonbipartite_power,
    certify_odd_cycle_criterion,
    certify_sum_of_powers,
)
from .enumeration import ALL, CliqueFree, Family, ForbiddenFree
from .graph import Graph
from .spectral import spectrum


@dataclass(frozen=True)
class ClaimParams:
    k: int = 1
    r: int = 2


@dataclass(frozen=True)
class Claim:
    claim_id: str
    run: Callable[[Graph, ClaimParams], list[Certificate]]
    family: Callable[[ClaimParams], Family]
    probe: bool = False
    description: str = ""


def _one(fn):
    return lambda g, p: [fn(g, p.k)]


def _forbidden(p: ClaimParams) -> Family:
    return ForbiddenFree(p.k)


def _all(p: ClaimParams) -> Family:
    return ALL


def _spec_bound(fn):
    def run(g: Graph, p: ClaimParams) -> list[Certificate]:
        return [fn(g, spectrum(g))] if g.n else []

    return run


def _hong(g: Graph, p: ClaimParams) -> list[Certificate]:
    return [bounds.hong(g, spectrum(g))] if g.n else []


def _wilf(g: Graph, p: ClaimParams) -> list[Certificate]:
    return [bounds.wilf(g, spectrum(g), bounds.clique_number(g))] if g.n else []


def _turan(g: Graph, p: ClaimParams) -> list[Certificate]:
    if not g.n:
        return []
    spec = spectrum(g)
    omega = bounds.clique_number(g)
    return [bounds.spectral_turan(g, spec, omega, s) for s in range(2, 7)]


def _chen_qian(g: Graph, p: ClaimParams) -> list[Certificate]:
    return [bounds.chen_qian(g, length) for length in range(3, 9)] if g.n else []


def _cor001(g: Graph, p: ClaimParams) -> list[Certificate]:
    if p.k < 2:
        raise ValueError(f"cor001 needs k >= 2, got {p.k}")
    return [bounds.cor001(g, spectrum(g), p.k)] if g.n else []


def _all_classical(g: Graph, p: ClaimParams) -> list[Certificate]:
    return bounds.classical_bounds_report(g)


def _bn(g: Graph, p: ClaimParams) -> list[Certificate]:
    cert = bounds.probe_bollobas_nikiforov(g, p.r)
    # the r = 2 case is a theorem, so only r >= 3 is a probe
    cert.probe = p.r >= 3
    return [cert]


def _zls(g: Graph, p: ClaimParams) -> list[Certificate]:
    return [bounds.probe_zls(g, p.k)]


def _triangle_free(p: ClaimParams) -> Family:
    return ForbiddenFree(1)


def _k_free(p: ClaimParams) -> Family:
    return CliqueFree(p.r)


REGISTRY: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("thm1.1", _one(certify_sum_of_powers), _forbidden,
              description="lambda1^(2k)+lambda2^(2k) <= Tr(A^(2k))/2"),
        Claim("thm1.3", _one(certify_nonbipartite_power), _forbidden,
              description="lambda1^(2k) <= Tr(A^(2k))/2 - (2cos(pi/(k+2)))^(2k)"),
        Claim("thm1.04", _one(certify_edge_bound), _forbidden,
              description="m <= ((n-2k+1)/2)^2 + 2k - 1"),
        Claim("thm1.4", _one(certify_extremal_radius), _forbidden,
              description="lambda1 <= lambda1(R_k(K_{floor,ceil}))"),
        Claim("cor1.2", _one(certify_odd_cycle_criterion), _forbidden,
              description="lambda1^(2k) < Tr(A^(2k))/2 unless a blow-up of P2+K1"),
        Claim("cor001", _cor001, _forbidden, description="lambda1 < (m Delta^(2k-2) - c_k)^(1/(2k))"),
        Claim("stanley", _spec_bound(bounds.stanley), _all),
        Claim("wu_elphick", _spec_bound(bounds.wu_elphick), _all),
        Claim("hong", _hong, _all),
        Claim("nikiforov_delta", _spec_bound(bounds.nikiforov_delta), _all),
        Claim("wilf", _wilf, _all),
        Claim("spectral_turan", _turan, _all),
        Claim("chen_qian", _chen_qian, _all),
        Claim("nosal", _spec_bound(bounds.nosal), _triangle_free),
        Claim("all-classical", _all_classical, _all),
        Claim("conj_elphick", _spec_bound(bounds.conj_elphick), _all, probe=True),
        Claim("conj_bollobas_nikiforov", _bn, _k_free, probe=True),
        Claim("conj_zls", _zls, _all, probe=True),
    ]
}
ALIASES = {"eq10": "thm1.04"}


def get_claim(claim_id: str) -> Claim:
    key = ALIASES.get(claim_id, claim_id)
    if key not in REGISTRY:
        known = ", ".join(sorted(REGISTRY) + sorted(ALIASES))
        raise KeyError(f"unknown claim {claim_id!r}; known claims: {known}")
    return REGISTRY[key]


def run_claim(claim_id: str, g: Graph, params: ClaimParams | None = None) -> list[Certificate]:
    claim = get_claim(claim_id)
    return claim.run(g, params or ClaimParams())

