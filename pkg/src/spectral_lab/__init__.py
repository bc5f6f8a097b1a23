"""Spectral bounds workbench for graphs without short odd cycles."""

from .canon import canonical_form, is_isomorphic
from .certify import (
    BlowupBase,
    Certificate,
    certify_edge_bound,
    certify_extremal_radius,
    certify_nonbipartite_power,
    certify_odd_cycle_criterion,
    certify_sum_of_powers,
    recognize_blowup_base,
    verify_gap_inequality,
    verify_radius_monotonicity,
    verify_walk_identity,
)
from .bounds import classical_bounds_report, clique_number, probe_bollobas_nikiforov, probe_zls
from .cycles import is_bipartite, is_forbidden_free, odd_girth, shortest_odd_cycle
from .enumeration import enumerate_graphs
from .graph import Graph, blow_up, rk_bipartite
from .graph6 import from_graph6, to_graph6
from .search import SearchReport, counterexample_scan, equality_census, extremal_radius_search
from .spectral import closed_walks, rank_exact, rk_spectral_radius, spectrum, walks

__version__ = "0.1.0"
