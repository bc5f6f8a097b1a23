import math

import pytest

from oracles import (
    automorphism_count,
    brute_odd_girth,
    burnside_class_count,
    graph_from_code,
    iso_classes_networkx,
    labelled_codes_without_triangles_n7,
)
from spectral_lab.bounds import clique_number
from spectral_lab.canon import canonical_form, canonical_graph
from spectral_lab.cycles import is_bipartite, is_forbidden_free
from spectral_lab.graph import cycle
from spectral_lab.enumeration import ENV_MAX_N, CliqueFree, ForbiddenFree, enumerate_graphs, enumerate_levels


@pytest.fixture(scope="module")
def levels7():
    return enumerate_levels(7)


def test_four_vertices_gives_eleven(levels7):
    assert len(levels7[4]) == 11


def test_counts_match_burnside(levels7):
    assert [len(level) for level in levels7] == [1, 1] + [burnside_class_count(n) for n in range(2, 8)]


def test_orbit_counting_identity(levels7):
    # sum over classes of n!/|Aut| counts every labelled graph exactly once
    for n in range(1, 8):
        total = sum(math.factorial(n) // automorphism_count(g) for g in levels7[n])
        assert total == 2 ** (n * (n - 1) // 2)


def test_every_yield_is_canonical(levels7):
    for level in levels7:
        forms = [canonical_form(g) for g in level]
        assert len(set(forms)) == len(forms)
        assert all(canonical_graph(g) == g for g in level)


def test_triangle_free_filter_contract():
    got = list(enumerate_graphs(5, family=ForbiddenFree(1)))
    assert len(got) == 14
    assert all(is_forbidden_free(g, 1) for g in got)
    via_accept = [g for g in enumerate_graphs(5) if is_forbidden_free(g, 1)]
    assert sorted(canonical_form(g) for g in got) == sorted(canonical_form(g) for g in via_accept)


def test_clique_free_family_prunes_consistently():
    pruned = {canonical_form(g) for g in enumerate_graphs(6, family=CliqueFree(3))}
    filtered = {canonical_form(g) for g in enumerate_graphs(6) if clique_number(g) <= 3}
    assert pruned == filtered


@pytest.mark.slow
def test_seven_vertex_filtered_classes_agree_with_labelled_brute_force():
    def wanted(g):
        return g.is_connected() and not is_bipartite(g) and is_forbidden_free(g, 1)

    ours = {canonical_form(g) for g in enumerate_graphs(7, accept=wanted, family=ForbiddenFree(1))}
    labelled = []
    for code in labelled_codes_without_triangles_n7().tolist():
        g = graph_from_code(7, code)
        if g.is_connected() and brute_odd_girth(g) != math.inf:
            labelled.append(g)
    reps = iso_classes_networkx(labelled)
    assert len(reps) == len(ours)
    assert {canonical_form(g) for g in reps} == ours
    assert canonical_form(cycle(7)) in ours


def test_cap_and_env_override(monkeypatch):
    with pytest.raises(ValueError, match="capped"):
        list(enumerate_graphs(11))
    monkeypatch.setenv(ENV_MAX_N, "3")
    with pytest.raises(ValueError, match="capped at n <= 3"):
        list(enumerate_graphs(4))
    monkeypatch.setenv(ENV_MAX_N, "many")
    with pytest.raises(ValueError, match="integer"):
        list(enumerate_graphs(2))
    with pytest.raises(ValueError):
        enumerate_levels(-1, max_n=5)


def test_parallel_workers_give_same_level():
    serial = enumerate_levels(6)[6]
    parallel = enumerate_levels(6, workers=2)[6]
    assert serial == parallel
