import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_canonical_bits, graph_from_code, labelled_class_count
from spectral_lab.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from spectral_lab.graph import complete_bipartite, cycle, path, rk_bipartite, star
from strategies import graphs, relabelled


def test_cycle_relabelled_two_ways():
    g = cycle(5)
    assert canonical_form(g) == canonical_form(g.relabel([2, 4, 1, 3, 0]))


def test_non_isomorphic_trees_differ():
    assert canonical_form(path(4)) != canonical_form(star(4))


def test_distinct_forms_over_all_labelled_graphs_n5():
    forms = {canonical_form(graph_from_code(5, c)) for c in range(1 << 10)}
    assert len(forms) == labelled_class_count(5)
    assert len(forms) == 34


@settings(max_examples=150)
@given(relabelled(max_n=9))
def test_canonical_form_is_relabelling_invariant(case):
    g, order = case
    assert canonical_form(g) == canonical_form(g.relabel(order))


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=6), st.data())
def test_canonical_form_separates_like_brute_force(g, data):
    code = data.draw(st.integers(0, (1 << (g.n * (g.n - 1) // 2)) - 1))
    h = graph_from_code(g.n, code)
    same = brute_canonical_bits(g) == brute_canonical_bits(h)
    assert (canonical_form(g) == canonical_form(h)) == same


@given(relabelled(max_n=9))
def test_canonical_graph_is_fixed_point(case):
    g, _ = case
    c = canonical_graph(g)
    assert canonical_graph(c) == c


def test_last_canonical_vertex_has_minimum_degree():
    g = rk_bipartite(1, 3, 4)
    order, _ = canonical_labeling(g)
    assert g.degree(order[-1]) == min(g.degrees())


def test_size_limits():
    with pytest.raises(ValueError, match="n <= 12"):
        canonical_form(cycle(13))
    assert canonical_form(cycle(13), max_n=13)
    assert is_isomorphic(complete_bipartite(2, 3), complete_bipartite(3, 2))
    assert not is_isomorphic(cycle(6), complete_bipartite(3, 3))
    with pytest.raises(ValueError):
        is_isomorphic(cycle(65), cycle(65))
