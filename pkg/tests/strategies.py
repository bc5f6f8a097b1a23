"""Hypothesis strategies for small random graphs."""

from hypothesis import strategies as st

from oracles import graph_from_code


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return graph_from_code(n, code)


@st.composite
def relabelled(draw, min_n=0, max_n=9):
    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(list(range(g.n))))
    return g, list(order)
