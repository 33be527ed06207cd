"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from hue.hypergraph import Hypergraph


@st.composite
def hypergraphs(draw, min_n=3, max_n=6, max_edges=4):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(
        st.frozensets(st.integers(1, n), min_size=2, max_size=n - 1),
        min_size=1, max_size=max_edges, unique=True,
    ))
    edges = []
    for e in raw:
        if not any(e <= f or f <= e for f in edges):
            edges.append(e)
    return Hypergraph.build(n, [sorted(e) for e in edges], warn=False)
