"""Shared test helpers."""

from hypothesis import strategies as st

from signedconn import SignedGraph


def graphs(max_n=5, max_m=6):
    """Hypothesis strategy for arbitrary small signed graphs."""
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.tuples(
                st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from([1, -1])
            ),
            max_size=max_m,
        ).map(lambda triples: SignedGraph.from_triples(n, triples))
    )
