import hypothesis.strategies as st
from hypothesis import settings

from oddcolor.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9, p=None):
    """Simple graphs on ``0..n-1``; each pair is an edge independently."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < p for _ in pairs]
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])
