from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st


@st.composite
def edge_sets(draw, max_n: int = 8, min_n: int = 0):
    """A random (n, edge list) pair; edges chosen by a subset bitmask."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
