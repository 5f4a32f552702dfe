"""Hypothesis strategies for small complex matrices."""
import numpy as np
from hypothesis import strategies as st

from tepkit.generators import complex_gaussian

dims = st.integers(1, 6)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def low_rank_matrices(draw, square=False):
    m = draw(dims)
    n = m if square else draw(dims)
    r = draw(st.integers(0, min(m, n)))
    rng = np.random.default_rng(draw(seeds))
    if r == 0:
        return np.zeros((m, n), dtype=np.complex128)
    return complex_gaussian(rng, m, r) @ complex_gaussian(rng, r, n)
