"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from moduli_atlas.lattice import MukaiVector, Surface

surfaces = st.integers(min_value=1, max_value=6).map(lambda k: Surface(2 * k))

small_ints = st.integers(min_value=-9, max_value=9)

vectors = st.builds(MukaiVector, small_ints, small_ints, small_ints)

nonzero_vectors = vectors.filter(lambda v: not v.is_zero())


@st.composite
def rank2_contexts(draw, max_n=8, max_c2=40):
    """A surface with a rank-2 vector of bounded degree and bounded c2 >= 0."""
    s = draw(surfaces)
    n = draw(st.integers(min_value=0, max_value=max_n))
    c2 = draw(st.integers(min_value=0, max_value=max_c2))
    v = MukaiVector(2, n, (n * n * s.h_squared) // 2 + 2 - c2)
    return s, v


@st.composite
def windowed_contexts(draw, max_n=8, max_c2=40, max_margin=4):
    s, v = draw(rank2_contexts(max_n=max_n, max_c2=max_c2))
    m_max = v.deg + draw(st.integers(min_value=0, max_value=max_margin))
    return s, v, m_max
