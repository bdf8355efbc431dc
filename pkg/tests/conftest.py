from hypothesis import strategies as st

from khp.algebra import compatible_weights
from khp.diagrams import CircleDiagram, cap_from_weight, cup_from_weight


@st.composite
def weights(draw, n_max=4, lo=-6, hi=6):
    n = draw(st.integers(min_value=0, max_value=n_max))
    entries = draw(
        st.lists(st.integers(min_value=lo, max_value=hi), min_size=n, max_size=n, unique=True)
    )
    return tuple(sorted(entries, reverse=True))


@st.composite
def kn_diagrams(draw, n_max=3, lo=-5, hi=5):
    lam = draw(weights(n_max=n_max, lo=lo, hi=hi))
    compat = compatible_weights(lam)
    mu = draw(st.sampled_from(compat))
    return CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
