import pytest
from hypothesis import strategies as st

from pretzelbraid.pretzel import LinkType, MixedUnitStripsError, PretzelParams
from pretzelbraid.laurent import LaurentPoly


@st.composite
def laurent_polys(draw, max_terms=6, max_exp=4, max_coeff=9):
    items = draw(st.lists(
        st.tuples(st.integers(-max_exp, max_exp), st.integers(-max_exp, max_exp),
                  st.integers(-max_coeff, max_coeff)),
        max_size=max_terms))
    terms = {}
    for i, j, c in items:
        terms[(i, j)] = terms.get((i, j), 0) + c
    return LaurentPoly(terms)


@st.composite
def pretzel_params(draw, link_type=None, max_side=3, max_value=3):
    lt = draw(st.sampled_from([LinkType.TYPE1, LinkType.TYPE2])) if link_type is None else link_type
    lo = 0 if lt is LinkType.TYPE1 else 1
    alphas = draw(st.lists(st.integers(lo, max_value), max_size=max_side))
    betas = draw(st.lists(st.integers(lo, max_value), max_size=max_side))
    if not alphas and not betas:
        alphas = [lo + 1]
    try:
        return PretzelParams(lt, tuple(alphas), tuple(betas))
    except MixedUnitStripsError:
        return PretzelParams(lt, tuple(a + 1 for a in alphas), tuple(betas))


@pytest.fixture
def notation():
    from pretzelbraid.pretzel import parse_notation
    return parse_notation
