import random
from fractions import Fraction

from hypothesis import strategies as st

from affhecke.poly import GradedPoly


def poly_strategy(r, max_terms=4, max_exp=3, max_abs=6):
    """Random sparse graded polynomials at rank r."""
    exps = st.tuples(*[st.integers(0, max_exp) for _ in range(r + 1)])
    coeffs = st.builds(
        Fraction,
        st.integers(-max_abs, max_abs),
        st.integers(1, max_abs))
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: GradedPoly(r, d))


def seeded_rng(name):
    return random.Random(hash(name) & 0xFFFFFFFF)
