"""Random inputs shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from planar.series import Series
from planar.trees import enumerate_monomials

# small pools keep hypothesis examples fast
X_POOL = [s for n in range(0, 5) for s in enumerate_monomials(n, "x")]
XY_POOL = [s for n in range(0, 4) for s in enumerate_monomials(n, "xy")]

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def polynomials(pool=X_POOL, max_terms=4, precision=6, min_terms=0):
    return st.dictionaries(
        st.sampled_from(pool), coefficients, min_size=min_terms, max_size=max_terms
    ).map(lambda d: Series(d, precision))


def random_polynomial(rng, max_degree, min_degree=0, terms=4, precision=6, normalized=False):
    """Random y-free polynomial with monomials of degree in [min_degree, max_degree]."""
    pool = [s for n in range(min_degree, max_degree + 1) for s in enumerate_monomials(n, "x")]
    coeffs = {}
    for _ in range(terms):
        s = rng.choice(pool)
        coeffs[s] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if normalized:
        coeffs["x"] = Fraction(1)
    return Series(coeffs, precision)
