from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_product, naive_substitute
from planar.calculus import derivative
from planar.expr import parse
from planar.series import (
    Series,
    add,
    homogeneous_component,
    one,
    scale,
    x_series,
)
from planar.special_series import (
    NotNormalizedError,
    bracket,
    bracket_factorial,
    exp_components,
    exp_k,
    h4_discrepancy_report,
    h_closed_form,
    log_k,
    reversion,
    verify_exp_derivative,
    verify_exp_functional_equation,
    verify_h_recurrence,
    verify_log_ode,
    verify_omega_equation,
    weak_compositions,
)
from planar.substitution import scaled_variable, substitute
from planar.trees import enumerate_monomials
from strategies import random_polynomial

x = "x"
X2 = (x, x)


def orbit(text, precision):
    return parse("{" + text + "}").with_precision(precision)


# -- brackets ---------------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3, 5, 7])
def test_brackets(k):
    assert bracket(k, 1) == 1
    assert bracket(k, 2) == k + 1
    assert bracket(k, 3) == k * k + k + 1
    assert bracket_factorial(k, 3) == k**3 + 2 * k**2 + 2 * k + 1


def test_bad_arity_rejected():
    with pytest.raises(ValueError):
        exp_k(1, 3)
    with pytest.raises(ValueError):
        log_k(0, 3)


def test_weak_compositions():
    got = list(weak_compositions(2, 2))
    assert sorted(got) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(weak_compositions(4, 3))) == 15


# -- exponential ---------------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3, 4])
def test_exp_low_components(k):
    f = exp_components(k, 4)
    assert f[0] == one(0).with_precision(f[0].precision)
    assert homogeneous_component(exp_k(k, 4), 1) == x_series(1)
    assert homogeneous_component(exp_k(k, 4), 2) == Series({X2: Fraction(1, 2)}, 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_exp_third_component(k):
    # solved by hand from f(kx) = f^k at x-degree 3
    expected = add(
        scale(Fraction(1, 4 * (k + 1)), orbit("x*x^2", 3)),
        scale(Fraction(k - 2, 6 * (k + 1)), Series({(x, x, x): 1}, 3)),
    )
    assert homogeneous_component(exp_k(k, 3), 3) == expected


def test_exp2_lives_on_binary_trees():
    f = exp_k(2, 6)
    assert all(all(len(node) == 2 for node in _nodes(s)) for s, _ in f.items())


def _nodes(s):
    if isinstance(s, tuple) and s:
        yield s
        for c in s:
            yield from _nodes(c)


@pytest.mark.parametrize("k", [2, 3])
def test_exp_functional_equation_by_naive_oracles(k):
    p = 5
    f = exp_k(k, p)
    lhs = naive_substitute(f, scaled_variable(k, p), None)
    assert lhs == naive_product(*([f] * k))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_exp_verifiers(k):
    assert verify_exp_functional_equation(k, 6).passed
    assert verify_exp_derivative(k, 6).passed


@pytest.mark.parametrize("k", [2, 3])
def test_omega_verifier(k):
    r = verify_omega_equation(k, 6)
    assert r.passed, r.summary()


def test_exp_precision():
    assert exp_k(3, 5).precision == 5


# -- reversion -----------------------------------------------------------------------

def test_reversion_of_x_plus_x2():
    g = Series({x: 1, X2: 1}, 3)
    expected = Series({x: 1, X2: -1, (x, X2): 1, (X2, x): 1}, 3)
    assert reversion(g, 3) == expected


def test_reversion_of_x():
    assert reversion(x_series(5), 5) == x_series(5)


@pytest.mark.parametrize(
    "g",
    [Series({x: 2}, 3), Series({X2: 1}, 3), Series({x: 1, "y": 1}, 3), add(one(3), x_series(3))],
)
def test_reversion_rejects(g):
    with pytest.raises(ValueError):
        reversion(g, 3)


def test_reversion_not_normalized_type():
    with pytest.raises(NotNormalizedError):
        reversion(Series({x: 3, X2: 1}, 3), 3)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_reversion_is_two_sided_inverse(seed):
    import random

    g = random_polynomial(random.Random(seed), max_degree=4, min_degree=1, terms=4, precision=5, normalized=True)
    h = reversion(g, 5)
    assert substitute(h, g) == x_series(5)
    assert substitute(g, h) == x_series(5)


# -- logarithm -------------------------------------------------------------------------

def test_log2_golden():
    h = log_k(2, 4)
    expected = parse("x - 1/2*x^2 + 1/6*{x*x^2} - 1/21*{x*(x*x^2)} - 5/84*x^2*x^2", 4)
    assert h == expected


def test_log2_other_degree_four_coefficients_vanish():
    h4 = homogeneous_component(log_k(2, 4), 4)
    nonzero = {s for s, _ in h4.items()}
    assert nonzero == set(orbit("x*(x*x^2)", 4).support()) | {(X2, X2)}


def test_log3_third_component():
    expected = add(
        scale(Fraction(3, 16), orbit("x*x^2", 3)),
        scale(Fraction(-1, 24), Series({(x, x, x): 1}, 3)),
    )
    assert homogeneous_component(log_k(3, 3), 3) == expected


@pytest.mark.parametrize("k", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_closed_forms_match_reversion(k, n):
    assert homogeneous_component(log_k(k, n), n) == h_closed_form(k, n)


@pytest.mark.parametrize("k", [2, 3])
def test_log_exp_round_trip(k):
    p = 5
    g = add(exp_k(k, p), scale(-1, one(p)))
    h = log_k(k, p)
    assert substitute(h, g) == x_series(p)
    assert substitute(g, h) == x_series(p)


@pytest.mark.parametrize("k", [2, 3])
def test_log_verifiers(k):
    assert verify_log_ode(k, 6).passed
    assert verify_h_recurrence(k, 6).passed


def test_h4_recurrence_against_h3():
    h = log_k(2, 4)
    assert derivative(homogeneous_component(h, 4)) == scale(-3, homogeneous_component(h, 3))


def test_h4_report_rows_k2():
    r = h4_discrepancy_report(2)
    rows = {row["orbit"]: row for row in r.rows}
    assert not r.passed
    assert rows["(x,x,x,x)"]["formula"] == Fraction(-1, 18)
    assert rows["(x,x,x,x)"]["reversion"] == 0
    assert rows["(x,(x,x,x))"]["formula"] == Fraction(1, 36)
    assert rows["(x,(x,x,x))"]["reversion"] == 0
    assert rows["(x,(x,(x,x)))"]["reversion"] == Fraction(-1, 21)
    assert rows["((x,x),(x,x))"]["reversion"] == Fraction(-5, 84)
    assert rows["(x,x,(x,x))"]["reversion"] == 0
    status = {k: v["status"] for k, v in rows.items()}
    assert status == {
        "(x,x,x,x)": "MISMATCH",
        "(x,(x,x,x))": "MISMATCH",
        "(x,(x,(x,x)))": "MATCH",
        "((x,x),(x,x))": "MATCH",
        "(x,x,(x,x))": "MATCH",
    }


def test_h4_report_members():
    rows = h4_discrepancy_report(3).rows
    assert sum(r["members"] for r in rows) == len(enumerate_monomials(4, "x"))
