"""k-ary planar exponential and logarithm series and the identities they satisfy.

``exp_k`` solves the functional equation f(kx) = f(x)^k (k-fold graft)
degree by degree with f = 1 + x + (higher).  ``log_k`` is obtained by
compositional reversion of ``exp_k - 1``; the printed closed forms for its
first four homogeneous components are kept only as cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List

from .calculus import derivation_apply, derivative, differential
from .report import Report, combine, compare
from .series import (
    PrecisionError,
    Series,
    add,
    coefficient,
    components,
    homogeneous_component,
    linear_combination,
    one,
    ord_x,
    product,
    scale,
    x_series,
    zero,
)
from .substitution import scaled_variable, substitute
from .trees import X, decode, deg_x, orbit_sum


class NotNormalizedError(ValueError):
    """Reversion needs g = x + (terms of x-degree >= 2)."""


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


def bracket(k: int, n: int) -> Fraction:
    """[n] = 1 + k + ... + k^(n-1) = (k^n - 1)/(k - 1)."""
    return Fraction(sum(k ** i for i in range(n)))


def bracket_factorial(k: int, n: int) -> Fraction:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= bracket(k, i)
    return out


def weak_compositions(n: int, parts: int):
    """Tuples of ``parts`` non-negative integers summing to n, lexicographic."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


# -- exponential ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _exp_components(k: int, precision: int) -> tuple:
    # f_0 .. f_P, each held as an exact polynomial at the working precision
    P = precision
    f: List[Series] = [one(P)]
    if P >= 1:
        f.append(x_series(P))
    for n in range(2, P + 1):
        denom = k ** n - k
        assert denom != 0
        terms = [product(*(f[i] for i in comp)) for comp in weak_compositions(n, k) if n not in comp]
        total = linear_combination(((1, t) for t in terms), precision=P)
        f.append(scale(Fraction(1, denom), total))
    return tuple(f)


def exp_components(k: int, precision: int) -> List[Series]:
    """The homogeneous parts f_0, ..., f_P of Exp_k, each at precision P."""
    _check_k(k)
    if precision < 0:
        raise ValueError("precision must be >= 0")
    return list(_exp_components(k, precision))


def exp_k(k: int, precision: int) -> Series:
    """Exp_k truncated at x-degree ``precision``."""
    parts = exp_components(k, precision)
    return linear_combination(((1, p) for p in parts), precision=precision)


def verify_exp_functional_equation(k: int, precision: int) -> Report:
    """Exp_k(kx) against the k-fold graft of Exp_k."""
    f = exp_k(k, precision)
    lhs = substitute(f, scaled_variable(k, precision))
    rhs = product(*([f] * k))
    return compare(f"exp-functional k={k}", lhs, rhs)


def verify_omega_equation(k: int, precision: int) -> Report:
    """k^n d f_n against Σ_j Σ_(i_1..i_k) f_{i_1} ... d f_{i_j} ... f_{i_k}, n < P."""
    _check_k(k)
    f = exp_components(k, precision)
    # differentials of homogeneous polynomials are exact at any precision
    P = precision
    df = [zero(P)] + [differential(f[i].with_precision(P + 1)) for i in range(1, P + 1)]
    reports = []
    for n in range(1, P):
        lhs = scale(k ** n, df[n])
        terms = []
        for comp in weak_compositions(n, k):
            for j in range(k):
                if comp[j] == 0:
                    continue
                factors = [f[i] for i in comp]
                factors[j] = df[comp[j]]
                terms.append((1, product(*factors)))
        rhs = linear_combination(terms, precision=P)
        r = compare(f"omega k={k} n={n}", homogeneous_component(lhs, n - 1), homogeneous_component(rhs, n - 1))
        reports.append(r)
    return combine(f"omega k={k}", reports, P)


def verify_exp_derivative(k: int, precision: int) -> Report:
    """d/dx Exp_k = Exp_k, i.e. f_n' = f_(n-1)."""
    lhs = derivative(exp_k(k, precision))
    rhs = exp_k(k, precision - 1)
    return compare(f"exp-derivative k={k}", lhs, rhs)


# -- reversion and logarithm -----------------------------------------------------

def reversion(g: Series, precision: int) -> Series:
    """The h with h(g) = x, solved one x-degree at a time.

    Requires g = x + (x-degree >= 2).  Since g starts with x, the degree-n
    part of h_n(g) is h_n itself, so h_n is minus the degree-n part of
    (h_1 + ... + h_{n-1})(g).
    """
    if g.precision < precision:
        raise PrecisionError(f"g is exact only to {g.precision}, need {precision}")
    if not g.is_y_free():
        raise ValueError("reversion is defined for series in x alone")
    o = ord_x(g)
    if o != 1 or coefficient(g, X) != 1 or any(deg_x(s) == 1 and s != X for s, _ in g.items()):
        raise NotNormalizedError("g must be x plus terms of x-degree >= 2")
    g = g.with_precision(precision)
    h: Dict = {X: Fraction(1)} if precision >= 1 else {}
    for n in range(2, precision + 1):
        partial = Series(h, n)
        comp = substitute(partial, g.with_precision(n))
        for s, c in comp.items():
            if deg_x(s) == n:
                h[s] = -c
    return Series(h, precision)


@lru_cache(maxsize=None)
def _log_k(k: int, precision: int) -> Series:
    g = add(exp_k(k, precision), scale(-1, one(precision)))
    return reversion(g, precision)


def log_k(k: int, precision: int) -> Series:
    """Log_k(1 + x): the compositional inverse of Exp_k - 1."""
    _check_k(k)
    return _log_k(k, precision)


def verify_log_ode(k: int, precision: int) -> Report:
    """((1 + x) d/dx) Log_k(1 + x) = 1."""
    h = log_k(k, precision)
    one_plus_x = add(one(precision), x_series(precision))
    lhs = derivation_apply(one_plus_x, h)
    return compare(f"log-ode k={k}", lhs, one(precision - 1))


def verify_h_recurrence(k: int, precision: int) -> Report:
    """h_0 = 0 and h'_(n+1) = -n h_n for 1 <= n <= P - 1."""
    h = log_k(k, precision)
    parts = components(h)
    reports = [compare(f"h_0 = 0 k={k}", parts[0], zero(precision), precision=0)]
    for n in range(1, precision):
        lhs = derivative(parts[n + 1])
        rhs = scale(-n, parts[n])
        reports.append(compare(f"h'_{n + 1} = -{n} h_{n} k={k}", lhs, rhs))
    return combine(f"h-recurrence k={k}", reports, precision)


# -- printed closed forms for h_1 .. h_4 ------------------------------------------

def _orbit_coefficients(k: int, n: int) -> List[tuple]:
    """(representative encoding, coefficient) for each orbit in the closed form of h_n."""
    if n == 1:
        return [("x", Fraction(1))]
    if n == 2:
        return [("(x,x)", Fraction(-1, 2))]
    b2 = bracket_factorial(k, 2)
    b3 = bracket_factorial(k, 3)
    f3, f4 = factorial(3), factorial(4)
    if n == 3:
        return [
            ("(x,(x,x))", Fraction(1, 4) * k / b2),
            ("(x,x,x)", -Fraction(1, f3) * (k - 2) / b2),
        ]
    if n == 4:
        return [
            ("(x,x,x,x)", Fraction(k - 3) / (f3 * b2) - Fraction(1) / (f4 * b3) * (k + 1) * (k - 2) * (k - 3)),
            ("(x,(x,x,x))", Fraction(1, 2) / (f3 * b2) - Fraction(2) / (f4 * b3) * (k - 2)),
            ("(x,(x,(x,x)))", Fraction(1) / (f3 * b2) * Fraction(3, 2) - Fraction(1, 8) - Fraction(3) / (f4 * b3)),
            ("((x,x),(x,x))", Fraction(1) / (f3 * b2) * Fraction(3, 2) - Fraction(1, 8) - Fraction(3 * (k + 1)) / (f4 * b3)),
            ("(x,x,(x,x))", Fraction(1, 2) * (k - 2) / (f3 * b2) - Fraction(2 * (k + 1) * (k - 2)) / (f4 * b3)),
        ]
    raise ValueError(f"closed forms are known only for n <= 4, got {n}")


def h_closed_form(k: int, n: int, precision: int | None = None) -> Series:
    """The printed closed form of h_n (n <= 4), orbits expanded to planar trees."""
    _check_k(k)
    terms = {}
    for rep, c in _orbit_coefficients(k, n):
        for s in orbit_sum(decode(rep)):
            terms[s] = c
    return Series(terms, n if precision is None else precision)


def h4_discrepancy_report(k: int) -> Report:
    """Orbit-by-orbit comparison of the printed h_4 with the reversion result."""
    _check_k(k)
    truth = homogeneous_component(log_k(k, 5), 4)
    rows = []
    for rep, formula in _orbit_coefficients(k, 4):
        members = orbit_sum(decode(rep))
        values = {truth.coefficient(s) for s in members}
        uniform = len(values) == 1
        reversion_value = next(iter(values)) if uniform else None
        rows.append(
            {
                "orbit": rep,
                "members": len(members),
                "formula": formula,
                "reversion": reversion_value,
                "status": "MATCH" if uniform and reversion_value == formula else "MISMATCH",
            }
        )
    passed = all(r["status"] == "MATCH" for r in rows)
    bad = [r["orbit"] for r in rows if r["status"] != "MATCH"]
    note = "all orbits agree" if passed else "formula disagrees with reversion on " + ", ".join(bad)
    return Report(f"h4-report k={k}", passed, 4, rows=rows, note=note)


__all__ = [
    "NotNormalizedError", "bracket", "bracket_factorial", "weak_compositions",
    "exp_components", "exp_k", "verify_exp_functional_equation",
    "verify_omega_equation", "verify_exp_derivative", "reversion", "log_k",
    "verify_log_ode", "verify_h_recurrence", "h_closed_form",
    "h4_discrepancy_report",
]
