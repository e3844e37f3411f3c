"""The universal derivation d, the derivative d/dx and the chain rules.

``differential`` sends a y-free series to its universal differential, which
is linear in y (dx = y).  ``derivative`` is that followed by y -> 1, and
``derivation_apply(h, f)`` is that followed by y -> h.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .report import Report, compare
from .series import PrecisionError, Series, add, one, ord_x, x_series
from .substitution import OrderError, eval_y_one, substitute
from .trees import Y, Monomial, deg, relabel_leaf


class DomainError(ValueError):
    """The differential is only defined on series without y-leaves."""


def _require_y_free(f: Series) -> None:
    if not f.is_y_free():
        raise DomainError("differential is defined only for series in x alone")


def differential(f: Series) -> Series:
    """d f: every x-leaf in turn relabeled y, summed; d(1) = 0.

    A term of x-degree n in d f comes from x-degree n + 1 in f, so the result
    is exact only up to ``f.precision - 1``.
    """
    _require_y_free(f)
    if f.precision == 0:
        raise PrecisionError("differential needs precision >= 1")
    p = f.precision - 1
    acc: Dict[Monomial, Fraction] = {}
    for s, c in f.items():
        n = deg(s)
        if n == 0 or n - 1 > p:
            continue
        for i in range(1, n + 1):
            t = relabel_leaf(s, i, Y)
            acc[t] = acc.get(t, 0) + c
    return Series._raw({t: v for t, v in acc.items() if v}, p)


def derivative(f: Series) -> Series:
    """d/dx f, i.e. d followed by y -> 1."""
    return eval_y_one(differential(f))


def derivation_apply(h: Series, f: Series) -> Series:
    """Apply the derivation h d/dx to f: d f with y replaced by h.

    This is not h times f'; the two differ as soon as f has degree >= 2.
    """
    _require_y_free(h)
    df = differential(f)
    return substitute(df, x_series(df.precision), h)


def differential_substituted(f: Series, g: Series) -> Series:
    """(d phi_g)(d f): x -> g and y -> dg applied to d f."""
    _require_y_free(f)
    _require_y_free(g)
    o = ord_x(g)
    if isinstance(o, int) and o < 1:
        raise OrderError("g must have x-order >= 1")
    return substitute(differential(f), g, differential(g))


def verify_chain_rule(f: Series, g: Series) -> Report:
    """Check (d phi_g)(d f) = d(f(g)) coefficientwise."""
    lhs = differential_substituted(f, g)
    rhs = differential(substitute(f, g))
    return compare("chain-rule", lhs, rhs)


def verify_special_chain_rule(f: Series, g: Series) -> Report:
    """Check d/dx f(g) = ((1+x) d/dx f)(g), given g' = 1 + g."""
    _require_y_free(f)
    _require_y_free(g)
    o = ord_x(g)
    if isinstance(o, int) and o < 1:
        return Report("special-chain-rule", False, 0, precondition="g must have x-order >= 1")
    pre = compare("g' = 1 + g", derivative(g), add(one(g.precision), g))
    if not pre.passed:
        return Report(
            "special-chain-rule",
            False,
            pre.precision,
            mismatch=pre.mismatch,
            precondition="g' = 1 + g does not hold",
        )
    p = f.precision
    one_plus_x = add(one(p), x_series(p))
    lhs = derivative(substitute(f, g))
    rhs = substitute(derivation_apply(one_plus_x, f), g)
    return compare("special-chain-rule", lhs, rhs)
