"""Substitution homomorphisms x -> g, y -> h and the tree composite.

Every monomial T determines a multilinear operation: feed one series per
leaf, then graft bottom-up following the shape of T.  Substitution applies
that operation with ``g`` at x-leaves and ``h`` at y-leaves and extends
linearly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence

from .series import (
    Series,
    _convolve,
    order_lower_bound,
    ord_x,
)
from .trees import UNIT, X, Monomial, deg, deg_x, deg_y, encode, graft


class OrderError(ValueError):
    """Substituting a series without a certified positive x-order."""


def _graded(coeffs: Dict[Monomial, Fraction], cap: int) -> list:
    out = [(deg_x(s), s, c) for s, c in coeffs.items() if deg_x(s) <= cap]
    out.sort(key=lambda t: t[0])
    return out


def _expand(t: Monomial, leaf_value, lower, cap: int, memo: Optional[dict]):
    """Coefficients of the tree composite of ``t`` up to x-degree ``cap``.

    ``leaf_value(i, label)`` gives the coefficient dict fed to leaf i, and
    ``lower(i, label)`` a certified lower bound on its x-order.  Children are
    computed only as far as their siblings' orders leave room for.
    """

    def walk(t, offset, cap):
        key = (t, cap)
        if memo is not None and key in memo:
            return memo[key]
        if isinstance(t, str):
            res = {s: c for s, c in leaf_value(offset, t).items() if deg_x(s) <= cap}
        else:
            bounds = []
            off = offset
            for child in t:
                bounds.append(_lower(child, off))
                off += deg(child)
            total = sum(bounds)
            if total > cap:
                res = {}
            else:
                graded = []
                off = offset
                for child, b in zip(t, bounds):
                    sub = walk(child, off, cap - (total - b))
                    off += deg(child)
                    graded.append(_graded(sub, cap))
                res = _convolve(graded, cap)
        if memo is not None:
            memo[key] = res
        return res

    def _lower(t, offset):
        if isinstance(t, str):
            return lower(offset, t)
        total = 0
        for child in t:
            total += _lower(child, offset)
            offset += deg(child)
        return total

    return walk(t, 0, cap)


def composite(t: Monomial, args: Sequence[Series]) -> Series:
    """The multilinear operation of tree ``t`` applied to one series per leaf."""
    if t == UNIT:
        raise ValueError("the unit tree has no composite operation")
    args = list(args)
    if len(args) != deg(t):
        raise ValueError(f"tree {encode(t)} has {deg(t)} leaves, got {len(args)} arguments")
    p = min(a.precision for a in args)
    res = _expand(
        t,
        lambda i, _: args[i]._coeffs,
        lambda i, _: order_lower_bound(args[i]),
        p,
        None,
    )
    return Series._raw(res, p)


def _check_order(g: Series) -> None:
    o = ord_x(g)
    if isinstance(o, int) and o < 1:
        raise OrderError("substituted series for x must have x-order >= 1")


def substitute(f: Series, g: Series, h: Optional[Series] = None) -> Series:
    """f(g, h): replace every x-leaf by ``g`` and every y-leaf by ``h``.

    ``h`` may be omitted when ``f`` has no y-leaves.
    """
    _check_order(g)
    if h is None:
        if not f.is_y_free():
            raise ValueError("f has y-leaves; a value for y is required")
        p = min(f.precision, g.precision)
        values = {X: g._coeffs}
        bounds = {X: order_lower_bound(g)}
    else:
        p = min(f.precision, g.precision, h.precision)
        values = {X: g._coeffs, "y": h._coeffs}
        bounds = {X: order_lower_bound(g), "y": order_lower_bound(h)}

    memo: dict = {}
    acc: Dict[Monomial, Fraction] = {}
    for s, c in f.items():
        if deg_x(s) > p:
            continue
        if s == UNIT:
            part = {UNIT: Fraction(1)}
        else:
            part = _expand(s, lambda i, lab: values[lab], lambda i, lab: bounds[lab], p, memo)
        for t, v in part.items():
            acc[t] = acc.get(t, 0) + c * v
    return Series._raw({t: v for t, v in acc.items() if v}, p)


def _drop_y(s: Monomial) -> Monomial:
    if s == UNIT:
        return UNIT
    if isinstance(s, str):
        return UNIT if s == "y" else s
    return graft(*(_drop_y(c) for c in s))


def eval_y_one(f: Series) -> Series:
    """Send y to 1: delete every y-leaf and splice out unary vertices."""
    acc: Dict[Monomial, Fraction] = {}
    for s, c in f.items():
        t = _drop_y(s) if deg_y(s) else s
        acc[t] = acc.get(t, 0) + c
    return Series._raw({t: v for t, v in acc.items() if v}, f.precision)


def scaled_variable(k, precision: int) -> Series:
    """The series k*x."""
    return Series({X: k}, precision)


__all__ = ["OrderError", "composite", "substitute", "eval_y_one", "scaled_variable"]
