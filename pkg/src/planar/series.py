"""Truncated planar power series with exact rational coefficients.

A :class:`Series` stores a finite map monomial -> Fraction together with a
precision ``P``: every coefficient at x-degree <= P is exact, everything above
is unknown.  Truncation is by x-degree only; the y-direction is never cut.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .trees import (
    UNIT,
    X,
    Y,
    ArityError,
    Monomial,
    canonical_sorted,
    decompositions,
    deg_x,
    deg_y,
    encode,
    graft,
)

Number = Union[int, Fraction]


class PrecisionError(ValueError):
    """A coefficient was requested beyond the exactness bound of a series."""


@dataclass(frozen=True)
class OrderBound:
    """ord_x is at least ``lower``; truncation hides anything further."""

    lower: int

    def __str__(self):
        return f">= {self.lower}"


@dataclass(frozen=True)
class DistanceBound:
    """The x-adic distance is strictly below ``upper``."""

    upper: Fraction

    def __str__(self):
        return f"< {self.upper}"


class Series:
    __slots__ = ("_coeffs", "_precision")

    def __init__(self, coeffs: Optional[Mapping[Monomial, Number]] = None, precision: int = 0):
        if precision < 0:
            raise ValueError("precision must be >= 0")
        clean = {}
        if coeffs:
            for s, c in coeffs.items():
                if c and deg_x(s) <= precision:
                    clean[s] = Fraction(c)
        self._coeffs: Dict[Monomial, Fraction] = clean
        self._precision = precision

    @classmethod
    def _raw(cls, coeffs: Dict[Monomial, Fraction], precision: int) -> "Series":
        # trusted constructor: coeffs already nonzero and within precision
        out = cls.__new__(cls)
        out._coeffs = coeffs
        out._precision = precision
        return out

    @property
    def precision(self) -> int:
        return self._precision

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(canonical_sorted(self._coeffs))

    def __contains__(self, s):
        return s in self._coeffs

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return self._coeffs.items()

    def terms(self) -> list:
        """(monomial, coefficient) pairs in canonical monomial order."""
        return [(s, self._coeffs[s]) for s in canonical_sorted(self._coeffs)]

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def coefficient(self, s: Monomial) -> Fraction:
        return coefficient(self, s)

    def is_y_free(self) -> bool:
        return all(deg_y(s) == 0 for s in self._coeffs)

    def with_precision(self, precision: int) -> "Series":
        """Truncate to a lower precision, or raise the bound.

        Raising the bound is a promise that no terms were dropped, i.e. the
        series is a polynomial whose whole support is already stored.
        """
        if precision >= self._precision:
            return Series._raw(dict(self._coeffs), precision)
        return Series(self._coeffs, precision)

    # vector-space structure
    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, a):
        if isinstance(a, (int, Fraction)):
            return scale(a, self)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._precision == other._precision and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{c}*{encode(s)}" for s, c in self.terms()) or "0"
        return f"Series({body}, precision={self._precision})"


# -- constructors ----------------------------------------------------------------

def zero(precision: int) -> Series:
    return Series._raw({}, precision)


def one(precision: int) -> Series:
    return Series._raw({UNIT: Fraction(1)}, precision)


def monomial(s: Monomial, precision: int, coeff: Number = 1) -> Series:
    return Series({s: coeff}, precision)


def x_series(precision: int) -> Series:
    return monomial(X, precision)


def y_series(precision: int) -> Series:
    return monomial(Y, precision)


def from_terms(terms: Iterable[Tuple[Monomial, Number]], precision: int) -> Series:
    """Sum of ``coeff * monomial`` pairs; repeated monomials accumulate."""
    acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
    for s, c in terms:
        acc[s] += Fraction(c)
    return Series(acc, precision)


# -- coefficient queries -----------------------------------------------------------

def coefficient(f: Series, s: Monomial) -> Fraction:
    if deg_x(s) > f.precision:
        raise PrecisionError(
            f"coefficient of {encode(s)} (x-degree {deg_x(s)}) is beyond precision {f.precision}"
        )
    return f._coeffs.get(s, Fraction(0))


def homogeneous_component(f: Series, n: int) -> Series:
    """The part of ``f`` of x-degree exactly ``n``; precision ``n``."""
    if n > f.precision:
        raise PrecisionError(f"x-degree {n} is beyond precision {f.precision}")
    if n < 0:
        raise ValueError("degree must be >= 0")
    return Series._raw({s: c for s, c in f._coeffs.items() if deg_x(s) == n}, n)


def components(f: Series) -> list:
    """[f_0, ..., f_P], each lifted to the precision of ``f``."""
    parts = [dict() for _ in range(f.precision + 1)]
    for s, c in f._coeffs.items():
        parts[deg_x(s)][s] = c
    return [Series._raw(p, f.precision) for p in parts]


# -- linear structure --------------------------------------------------------------

def add(f: Series, g: Series) -> Series:
    p = min(f.precision, g.precision)
    acc = {s: c for s, c in f._coeffs.items() if deg_x(s) <= p}
    for s, c in g._coeffs.items():
        if deg_x(s) > p:
            continue
        v = acc.get(s, 0) + c
        if v:
            acc[s] = v
        else:
            acc.pop(s, None)
    return Series._raw(acc, p)


def scale(a: Number, f: Series) -> Series:
    a = Fraction(a)
    if not a:
        return zero(f.precision)
    return Series._raw({s: a * c for s, c in f._coeffs.items()}, f.precision)


def linear_combination(pairs: Iterable[Tuple[Number, Series]], precision: Optional[int] = None) -> Series:
    """Σ a_i f_i with precision the min over the f_i (and ``precision``)."""
    acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
    p = precision
    for a, f in pairs:
        p = f.precision if p is None else min(p, f.precision)
        a = Fraction(a)
        if not a:
            continue
        for s, c in f._coeffs.items():
            acc[s] += a * c
    if p is None:
        raise ValueError("empty linear combination needs an explicit precision")
    return Series({s: c for s, c in acc.items() if deg_x(s) <= p}, p)


# -- the m-ary convolution product -------------------------------------------------

def _graded(f: Series, cap: int) -> list:
    """Terms of f with x-degree <= cap as (deg_x, monomial, coeff), by degree."""
    out = [(deg_x(s), s, c) for s, c in f._coeffs.items()]
    out = [t for t in out if t[0] <= cap]
    out.sort(key=lambda t: t[0])
    return out


def _convolve(graded: Sequence[list], cap: int) -> Dict[Monomial, Fraction]:
    """Expand the multilinear graft of graded term lists, keeping x-degree <= cap."""
    m = len(graded)
    if any(not g for g in graded):
        return {}
    # min x-degree still to come after position i
    tail = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        tail[i] = tail[i + 1] + graded[i][0][0]
    acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
    picked: list = [None] * m

    def rec(i, budget, coeff):
        if i == m:
            acc[graft(*picked)] += coeff
            return
        limit = budget - tail[i + 1]
        for d, s, c in graded[i]:
            if d > limit:
                break
            picked[i] = s
            rec(i + 1, budget - d, coeff * c)

    rec(0, cap, Fraction(1))
    return {s: c for s, c in acc.items() if c}


def product(*args: Series) -> Series:
    """m-ary product: c_S = Σ over graft decompositions of S of coefficient products."""
    if len(args) == 1 and not isinstance(args[0], Series):
        args = tuple(args[0])
    if len(args) < 2:
        raise ArityError(f"product needs at least 2 factors, got {len(args)}")
    p = min(f.precision for f in args)
    return Series._raw(_convolve([_graded(f, p) for f in args], p), p)


def product_by_decompositions(*args: Series) -> Series:
    """Reference product that sums over ``decompositions`` of each candidate monomial.

    Much slower than :func:`product`; kept as an independent check.
    """
    m = len(args)
    if m < 2:
        raise ArityError(f"product needs at least 2 factors, got {m}")
    p = min(f.precision for f in args)
    # candidates: every graft of support monomials, with no degree pruning
    candidates = {graft(*combo) for combo in cartesian(*(list(f._coeffs) for f in args))}
    candidates = {s for s in candidates if deg_x(s) <= p}
    acc = {}
    for s in candidates:
        total = Fraction(0)
        for parts in decompositions(s, m):
            c = Fraction(1)
            for f, t in zip(args, parts):
                c *= f._coeffs.get(t, 0)
                if not c:
                    break
            total += c
        if total:
            acc[s] = total
    return Series._raw(acc, p)


# -- order and distance ------------------------------------------------------------

def ord_x(f: Series) -> Union[int, OrderBound]:
    if not f._coeffs:
        return OrderBound(f.precision + 1)
    return min(deg_x(s) for s in f._coeffs)


def order_lower_bound(f: Series) -> int:
    """A certified lower bound on ord_x(f)."""
    o = ord_x(f)
    return o.lower if isinstance(o, OrderBound) else o


def norm(f: Series) -> Union[Fraction, DistanceBound]:
    o = ord_x(f)
    if isinstance(o, OrderBound):
        return DistanceBound(Fraction(1, 2) ** o.lower)
    return Fraction(1, 2) ** o


def distance(f: Series, g: Series) -> Union[Fraction, DistanceBound]:
    """x-adic distance |f - g|_x, or an upper bound when truncation hides it."""
    return norm(f - g)


def agree(f: Series, g: Series, precision: Optional[int] = None) -> bool:
    """Equality to the shared precision (or to ``precision`` if lower)."""
    p = min(f.precision, g.precision)
    if precision is not None:
        p = min(p, precision)
    a = {s: c for s, c in f._coeffs.items() if deg_x(s) <= p}
    b = {s: c for s, c in g._coeffs.items() if deg_x(s) <= p}
    return a == b


__all__ = [
    "Series", "PrecisionError", "OrderBound", "DistanceBound", "zero", "one",
    "monomial", "x_series", "y_series", "from_terms", "coefficient",
    "homogeneous_component", "components", "add", "scale", "linear_combination",
    "product", "product_by_decompositions", "ord_x", "order_lower_bound",
    "norm", "distance", "agree",
]
