"""Planar reduced rooted trees with leaves labeled ``x`` or ``y``.

A monomial is one of

* ``UNIT`` -- the empty tree, represented by ``()``;
* a leaf -- the string ``"x"`` or ``"y"``;
* a node -- a tuple of at least two non-unit monomials (its ordered children).

Monomials are plain tuples and strings, so they are immutable, hashable and
compare structurally.  Build nodes through :func:`graft`, which absorbs units
and never produces a unary vertex.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Tuple, Union

Monomial = Union[str, Tuple["Monomial", ...]]

UNIT: Monomial = ()
X: Monomial = "x"
Y: Monomial = "y"
LABELS = (X, Y)


class ArityError(ValueError):
    pass


def is_unit(s: Monomial) -> bool:
    return s == ()


def is_leaf(s: Monomial) -> bool:
    return isinstance(s, str)


def is_node(s: Monomial) -> bool:
    return isinstance(s, tuple) and len(s) >= 2


def graft(*args: Monomial) -> Monomial:
    """m-ary grafting with unit absorption.

    >>> graft("x", (), "x")
    ('x', 'x')
    >>> graft((), ())
    ()
    """
    if len(args) < 2:
        raise ArityError(f"grafting needs at least 2 arguments, got {len(args)}")
    kids = tuple(a for a in args if a != ())
    if not kids:
        return UNIT
    if len(kids) == 1:
        return kids[0]
    return kids


# -- degrees and encodings ---------------------------------------------------

@lru_cache(maxsize=None)
def degrees(s: Monomial) -> Tuple[int, int]:
    """(deg_x, deg_y) of a monomial."""
    if s == ():
        return (0, 0)
    if isinstance(s, str):
        return (1, 0) if s == X else (0, 1)
    dx = dy = 0
    for c in s:
        a, b = degrees(c)
        dx += a
        dy += b
    return (dx, dy)


def deg_x(s: Monomial) -> int:
    return degrees(s)[0]


def deg_y(s: Monomial) -> int:
    return degrees(s)[1]


def deg(s: Monomial) -> int:
    a, b = degrees(s)
    return a + b


@lru_cache(maxsize=None)
def encode(s: Monomial) -> str:
    """Canonical text: ``1``, ``x``, ``y`` or ``(c1,c2,...)``."""
    if s == ():
        return "1"
    if isinstance(s, str):
        return s
    return "(" + ",".join(encode(c) for c in s) + ")"


def decode(text: str) -> Monomial:
    """Inverse of :func:`encode`."""
    text = text.strip()
    if text == "1":
        return UNIT
    pos = 0

    def walk() -> Monomial:
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"unexpected end of encoding {text!r}")
        ch = text[pos]
        if ch in "xy":
            pos += 1
            return ch
        if ch != "(":
            raise ValueError(f"bad character {ch!r} at {pos} in {text!r}")
        pos += 1
        kids = [walk()]
        while pos < len(text) and text[pos] == ",":
            pos += 1
            kids.append(walk())
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' at {pos} in {text!r}")
        pos += 1
        if len(kids) < 2:
            raise ValueError(f"unary vertex in {text!r}")
        return tuple(kids)

    out = walk()
    if pos != len(text):
        raise ValueError(f"trailing characters in {text!r}")
    return out


def sort_key(s: Monomial) -> Tuple[int, str]:
    # ASCII already orders '(' < ')' < ',' < '1' < 'x' < 'y'
    return (deg(s), encode(s))


def canonical_sorted(monomials: Iterable[Monomial]) -> list:
    return sorted(monomials, key=sort_key)


# -- leaves --------------------------------------------------------------------

def leaves(s: Monomial) -> list:
    """Leaf labels in planar (left-to-right) order."""
    if s == ():
        return []
    if isinstance(s, str):
        return [s]
    out = []
    for c in s:
        out.extend(leaves(c))
    return out


def _check_index(s: Monomial, i: int) -> None:
    n = deg(s)
    if not 1 <= i <= n:
        raise IndexError(f"leaf index {i} out of range 1..{n}")


def relabel_leaf(s: Monomial, i: int, label: str) -> Monomial:
    """Copy of ``s`` with its ``i``-th leaf (1-based) relabeled."""
    if label not in LABELS:
        raise ValueError(f"unknown label {label!r}")
    _check_index(s, i)

    def walk(t, i):
        if isinstance(t, str):
            return label
        kids = []
        for c in t:
            n = deg(c)
            if 1 <= i <= n:
                c = walk(c, i)
            i -= n
            kids.append(c)
        return tuple(kids)

    return walk(s, i)


def delete_leaf_and_reduce(s: Monomial, i: int) -> Monomial:
    """Remove leaf ``i`` and splice out any vertex left with a single child."""
    _check_index(s, i)

    def walk(t, i):
        if isinstance(t, str):
            return UNIT
        kids = []
        for c in t:
            n = deg(c)
            if 1 <= i <= n:
                c = walk(c, i)
            i -= n
            kids.append(c)
        return graft(*kids)

    return walk(s, i)


# -- decompositions ------------------------------------------------------------

def decompositions(s: Monomial, m: int) -> list:
    """All m-tuples whose graft equals ``s``."""
    if m < 2:
        raise ArityError(f"arity must be >= 2, got {m}")
    if s == ():
        return [(UNIT,) * m]
    out = []
    for slot in range(m):
        t = [UNIT] * m
        t[slot] = s
        out.append(tuple(t))
    if isinstance(s, tuple) and len(s) <= m:
        r = len(s)
        for slots in combinations(range(m), r):
            t = [UNIT] * m
            for slot, child in zip(slots, s):
                t[slot] = child
            out.append(tuple(t))
    return out


# -- enumeration ---------------------------------------------------------------

def _compositions(n: int, parts: int):
    """Ordered tuples of ``parts`` positive integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _trees(n: int, labels: Tuple[str, ...]) -> Tuple[Monomial, ...]:
    if n == 0:
        return (UNIT,)
    if n == 1:
        return labels
    out = []
    for r in range(2, n + 1):
        for comp in _compositions(n, r):
            for kids in product(*(_trees(c, labels) for c in comp)):
                out.append(kids)
    return tuple(out)


def enumerate_monomials(n: int, labels: Iterable[str] = (X,)) -> list:
    """All monomials of total degree ``n`` over ``labels``, canonically ordered."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    labs = tuple(sorted(set(labels)))
    for lab in labs:
        if lab not in LABELS:
            raise ValueError(f"unknown label {lab!r}")
    return canonical_sorted(_trees(n, labs))


# -- orbits under reordering of children ---------------------------------------

@lru_cache(maxsize=None)
def orbit_key(s: Monomial) -> str:
    """Encoding of the underlying non-planar tree.

    Children are sorted by (degree, key) at every vertex, so two monomials
    share a key iff they differ only by reordering children.
    """
    if s == () or isinstance(s, str):
        return encode(s)
    keys = sorted((deg(c), orbit_key(c)) for c in s)
    return "(" + ",".join(k for _, k in keys) + ")"


def orbit_representative(s: Monomial) -> Monomial:
    """The member of the orbit of ``s`` whose encoding is its orbit key."""
    return decode(orbit_key(s))


@lru_cache(maxsize=None)
def _orbit(s: Monomial) -> frozenset:
    if s == () or isinstance(s, str):
        return frozenset([s])
    found = set()
    for perm in set(permutations(s)):
        for kids in product(*(_orbit(c) for c in perm)):
            found.add(kids)
    return frozenset(found)


def orbit_sum(s: Monomial) -> list:
    """All planar monomials with the same underlying rooted tree as ``s``."""
    if s == ():
        raise ValueError("the unit has no orbit")
    return canonical_sorted(_orbit(s))


def orbit_size(s: Monomial) -> int:
    return len(_orbit(s))


def little_schroeder(n: int) -> int:
    """Number of planar reduced trees with n leaves (n >= 1).

    Uses the recurrence (n+1) s(n+1) = 3(2n-1) s(n) - (n-2) s(n-1) for the
    little Schroeder numbers, independent of any tree construction.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = [0, 1, 1]
    for m in range(2, n):
        s.append((3 * (2 * m - 1) * s[m] - (m - 2) * s[m - 1]) // (m + 1))
    return s[n]


__all__ = [
    "Monomial", "UNIT", "X", "Y", "ArityError", "graft", "degrees", "deg_x",
    "deg_y", "deg", "encode", "decode", "sort_key", "canonical_sorted",
    "leaves", "relabel_leaf", "delete_leaf_and_reduce", "decompositions",
    "enumerate_monomials", "orbit_key", "orbit_representative", "orbit_sum",
    "orbit_size", "little_schroeder", "is_unit", "is_leaf", "is_node",
]
