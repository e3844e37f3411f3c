"""Slow, independent reference computations used by the tests.

None of these reuse the pruned convolution, the composite machinery or the
leaf relabeling in the library; they work straight from the definitions.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import product

from planar.series import Series
from planar.trees import UNIT, deg, deg_x, graft


def grown_trees(n, labels=("x",)):
    """Trees with n leaves built by inserting leaves one at a time.

    Every reduced tree with n >= 2 leaves comes from one with n - 1 leaves by
    either adding a child to an existing vertex, or pairing some subtree with
    a new leaf under a fresh binary vertex.
    """
    if n == 0:
        return {UNIT}
    level = set(labels)
    for _ in range(1, n):
        nxt = set()
        for t in level:
            nxt |= _insertions(t, labels)
        level = nxt
    return level


def _insertions(t, labels):
    out = set()
    for lab in labels:
        out.add((t, lab))
        out.add((lab, t))
    if isinstance(t, tuple):
        for pos in range(len(t) + 1):
            for lab in labels:
                out.add(t[:pos] + (lab,) + t[pos:])
        for i, child in enumerate(t):
            for sub in _insertions(child, labels):
                out.add(t[:i] + (sub,) + t[i + 1:])
    return out


def brute_decompositions(s, m, pool):
    """All m-tuples over ``pool`` whose graft is ``s``."""
    return {tup for tup in product(pool, repeat=m) if graft(*tup) == s}


def naive_product(*fs):
    """Multilinear expansion over every tuple of support terms, then truncate."""
    p = min(f.precision for f in fs)
    acc = defaultdict(Fraction)
    for combo in product(*(list(f.items()) for f in fs)):
        c = Fraction(1)
        for _, v in combo:
            c *= v
        acc[graft(*(s for s, _ in combo))] += c
    return Series({s: c for s, c in acc.items() if deg_x(s) <= p}, p)


def naive_composite(t, args):
    """Tree composite by full expansion: one support term per leaf."""
    p = min(a.precision for a in args)

    def walk(t, it):
        if isinstance(t, str):
            a = next(it)
            return dict(a.items())
        parts = [walk(c, it) for c in t]
        acc = defaultdict(Fraction)
        for combo in product(*(list(q.items()) for q in parts)):
            c = Fraction(1)
            for _, v in combo:
                c *= v
            acc[graft(*(s for s, _ in combo))] += c
        return acc

    res = walk(t, iter(args))
    return Series({s: c for s, c in res.items() if deg_x(s) <= p}, p)


def naive_substitute(f, g, h=None):
    p = min(f.precision, g.precision, h.precision if h is not None else f.precision)
    acc = defaultdict(Fraction)
    for s, c in f.items():
        if s == UNIT:
            acc[UNIT] += c
            continue
        args = []
        for lab in _leaf_labels(s):
            args.append(g if lab == "x" else h)
        for t, v in naive_composite(s, args).items():
            acc[t] += c * v
    return Series({s: c for s, c in acc.items() if deg_x(s) <= p}, p)


def _leaf_labels(s):
    if isinstance(s, str):
        return [s]
    out = []
    for c in s:
        out += _leaf_labels(c)
    return out


def leibniz_differential(s):
    """d of a single y-free monomial via the Leibniz rule on its root."""
    if s == UNIT:
        return {}
    if isinstance(s, str):
        return {"y": 1}
    acc = defaultdict(int)
    for i, child in enumerate(s):
        for t, c in leibniz_differential(child).items():
            acc[s[:i] + (t,) + s[i + 1:]] += c
    return dict(acc)


def leaf_deletion_derivative(s):
    """d/dx of one monomial: sum over leaves of the tree with that leaf removed."""

    def delete(t, i):
        if isinstance(t, str):
            return UNIT
        kids = []
        for c in t:
            n = deg(c)
            kids.append(delete(c, i) if 0 <= i < n else c)
            i -= n
        return graft(*kids)

    acc = defaultdict(int)
    for i in range(deg(s)):
        acc[delete(s, i)] += 1
    return dict(acc)
