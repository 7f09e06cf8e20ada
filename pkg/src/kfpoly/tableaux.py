"""Kashiwara-Nakashima tableaux realized as crystal vertices.

A tableau is stored by its column reading (columns right to left, each
read top to bottom). Membership in T^n(shape) means the reading raises to
the reading of T_shape.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from .crystal import (format_letter, format_word, generate_component,
                      raise_to_highest, transport, weight_of)
from .errors import CapExceeded, KostkaError, UnsupportedError


def display_shape(shape):
    """Row lengths of the drawn tableau (last part by absolute value)."""
    rows = list(shape)
    if rows:
        rows[-1] = abs(rows[-1])
    return tuple(r for r in rows if r > 0)


def column_heights(shape):
    rows = display_shape(shape)
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r > c) for c in range(rows[0]))


def _check_shape(shape):
    for x in shape:
        if int(x) != x:
            raise UnsupportedError("tableaux need integer parts, got %s" % (shape,))
    return tuple(int(x) for x in shape)


def _row_letter(family, n, k, last_negative):
    # letter filling row k (1-based) of T_lambda
    if family == "A":
        return k
    if k == n and last_negative:
        return 1
    return -(n - k + 1)


def highest_reading(family, n, shape):
    shape = _check_shape(shape)
    if len(shape) != n:
        raise ValueError("shape %s does not have %d parts" % (shape, n))
    neg = family == "D" and shape[-1] < 0
    word = []
    heights = column_heights(shape)
    for c in range(len(heights) - 1, -1, -1):
        for k in range(1, heights[c] + 1):
            word.append(_row_letter(family, n, k, neg))
    return tuple(word)


@dataclass(frozen=True)
class Tableau:
    family: str
    rank: int
    shape: tuple
    reading: tuple
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "shape", _check_shape(self.shape))
        object.__setattr__(self, "reading", tuple(self.reading))
        if len(self.reading) != sum(column_heights(self.shape)):
            raise KostkaError("reading length does not match shape %s" % (self.shape,))
        if self.check:
            hw, _ = raise_to_highest(self.reading, self.family, self.rank)
            if hw != highest_reading(self.family, self.rank, self.shape):
                raise KostkaError("%s is not a tableau of shape %s"
                                  % (format_word(self.reading), self.shape))

    @property
    def weight(self):
        return weight_of(self.reading, self.family, self.rank)

    def columns(self):
        """Columns left to right, each top to bottom."""
        heights = column_heights(self.shape)
        cols = [None] * len(heights)
        pos = 0
        for c in range(len(heights) - 1, -1, -1):
            cols[c] = self.reading[pos:pos + heights[c]]
            pos += heights[c]
        return cols

    def grid(self):
        """Rows top to bottom, padded with None."""
        cols = self.columns()
        nrows = max((len(c) for c in cols), default=0)
        return [[c[r] if r < len(c) else None for c in cols] for r in range(nrows)]

    def rows(self):
        return [[x for x in row if x is not None] for row in self.grid()]

    def n_columns(self):
        return len(column_heights(self.shape))

    def __str__(self):
        return " / ".join(" ".join(format_letter(x, True) for x in row) for row in self.rows())

    def to_json(self):
        return {"family": self.family, "rank": self.rank, "shape": list(self.shape),
                "reading": list(self.reading), "grid": self.grid()}


def highest_tableau(family, n, shape):
    shape = _check_shape(shape)
    return Tableau(family, n, shape, highest_reading(family, n, shape), check=False)


def reading_to_grid(t):
    return t.grid()


def from_rows(family, n, rows, shape=None):
    """Build a tableau from its rows (lists of letters, top row first)."""
    rows = [r for r in rows if r]
    lengths = [len(r) for r in rows] or [0]
    if shape is None:
        shape = tuple(lengths) + (0,) * (n - len(lengths))
    word = []
    for c in range(lengths[0] - 1, -1, -1):
        for r in rows:
            if c < len(r):
                word.append(r[c])
    return Tableau(family, n, shape, tuple(word))


@lru_cache(maxsize=256)
def _component_by_weight(family, n, shape):
    seed = highest_reading(family, n, shape)
    by_wt = {}
    for w in generate_component(seed, family, n):
        by_wt.setdefault(weight_of(w, family, n), []).append(w)
    return {k: tuple(sorted(v)) for k, v in by_wt.items()}


def component_size(family, n, shape):
    return sum(len(v) for v in _component_by_weight(family, n, _check_shape(shape)).values())


def tableaux_of(family, n, shape, mu):
    shape = _check_shape(shape)
    mu = tuple(int(x) for x in mu)
    words = _component_by_weight(family, n, shape).get(mu, ())
    return [Tableau(family, n, shape, w, check=False) for w in words]


def all_tableaux(family, n, shape):
    shape = _check_shape(shape)
    out = []
    for wt in sorted(_component_by_weight(family, n, shape)):
        out += tableaux_of(family, n, shape, wt)
    return out


def p_symbol(family, n, word):
    """The tableau of rank n whose reading lies in the component of word."""
    hw, path = raise_to_highest(word, family, n)
    shape = weight_of(hw, family, n)
    target = highest_reading(family, n, shape)
    return Tableau(family, n, shape, transport(path, target, family, n), check=False)


def _lift(t, k):
    """Same tableau viewed at rank k >= t.rank (shape padded with zeros)."""
    return t.shape + (0,) * (k - t.rank)


def p_stable(word, family="B", rank_cap=None):
    """P-symbol computed at the first rank where it stops changing."""
    word = tuple(word)
    n0 = max([abs(x) for x in word] + [2 if family == "D" else 1])
    cap = rank_cap if rank_cap is not None else n0 + len(word) + 1
    prev = p_symbol(family, n0, word)
    for k in range(n0, cap):
        nxt = p_symbol(family, k + 1, word)
        if nxt.reading == prev.reading and nxt.shape == _lift(prev, k + 1):
            return prev, k
        prev = nxt
    raise CapExceeded("P-symbol of %s did not stabilize below rank %d" % (format_word(word), cap))


def factor_row(t):
    """Split w(T) into a row R (rank n) and a tableau T' of rank n-1."""
    family, n, shape = t.family, t.rank, t.shape
    if family == "D" and shape[-1] < 0:
        raise UnsupportedError("row factorization needs a nonnegative last part")
    if n < 2:
        raise UnsupportedError("row factorization needs rank >= 2")
    hw, path = raise_to_highest(t.reading, family, n)
    rest = shape[1:]
    target = (-n,) * shape[0] + highest_reading(family, n - 1, rest)
    w = transport(path, target, family, n)
    r_word, t_word = w[:shape[0]], w[shape[0]:]
    if any(abs(x) == n for x in t_word):
        # only happens off the dominant weights
        raise KostkaError("T' of %s leaves the rank %d alphabet" % (t, n - 1))
    R = Tableau(family, n, (shape[0],) + (0,) * (n - 1), r_word, check=False)
    Tp = Tableau(family, n - 1, rest, t_word)
    return R, Tp


def strip_extremes(R, n=None):
    n = R.rank if n is None else n
    if len(display_shape(R.shape)) > 1:
        raise KostkaError("not a row tableau")
    return tuple(x for x in R.reading if abs(x) != n or x == 0)
