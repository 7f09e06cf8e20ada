"""q-analogue of Kostant's partition function and Kostka-Foulkes by definition.

K_{lambda,mu}(q) = sum over w in W of sign(w) P_q(w(lambda+rho) - (mu+rho)).
"""
import sys as _sys
from fractions import Fraction

from .qlaurent import ONE, ZERO, QLaurent
from .rootdata import (RootSystem, Weight, act_doubled, positive_roots, rho,
                       sign, simple_root_coords_doubled, weyl_elements)


def _as_system(family, n=None):
    if isinstance(family, RootSystem):
        return family
    return RootSystem(family, n)


def root_coord_list(sys):
    """Positive roots in simple-root coordinates, sorted by height then lex."""
    coords = [simple_root_coords_doubled(sys.family, sys.rank, r.doubled)
              for r in positive_roots(sys)]
    return sorted(coords, key=lambda c: (sum(c), c))


class _Kostant:
    """Memoised evaluator f(j, c); one instance per top-level call."""

    def __init__(self, sys):
        self.roots = root_coord_list(sys)
        self.memo = {}

    def __call__(self, c):
        if c is None:
            return ZERO
        return self._f(0, c)

    def _f(self, j, c):
        if j == len(self.roots):
            return ONE if not any(c) else ZERO
        key = (j, c)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        a = self.roots[j]
        total = ZERO
        k = 0
        cur = c
        while all(x >= 0 for x in cur):
            sub = self._f(j + 1, cur)
            if sub:
                total = total + sub.shift(k)
            k += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        self.memo[key] = total
        return total


def kostant_q(sys, beta, n=None):
    """P_q(beta): sum over multisets of positive roots adding to beta of q^size."""
    sys = _as_system(sys, n)
    d = Weight.of(beta).doubled
    c = simple_root_coords_doubled(sys.family, sys.rank, d)
    return _Kostant(sys)(c)


def _check_pair(sys, lam, mu):
    if len(lam) != sys.rank or len(mu) != sys.rank:
        raise ValueError("weights must have %d coordinates" % sys.rank)


def kostka_def(sys, lam, mu, n=None):
    """Kostka-Foulkes polynomial by the alternating Weyl sum."""
    if _sys.getrecursionlimit() < 5000:
        _sys.setrecursionlimit(5000)
    sys = _as_system(sys, n)
    lam, mu = Weight.of(lam), Weight.of(mu)
    _check_pair(sys, lam, mu)
    r = rho(sys).doubled
    lr = tuple(a + b for a, b in zip(lam.doubled, r))
    mr = tuple(a + b for a, b in zip(mu.doubled, r))
    P = _Kostant(sys)
    total = ZERO
    for w in weyl_elements(sys):
        moved = act_doubled(w, lr)
        beta = tuple(a - b for a, b in zip(moved, mr))
        c = simple_root_coords_doubled(sys.family, sys.rank, beta)
        if c is None:
            continue
        val = P(c)
        if val:
            total = total + val.scale(sign(w))
    return total


def expected_degree(sys, lam, mu, n=None):
    """Degree predicted for K_{lambda,mu} (which is then monic).

    Returns an int or Fraction; None for families without a formula here.
    """
    sys = _as_system(sys, n)
    lam, mu = Weight.of(lam).parts, Weight.of(mu).parts
    k = sys.rank
    # coordinate index t corresponds to i = k - t
    diff = [(k - t, Fraction(a) - Fraction(b)) for t, (a, b) in enumerate(zip(lam, mu))]
    if sys.family == "B":
        deg = sum(i * d for i, d in diff)
    elif sys.family == "C":
        deg = sum(i * d for i, d in diff) - Fraction(sum(lam) - sum(mu), 2)
    elif sys.family == "D":
        deg = sum((i - 1) * d for i, d in diff if i >= 2)
    else:
        # type A: n(mu) - n(lambda) with n(l) = sum (i-1) l_i, i counted from the top
        deg = sum(t * (Fraction(b) - Fraction(a)) for t, (a, b) in enumerate(zip(lam, mu)))
    return int(deg) if deg.denominator == 1 else deg


def degree_and_monic_check(sys, lam, mu, n=None, poly=None):
    """Expected degree, after confirming the polynomial is monic of that degree.

    Raises AssertionError on a mismatch; returns None when K = 0.
    """
    sys = _as_system(sys, n)
    if poly is None:
        poly = kostka_def(sys, lam, mu)
    if not poly:
        return None
    deg = expected_degree(sys, lam, mu)
    assert poly.degree() == deg, "degree %s, expected %s" % (poly.degree(), deg)
    assert poly.leading_coeff() == 1, "leading coefficient %d" % poly.leading_coeff()
    return deg
