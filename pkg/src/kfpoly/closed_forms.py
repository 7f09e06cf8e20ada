"""Explicit Kostka-Foulkes polynomials for small shapes and rank 2 weight 0."""
from .qlaurent import ONE, ZERO, QLaurent, geometric_ratio


def _q(e):
    return QLaurent.monomial(e)


def _g(a, s):
    return geometric_ratio(a, s)


# Each entry maps n to a polynomial. Shapes are partitions (rows), padded
# to rank n when compared with the other methods.
_B = {
    ((3,), (2,)): lambda n: _q(n),
    ((2, 1), (2,)): lambda n: _q(n - 1),
    ((1, 1, 1), (2,)): lambda n: ZERO,
    ((2,), (2,)): lambda n: ONE,
    ((1, 1), (2,)): lambda n: ZERO,
    ((1,), (2,)): lambda n: ZERO,
    ((3,), (1, 1)): lambda n: _q(n + 1),
    ((2, 1), (1, 1)): lambda n: _q(n) + _q(n - 1),
    ((1, 1, 1), (1, 1)): lambda n: _q(n - 2),
    ((2,), (1, 1)): lambda n: _q(1),
    ((1, 1), (1, 1)): lambda n: ONE,
    ((1,), (1, 1)): lambda n: ZERO,
    ((3,), (1,)): lambda n: _q(2) * _g(2 * n, 2),
    ((2, 1), (1,)): lambda n: _q(n) + _q(1) * _g(2 * n - 1, 1),
    ((1, 1, 1), (1,)): lambda n: _q(1) * _g(2 * n - 2, 2),
    ((2,), (1,)): lambda n: _q(n),
    ((1, 1), (1,)): lambda n: _q(n - 1),
    ((1,), (1,)): lambda n: ONE,
    ((3,), ()): lambda n: _q(n + 2) * _g(2 * n - 1, 1),
    ((2, 1), ()): lambda n: _q(n + 1) * _g(2 * n - 1, 1),
    ((1, 1, 1), ()): lambda n: _q(n - 1) * _g(2 * n, 2),
    ((2,), ()): lambda n: _q(2) * _g(2 * n, 2),
    ((1, 1), ()): lambda n: _q(1) * _g(2 * n, 2),
    ((1,), ()): lambda n: _q(n),
}

_C = {
    ((3,), (2,)): lambda n: ZERO,
    ((2, 1), (2,)): lambda n: ZERO,
    ((1, 1, 1), (2,)): lambda n: ZERO,
    ((2,), (2,)): lambda n: ONE,
    ((1, 1), (2,)): lambda n: ZERO,
    ((3,), (1, 1)): lambda n: ZERO,
    ((2, 1), (1, 1)): lambda n: ZERO,
    ((1, 1, 1), (1, 1)): lambda n: ZERO,
    ((2,), (1, 1)): lambda n: _q(1),
    ((1, 1), (1, 1)): lambda n: ONE,
    ((3,), (1,)): lambda n: _q(1) * _g(2 * n, 2),
    ((2, 1), (1,)): lambda n: _q(1) * _g(2 * n - 2, 1),
    ((1, 1, 1), (1,)): lambda n: _q(2) * _g(2 * n - 4, 2),
    ((2,), (1,)): lambda n: ZERO,
    ((1, 1), (1,)): lambda n: ZERO,
    ((3,), ()): lambda n: ZERO,
    ((2, 1), ()): lambda n: ZERO,
    ((1, 1, 1), ()): lambda n: ZERO,
    ((2,), ()): lambda n: _q(1) * _g(2 * n, 2),
    ((1, 1), ()): lambda n: _q(2) * _g(2 * n - 2, 2),
}

_D = dict(_C)
_D.update({
    ((3,), (1,)): lambda n: _q(2) * _g(2 * n - 2, 2),
    ((2, 1), (1,)): lambda n: _q(n - 1) + _q(1) * _g(2 * n - 3, 1),
    ((1, 1, 1), (1,)): lambda n: _q(n - 2) + _q(1) * _g(2 * n - 4, 2),
    ((2,), ()): lambda n: _q(2) * _g(2 * n - 2, 2),
    ((1, 1), ()): lambda n: _q(n - 1) + _q(1) * _g(2 * n - 2, 2),
})

TABLES = {"B": _B, "C": _C, "D": _D}

# Two printed type B cells disagree with the alternating sum for every n
# tested (and the first with the B3 weight-0 value q^9+q^7+q^5); these
# are the values the other three methods produce.
ERRATA = {
    ("B", (3,), ()): lambda n: _q(n + 2) * _g(2 * n, 2),
    ("B", (2, 1), (1,)): lambda n: _q(1) * _g(2 * n - 1, 1),
}


def rank_floor(family, lam, mu):
    """Smallest rank at which the tabulated entry is claimed."""
    rows = max(len(lam), len(mu), 1)
    if family == "D":
        return max(rows, 4)
    return rows


def tabulated(family):
    return sorted(TABLES.get(family, {}))


def _strip(parts):
    return tuple(x for x in parts if x)


def small_matrix_entry(family, n, lam, mu, printed=False):
    """Tabulated K_{lam,mu} at rank n, or None when not tabulated.

    With printed=True the two known misprints are returned as printed.
    """
    key = (_strip(lam), _strip(mu))
    table = TABLES.get(family)
    if table is None or key not in table:
        return None
    if n < rank_floor(family, *key):
        return None
    if not printed and (family,) + key in ERRATA:
        return ERRATA[(family,) + key](n)
    return table[key](n)


def pad(parts, n):
    parts = _strip(parts)
    return tuple(parts) + (0,) * (n - len(parts))


def k_c2_weight0(lam):
    a, b = (int(x) for x in lam)
    if a % 2 == 0 and b % 2 == 0:
        return _q((a + b) // 2) * (_g(b + 2, 2) + _q(2) * _g(b + 1, 1) * _g(a - b, 2))
    if a % 2 and b % 2:
        return _q((a + b) // 2 + 1) * (_g(b + 1, 2) + _q(1) * _g(b + 1, 1) * _g(a - b, 2))
    return ZERO


def psi(lam):
    a, b = lam
    return (a + b, a - b)


def k_b2_weight0(lam):
    a, b = (int(x) for x in lam)
    if (a + b) % 2 == 0:
        return _q(a) * (_g(2 * b + 2, 2) + _q(2) * _g(2 * b + 1, 1) * _g(a - b, 2))
    return _q(a + 1) * _g(2 * b + 1, 1) * _g(a - b + 1, 2)


def k_a2_weight0(lam, corrected=False):
    """Type A2 weight-0 formula for lambda = (a, b, 0).

    As printed, the first branch only agrees with the definition when
    lambda = 0; corrected=True uses (q^(b+1)-1)/(q-1) there, which agrees
    for all a >= b.
    """
    a, b = int(lam[0]), int(lam[1])
    if a >= 2 * b:
        return _q(a - b) * _g((b if corrected else a) + 1, 1)
    return _q(b) * _g(a - b + 1, 1)
