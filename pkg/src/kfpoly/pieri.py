"""Pieri multiplicities V(gamma) (x) V(r) and the Morris rank recursion."""
from functools import lru_cache
from itertools import product

from .crystal import colors, eps_phi, generate_component
from .errors import KostkaError, UnsupportedError
from .kostant import kostka_def
from .qlaurent import ZERO, QLaurent
from .rootdata import RootSystem, is_dominant
from .tableaux import highest_reading


def _ints(parts):
    out = []
    for x in parts:
        if int(x) != x:
            raise UnsupportedError("integer parts required, got %s" % (tuple(parts),))
        out.append(int(x))
    return tuple(out)


@lru_cache(maxsize=None)
def row_vertices(family, n, r):
    """Readings of the one-row tableaux of length r (component of n-bar^r)."""
    if r == 0:
        return ((),)
    return tuple(sorted(generate_component((-n,) * r, family, n)))


@lru_cache(maxsize=None)
def _pieri_crystal(family, n, gamma, r):
    b = highest_reading(family, n, gamma)
    cs = colors(family, n)
    phi = {c: eps_phi(b, c, family, n)[1] for c in cs}
    out = {}
    for L in row_vertices(family, n, r):
        if all(eps_phi(L, c, family, n)[0] <= phi[c] for c in cs):
            lam = list(gamma)
            for x in L:
                if x < 0:
                    lam[n + x] += 1
                elif x > 0:
                    lam[n - x] -= 1
            lam = tuple(lam)
            out[lam] = out.get(lam, 0) + 1
    return out


def pieri_crystal(family, n, gamma, r):
    """Multiplicities of V(lambda) in V(gamma) (x) V(r Lambda) via the highest weight tensor rule."""
    return dict(_pieri_crystal(family, n, _ints(gamma), r))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def _k_vectors(n, r, zero_allowed):
    # yields (kbar, k, k0) with kbar[i], k[i] for i = 1..n stored at index i
    for k0 in ((0, 1) if zero_allowed else (0,)):
        for v in _compositions(r - k0, 2 * n):
            kbar = (None,) + v[:n]
            k = (None,) + v[n:]
            yield kbar, k, k0


def pieri_closed_b(n, gamma, r):
    """Type B multiplicities by the closed inequalities on row counts."""
    g = _ints(gamma)
    G = {i: g[n - i] for i in range(1, n + 1)}
    out = {}
    for kbar, k, k0 in _k_vectors(n, r, True):
        L = {i: G[i] + kbar[i] - k[i] for i in range(1, n + 1)}
        ok = True
        for i in range(1, n):
            if not L[i] <= L[i + 1] - kbar[i + 1]:
                ok = False
                break
            if not L[i + 1] - kbar[i + 1] >= L[i] + k[i] - kbar[i]:
                ok = False
                break
        if ok:
            ok = L[1] - kbar[1] >= 0 if k0 == 0 else L[1] - kbar[1] > 0
        if ok:
            lam = tuple(L[n - t] for t in range(n))
            out[lam] = out.get(lam, 0) + 1
    return out


def pieri_closed_d(n, gamma, r):
    """Type D multiplicities by the closed inequalities, sign cases included."""
    g = _ints(gamma)
    G = {i: g[n - i] for i in range(1, n + 1)}
    out = {}
    for kbar, k, _ in _k_vectors(n, r, False):
        if k[1] and kbar[1]:
            continue
        L = {i: G[i] + kbar[i] - k[i] for i in range(1, n + 1)}
        top = L[2] - kbar[2]
        ok = (L[1] <= top) if k[1] == 0 else (-L[1] <= top)
        for i in range(2, n):
            if not ok:
                break
            ok = L[i] <= L[i + 1] - kbar[i + 1] and \
                L[i + 1] - kbar[i + 1] >= L[i] + k[i] - kbar[i]
        if ok:
            if G[1] >= 0:
                if k[1] == 0 and not top >= L[1] - kbar[1]:
                    ok = False
                if kbar[1] == 0 and not top >= L[1] + k[1]:
                    ok = False
            else:
                if kbar[1] == 0 and not top >= -L[1] - k[1]:
                    ok = False
                if k[1] == 0 and not top >= -L[1] + kbar[1]:
                    ok = False
        if ok:
            lam = tuple(L[n - t] for t in range(n))
            out[lam] = out.get(lam, 0) + 1
    return out


def _gamma_k(nu, n, k):
    # nu[t] is nu_{(n-t)}-bar; drop nu_k, add 1 to the coordinates above it
    above = tuple(x + 1 for x in nu[:n - k])
    below = tuple(nu[n - k + 1:])
    return above + below


def morris_kostka(family, n, nu, mu, _memo=None):
    """K_{nu,mu} by recursion on the rank through Pieri multiplicities."""
    if family not in ("B", "C", "D"):
        raise UnsupportedError("the rank recursion covers types B, C, D")
    nu, mu = _ints(nu), _ints(mu)
    if len(nu) != n or len(mu) != n:
        raise ValueError("weights must have %d coordinates" % n)
    memo = {} if _memo is None else _memo
    key = (family, n, nu, mu)
    if key in memo:
        return memo[key]
    if (family in ("B", "C") and n == 1) or (family == "D" and n == 2):
        res = kostka_def(RootSystem(family, n), nu, mu)
        memo[key] = res
        return res
    mun = mu[0]
    mup = mu[1:]
    total = ZERO
    for k in range(1, n + 1):
        R = nu[n - k] + k - mun - n
        if R < 0:
            continue
        gamma = _gamma_k(nu, n, k)
        sgn = -1 if (n - k) % 2 else 1
        for m in range(R // 2 + 1):
            r = R - 2 * m
            exp = R - m if family == "C" else R
            inner = ZERO
            for lam, c in sorted(_pieri_crystal(family, n - 1, gamma, r).items()):
                sub = morris_kostka(family, n - 1, lam, mup, memo)
                if sub:
                    inner = inner + sub.scale(c)
            if inner:
                total = total + inner.shift(exp).scale(sgn)
    memo[key] = total
    return total


def morris_special(family, n, nu, mu, _memo=None):
    """Single-term recursion, valid when mu_n >= nu_{n-1}."""
    nu, mu = _ints(nu), _ints(mu)
    if n < 2 or mu[0] < nu[1]:
        raise KostkaError("precondition mu_n >= nu_(n-1) fails")
    l = nu[0] - mu[0]
    if l < 0:
        return ZERO
    memo = {} if _memo is None else _memo
    gamma = nu[1:]
    total = ZERO
    for m in range(l // 2 + 1):
        r = l - 2 * m
        exp = r + m if family == "C" else l
        for lam, c in sorted(_pieri_crystal(family, n - 1, gamma, r).items()):
            sub = morris_kostka(family, n - 1, lam, mu[1:], memo)
            if sub:
                total = total + sub.shift(exp).scale(c)
    return total
