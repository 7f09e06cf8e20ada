"""Charge on type A words, catabolism and the statistics chi_n.

Words here follow the crystal convention of this package, so a tableau
word is its column reading right to left. Charge is computed by
extracting standard subwords scanning left to right cyclically, which is
the usual Lascoux-Schutzenberger rule applied to the reversed word.
"""
from .crystal import (colors, eps_phi, raise_to_highest, transport,
                      weight_of, weyl_crystal_action)
from .errors import UnsupportedError
from .qlaurent import ZERO, QLaurent
from .tableaux import (Tableau, display_shape, factor_row, highest_reading,
                       p_symbol, strip_extremes, tableaux_of)


def sort_content(word):
    """Apply type A Weyl moves until the content is weakly decreasing."""
    w = tuple(word)
    if not w:
        return w
    m = max(w)
    if m < 2:
        return w
    while True:
        c = weight_of(w, "A", m)
        for i in range(1, m):
            if c[i - 1] < c[i]:
                w = weyl_crystal_action(w, i, "A", m)
                break
        else:
            return w


def _charge_dominant(word):
    letters = list(enumerate(word))
    total = 0
    while letters:
        k = len(letters)
        used = [False] * k
        # leftmost 1
        pos = next(j for j in range(k) if letters[j][1] == 1)
        used[pos] = True
        index = 0
        r = 1
        while True:
            nxt = None
            for step in range(1, k):
                j = (pos + step) % k
                if not used[j] and letters[j][1] == r + 1:
                    nxt = j
                    break
            if nxt is None:
                break
            if nxt < pos:
                index += 1
            total += index
            used[nxt] = True
            pos = nxt
            r += 1
        letters = [p for j, p in enumerate(letters) if not used[j]]
    return total


def charge_A(word):
    """Lascoux-Schutzenberger charge of a word over 1..m."""
    w = tuple(word)
    if any(x < 1 for x in w):
        raise ValueError("charge needs letters 1..m")
    return _charge_dominant(sort_content(w))


def cocharge_A(word):
    c = sorted(weight_of(word, "A", max(word)), reverse=True) if word else []
    norm = sum(i * x for i, x in enumerate(c))
    return norm - charge_A(word)


# D3 colors 0, 1, 2 correspond to A3 colors 3, 1, 2.
D3_TO_A3_COLOR = {0: 3, 1: 1, 2: 2}


def d3_to_a3(word):
    """Image of a D3 word in the isomorphic A3 crystal (letters 1..4)."""
    hw, path = raise_to_highest(word, "D", 3)
    a = {c: eps_phi(hw, c, "D", 3)[1] for c in colors("D", 3)}
    b = {D3_TO_A3_COLOR[c]: a[c] for c in a}
    # sum b_j Lambda_j in A3 as a partition with at most 3 rows
    shape = (b[1] + b[2] + b[3], b[2] + b[3], b[3], 0)
    target = highest_reading("A", 4, shape)
    return transport([D3_TO_A3_COLOR[c] for c in path], target, "A", 4)


def _chi_base_B(t):
    k1 = sum(1 for x in t.reading if x == 1)
    return 2 * k1 + (1 if 0 in t.reading else 0)


def chi_trace(t):
    """chi(T) together with the list of per-level records."""
    family, n, shape = t.family, t.rank, t.shape
    if family not in ("B", "C", "D"):
        raise UnsupportedError("chi is defined for types B, C, D")
    if family == "D" and shape[-1] < 0:
        raise UnsupportedError("chi for D shapes with negative last part is not supported")
    trace = []
    total = 0
    while True:
        if family == "B" and n == 1:
            v = _chi_base_B(t)
            trace.append({"rank": 1, "base": str(t), "value": v})
            return total + v, trace
        if family == "C" and n == 1:
            v = sum(1 for x in t.reading if x == 1)
            trace.append({"rank": 1, "base": str(t), "value": v})
            return total + v, trace
        if family == "D" and n == 3:
            a_word = d3_to_a3(t.reading)
            v = charge_A(a_word)
            trace.append({"rank": 3, "base": str(t), "a3_word": list(a_word), "value": v})
            return total + v, trace
        if family == "D" and n < 3:
            raise UnsupportedError("chi for type D needs rank >= 3")
        R, Tp = factor_row(t)
        Rp = strip_extremes(R)
        cat = p_symbol(family, n - 1, Tp.reading + Rp)
        mu = t.weight
        inc = shape[0] - mu[0]
        if family == "C":
            inc -= sum(1 for x in R.reading if x == n)
        trace.append({"rank": n, "tableau": str(t), "R": str(R), "T'": str(Tp),
                      "R'": list(Rp), "cat": str(cat), "increment": inc})
        total += inc
        t = cat
        n -= 1
        shape = t.shape
        if family == "D" and n > 3 and shape[-1] < 0:
            raise UnsupportedError("catabolism reached a D shape with negative last part")


def chi(t):
    return chi_trace(t)[0]


def chi_row_closed(family, n, R):
    """Closed value of chi on a one-row tableau."""
    if len(display_shape(R.shape)) > 1:
        raise ValueError("not a row tableau")
    mu = R.weight
    h = sum((n - i) * mu[n - i] for i in range(1, n + 1))
    k = {i: sum(1 for x in R.reading if x == i) for i in range(1, n + 1)}
    if family == "B":
        return h + 2 * sum((n - i + 1) * k[i] for i in k) + (n if 0 in R.reading else 0)
    if family == "C":
        return h + sum((2 * (n - i) + 1) * k[i] for i in k)
    if family == "D":
        return h + 2 * sum((n - i + 1) * k[i] for i in k if i >= 2)
    raise ValueError("family must be B, C or D")


def statistic_valid(family, n, lam, mu):
    """Whether the hypotheses making sum q^chi equal K are satisfied."""
    if family in ("B", "C"):
        return n == 1 or mu[n - 2] >= lam[1]
    if family == "D":
        return n == 3 or (n >= 4 and mu[n - 4] >= lam[1])
    return False


def kostka_statistic(family, n, lam, mu):
    """(sum over tableaux of q^chi, validity flag)."""
    lam = tuple(lam)
    mu = tuple(mu)
    total = ZERO
    for t in tableaux_of(family, n, lam, mu):
        total = total + QLaurent.monomial(chi(t))
    return total, statistic_valid(family, n, lam, mu)
