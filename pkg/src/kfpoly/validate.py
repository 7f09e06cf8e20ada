"""Cross-validation harness: every method against the alternating sum."""
from itertools import product

from .charge import charge_A, kostka_statistic
from .closed_forms import (k_b2_weight0, k_c2_weight0, pad, psi, rank_floor,
                           small_matrix_entry, tabulated)
from .cyclage import cyclage_chain, weight_tableaux
from .errors import KostkaError
from .kostant import expected_degree, kostka_def
from .pieri import morris_kostka, pieri_closed_b, pieri_closed_d, pieri_crystal
from .qlaurent import ZERO, QLaurent, eval_at_one
from .rootdata import RootSystem, is_dominant, size
from .tableaux import tableaux_of


def dominant_weights(family, n, max_size, nonneg_last=False):
    """Integer dominant weights with |w| <= max_size, in a fixed order."""
    rng = range(-max_size, max_size + 1)
    out = []
    for w in product(rng, repeat=n):
        if size(w) <= max_size and is_dominant(family, w):
            if nonneg_last and w[-1] < 0:
                continue
            out.append(w)
    return sorted(out, key=lambda w: (size(w), [-x for x in w]))


def partitions(total, n):
    return [w for w in dominant_weights("A", n, total) if sum(w) == total and w[-1] >= 0]


class Report:
    def __init__(self):
        self.passed = 0
        self.failed = []

    def check(self, name, ok, detail=""):
        if ok:
            self.passed += 1
        else:
            self.failed.append("%s %s" % (name, detail))


def _monic_ok(family, n, lam, mu, poly):
    if not poly:
        return True
    return poly.leading_coeff() == 1 and poly.degree() == expected_degree(RootSystem(family, n), lam, mu)


def run(max_rank=3, max_boxes=4, families=("B", "C", "D"), perturb=False):
    rep = Report()
    bump = QLaurent.monomial(0) if perturb else ZERO
    for fam in families:
        for n in range(1, max_rank + 1):
            if fam == "D" and n < 2:
                continue
            sysn = RootSystem(fam, n)
            for lam in dominant_weights(fam, n, max_boxes):
                for mu in dominant_weights(fam, n, size(lam)):
                    k = kostka_def(sysn, lam, mu) + bump
                    rep.check("monic", _monic_ok(fam, n, lam, mu, k), (fam, n, lam, mu))
                    if n >= 2 or fam != "D":
                        rep.check("morris", morris_kostka(fam, n, lam, mu) == k, (fam, n, lam, mu))
                    if lam[-1] >= 0 and (fam != "D" or n >= 3):
                        s, valid = kostka_statistic(fam, n, lam, mu)
                        if valid:
                            rep.check("statistic", s == k, (fam, n, lam, mu))
                        rep.check("count", len(tableaux_of(fam, n, lam, mu)) == eval_at_one(k),
                                  (fam, n, lam, mu))
            if fam in ("B", "D") and (fam == "B" or n >= 2):
                closed = pieri_closed_b if fam == "B" else pieri_closed_d
                for g in dominant_weights(fam, n, max_boxes):
                    for r in range(max_boxes + 1):
                        rep.check("pieri", pieri_crystal(fam, n, g, r) == closed(n, g, r), (fam, n, g, r))
        for lam, mu in tabulated(fam):
            for n in range(rank_floor(fam, lam, mu), max_rank + 1):
                e = small_matrix_entry(fam, n, lam, mu)
                rep.check("matrix", e == kostka_def(RootSystem(fam, n), pad(lam, n), pad(mu, n)) + bump,
                          (fam, n, lam, mu))
    if max_rank >= 2:
        for a in range(2 * max_boxes + 1):
            for b in range(a + 1):
                rep.check("c2", k_c2_weight0((a, b)) == kostka_def(RootSystem("C", 2), (a, b), (0, 0)), (a, b))
                rep.check("b2", k_b2_weight0((a, b)) == k_c2_weight0(psi((a, b))), (a, b))
    rep.check("charge-anchor", charge_A((2, 1)) == 1 and charge_A((1, 2)) == 0)
    for n in range(2, min(max_rank, 4) + 1):
        for tot in range(max_boxes + 1):
            for lam in partitions(tot, n):
                for mu in partitions(tot, n):
                    s = ZERO
                    for t in tableaux_of("A", n, lam, mu):
                        s = s + QLaurent.monomial(charge_A(t.reading))
                    rep.check("charge", s == kostka_def(RootSystem("A", n), lam, mu), (n, lam, mu))
    for fam in ("B", "D"):
        if fam not in families:
            continue
        for n in range(2 if fam == "D" else 1, max_rank + 1):
            for t in weight_tableaux(fam, n, (0,) * n, max_boxes):
                try:
                    c = cyclage_chain(t)
                    ok = len(c.terminal.columns()) == 1 and not any(c.terminal.weight)
                except KostkaError:
                    ok = False
                rep.check("cyclage", ok, str(t))
    return rep
