"""The eleven acceptance criteria, one test each (two for the matrices).

Each test records a single PASS/FAIL line, printed at the end of the run.
"""
import time
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE
from kfpoly.charge import charge_A, kostka_statistic, statistic_valid
from kfpoly.closed_forms import (ERRATA, k_b2_weight0, k_c2_weight0, pad, psi, rank_floor,
                                 small_matrix_entry, tabulated)
from kfpoly.cyclage import compatible_labelings, cyclage_chain, weight_tableaux
from kfpoly.kostant import degree_and_monic_check, kostka_def
from kfpoly.pieri import morris_kostka, pieri_closed_b, pieri_closed_d, pieri_crystal
from kfpoly.qlaurent import ZERO, QLaurent, eval_at_one, parse
from kfpoly.rootdata import RootSystem, size
from kfpoly.tableaux import from_rows, tableaux_of
from kfpoly.validate import dominant_weights, partitions


class Criterion:
    def __init__(self, number, title, limit):
        self.key = number
        self.title = title
        self.limit = limit
        self.problems = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def check(self, ok, detail):
        if not ok:
            self.problems.append(detail)

    def __exit__(self, exc_type, exc, tb):
        took = time.perf_counter() - self.start
        if self.limit is not None and took > self.limit:
            self.problems.append("took %.1fs, limit %ss" % (took, self.limit))
        if exc_type is not None:
            self.problems.append("%s: %s" % (exc_type.__name__, exc))
        status = "FAIL" if self.problems else "PASS"
        line = "criterion %-3s %s  %s (%.2fs)" % (self.key, status, self.title, took)
        if self.problems:
            line += ": " + "; ".join(str(p) for p in self.problems[:3])
        ACCEPTANCE[self.key] = line
        print(line)
        if exc_type is None:
            assert not self.problems, line
        return False


GOLDEN = [
    ("B", 2, (4, 1), (1, 0), "q^7+q^6+2q^5+q^4+q^3"),
    ("C", 2, (3, 1), (0, 0), "q^5+q^4+q^3"),
    ("B", 3, (3, 0, 0), (0, 0, 0), "q^9+q^7+q^5"),
    ("B", 3, (2, 1, 0), (0, 0, 0), "q^8+q^7+q^6+q^5+q^4"),
    ("B", 3, (1, 1, 1), (0, 0, 0), "q^6+q^4+q^2"),
]


def test_criterion_1_golden_values():
    with Criterion("1", "golden values", None) as c:
        for fam, n, lam, mu, expect in GOLDEN:
            for method in (kostka_def, lambda s, l, m: morris_kostka(fam, n, l, m)):
                t = time.perf_counter()
                got = method(RootSystem(fam, n), lam, mu)
                c.check(got == parse(expect), (fam, n, lam, mu, str(got)))
                c.check(time.perf_counter() - t < 1, ("slow", fam, n, lam))


def _matrix_mismatches(printed):
    bad = []
    for fam in "BCD":
        for lam, mu in tabulated(fam):
            for n in range(rank_floor(fam, lam, mu), 6):
                e = small_matrix_entry(fam, n, lam, mu, printed=printed)
                L, M = pad(lam, n), pad(mu, n)
                if e != kostka_def(RootSystem(fam, n), L, M) or e != morris_kostka(fam, n, L, M):
                    bad.append((fam, lam, mu))
    return sorted(set(bad))


@pytest.mark.xfail(strict=True, reason="two printed type B cells disagree with the definition")
def test_criterion_2_small_matrices_as_printed():
    with Criterion("2", "small-shape matrices as printed, ranks floor..5", 120) as c:
        bad = _matrix_mismatches(printed=True)
        c.check(not bad, "misprinted cells %s" % bad)


def test_criterion_2_small_matrices_corrected():
    with Criterion("2c", "small-shape matrices with the two B cells corrected", 120) as c:
        c.check(_matrix_mismatches(printed=False) == [], "mismatch")
        c.check(_matrix_mismatches(printed=True) == sorted((f, l, m) for f, l, m in ERRATA),
                "printed mismatches are not exactly the known two")


def _grid3():
    for fam, n in [("B", 1), ("B", 2), ("B", 3), ("C", 1), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]:
        for lam in dominant_weights(fam, n, 5, nonneg_last=True):
            for mu in dominant_weights(fam, n, size(lam)):
                yield fam, n, lam, mu


@lru_cache(maxsize=None)
def _oracle(fam, n, lam, mu):
    return kostka_def(RootSystem(fam, n), lam, mu)


def test_criterion_3_statistic():
    with Criterion("3", "statistic equals definition under the hypotheses", 300) as c:
        count = 0
        for fam, n, lam, mu in _grid3():
            if not statistic_valid(fam, n, lam, mu):
                continue
            s, _ = kostka_statistic(fam, n, lam, mu)
            count += 1
            c.check(s == _oracle(fam, n, lam, mu), (fam, n, lam, mu))
        c.check(count > 500, "only %d instances" % count)
        s, valid = kostka_statistic("C", 2, (3, 1), (0, 0))
        c.check(not valid and s == parse("q^5+q^3+q^2") and s != _oracle("C", 2, (3, 1), (0, 0)),
                "negative control")


def _grid4():
    for fam in "BCD":
        for n in (2, 3):
            for nu in dominant_weights(fam, n, 5):
                for mu in dominant_weights(fam, n, size(nu)):
                    yield fam, n, nu, mu


def test_criterion_4_morris_sweep():
    with Criterion("4", "Morris recursion equals definition", 300) as c:
        for fam, n, nu, mu in _grid4():
            c.check(morris_kostka(fam, n, nu, mu) == _oracle(fam, n, nu, mu), (fam, n, nu, mu))


def test_criterion_5_type_a_charge():
    with Criterion("5", "type A charge sums", 120) as c:
        for n in range(1, 5):
            for tot in range(7):
                for lam in partitions(tot, n):
                    for mu in partitions(tot, n):
                        s = ZERO
                        for t in tableaux_of("A", n, lam, mu):
                            s = s + QLaurent.monomial(charge_A(t.reading))
                        c.check(s == kostka_def(RootSystem("A", n), lam, mu), (n, lam, mu))


def test_criterion_6_counting():
    with Criterion("6", "tableau counts equal K(1)", None) as c:
        for fam, n, lam, mu in _grid3():
            c.check(len(tableaux_of(fam, n, lam, mu)) == eval_at_one(_oracle(fam, n, lam, mu)),
                    (fam, n, lam, mu))


def test_criterion_7_pieri():
    with Criterion("7", "Pieri crystal count equals closed inequalities", None) as c:
        negative = 0
        for fam, closed, ranks in [("B", pieri_closed_b, (1, 2, 3)), ("D", pieri_closed_d, (2, 3))]:
            for n in ranks:
                for g in dominant_weights(fam, n, 4):
                    negative += fam == "D" and g[-1] < 0
                    for r in range(5):
                        c.check(pieri_crystal(fam, n, g, r) == closed(n, g, r), (fam, n, g, r))
        c.check(negative > 0, "no D case with negative last part")


def test_criterion_8_degree_and_monic():
    with Criterion("8", "monic with the predicted degree", None) as c:
        cases = [(f, n, l, m) for f, n, l, m, _ in GOLDEN]
        for fam in "BCD":
            for lam, mu in tabulated(fam):
                for n in range(rank_floor(fam, lam, mu), 6):
                    cases.append((fam, n, pad(lam, n), pad(mu, n)))
        cases += list(_grid3()) + list(_grid4())
        nonzero = 0
        for fam, n, lam, mu in cases:
            try:
                nonzero += degree_and_monic_check(RootSystem(fam, n), lam, mu,
                                                  poly=_oracle(fam, n, lam, mu)) is not None
            except AssertionError as e:
                c.check(False, (fam, n, lam, mu, str(e)))
        c.check(nonzero > 1000, "only %d nonzero polynomials" % nonzero)


CHAINS = [
    [[[-1, 0, 1]], [[-1, 0], [1]], [[-2, 2], [0]], [[-2], [0], [2]]],
    [[[-2, 0, 2]], [[-2, 0], [2]], [[-3, 3], [0]], [[-3], [0], [3]]],
    [[[-3, 0, 3]], [[-3, 0], [3]], [[-4, 4], [0]], [[-4], [0], [4]]],
    [[[-1, 1], [0]], [[-1], [0], [1]]],
]


def test_criterion_9_cyclage():
    with Criterion("9", "cyclage chains and termination", 120) as c:
        for chain in CHAINS:
            got = [t.rows() for t in cyclage_chain(from_rows("B", 3, chain[0])).nodes]
            c.check(got == chain, ("chain", chain[0]))
        for fam, ranks in [("B", (1, 2, 3)), ("D", (2, 3))]:
            for n in ranks:
                for t in weight_tableaux(fam, n, (0,) * n, 6):
                    try:
                        end = cyclage_chain(t).terminal
                        c.check(len(end.columns()) == 1 and not any(end.weight), str(t))
                    except Exception as e:
                        c.check(False, "%s: %s" % (t, e))


def test_criterion_10_no_cyclage_statistic():
    with Criterion("10", "no cyclage-compatible statistic for B3 weight 0", None) as c:
        ts = [t for t in weight_tableaux("B", 3, (0, 0, 0), 3) if sum(t.shape) == 3]
        polys = {s: _oracle("B", 3, s, (0, 0, 0)) for s in {t.shape for t in ts}}
        c.check(len(ts) == 11, "%d tableaux" % len(ts))
        c.check(compatible_labelings(ts, polys) == [], "a labeling exists")


def test_criterion_11_rank2_closed_forms():
    with Criterion("11", "rank 2 weight 0 closed forms", 60) as c:
        for b in range(9):
            for a in range(b, b + 17):
                lam = (a, b)
                c.check(k_c2_weight0(lam) == _oracle("C", 2, lam, (0, 0)), ("C2", lam))
                c.check(k_b2_weight0(lam) == _oracle("B", 2, lam, (0, 0)), ("B2", lam))
                c.check(k_b2_weight0(lam) == k_c2_weight0(psi(lam)), ("psi", lam))
