from itertools import combinations_with_replacement

import pytest

from kfpoly.kostant import degree_and_monic_check, expected_degree, kostant_q, kostka_def
from kfpoly.qlaurent import ONE, eval_at_one, is_poly_nonneg, parse
from kfpoly.rootdata import (RootSystem, Weight, is_dominant, positive_roots,
                             simple_root_coords, star)
from kfpoly.validate import dominant_weights, partitions


def brute_kostant(sysn, beta):
    """Generating polynomial of root multisets summing to beta, by enumeration."""
    roots = positive_roots(sysn)
    target = Weight.of(beta).doubled
    c = simple_root_coords(sysn, beta)
    if c is None:
        return {}
    out = {}
    # every positive root has height at least one
    for k in range(sum(c) + 1):
        for combo in combinations_with_replacement(range(len(roots)), k):
            s = [0] * sysn.rank
            for i in combo:
                s = [a + b for a, b in zip(s, roots[i].doubled)]
            if tuple(s) == target:
                out[k] = out.get(k, 0) + 1
    return out


def test_kostant_examples():
    assert kostant_q(RootSystem("B", 3), (0, 0, 0)) == ONE
    assert kostant_q(RootSystem("C", 1), (2,)) == parse("q")
    assert kostant_q(RootSystem("B", 2), (1, 1)) == parse("q+q^2+q^3")


@pytest.mark.parametrize("fam,n", [("B", 2), ("C", 2), ("D", 3), ("A", 3), ("B", 3)])
def test_kostant_vs_brute_force(fam, n):
    sysn = RootSystem(fam, n)
    for beta in dominant_weights("A" if fam == "A" else "B", n, 3) + [(1,) + (0,) * (n - 1)]:
        if fam == "A":
            beta = tuple(beta[:-1]) + (beta[-1] - sum(beta),)
        p = kostant_q(sysn, beta)
        assert p.terms == brute_kostant(sysn, beta), beta


def test_golden_values():
    assert kostka_def(RootSystem("B", 2), (4, 1), (1, 0)) == parse("q^7+q^6+2q^5+q^4+q^3")
    assert kostka_def(RootSystem("C", 2), (3, 1), (0, 0)) == parse("q^5+q^4+q^3")
    for n in range(1, 6):
        assert kostka_def(RootSystem("B", n), (1,) + (0,) * (n - 1), (0,) * n) == parse("q^%d" % n)


def test_identity_diagonal():
    for fam in "BCD":
        for n in (2, 3):
            for lam in dominant_weights(fam, n, 4):
                assert kostka_def(RootSystem(fam, n), lam, lam) == ONE


def test_half_integer_weights():
    half = Weight.of(["1/2", "1/2"])
    assert kostka_def(RootSystem("B", 2), half, half) == ONE
    k = kostka_def(RootSystem("B", 2), Weight.of(["3/2", "1/2"]), half)
    # V(3/2,1/2) has dimension 16: an 8-element top orbit plus the 4 weights (+-1/2,+-1/2)
    assert eval_at_one(k) == 2
    assert degree_and_monic_check(RootSystem("B", 2), Weight.of(["3/2", "1/2"]), half, poly=k) == 2


def test_degree_examples():
    assert expected_degree(RootSystem("B", 2), (1, 1), (1, 1)) == 0
    assert expected_degree(RootSystem("B", 2), (4, 1), (1, 0)) == 7
    assert expected_degree(RootSystem("C", 2), (3, 1), (0, 0)) == 5
    assert degree_and_monic_check(RootSystem("B", 2), (4, 1), (1, 0)) == 7


@pytest.mark.parametrize("fam", "BCD")
def test_monic_positive_sweep(fam):
    for n in (2, 3):
        sysn = RootSystem(fam, n)
        for lam in dominant_weights(fam, n, 4):
            for mu in dominant_weights(fam, n, 4):
                k = kostka_def(sysn, lam, mu)
                if k:
                    assert is_poly_nonneg(k)
                    degree_and_monic_check(sysn, lam, mu, poly=k)


def test_equal_size_agrees_across_types():
    for n in (2, 3):
        for tot in range(5):
            for lam in partitions(tot, n):
                for mu in partitions(tot, n):
                    ka = kostka_def(RootSystem("A", n), lam, mu)
                    for fam in "BCD":
                        assert kostka_def(RootSystem(fam, n), lam, mu) == ka, (fam, lam, mu)


def test_d_star_symmetry():
    for n in (2, 3):
        sysn = RootSystem("D", n)
        for lam in dominant_weights("D", n, 4):
            for mu in dominant_weights("D", n, 4):
                assert kostka_def(sysn, lam, mu) == kostka_def(sysn, star(lam), star(mu))


def test_equal_top_part_reduces_rank():
    for fam in "BCD":
        n = 3
        for lam in dominant_weights(fam, n, 4):
            for mu in dominant_weights(fam, n, 4):
                if lam[0] == mu[0] and is_dominant(fam, lam[1:]) and is_dominant(fam, mu[1:]):
                    assert kostka_def(RootSystem(fam, n), lam, mu) == \
                        kostka_def(RootSystem(fam, n - 1), lam[1:], mu[1:])


def test_multiplicities_sum_to_dimension():
    from kfpoly.rootdata import act, weyl_elements
    from kfpoly.tableaux import component_size
    for fam, n, lam in [("C", 2, (1, 1)), ("B", 2, (2, 1)), ("D", 3, (2, 1, 1)), ("C", 3, (2, 0, 0))]:
        sysn = RootSystem(fam, n)
        els = list(weyl_elements(sysn))
        total = 0
        for mu in dominant_weights(fam, n, sum(map(abs, lam))):
            orbit = {act(w, Weight.of(mu)) for w in els}
            total += eval_at_one(kostka_def(sysn, lam, mu)) * len(orbit)
        assert total == component_size(fam, n, lam)
    assert component_size("C", 2, (1, 1)) == 5
