from itertools import combinations

import pytest
from hypothesis import given

from signedeven.group_core import (
    MembershipError, compose, enumerate_group, identity, inverse, membership, parse_window,
)
from signedeven.statistics import (
    del_B, des_A, des_A_set, dmaj, drmaj_D, ell_A, ell_L, inv, maj_B, neg, neg_inv, rmaj_B,
)
from signedeven.qpolynomial import QPolynomial
from signedeven.structure_maps import increasing_word, main_lemma_factor, phi

from conftest import signed_perms

W = parse_window


def test_phi_example(sigma):
    assert phi(sigma) == W("-1,5,2,4,-3")
    assert maj_B(sigma) == 4 == rmaj_B(phi(sigma))
    assert neg_inv(phi(sigma)) == (1, 3)


@pytest.mark.parametrize("m", [1, 3, 6])
def test_phi_identity(m):
    assert phi(identity(m)) == identity(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_phi_laws_exhaustive(m):
    for x in enumerate_group("B", m):
        y = phi(x)
        assert phi(y) == x
        assert maj_B(x) == rmaj_B(y)
        assert neg_inv(x) == neg_inv(y)
        assert len(neg(x)) == len(neg(y))


@given(signed_perms(max_degree=9))
def test_phi_involution_random(x):
    assert phi(phi(x)) == x


@pytest.mark.parametrize("m", range(2, 7))
def test_dmaj_drmaj_equidistributed(m):
    D = list(enumerate_group("D", m))
    assert QPolynomial.from_exponents(map(dmaj, D)) == QPolynomial.from_exponents(map(drmaj_D, D))


def test_main_lemma_example():
    pi = W("3,5,-4,2,-1")
    assert increasing_word(pi) == W("-4,-1,2,3,5")
    assert not membership(increasing_word(pi), "L")
    f = main_lemma_factor(pi)
    assert f.case == 2
    assert f.sigma == W("-1,-4,2,3,5")
    assert compose(f.sigma, f.u) == pi
    assert membership(f.sigma, "L") and membership(f.u, "A")
    assert des_A(f.sigma) == 0
    assert neg_inv(f.sigma) == neg_inv(pi)
    assert des_A_set(f.u) == des_A_set(pi)
    assert inv(f.u) - del_B(f.u) == inv(pi) - del_B(pi)
    assert ell_L(pi) == ell_A(f.u) + sum(neg_inv(pi))


def test_main_lemma_identity():
    f = main_lemma_factor(identity(4))
    assert (f.sigma, f.u, f.case) == (identity(4), identity(4), 1)


def test_main_lemma_rejects_non_L():
    with pytest.raises(MembershipError):
        main_lemma_factor(W("2,1,3"))


@pytest.mark.parametrize("m", range(2, 6))
def test_main_lemma_exhaustive(m):
    L = list(enumerate_group("L", m))
    A = {w.window for w in enumerate_group("A", m)}
    T = [x for x in L if des_A(x) == 0]
    for pi in L:
        f = main_lemma_factor(pi)
        assert compose(f.sigma, f.u) == pi and f.u.window in A
        assert des_A(f.sigma) == 0
        assert neg_inv(f.sigma) == neg_inv(pi)
        assert des_A_set(f.u) == des_A_set(pi)
        assert inv(f.u) - del_B(f.u) == inv(pi) - del_B(pi)
        assert ell_L(pi) == ell_A(f.u) + sum(neg_inv(pi))
        hits = [x for x in T if compose(inverse(x), pi).window in A]
        assert hits == [f.sigma]


@pytest.mark.parametrize("m", range(2, 6))
def test_descent_free_representatives(m):
    L = list(enumerate_group("L", m))
    A = list(enumerate_group("A", m))
    T = [x for x in L if des_A(x) == 0]
    subsets = [c for k in range(m + 1) for c in combinations(range(1, m + 1), k)]
    assert sorted(neg_inv(x) for x in T) == sorted(subsets)
    for B in subsets:
        reps = [x for x in T if set(neg_inv(x)) <= set(B)]
        union = [compose(x, u) for x in reps for u in A]
        target = {pi for pi in L if set(neg_inv(pi)) <= set(B)}
        assert len(union) == len(set(union)) and set(union) == target


@pytest.mark.parametrize("m", range(1, 6))
def test_increasing_word_laws(m):
    bases = {increasing_word(x) for x in enumerate_group("B", m)}
    assert len(bases) == 2**m
    S = list(enumerate_group("S", m))
    for base in bases:
        for v in S:
            x = compose(base, v)
            assert inv(x) == inv(v)
            assert del_B(x) == del_B(v)
            assert ell_L(x) == ell_L(base) + ell_L(v)
