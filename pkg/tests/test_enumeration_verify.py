from itertools import combinations
from math import factorial

import pytest

from signedeven.enumeration_verify import (
    GFQuery, des_A_witness, generating_function, prop1_subsets, run_checks, standard_checks,
    verify_biagioli, verify_cor_inex, verify_lengths, verify_prop1, verify_prop2, verify_rr61,
    verify_structure, verify_witnesses,
)
from signedeven.group_core import BudgetExceededError, SignedPermutation, group_order, membership
from signedeven.qpolynomial import QPolynomial, product_formula_L
from signedeven.statistics import ell_L

from conftest import strict_nrmaj


def test_gf_examples():
    assert generating_function(GFQuery("L", 2, "ell_L", "subset", (1, 2))) == QPolynomial((1, 1, 1, 1))
    for m in range(1, 5):
        assert generating_function(GFQuery("B", m, "ell_B"))(1) == 2**m * factorial(m)
    q = GFQuery("L", 5, "nrmaj_L", "subset", {1, 3})
    assert generating_function(q) == product_formula_L({1, 3}, 4)


def test_gf_callable_statistic():
    assert generating_function(GFQuery("A", 4, ell_L)) == generating_function(GFQuery("A", 4, "ell_A"))


@pytest.mark.parametrize("m", [3, 4])
def test_subset_count_is_sum_of_exact_counts(m):
    B = (1, 3)
    total = generating_function(GFQuery("L", m, "ell_L", "subset", B))(1)
    parts = sum(generating_function(GFQuery("L", m, "ell_L", "equal", C))(1)
                for k in range(len(B) + 1) for C in combinations(B, k))
    assert total == parts
    cards = sum(generating_function(GFQuery("L", m, "ell_L", "card", k))(1) for k in range(m + 1))
    assert cards == group_order("L", m)


def test_query_validation():
    with pytest.raises(ValueError):
        GFQuery("L", 3, "ell_L", "subset", (4,))
    with pytest.raises(ValueError):
        GFQuery("B", 3, "ell_A")
    with pytest.raises(ValueError):
        GFQuery("L", 3, "no_such_stat")
    with pytest.raises(ValueError):
        GFQuery("L", 3, "ell_L", "superset", (1,))


def test_budget():
    with pytest.raises(BudgetExceededError):
        generating_function(GFQuery("B", 6, "ell_B"), budget=100)


def test_prop1_examples():
    assert verify_prop1(1, ()).passed
    assert all(verify_prop1(3, B).passed for B in prop1_subsets(3))
    r = verify_prop1(4, (1, 3))
    assert r.passed and r.counterexample is None
    assert set(r.sides) == {"nrmaj_L", "ell_L", "product"}


def test_prop1_subsets():
    assert len(prop1_subsets(3)) == 16
    big = prop1_subsets(5, seed=0)
    assert len(big) == 32 and big == prop1_subsets(5, seed=0)
    assert big != prop1_subsets(5, seed=1)


def test_cor_inex_examples():
    assert verify_cor_inex(1, ()).passed
    assert verify_cor_inex(2, (2,)).passed
    assert all(verify_cor_inex(3, B).passed for B in prop1_subsets(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_prop2(n):
    r = verify_prop2(n)
    assert r.passed and all(d["passed"] for d in r.details)
    assert len(r.details) == (n + 1) // 2 + 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_biagioli(n):
    assert verify_biagioli(n).passed


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_rr61_at_t_one(n):
    assert verify_rr61(n).passed


def test_rr61_bivariate_is_exploratory():
    r = verify_rr61(3, include_t=True)
    assert r.exploratory and not r.passed
    assert str(r.sides["product"]) == "1 + q + 2qt + 4q^2t + 4q^3t^2"
    assert verify_rr61(2, include_t=True).passed


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_structure_and_lengths(m):
    for r in (verify_structure(m), verify_lengths(m)):
        failed = [d["check"] for d in r.details if not d["passed"]]
        assert r.passed, failed


def test_witnesses():
    r = verify_witnesses()
    assert r.passed
    w = des_A_witness(5)
    assert w is not None


def test_mutation_is_caught():
    broken = [verify_prop1(n, B, nrmaj=strict_nrmaj) for n in (1, 2, 3) for B in prop1_subsets(n)]
    failed = [r for r in broken if not r.passed]
    assert failed
    for r in failed:
        assert r.counterexample is not None
        assert membership(SignedPermutation(r.counterexample), "L")


def test_report_to_dict():
    d = verify_prop1(2, (1,)).to_dict()
    assert d["identity"] == "prop1" and d["params"] == {"n": 2, "B": [1]}
    assert d["sides"]["product"]["text"] == str(product_formula_L((1,), 2))


def test_run_checks_keeps_order():
    checks = standard_checks(3)
    serial = run_checks(checks, threads=1)
    parallel = run_checks(checks, threads=2)
    assert [(r.identity, r.params, r.passed) for r in serial] == \
           [(r.identity, r.params, r.passed) for r in parallel]
    assert all(r.passed for r in serial if not r.exploratory)
