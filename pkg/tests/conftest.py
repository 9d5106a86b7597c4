import itertools

import pytest
from hypothesis import strategies as st

from signedeven.group_core import SignedPermutation, parse_window


@st.composite
def signed_perms(draw, min_degree=1, max_degree=8, degree=None):
    m = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    perm = draw(st.permutations(range(1, m + 1)))
    signs = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    return SignedPermutation(tuple(-x if neg else x for x, neg in zip(perm, signs)))


def brute_force_group(group, m):
    """Filter all of B_m by the defining condition, independently of enumerate_group."""
    out = []
    for perm in itertools.permutations(range(1, m + 1)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        even = inversions % 2 == 0
        for signs in itertools.product((1, -1), repeat=m):
            w = tuple(x * e for x, e in zip(perm, signs))
            negs = signs.count(-1)
            ok = {
                "B": True, "S": negs == 0, "A": negs == 0 and even, "D": negs % 2 == 0,
                "L": even, "LD": even and negs % 2 == 0,
            }[group]
            if ok:
                out.append(w)
    return sorted(out)


@pytest.fixture
def sigma():
    return parse_window("5,-1,2,-3,4")


def strict_nrmaj(pi):
    """nrmaj_L computed from a mutated Des_A that uses a strict comparison."""
    from signedeven.group_core import a, right_multiply
    from signedeven.statistics import ell_L, neg_inv

    m = pi.degree
    base = ell_L(pi)
    des = [i for i in range(1, m - 1) if ell_L(right_multiply(pi, a(i))) < base]
    return sum(m - 1 - i for i in des) + sum(neg_inv(pi))
