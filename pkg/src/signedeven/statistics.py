"""
Permutation statistics on B_m and its subgroups.

Set-valued statistics are returned as sorted tuples of indices.  Functions
whose definition needs group membership raise
:class:`~signedeven.group_core.MembershipError` outside their group;
:func:`statistics_record` instead leaves those fields as ``None``.

>>> from signedeven.group_core import parse_window
>>> sigma = parse_window("5,-1,2,-3,4")
>>> inv(sigma), ltrm_set(sigma), ell_B(sigma), des_S(sigma)
(6, (2, 4), 10, (1, 3))
>>> des_A_set(sigma), rmaj_L(sigma), nrmaj_L(sigma)
((1, 2), 5, 9)
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

from .group_core import (
    SignedPermutation, a, membership, require_membership, right_multiply,
)

__all__ = [
    "inv", "ltrm_set", "del_B", "neg", "neg_inv", "ell_B", "ell_L",
    "ell_S", "ell_A", "ell_D", "ell_LD", "des_S", "des_B", "maj_B", "rmaj_B",
    "des_A_set", "des_A", "rmaj_L", "nrmaj_L", "dmaj", "drmaj_D", "drmaj_LD",
    "StatisticsRecord", "statistics_record", "STATISTICS",
]


def inv(sigma: SignedPermutation) -> int:
    w = sigma.window
    m = len(w)
    return sum(1 for i in range(m) for j in range(i + 1, m) if w[i] > w[j])


def ltrm_set(sigma: SignedPermutation) -> tuple[int, ...]:
    """Positions ``j >= 2`` holding an entry smaller than everything before it."""
    w = sigma.window
    out = []
    lowest = w[0]
    for j in range(1, len(w)):
        if w[j] < lowest:
            out.append(j + 1)
            lowest = w[j]
    return tuple(out)


def del_B(sigma: SignedPermutation) -> int:
    return len(ltrm_set(sigma))


def neg(sigma: SignedPermutation) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(sigma.window, 1) if x < 0)


def neg_inv(sigma: SignedPermutation) -> tuple[int, ...]:
    # Neg(σ^{-1}) read off σ directly: the absolute values of the negative letters
    return tuple(sorted(-x for x in sigma.window if x < 0))


def ell_B(sigma: SignedPermutation) -> int:
    return inv(sigma) + sum(neg_inv(sigma))


def ell_L(sigma: SignedPermutation) -> int:
    """``ell_B - del_B``; defined on all of B_m but only meaningful on L_m."""
    return ell_B(sigma) - del_B(sigma)


def ell_S(w: SignedPermutation) -> int:
    require_membership(w, "S")
    return inv(w)


def ell_A(w: SignedPermutation) -> int:
    """Length of the A-canonical word, via ``inv - del``."""
    require_membership(w, "A")
    return inv(w) - del_B(w)


def ell_D(sigma: SignedPermutation) -> int:
    require_membership(sigma, "D")
    return ell_B(sigma) - len(neg(sigma))


def ell_LD(pi: SignedPermutation) -> int:
    require_membership(pi, "LD")
    return ell_B(pi) - len(neg(pi)) - del_B(pi)


def des_S(sigma: SignedPermutation) -> tuple[int, ...]:
    w = sigma.window
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des_B(sigma: SignedPermutation) -> tuple[int, ...]:
    head = (0,) if sigma.window[0] < 0 else ()
    return head + des_S(sigma)


def maj_B(sigma: SignedPermutation) -> int:
    return sum(des_S(sigma))


def rmaj_B(sigma: SignedPermutation) -> int:
    m = sigma.degree
    return sum(m - i for i in des_S(sigma))


def des_A_set(pi: SignedPermutation) -> tuple[int, ...]:
    """
    ``{1 <= i <= m-2 : ell_L(π a_i) <= ell_L(π)}``, evaluated literally.

    The comparison is not strict, and the set is in general not the set of
    window descents of ``π``.
    """
    m = pi.degree
    base = ell_L(pi)
    out = []
    for i in range(1, m - 1):
        if ell_L(right_multiply(pi, a(i))) <= base:
            out.append(i)
    return tuple(out)


def des_A(pi: SignedPermutation) -> int:
    return len(des_A_set(pi))


def rmaj_L(pi: SignedPermutation) -> int:
    require_membership(pi, "L")
    n = pi.degree - 1
    return sum(n - i for i in des_A_set(pi))


def nrmaj_L(pi: SignedPermutation) -> int:
    return rmaj_L(pi) + sum(neg_inv(pi))


def dmaj(sigma: SignedPermutation) -> int:
    require_membership(sigma, "D")
    return maj_B(sigma) - len(neg(sigma)) + sum(neg_inv(sigma))


def drmaj_D(sigma: SignedPermutation) -> int:
    require_membership(sigma, "D")
    return rmaj_B(sigma) - len(neg(sigma)) + sum(neg_inv(sigma))


def drmaj_LD(pi: SignedPermutation) -> int:
    require_membership(pi, "LD")
    return rmaj_L(pi) - len(neg(pi)) + sum(neg_inv(pi))


# statistic name -> (function, group on which it is defined)
STATISTICS = {
    "inv": (inv, "B"),
    "del_B": (del_B, "B"),
    "ell_B": (ell_B, "B"),
    "ell_L": (ell_L, "B"),
    "ell_S": (ell_S, "S"),
    "ell_A": (ell_A, "A"),
    "ell_D": (ell_D, "D"),
    "ell_LD": (ell_LD, "LD"),
    "maj_B": (maj_B, "B"),
    "rmaj_B": (rmaj_B, "B"),
    "des_A": (des_A, "B"),
    "rmaj_L": (rmaj_L, "L"),
    "nrmaj_L": (nrmaj_L, "L"),
    "dmaj": (dmaj, "D"),
    "drmaj_D": (drmaj_D, "D"),
    "drmaj_LD": (drmaj_LD, "LD"),
}


@dataclass(frozen=True)
class StatisticsRecord:
    window: tuple[int, ...]
    inv: int
    ltrm: tuple[int, ...]
    del_B: int
    neg: tuple[int, ...]
    neg_inv: tuple[int, ...]
    ell_B: int
    ell_L: int
    ell_S: Optional[int]
    ell_A: Optional[int]
    ell_D: Optional[int]
    ell_LD: Optional[int]
    des_S: tuple[int, ...]
    des_B: tuple[int, ...]
    des_A: tuple[int, ...]
    maj_B: int
    rmaj_B: int
    rmaj_L: Optional[int]
    nrmaj_L: Optional[int]
    dmaj: Optional[int]
    drmaj_D: Optional[int]
    drmaj_LD: Optional[int]

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def statistics_record(sigma: SignedPermutation) -> StatisticsRecord:
    def when(group, fn):
        return fn(sigma) if membership(sigma, group) else None

    return StatisticsRecord(
        window=sigma.window,
        inv=inv(sigma),
        ltrm=ltrm_set(sigma),
        del_B=del_B(sigma),
        neg=neg(sigma),
        neg_inv=neg_inv(sigma),
        ell_B=ell_B(sigma),
        ell_L=ell_L(sigma),
        ell_S=when("S", ell_S),
        ell_A=when("A", ell_A),
        ell_D=when("D", ell_D),
        ell_LD=when("LD", ell_LD),
        des_S=des_S(sigma),
        des_B=des_B(sigma),
        des_A=des_A_set(sigma),
        maj_B=maj_B(sigma),
        rmaj_B=rmaj_B(sigma),
        rmaj_L=when("L", rmaj_L),
        nrmaj_L=when("L", nrmaj_L),
        dmaj=when("D", dmaj),
        drmaj_D=when("D", drmaj_D),
        drmaj_LD=when("LD", drmaj_LD),
    )
