"""The involution ``phi`` on B_m and the factorization ``π = σ u`` on L_m."""

from __future__ import annotations

from dataclasses import dataclass

from .group_core import (
    SignedPermutation, compose, inverse, membership, require_membership, right_multiply, s,
)

__all__ = ["phi", "MainLemmaFactors", "main_lemma_factor", "increasing_word"]


def phi(sigma: SignedPermutation) -> SignedPermutation:
    """
    Reverse the window, then swap each letter with its mirror in sorted order.

    Exchanges ``maj_B`` with ``rmaj_B`` and keeps the set of letters, hence
    ``Neg(σ^{-1})``.

    >>> from signedeven.group_core import parse_window
    >>> str(phi(parse_window("5,-1,2,-3,4")))
    '-1,5,2,4,-3'
    """
    letters = sorted(sigma.window)
    mirror = dict(zip(letters, reversed(letters)))
    return SignedPermutation(tuple(mirror[x] for x in reversed(sigma.window)))


def increasing_word(sigma: SignedPermutation) -> SignedPermutation:
    """The element whose window lists the letters of ``σ`` in increasing order."""
    return SignedPermutation(tuple(sorted(sigma.window)))


@dataclass(frozen=True)
class MainLemmaFactors:
    """``source = sigma * u`` with ``u`` in A_m and ``des_A(sigma) = 0``.

    ``case`` is 1 when the increasing word itself lies in L_m and 2 when it
    had to be corrected by ``s_1``.
    """
    source: SignedPermutation
    sigma: SignedPermutation
    u: SignedPermutation
    case: int


def main_lemma_factor(pi: SignedPermutation) -> MainLemmaFactors:
    require_membership(pi, "L")
    if pi.degree < 2:
        raise ValueError("the factorization needs degree at least 2")
    base = increasing_word(pi)
    if membership(base, "L"):
        return MainLemmaFactors(pi, base, compose(inverse(base), pi), 1)
    # the increasing word is odd; s_1 fixes the parity without creating A-descents
    sigma = right_multiply(base, s(1))
    return MainLemmaFactors(pi, sigma, compose(inverse(sigma), pi), 2)
