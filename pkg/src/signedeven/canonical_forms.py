"""
Canonical presentations in S_m, B_m, A_m and L_m.

Every element factors uniquely as a product ``g_first ... g_last`` with one
factor taken from each family ``R_j`` of its style.  Factors are kept as the
literal words of the family lists, so they can be compared token by token.

>>> from signedeven.group_core import parse_window
>>> print(canonical_L(parse_window("3,5,-4,2,-1")))
(a0)(a1)(a2 a1^-1 a0)(a3 a2 a1)
>>> print(canonical_B(parse_window("5,-1,2,-3,4")))
(s0)(1)(s2 s1 s0 s1 s2)(1)(s4 s3 s2 s1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .group_core import (
    GeneratorToken, GeneratorWord, SignedPermutation, a, a1inv, concat_words, embed,
    eval_word, format_word, invert_word, require_membership, restrict, right_multiply, s,
)
from .statistics import ell_B

__all__ = [
    "STYLES", "CanonicalPresentation", "family_range", "word_degree", "family",
    "canonical", "canonical_S", "canonical_B", "canonical_A", "canonical_L",
    "is_reduced_B",
]

STYLES = ("S", "B", "A", "L")


def word_degree(style: str, m: int) -> int:
    """Degree in which the words of a style are spelled out.

    The L_2 family mentions ``a_1``, which needs three letters, so L-style
    words never drop below degree 3.
    """
    return max(m, 3) if style == "L" else m


def family_range(style: str, m: int) -> range:
    """Indices ``j`` of the families used for degree ``m``."""
    if style == "S":
        return range(1, m)
    if style == "B":
        return range(0, m)
    if style == "A":
        return range(1, m - 1)
    if style == "L":
        return range(0, m - 1)
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


def _down(letter: str, hi: int, lo: int) -> list[GeneratorToken]:
    # x_hi x_{hi-1} ... x_lo (empty when hi < lo)
    return [GeneratorToken(letter, i) for i in range(hi, lo - 1, -1)]


def _up(letter: str, lo: int, hi: int) -> list[GeneratorToken]:
    return [GeneratorToken(letter, i) for i in range(lo, hi + 1)]


@lru_cache(maxsize=None)
def _family_tokens(style: str, j: int) -> tuple[tuple[GeneratorToken, ...], ...]:
    if style == "S":
        words = [_down("s", j, k) for k in range(j + 1, 0, -1)]
    elif style == "B":
        words = [_down("s", j, k) for k in range(j + 1, 0, -1)]
        words += [_down("s", j, 1) + [s(0)] + _up("s", 1, k) for k in range(0, j + 1)]
    elif style == "A":
        words = [_down("a", j, k) for k in range(j + 1, 1, -1)]
        words += [_down("a", j, 2) + [a(1)], _down("a", j, 2) + [a1inv()]]
    elif style == "L":
        if j == 0:
            words = [[], [a(0)], [a(1), a(0), a1inv()], [a(0), a(1), a(0), a1inv()]]
        else:
            head = _down("a", j, 2) + [a1inv(), a(0)]
            words = [list(w) for w in _family_tokens("A", j)]
            words += [head, head + [a1inv()]]
            words += [head + _up("a", 1, k) for k in range(1, j + 1)]
    else:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    return tuple(tuple(w) for w in words)


def family(style: str, j: int, m: int) -> list[GeneratorWord]:
    """
    The family ``R_j`` of ``style`` as words of degree ``word_degree(style, m)``,
    in the order they are usually listed.

    >>> [str(w) for w in family("L", 0, 3)]
    ['1', 'a0', 'a1 a0 a1^-1', 'a0 a1 a0 a1^-1']
    """
    if j not in family_range(style, m):
        raise ValueError(f"R_{j}^{style} is not a family of degree {m}")
    d = word_degree(style, m)
    return [GeneratorWord(d, w) for w in _family_tokens(style, j)]


@dataclass(frozen=True)
class CanonicalPresentation:
    style: str
    degree: int
    factors: tuple[GeneratorWord, ...]

    @property
    def flattened(self) -> GeneratorWord:
        return concat_words(self.factors, word_degree(self.style, self.degree))

    def evaluate(self) -> SignedPermutation:
        """Multiply the factors back together, as an element of degree ``degree``."""
        return restrict(eval_word(self.flattened), self.degree)

    def to_dict(self) -> dict:
        return {
            "style": self.style,
            "degree": self.degree,
            "factors": [[str(t) for t in f] for f in self.factors],
            "flattened": [str(t) for t in self.flattened],
        }

    def __str__(self):
        return "".join(f"({format_word(f)})" for f in self.factors)


def _apply(cur: SignedPermutation, tokens) -> SignedPermutation:
    for t in tokens:
        cur = right_multiply(cur, t)
    return cur


def canonical_S(w: SignedPermutation) -> CanonicalPresentation:
    require_membership(w, "S")
    m = w.degree
    factors = []
    cur = w
    for j in range(m - 1, 0, -1):
        r = cur.window.index(j + 1) + 1
        factor = GeneratorWord(m, _down("s", j, r))
        cur = _apply(cur, invert_word(factor).tokens)
        factors.append(factor)
    return CanonicalPresentation("S", m, tuple(reversed(factors)))


def canonical_B(sigma: SignedPermutation) -> CanonicalPresentation:
    m = sigma.degree
    factors = []
    cur = sigma
    for j in range(m, 0, -1):
        r = [abs(x) for x in cur.window].index(j) + 1
        if cur.window[r - 1] > 0:
            tokens = _down("s", j - 1, r)
        else:
            tokens = _down("s", j - 1, 1) + [s(0)] + _up("s", 1, r - 1)
        factor = GeneratorWord(m, tokens)
        cur = _apply(cur, invert_word(factor).tokens)
        factors.append(factor)
    return CanonicalPresentation("B", m, tuple(reversed(factors)))


def _pull_right(r: int, n: int) -> list[GeneratorToken]:
    # right multiplier taking the letter n+1 at position r > 0 to position n+1
    if r > 2:
        return _up("a", r - 1, n - 1)
    if r == 2:
        return [a1inv()] + _up("a", 2, n - 1)
    return _up("a", 1, n - 1)


def _correct_sign(r: int) -> list[GeneratorToken]:
    # right multiplier taking -(n+1) at position r to +(n+1) at position 1
    if r > 3:
        return _down("a", r - 2, 2) + [a1inv(), a(0)]
    if r == 3:
        return [a1inv(), a(0)]
    if r == 2:
        return [a(1), a(0)]
    return [a(0)]


def _peel(pi: SignedPermutation, d: int, lowest: int, allow_signs: bool) -> tuple[list[GeneratorWord], SignedPermutation]:
    # run the peeling steps for the letters m, m-1, ..., lowest+1
    m = pi.degree
    cur = pi if d == m else embed(pi, d)
    factors = []
    for top in range(m, lowest, -1):
        n = top - 1
        r = [abs(x) for x in cur.window].index(top) + 1
        applied: list[GeneratorToken] = []
        if cur.window[r - 1] < 0:
            if not allow_signs:
                raise AssertionError("signed letter while peeling an unsigned element")
            applied = _correct_sign(r)
            r = 1
        applied = applied + _pull_right(r, n)
        cur = _apply(cur, applied)
        factors.append(invert_word(GeneratorWord(d, tuple(applied))))
    return factors, cur


def canonical_A(v: SignedPermutation) -> CanonicalPresentation:
    require_membership(v, "A")
    m = v.degree
    if m < 2:
        return CanonicalPresentation("A", m, ())
    factors, rest = _peel(v, m, 2, allow_signs=False)
    assert rest.window[:2] == (1, 2)
    return CanonicalPresentation("A", m, tuple(reversed(factors)))


@lru_cache(maxsize=None)
def _base_L(d: int) -> dict[tuple[int, int], GeneratorWord]:
    out = {}
    for w in family("L", 0, d):
        out[eval_word(w).window[:2]] = w
    return out


def canonical_L(pi: SignedPermutation) -> CanonicalPresentation:
    """
    Factor ``π ∈ L_m`` by repeatedly moving the largest letter home.

    When ``m`` sits at position ``r`` with a minus sign, a short word first
    turns it into ``+m`` at the front; then ``a_1 ... a_{m-2}`` (or its
    ``r = 2``/``r > 2`` variants) pulls it to the last position.  The top
    factor is the inverse of the word applied, and the process recurses on
    the first ``m - 1`` letters until only L_2 is left.

    >>> from signedeven.group_core import parse_window
    >>> print(canonical_L(parse_window("-3,1,-2")))
    (a1 a0 a1^-1)(a1^-1 a0)
    """
    require_membership(pi, "L")
    m = pi.degree
    if m < 2:
        raise ValueError("L-canonical presentations start at degree 2")
    d = word_degree("L", m)
    factors, rest = _peel(pi, d, 2, allow_signs=True)
    factors.append(_base_L(d)[rest.window[:2]])
    return CanonicalPresentation("L", m, tuple(reversed(factors)))


def canonical(sigma: SignedPermutation, style: str) -> CanonicalPresentation:
    try:
        fn = {"S": canonical_S, "B": canonical_B, "A": canonical_A, "L": canonical_L}[style]
    except KeyError:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}") from None
    return fn(sigma)


def is_reduced_B(word: GeneratorWord) -> bool:
    """Whether an ``s``-word has the minimum length for the element it spells."""
    if any(t.letter != "s" for t in word):
        raise ValueError("is_reduced_B takes words in s_0, ..., s_{m-1} only")
    return len(word) == ell_B(eval_word(word))
