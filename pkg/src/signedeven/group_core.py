"""
Signed permutations in window notation, the Coxeter-type generators acting on
them, and membership tests for the six groups used throughout the package.

An element of B_m is stored by its positive window ``[σ(1), ..., σ(m)]``;
``σ(-i) = -σ(i)`` is implied.  Products follow ``(στ)(i) = σ(τ(i))``, so right
multiplication by ``s_i`` swaps window positions ``i`` and ``i+1`` and right
multiplication by ``s_0`` negates the first entry.

>>> sigma = parse_window("5,-1,2,-3,4")
>>> compose(sigma, eval_word(parse_word("s0", 5)))
SignedPermutation(window=(-5, -1, 2, -3, 4))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GROUPS", "DEFAULT_BUDGET",
    "SignedPermutation", "GeneratorToken", "GeneratorWord",
    "DegreeMismatchError", "MembershipError", "BudgetExceededError",
    "WindowParseError", "WordParseError",
    "identity", "compose", "inverse", "abs_map", "embed", "restrict",
    "right_multiply", "eval_word", "invert_word", "concat_words",
    "parse_window", "format_window", "parse_token", "parse_word", "format_word",
    "s", "a", "a1inv",
    "is_even_permutation", "membership", "require_membership",
    "group_order", "enumerate_group",
]

GROUPS = ("S", "A", "B", "D", "L", "LD")

# enumeration refuses groups larger than this unless told otherwise
DEFAULT_BUDGET = 10**7


class DegreeMismatchError(ValueError):
    pass


class MembershipError(ValueError):
    """An element was passed to an operation defined only on a subgroup."""

    def __init__(self, sigma: "SignedPermutation", group: str):
        self.sigma = sigma
        self.group = group
        super().__init__(f"{format_window(sigma)} is not in {group}_{sigma.degree}")


class BudgetExceededError(RuntimeError):
    pass


class WindowParseError(ValueError):
    """Malformed window text; ``position`` is the 1-based entry at fault."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"entry {position}: {message}"
        super().__init__(message)


class WordParseError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = self.window
        if not isinstance(w, tuple):
            object.__setattr__(self, "window", w := tuple(w))
        m = len(w)
        if m == 0:
            raise ValueError("degree must be at least 1")
        if sorted(abs(x) for x in w) != list(range(1, m + 1)):
            raise ValueError(f"{list(w)} is not a signed permutation of 1..{m}")

    @property
    def degree(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Evaluate at a nonzero ``i`` with ``|i| <= degree``."""
        if i == 0 or abs(i) > len(self.window):
            raise ValueError(f"{i} outside ±[{len(self.window)}]")
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self):
        return format_window(self)


def _trusted(window: tuple[int, ...]) -> SignedPermutation:
    # skips validation; only for windows built by the functions in this module
    obj = object.__new__(SignedPermutation)
    object.__setattr__(obj, "window", window)
    return obj


def identity(m: int) -> SignedPermutation:
    if m < 1:
        raise ValueError("degree must be at least 1")
    return _trusted(tuple(range(1, m + 1)))


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """Return ``στ``, i.e. the map ``i -> σ(τ(i))``."""
    if sigma.degree != tau.degree:
        raise DegreeMismatchError(f"degrees {sigma.degree} and {tau.degree} differ")
    sw = sigma.window
    return _trusted(tuple(sw[t - 1] if t > 0 else -sw[-t - 1] for t in tau.window))


def inverse(sigma: SignedPermutation) -> SignedPermutation:
    out = [0] * sigma.degree
    for i, x in enumerate(sigma.window, 1):
        out[abs(x) - 1] = i if x > 0 else -i
    return _trusted(tuple(out))


def abs_map(sigma: SignedPermutation) -> SignedPermutation:
    return _trusted(tuple(abs(x) for x in sigma.window))


def embed(sigma: SignedPermutation, m: int) -> SignedPermutation:
    """Pad with fixed points to view ``σ`` as an element of B_m."""
    if m < sigma.degree:
        raise DegreeMismatchError(f"cannot embed degree {sigma.degree} into {m}")
    return _trusted(sigma.window + tuple(range(sigma.degree + 1, m + 1)))


def restrict(sigma: SignedPermutation, m: int) -> SignedPermutation:
    """Inverse of :func:`embed`; the dropped points must be fixed."""
    w = sigma.window
    if m > len(w) or any(w[i] != i + 1 for i in range(m, len(w))):
        raise DegreeMismatchError(f"{format_window(sigma)} does not fix {m + 1}..{len(w)}")
    return _trusted(w[:m])


# -- generators and words ---------------------------------------------------

@dataclass(frozen=True)
class GeneratorToken:
    """One of ``s_i``, ``a_i`` or ``a_1^{-1}`` (``letter='a', index=1, inverse=True``)."""
    letter: str
    index: int
    inverse: bool = False

    def __post_init__(self):
        if self.letter not in ("s", "a"):
            raise ValueError(f"unknown generator letter {self.letter!r}")
        if self.index < 0:
            raise ValueError("generator index must be nonnegative")
        if self.inverse and (self.letter, self.index) != ("a", 1):
            raise ValueError("only a_1 has a distinct inverse token")

    def min_degree(self) -> int:
        """Smallest degree in which the token denotes an element."""
        if self.letter == "s":
            return self.index + 1
        return 1 if self.index == 0 else self.index + 2

    def inverted(self) -> "GeneratorToken":
        if self.letter == "a" and self.index == 1:
            return GeneratorToken("a", 1, not self.inverse)
        return self

    def __str__(self):
        return f"{self.letter}{self.index}" + ("^-1" if self.inverse else "")


def s(i: int) -> GeneratorToken:
    return GeneratorToken("s", i)


def a(i: int) -> GeneratorToken:
    return GeneratorToken("a", i)


def a1inv() -> GeneratorToken:
    return GeneratorToken("a", 1, True)


@dataclass(frozen=True)
class GeneratorWord:
    degree: int
    tokens: tuple[GeneratorToken, ...] = ()

    def __post_init__(self):
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        for t in self.tokens:
            if t.min_degree() > self.degree:
                raise ValueError(f"token {t} is not defined in degree {self.degree}")

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self):
        return format_word(self)


def _apply_token(w: list[int], t: GeneratorToken) -> None:
    # right multiplication, in place
    if t.letter == "s":
        swaps = [t.index]
    elif t.index == 0:
        swaps = [0]
    elif t.inverse:
        swaps = [2, 1]
    else:
        swaps = [1, t.index + 1]
    for i in swaps:
        if i == 0:
            w[0] = -w[0]
        else:
            w[i - 1], w[i] = w[i], w[i - 1]


def right_multiply(sigma: SignedPermutation, token: GeneratorToken) -> SignedPermutation:
    """Return ``σ·t`` for a single generator ``t``."""
    if token.min_degree() > sigma.degree:
        raise ValueError(f"token {token} is not defined in degree {sigma.degree}")
    w = list(sigma.window)
    _apply_token(w, token)
    return _trusted(tuple(w))


def eval_word(word: GeneratorWord) -> SignedPermutation:
    """Multiply out a word left to right; the empty word is the identity."""
    w = list(range(1, word.degree + 1))
    for t in word.tokens:
        _apply_token(w, t)
    return _trusted(tuple(w))


def invert_word(word: GeneratorWord) -> GeneratorWord:
    return GeneratorWord(word.degree, tuple(t.inverted() for t in reversed(word.tokens)))


def concat_words(words: Iterable[GeneratorWord], degree: int) -> GeneratorWord:
    return GeneratorWord(degree, tuple(t for w in words for t in w.tokens))


# -- text formats -----------------------------------------------------------

_INT = re.compile(r"-?[0-9]+")


def parse_window(text: str) -> SignedPermutation:
    """
    Parse ``5,-1,2,-3,4`` (surrounding brackets allowed).

    >>> parse_window("[2,-1]").window
    (2, -1)
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        raise WindowParseError("empty window")
    entries = [e.strip() for e in body.split(",")]
    values = []
    for pos, e in enumerate(entries, 1):
        if not _INT.fullmatch(e):
            raise WindowParseError(f"{e!r} is not an integer", pos)
        values.append(int(e))
    m = len(values)
    seen: dict[int, int] = {}
    for pos, v in enumerate(values, 1):
        if v == 0:
            raise WindowParseError("zero entry", pos)
        if abs(v) > m:
            raise WindowParseError(f"|{v}| exceeds the degree {m}", pos)
        if abs(v) in seen:
            raise WindowParseError(f"|{v}| already used at entry {seen[abs(v)]}", pos)
        seen[abs(v)] = pos
    return _trusted(tuple(values))


def format_window(sigma: SignedPermutation) -> str:
    return ",".join(str(x) for x in sigma.window)


_TOKEN = re.compile(r"([sa])([0-9]+)(\^-1)?")


def parse_token(text: str) -> GeneratorToken:
    m = _TOKEN.fullmatch(text)
    if not m:
        raise WordParseError(f"bad generator token {text!r}")
    letter, index, inv = m.group(1), int(m.group(2)), bool(m.group(3))
    try:
        return GeneratorToken(letter, index, inv)
    except ValueError as exc:
        raise WordParseError(str(exc)) from None


def parse_word(text: str, degree: int | None = None) -> GeneratorWord:
    """
    Parse whitespace-separated tokens.  Parenthesised factors and the
    identity symbol ``1`` (as printed for canonical presentations) are accepted.
    Without ``degree`` the smallest degree admitting every token is used.
    """
    flat = text.replace("(", " ").replace(")", " ").split()
    tokens = tuple(parse_token(t) for t in flat if t != "1")
    if degree is None:
        degree = max([t.min_degree() for t in tokens], default=1)
    try:
        return GeneratorWord(degree, tokens)
    except ValueError as exc:
        raise WordParseError(str(exc)) from None


def format_word(word: GeneratorWord | Sequence[GeneratorToken]) -> str:
    tokens = word.tokens if isinstance(word, GeneratorWord) else word
    return " ".join(str(t) for t in tokens) if tokens else "1"


# -- groups -----------------------------------------------------------------

def is_even_permutation(window: Sequence[int]) -> bool:
    """Parity of ``|window|`` read as an ordinary permutation."""
    perm = [abs(x) - 1 for x in window]
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


def membership(sigma: SignedPermutation, group: str) -> bool:
    w = sigma.window
    negs = sum(1 for x in w if x < 0)
    if group == "B":
        return True
    if group == "S":
        return negs == 0
    if group == "A":
        return negs == 0 and is_even_permutation(w)
    if group == "D":
        return negs % 2 == 0
    if group == "L":
        return is_even_permutation(w)
    if group == "LD":
        return negs % 2 == 0 and is_even_permutation(w)
    raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")


def require_membership(sigma: SignedPermutation, group: str) -> None:
    if not membership(sigma, group):
        raise MembershipError(sigma, group)


def group_order(group: str, m: int) -> int:
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")
    if m < 1:
        raise ValueError("degree must be at least 1")
    f = factorial(m)
    # the parity conditions only cut in half once there is something to cut
    halve_abs = 2 if m >= 2 else 1
    return {
        "S": f,
        "A": f // halve_abs,
        "B": 2**m * f,
        "D": 2**(m - 1) * f,
        "L": 2**m * f // halve_abs,
        "LD": 2**(m - 1) * f // halve_abs,
    }[group]


def _signed_windows(m: int) -> Iterator[tuple[int, ...]]:
    # lexicographic on windows: at each position try candidates in increasing order
    candidates = [x for x in range(-m, m + 1) if x != 0]
    used = [False] * (m + 1)
    prefix: list[int] = []

    def rec():
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for c in candidates:
            if not used[abs(c)]:
                used[abs(c)] = True
                prefix.append(c)
                yield from rec()
                prefix.pop()
                used[abs(c)] = False

    yield from rec()


def enumerate_group(group: str, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[SignedPermutation]:
    """
    Yield every element of ``group`` in degree ``m`` once, in lexicographic
    order of windows.

    >>> [str(x) for x in enumerate_group("L", 2)]
    ['-1,-2', '-1,2', '1,-2', '1,2']
    """
    size = group_order(group, m)
    if size > budget:
        raise BudgetExceededError(f"|{group}_{m}| = {size} exceeds the budget {budget}")
    if group in ("S", "A"):
        windows = permutations(range(1, m + 1))
    else:
        windows = _signed_windows(m)
    if group == "B":
        for w in windows:
            yield _trusted(w)
        return
    for w in windows:
        sigma = _trusted(w)
        if membership(sigma, group):
            yield sigma
