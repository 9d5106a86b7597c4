"""
Exact integer polynomials in ``q`` and in ``(q, t)``, and the product formulas
they are compared against.

>>> one_plus = lambda k: QPolynomial.monomial(0) + QPolynomial.monomial(k)
>>> print(one_plus(1) * one_plus(2))
1 + q + q^2 + q^3
>>> print(product_formula_RR(3))
1 + q + 2qt + 4q^2t + 4q^3t^2
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "COEFF_LIMIT", "MAX_DEGREE", "DegreeBoundError",
    "QPolynomial", "QTPolynomial", "product_formula_L", "product_formula_RR",
]

# coefficients must fit a signed 64-bit integer
COEFF_LIMIT = 2**63 - 1
# generating functions here stay near degree m^2; anything far beyond is a misconfigured run
MAX_DEGREE = 10_000


class DegreeBoundError(OverflowError):
    pass


def _check_coeff(c: int) -> int:
    if abs(c) > COEFF_LIMIT:
        raise OverflowError(f"coefficient {c} does not fit in 64 bits")
    return c


def _term(coeff: int, body: str, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    text = body if mag == 1 and body else f"{mag}{body}"
    if first:
        return text if sign == "+" else f"-{text}"
    return f" {sign} {text}"


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True)
class QPolynomial:
    """Dense ascending coefficients, trailing zeros removed."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        if len(c) - 1 > MAX_DEGREE:
            raise DegreeBoundError(f"degree {len(c) - 1} exceeds {MAX_DEGREE}")
        for x in c:
            _check_coeff(x)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPolynomial":
        """``sum(q**e for e in exponents)``."""
        counts = Counter(exponents)
        if not counts:
            return cls()
        if min(counts) < 0:
            raise ValueError("negative exponent")
        top = max(counts)
        return cls(tuple(counts.get(e, 0) for e in range(top + 1)))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        if self.degree + other.degree > MAX_DEGREE:
            raise DegreeBoundError(f"product degree exceeds {MAX_DEGREE}")
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        parts = [(e, c) for e, c in enumerate(self.coeffs) if c]
        if not parts:
            return "0"
        return "".join(_term(c, _power("q", e), k == 0) for k, (e, c) in enumerate(parts))


@dataclass(frozen=True)
class QTPolynomial:
    """Sparse map ``(q exponent, t exponent) -> coefficient``, zeros dropped."""
    terms: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if max(i, j) > MAX_DEGREE:
                raise DegreeBoundError(f"exponent exceeds {MAX_DEGREE}")
            if c:
                clean[(i, j)] = _check_coeff(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def one(cls) -> "QTPolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> "QTPolynomial":
        return cls(Counter(pairs))

    def __eq__(self, other):
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        out = Counter(self.terms)
        for k, c in other.terms.items():
            out[k] += c
        return QTPolynomial(out)

    def __neg__(self) -> "QTPolynomial":
        return QTPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QTPolynomial") -> "QTPolynomial":
        return self + (-other)

    def __mul__(self, other: "QTPolynomial") -> "QTPolynomial":
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        out: Counter = Counter()
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                out[(i1 + i2, j1 + j2)] += c1 * c2
        return QTPolynomial(out)

    def at_t(self, t: int = 1) -> QPolynomial:
        """Specialize ``t``; ``t = 1`` is the usual forgetful map."""
        top = max((i for i, _ in self.terms), default=-1)
        out = [0] * (top + 1)
        for (i, j), c in self.terms.items():
            out[i] += c * t**j
        return QPolynomial(tuple(out))

    def __call__(self, q: int, t: int) -> int:
        return sum(c * q**i * t**j for (i, j), c in self.terms.items())

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.terms.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        return "".join(
            _term(c, _power("q", i) + _power("t", j), k == 0)
            for k, ((i, j), c) in enumerate(self.terms.items())
        )


def product_formula_L(B: Iterable[int], n: int) -> QPolynomial:
    """``prod_{i in B} (1 + q^i) * prod_{i=1}^{n-1} (1 + q + ... + q^{i-1} + 2q^i)``.

    ``B`` must be a subset of ``{1, ..., n+1}``.
    """
    B = sorted(set(B))
    if n < 1:
        raise ValueError("n must be at least 1")
    if B and (B[0] < 1 or B[-1] > n + 1):
        raise ValueError(f"{B} is not a subset of [{n + 1}]")
    out = QPolynomial((1,))
    for i in B:
        out = out * (QPolynomial((1,)) + QPolynomial.monomial(i))
    for i in range(1, n):
        out = out * QPolynomial((1,) * i + (2,))
    return out


def product_formula_RR(n: int) -> QTPolynomial:
    """``(1 + 2qt)(1 + q + 2q^2 t) ... (1 + q + ... + q^{n-2} + 2q^{n-1} t)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = QTPolynomial.one()
    for i in range(1, n):
        factor = {(k, 0): 1 for k in range(i)}
        factor[(i, 1)] = 2
        out = out * QTPolynomial(factor)
    return out
