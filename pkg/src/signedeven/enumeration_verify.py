"""
Generating functions over whole groups and exhaustive checks of the
equidistribution identities and structural facts.

Every ``verify_*`` function returns a :class:`VerificationReport`.  A failed
report names a concrete element (``counterexample``) where the two sides
disagree.

>>> q = GFQuery("L", 2, "ell_L", "subset", (1, 2))
>>> print(generating_function(q))
1 + q + q^2 + q^3
>>> verify_prop1(3, (1, 3)).passed
True
"""

from __future__ import annotations

import os
import random
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import prod
from typing import Callable, Iterable, Optional, Sequence, Union

from .canonical_forms import (
    STYLES, canonical_A, canonical_B, canonical_L, canonical_S, family, family_range,
    is_reduced_B, word_degree,
)
from .group_core import (
    DEFAULT_BUDGET, GeneratorWord, SignedPermutation, a, a1inv, abs_map, compose, concat_words,
    enumerate_group, eval_word, group_order, identity, inverse, membership, restrict,
    right_multiply, s,
)
from .qpolynomial import QPolynomial, QTPolynomial, product_formula_L, product_formula_RR
from .statistics import (
    STATISTICS, del_B, des_A, des_A_set, des_S, dmaj, drmaj_D, drmaj_LD, ell_A, ell_B,
    ell_D, ell_L, ell_LD, inv, maj_B, neg, neg_inv, nrmaj_L, rmaj_B, rmaj_L,
)
from .structure_maps import increasing_word, main_lemma_factor, phi

__all__ = [
    "GFQuery", "VerificationReport", "generating_function",
    "coxeter_lengths", "prop1_subsets",
    "verify_prop1", "verify_prop1_all", "verify_cor_inex", "verify_prop2",
    "verify_biagioli", "verify_rr61", "verify_structure", "verify_lengths",
    "verify_witnesses", "des_A_witness", "standard_checks", "run_checks",
]

Statistic = Union[str, Callable[[SignedPermutation], int]]
CONSTRAINTS = (None, "subset", "equal", "card")


@dataclass(frozen=True)
class GFQuery:
    """Sum ``q**statistic`` over a group, optionally cut down by ``Neg(σ^{-1})``.

    ``constraint`` is ``None``, ``"subset"`` / ``"equal"`` (``value`` is a
    set ``B``) or ``"card"`` (``value`` is the required size of ``Neg(σ^{-1})``).
    """
    group: str
    degree: int
    statistic: Statistic
    constraint: Optional[str] = None
    value: Union[tuple[int, ...], int, None] = None

    def __post_init__(self):
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.constraint in ("subset", "equal"):
            B = tuple(sorted(set(self.value or ())))
            if any(not 1 <= i <= self.degree for i in B):
                raise ValueError(f"{list(B)} is not a subset of [{self.degree}]")
            object.__setattr__(self, "value", B)
        if isinstance(self.statistic, str):
            if self.statistic not in STATISTICS:
                raise ValueError(f"unknown statistic {self.statistic!r}")
            home = STATISTICS[self.statistic][1]
            if not _subgroup(self.group, home):
                raise ValueError(f"{self.statistic} is not defined on all of {self.group}")

    def accepts(self, sigma: SignedPermutation) -> bool:
        if self.constraint is None:
            return True
        ni = neg_inv(sigma)
        if self.constraint == "subset":
            return set(ni) <= set(self.value)
        if self.constraint == "equal":
            return ni == self.value
        return len(ni) == self.value


def _subgroup(g: str, h: str) -> bool:
    contained = {
        "S": {"S", "B"}, "A": {"A", "S", "L", "B"}, "B": {"B"}, "D": {"D", "B"},
        "L": {"L", "B"}, "LD": {"LD", "L", "D", "B"},
    }
    return h in contained[g]


def _resolve(stat: Statistic) -> Callable[[SignedPermutation], int]:
    return STATISTICS[stat][0] if isinstance(stat, str) else stat


def generating_function(query: GFQuery, budget: int = DEFAULT_BUDGET) -> QPolynomial:
    fn = _resolve(query.statistic)
    return QPolynomial.from_exponents(
        fn(x) for x in enumerate_group(query.group, query.degree, budget) if query.accepts(x)
    )


@dataclass
class VerificationReport:
    identity: str
    params: dict
    passed: bool
    sides: dict = field(default_factory=dict)
    counterexample: Optional[tuple[int, ...]] = None
    details: list = field(default_factory=list)
    exploratory: bool = False
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params.items()},
            "passed": self.passed,
            "exploratory": self.exploratory,
            "sides": {k: {"text": str(v), "coeffs": v.to_json()} for k, v in self.sides.items()},
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "details": self.details,
            "elapsed": round(self.elapsed, 6),
        }


def _first_difference(p: QPolynomial, r: QPolynomial) -> int:
    top = max(p.degree, r.degree)
    return next(e for e in range(top + 1) if p.coefficient(e) != r.coefficient(e))


def _equality_report(identity_id: str, params: dict, elements: Sequence[SignedPermutation],
                     stats: dict[str, Callable], formulas: dict[str, QPolynomial] | None = None,
                     started: float | None = None) -> VerificationReport:
    """Compare the generating functions of ``stats`` over ``elements`` (and any fixed formulas)."""
    started = time.perf_counter() if started is None else started
    values = {name: [fn(x) for x in elements] for name, fn in stats.items()}
    sides = {name: QPolynomial.from_exponents(v) for name, v in values.items()}
    sides.update(formulas or {})
    names = list(sides)
    witness = None
    for name in names[1:]:
        if sides[name] != sides[names[0]]:
            k = _first_difference(sides[names[0]], sides[name])
            cols = [values[x] for x in (names[0], name) if x in values]
            hits = [i for i in range(len(elements)) if any(col[i] == k for col in cols)]
            # prefer an element on which the two statistics themselves disagree
            split = [i for i in hits if len({col[i] for col in cols}) > 1]
            pick = (split or hits or [None])[0]
            witness = None if pick is None else elements[pick].window
            break
    passed = len({sides[x] for x in names}) == 1
    return VerificationReport(identity_id, params, passed, sides, witness,
                              elapsed=time.perf_counter() - started)


@lru_cache(maxsize=32)
def _group_list(group: str, m: int, budget: int = DEFAULT_BUDGET) -> tuple[SignedPermutation, ...]:
    return tuple(enumerate_group(group, m, budget))


# -- the identities ---------------------------------------------------------

def prop1_subsets(n: int, seed: int = 0, sample: int = 32) -> list[tuple[int, ...]]:
    """All subsets of ``[n+1]`` when ``n+1 <= 5``, else a seeded sample."""
    ground = range(1, n + 2)
    subsets = [c for k in range(n + 2) for c in combinations(ground, k)]
    if n + 1 <= 5 or len(subsets) <= sample:
        return subsets
    picked = random.Random(seed).sample(range(len(subsets)), sample)
    return [subsets[i] for i in sorted(picked)]


def verify_prop1(n: int, B: Iterable[int], budget: int = DEFAULT_BUDGET,
                 nrmaj: Callable = nrmaj_L) -> VerificationReport:
    """``sum q^nrmaj = sum q^ell_L = product formula`` over ``{π ∈ L_{n+1} : Neg(π^{-1}) ⊆ B}``."""
    started = time.perf_counter()
    B = tuple(sorted(set(B)))
    allowed = set(B)
    elements = [x for x in _group_list("L", n + 1, budget) if set(neg_inv(x)) <= allowed]
    return _equality_report(
        "prop1", {"n": n, "B": B}, elements,
        {"nrmaj_L": nrmaj, "ell_L": ell_L}, {"product": product_formula_L(B, n)}, started)


def verify_prop1_all(n: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[VerificationReport]:
    return [verify_prop1(n, B, budget) for B in prop1_subsets(n, seed)]


def verify_cor_inex(n: int, B: Iterable[int], budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Same two sums restricted to ``Neg(π^{-1}) = B`` exactly."""
    started = time.perf_counter()
    B = tuple(sorted(set(B)))
    elements = [x for x in _group_list("L", n + 1, budget) if neg_inv(x) == B]
    return _equality_report("cor_inex", {"n": n, "B": B}, elements,
                            {"nrmaj_L": nrmaj_L, "ell_L": ell_L}, started=started)


def verify_prop2(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """``drmaj`` against ``ell_(L∩D)`` on (L∩D)_{n+1}, in total and per sign stratum."""
    started = time.perf_counter()
    elements = list(_group_list("LD", n + 1, budget))
    report = _equality_report("prop2", {"n": n}, elements,
                              {"drmaj_LD": drmaj_LD, "ell_LD": ell_LD}, started=started)
    for i in range((n + 1) // 2 + 1):
        stratum = [x for x in _group_list("L", n + 1, budget) if len(neg_inv(x)) == 2 * i]
        sub = _equality_report("prop2_stratum", {"n": n, "i": i}, stratum,
                               {"drmaj_LD": drmaj_LD, "ell_LD": ell_LD})
        report.details.append({"check": f"stratum #Neg = {2 * i}", "passed": sub.passed,
                               "counterexample": sub.counterexample and list(sub.counterexample)})
        if not sub.passed:
            report.passed = False
            report.counterexample = report.counterexample or sub.counterexample
    report.elapsed = time.perf_counter() - started
    return report


def verify_biagioli(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """``dmaj``, ``ell_D`` and ``drmaj`` share one generating function on D_n."""
    elements = list(_group_list("D", n, budget))
    return _equality_report("biagioli", {"n": n}, elements,
                            {"dmaj": dmaj, "ell_D": ell_D, "drmaj_D": drmaj_D})


def verify_rr61(n: int, include_t: bool = False, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """
    ``ell_A`` and ``rmaj`` over A_{n+1} against the product formula.

    With ``include_t`` the sums carry ``t**del_B`` as well; the exponent of
    ``t`` is a guess at the intended statistic, so that report is marked
    exploratory.
    """
    started = time.perf_counter()
    elements = list(_group_list("A", n + 1, budget))
    formula = product_formula_RR(n)
    if not include_t:
        return _equality_report("rr61", {"n": n, "t": 1}, elements,
                                {"ell_A": ell_A, "rmaj_A": rmaj_L}, {"product": formula.at_t(1)},
                                started)
    sides = {
        "ell_A": QTPolynomial.from_exponents((ell_A(w), del_B(w)) for w in elements),
        "rmaj_A": QTPolynomial.from_exponents((rmaj_L(w), del_B(w)) for w in elements),
        "product": formula,
    }
    passed = sides["ell_A"] == sides["rmaj_A"] == sides["product"]
    return VerificationReport("rr61_bivariate", {"n": n, "t": "del_B"}, passed, sides,
                              exploratory=True, elapsed=time.perf_counter() - started)


# -- structure --------------------------------------------------------------

def coxeter_lengths(generators: Sequence[SignedPermutation]) -> dict[tuple[int, ...], int]:
    """Word length of every element reachable from the identity (breadth-first)."""
    m = generators[0].degree
    start = identity(m).window
    dist = {start: 0}
    queue = deque([start])
    gens = [g.window for g in generators]
    while queue:
        w = queue.popleft()
        d = dist[w] + 1
        for g in gens:
            nxt = tuple(w[t - 1] if t > 0 else -w[-t - 1] for t in g)
            if nxt not in dist:
                dist[nxt] = d
                queue.append(nxt)
    return dist


class _Checks:
    """Collects named sub-checks; the first failure supplies the counterexample."""

    def __init__(self):
        self.details: list[dict] = []
        self.counterexample = None

    def record(self, name: str, failures: Iterable):
        bad = next(iter(failures), None)
        ok = bad is None
        if not ok and self.counterexample is None:
            self.counterexample = getattr(bad, "window", bad)
        self.details.append({"check": name, "passed": ok,
                             "counterexample": None if ok else list(getattr(bad, "window", bad))})

    @property
    def passed(self) -> bool:
        return all(d["passed"] for d in self.details)


_CANONICAL = {"S": canonical_S, "B": canonical_B, "A": canonical_A, "L": canonical_L}


def _product_map_is_bijection(style: str, m: int) -> bool:
    d = word_degree(style, m)
    fams = [family(style, j, m) for j in family_range(style, m)]
    seen = set()
    for combo in product(*fams):
        seen.add(restrict(eval_word(concat_words(combo, d)), m).window)
    total = prod(len(f) for f in fams)
    return total == len(seen) == group_order(style, m)


def verify_structure(m: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Canonical forms, ``phi`` and the factorization ``π = σ u``, all exhaustively at degree ``m``."""
    started = time.perf_counter()
    c = _Checks()
    B_m = _group_list("B", m, budget)
    S_m = _group_list("S", m, budget)
    A_m = _group_list("A", m, budget)
    L_m = _group_list("L", m, budget) if m >= 2 else ()

    for style in STYLES:
        if style == "L" and m < 2:
            continue
        group = style  # each style lives on the group of the same name
        sizes = prod(len(family(style, j, m)) for j in family_range(style, m))
        c.record(f"counting {style}", [] if sizes == group_order(group, m) else [identity(m)])
        c.record(f"bijection {style}", [] if _product_map_is_bijection(style, m) else [identity(m)])
        fams = {j: set(family(style, j, m)) for j in family_range(style, m)}
        elements = _group_list(group, m, budget)
        c.record(f"roundtrip {style}", (
            g for g in elements
            if (p := _CANONICAL[style](g)).evaluate() != g
            or any(f not in fams[j] for j, f in zip(family_range(style, m), p.factors))))

    c.record("B canonical words reduced", (g for g in B_m if not is_reduced_B(canonical_B(g).flattened)))
    c.record("B canonical agrees with S canonical on S",
             (w for w in S_m if canonical_B(w).factors[1:] != canonical_S(w).factors
              or len(canonical_B(w).factors[0]) != 0))
    c.record("deleting s0 gives Abs", (
        g for g in B_m
        if eval_word(_drop_s0(canonical_B(g).flattened)) != abs_map(g)))
    c.record("L membership is even non-s0 count", (
        g for g in B_m
        if membership(g, "L") != (sum(1 for t in canonical_B(g).flattened if t.index != 0) % 2 == 0)))
    if m >= 2:
        c.record("L canonical agrees with A canonical on A", (
            w for w in A_m
            if len(canonical_L(w).factors[0]) != 0
            or tuple(f.tokens for f in canonical_L(w).factors[1:])
            != tuple(f.tokens for f in canonical_A(w).factors)))
    c.record("ell_A is the A-canonical length", (
        w for w in A_m if not ell_A(w) == len(canonical_A(w).flattened) == inv(w) - del_B(w)))

    c.record("phi is an involution", (x for x in B_m if phi(phi(x)) != x))
    c.record("phi exchanges maj_B and rmaj_B", (x for x in B_m if maj_B(x) != rmaj_B(phi(x))))
    c.record("phi keeps Neg of the inverse", (x for x in B_m if neg_inv(x) != neg_inv(phi(x))))

    if m >= 2:
        _main_lemma_checks(c, m, S_m, A_m, L_m)
    _increasing_word_checks(c, m, S_m, B_m)
    return VerificationReport("structure", {"m": m}, c.passed, counterexample=c.counterexample,
                              details=c.details, elapsed=time.perf_counter() - started)


def _drop_s0(word):
    return type(word)(word.degree, tuple(t for t in word if t.index != 0))


def _main_lemma_checks(c: _Checks, m, S_m, A_m, L_m):
    A_set = {w.window for w in A_m}

    def bad_factorization(pi):
        f = main_lemma_factor(pi)
        return not (
            compose(f.sigma, f.u) == pi
            and f.u.window in A_set
            and membership(f.sigma, "L")
            and des_A(f.sigma) == 0
            and neg_inv(f.sigma) == neg_inv(pi)
            and des_A_set(f.u) == des_A_set(pi)
            and inv(f.u) - del_B(f.u) == inv(pi) - del_B(pi)
            and ell_L(pi) == ell_A(f.u) + sum(neg_inv(pi))
        )

    c.record("main lemma postconditions", (pi for pi in L_m if bad_factorization(pi)))

    T = [x for x in L_m if des_A(x) == 0]
    T_inv = [(x, inverse(x)) for x in T]

    def bad_uniqueness(pi):
        hits = [x for x, xi in T_inv if compose(xi, pi).window in A_set]
        return len(hits) != 1 or hits[0] != main_lemma_factor(pi).sigma

    c.record("main lemma uniqueness", (pi for pi in L_m if bad_uniqueness(pi)))

    by_neg: dict = {}
    for x in T:
        by_neg.setdefault(neg_inv(x), []).append(x)
    subsets = [cmb for k in range(m + 1) for cmb in combinations(range(1, m + 1), k)]
    c.record("one descent-free element per Neg set",
             [identity(m)] if any(len(by_neg.get(B, [])) != 1 for B in subsets) else [])

    def bad_coset(B):
        allowed = set(B)
        reps = [x for x in T if set(neg_inv(x)) <= allowed]
        union = [compose(x, u).window for x in reps for u in A_m]
        target = {pi.window for pi in L_m if set(neg_inv(pi)) <= allowed}
        return len(union) != len(set(union)) or set(union) != target

    c.record("coset decomposition", [identity(m)] if any(bad_coset(B) for B in subsets) else [])
    s1 = right_multiply(identity(m), s(1))
    c.record("ell_L(s_1 ρ) = ell_L(ρ)",
             (r for r in S_m if ell_L(compose(s1, r)) != ell_L(r)))


def _increasing_word_checks(c: _Checks, m, S_m, B_m):
    bases = {increasing_word(x).window: increasing_word(x) for x in B_m}.values()

    def bad(base, v):
        x = compose(base, v)
        return not (inv(x) == inv(v) and del_B(x) == del_B(v) and ell_L(x) == ell_L(base) + ell_L(v))

    c.record("increasing-word laws",
             (compose(b, v) for b in bases for v in S_m if bad(b, v)))


def verify_lengths(m: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Closed-form lengths against breadth-first search over the Coxeter generators."""
    started = time.perf_counter()
    c = _Checks()
    gens_B = [right_multiply(identity(m), s(i)) for i in range(m)]
    dist_B = coxeter_lengths(gens_B)
    B_m = _group_list("B", m, budget)
    c.record("ell_B equals Coxeter length", (x for x in B_m if dist_B.get(x.window) != ell_B(x)))
    c.record("Des_S via length drops", (
        x for x in B_m
        if des_S(x) != tuple(i for i in range(1, m) if ell_B(right_multiply(x, s(i))) < ell_B(x))))
    c.record("0 descent via length drop", (
        x for x in B_m if (ell_B(right_multiply(x, s(0))) < ell_B(x)) != (x.window[0] < 0)))
    if m >= 2:
        s0 = right_multiply(identity(m), s(0))
        s1 = right_multiply(identity(m), s(1))
        gens_D = [compose(compose(s0, s1), s0)] + gens_B[1:]
        dist_D = coxeter_lengths(gens_D)
        D_m = _group_list("D", m, budget)
        c.record("ell_D equals Coxeter length", (
            x for x in D_m if dist_D.get(x.window) != ell_D(x)))
        c.record("D has the right size", [] if len(dist_D) == group_order("D", m) else [identity(m)])
    A_m = _group_list("A", m, budget)
    c.record("ell_A = ell_S - del_S", (w for w in A_m if ell_A(w) != inv(w) - del_B(w)
                                       or ell_A(w) != len(canonical_A(w).flattened)))
    c.record("ell_A = ell_L on A", (w for w in A_m if ell_A(w) != ell_L(w)))
    return VerificationReport("lengths", {"m": m}, c.passed, counterexample=c.counterexample,
                              details=c.details, elapsed=time.perf_counter() - started)


def des_A_witness(max_m: int = 5) -> Optional[SignedPermutation]:
    """First element of some L_m whose A-descents differ from its window descents."""
    for m in range(3, max_m + 1):
        for pi in _group_list("L", m):
            naive = tuple(i for i in range(1, m - 1) if pi.window[i - 1] > pi.window[i])
            if des_A_set(pi) != naive:
                return pi
    return None


def verify_witnesses() -> VerificationReport:
    """Exhibit the two cautionary examples: odd A-descents and a non-reduced L-canonical word."""
    started = time.perf_counter()
    details = []
    witness = des_A_witness(5)
    details.append({"check": "Des_A differs from window descents",
                    "passed": witness is not None,
                    "witness": list(witness.window) if witness else None})
    pi = SignedPermutation((-3, 1, -2))
    pres = canonical_L(pi)
    gens = [eval_word(GeneratorWord(3, (t,))) for t in (a(0), a(1), a1inv())]
    shortest = coxeter_lengths(gens)[pi.window]
    details.append({"check": "L-canonical word need not be reduced",
                    "passed": len(pres.flattened) == 5 and shortest < 5 and pres.evaluate() == pi,
                    "canonical": str(pres), "shortest": shortest,
                    "witness": list(pi.window)})
    passed = all(d["passed"] for d in details)
    return VerificationReport("witnesses", {}, passed, details=details,
                              elapsed=time.perf_counter() - started)


# -- batch running ----------------------------------------------------------

def standard_checks(max_n: int, seed: int = 0, include_t: bool = True) -> list[tuple[str, dict]]:
    """The full desk-scale suite up to group degree ``max_n``, as ``(function, kwargs)`` pairs."""
    checks: list[tuple[str, dict]] = []
    for m in range(2, max_n + 1):
        for B in prop1_subsets(m - 1, seed):
            checks.append(("verify_prop1", {"n": m - 1, "B": B}))
    for m in range(2, max_n + 1):
        for B in prop1_subsets(m - 1, seed):
            checks.append(("verify_cor_inex", {"n": m - 1, "B": B}))
    for m in range(2, max_n + 1):
        checks.append(("verify_prop2", {"n": m - 1}))
    for m in range(2, max_n + 1):
        checks.append(("verify_biagioli", {"n": m}))
    for m in range(2, max_n + 1):
        checks.append(("verify_rr61", {"n": m - 1}))
        if include_t:
            checks.append(("verify_rr61", {"n": m - 1, "include_t": True}))
    for m in range(1, max_n + 1):
        checks.append(("verify_structure", {"m": m}))
        checks.append(("verify_lengths", {"m": m}))
    checks.append(("verify_witnesses", {}))
    return checks


def _run_one(spec: tuple[str, dict]) -> VerificationReport:
    name, kwargs = spec
    return globals()[name](**kwargs)


def run_checks(checks: Sequence[tuple[str, dict]], threads: int | None = None) -> list[VerificationReport]:
    """Run checks, in parallel when ``threads > 1``; results keep the input order."""
    threads = threads or os.cpu_count() or 1
    if threads <= 1 or len(checks) <= 1:
        return [_run_one(c) for c in checks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, checks, chunksize=4))
