import random
from itertools import product
from math import factorial, prod

import pytest

from signedeven.canonical_forms import (
    canonical, canonical_A, canonical_B, canonical_L, canonical_S, family, family_range,
    is_reduced_B, word_degree,
)
from signedeven.group_core import (
    GeneratorWord, MembershipError, SignedPermutation, abs_map, concat_words, enumerate_group,
    eval_word, group_order, identity, membership, parse_window, parse_word, restrict,
)
from signedeven.statistics import del_B, ell_A, ell_B, inv

W = parse_window


def words(style, j, m):
    return [str(w) for w in family(style, j, m)]


def test_family_examples():
    assert words("S", 1, 3) == ["1", "s1"]
    assert words("B", 0, 3) == ["1", "s0"]
    assert words("L", 0, 4) == ["1", "a0", "a1 a0 a1^-1", "a0 a1 a0 a1^-1"]
    assert words("L", 2, 4) == [
        "1", "a2", "a2 a1", "a2 a1^-1", "a2 a1^-1 a0", "a2 a1^-1 a0 a1^-1",
        "a2 a1^-1 a0 a1", "a2 a1^-1 a0 a1 a2",
    ]
    assert words("A", 1, 3) == ["1", "a1", "a1^-1"]
    assert words("B", 2, 3) == ["1", "s2", "s2 s1", "s2 s1 s0", "s2 s1 s0 s1", "s2 s1 s0 s1 s2"]


@pytest.mark.parametrize("j", range(0, 6))
def test_family_sizes(j):
    m = 8
    if j >= 1:
        assert len(family("S", j, m)) == j + 1
        assert len(family("A", j, m)) == j + 2
    assert len(family("B", j, m)) == 2 * (j + 1)
    assert len(family("L", j, m)) == 2 * (j + 2)


def test_family_out_of_range():
    with pytest.raises(ValueError):
        family("A", 0, 4)
    with pytest.raises(ValueError):
        family("L", 3, 4)
    with pytest.raises(ValueError):
        family("X", 1, 4)


@pytest.mark.parametrize("m", range(2, 9))
def test_counting_identities(m):
    for style in ("S", "B", "A", "L"):
        sizes = prod(len(family(style, j, m)) for j in family_range(style, m))
        assert sizes == group_order(style, m)
    assert prod(2 * (j + 1) for j in range(m)) == 2**m * factorial(m)


@pytest.mark.parametrize("style", ["S", "B", "A", "L"])
@pytest.mark.parametrize("m", range(2, 6))
def test_product_map_bijective(style, m):
    fams = [family(style, j, m) for j in family_range(style, m)]
    d = word_degree(style, m)
    images = [restrict(eval_word(concat_words(c, d)), m).window for c in product(*fams)]
    assert len(images) == len(set(images)) == group_order(style, m)
    assert all(SignedPermutation(w) in set(enumerate_group(style, m)) for w in images[:50])


@pytest.mark.parametrize("style", ["S", "B", "A", "L"])
@pytest.mark.parametrize("m", range(2, 6))
def test_roundtrip_and_membership_of_factors(style, m):
    fams = {j: family(style, j, m) for j in family_range(style, m)}
    for g in enumerate_group(style, m):
        p = canonical(g, style)
        assert p.evaluate() == g
        assert len(p.factors) == len(fams)
        for j, f in zip(fams, p.factors):
            assert f in fams[j]


@pytest.mark.parametrize("style", ["S", "B", "A", "L"])
def test_roundtrip_random_degree_7(style):
    rng = random.Random(7)
    done = 0
    while done < 300:
        perm = rng.sample(range(1, 8), 7)
        signed = style in ("B", "L")
        g = SignedPermutation(tuple(x * (rng.choice((1, -1)) if signed else 1) for x in perm))
        if not membership(g, style):
            continue
        assert canonical(g, style).evaluate() == g
        done += 1


def test_canonical_S_examples():
    assert all(len(f) == 0 for f in canonical_S(identity(4)).factors)
    assert str(canonical_S(W("2,1"))) == "(s1)"
    p = canonical_S(W("3,1,2"))
    assert str(p) == "(1)(s2 s1)"
    # uniqueness by exhaustion over R_1 x R_2
    hits = [(x, y) for x in family("S", 1, 3) for y in family("S", 2, 3)
            if eval_word(concat_words((x, y), 3)) == W("3,1,2")]
    assert len(hits) == 1 and hits[0] == p.factors


def test_canonical_B_example(sigma):
    p = canonical_B(sigma)
    assert str(p) == "(s0)(1)(s2 s1 s0 s1 s2)(1)(s4 s3 s2 s1)"
    assert p.flattened == parse_word("s0 s2 s1 s0 s1 s2 s4 s3 s2 s1", 5)
    assert all(len(f) == 0 for f in canonical_B(identity(3)).factors)


def test_canonical_B_on_S_is_canonical_S():
    for w in enumerate_group("S", 4):
        b = canonical_B(w)
        assert len(b.factors[0]) == 0
        assert b.factors[1:] == canonical_S(w).factors


def test_canonical_A_examples():
    assert str(canonical_A(W("3,1,2"))) == "(a1^-1)"
    assert str(canonical_A(W("2,3,1"))) == "(a1)"
    assert all(len(f) == 0 for f in canonical_A(identity(5)).factors)
    with pytest.raises(MembershipError):
        canonical_A(W("2,1,3"))


def test_canonical_L_examples():
    assert str(canonical_L(W("3,5,-4,2,-1"))) == "(a0)(a1)(a2 a1^-1 a0)(a3 a2 a1)"
    p = canonical_L(W("-3,1,-2"))
    assert str(p) == "(a1 a0 a1^-1)(a1^-1 a0)"
    assert len(p.flattened) == 5
    # a shorter word for the same element
    assert eval_word(parse_word("a1 a0 a1 a0", 3)) == W("-3,1,-2")
    assert all(len(f) == 0 for f in canonical_L(identity(4)).factors)
    with pytest.raises(MembershipError):
        canonical_L(W("2,1,3"))


def test_canonical_L_degree_two():
    for g in enumerate_group("L", 2):
        p = canonical_L(g)
        assert p.degree == 2 and p.flattened.degree == 3
        assert p.evaluate() == g


@pytest.mark.parametrize("m", range(2, 6))
def test_canonical_L_agrees_with_A(m):
    for w in enumerate_group("A", m):
        lp = canonical_L(w)
        assert len(lp.factors[0]) == 0
        assert [f.tokens for f in lp.factors[1:]] == [f.tokens for f in canonical_A(w).factors]


@pytest.mark.parametrize("m", range(2, 7))
def test_ell_A_is_canonical_length(m):
    for w in enumerate_group("A", m):
        assert len(canonical_A(w).flattened) == ell_A(w) == inv(w) - del_B(w)


def test_is_reduced_B_examples():
    assert is_reduced_B(parse_word("s0 s2 s1 s0 s1 s2 s4 s3 s2 s1", 5))
    assert not is_reduced_B(parse_word("s0 s0", 2))
    with pytest.raises(ValueError):
        is_reduced_B(parse_word("a1", 3))


@pytest.mark.parametrize("m", range(1, 6))
def test_B_canonical_words_reduced(m):
    for g in enumerate_group("B", m):
        flat = canonical_B(g).flattened
        assert is_reduced_B(flat) and len(flat) == ell_B(g)


@pytest.mark.parametrize("m", [3, 4])
def test_word_properties(m):
    for g in enumerate_group("B", m):
        flat = canonical_B(g).flattened
        no_s0 = GeneratorWord(m, tuple(t for t in flat if t.index != 0))
        assert eval_word(no_s0) == abs_map(g)
        assert membership(g, "L") == (len(no_s0) % 2 == 0)


def test_to_dict():
    d = canonical_L(W("3,5,-4,2,-1")).to_dict()
    assert d["factors"] == [["a0"], ["a1"], ["a2", "a1^-1", "a0"], ["a3", "a2", "a1"]]
    assert d["style"] == "L" and d["degree"] == 5
