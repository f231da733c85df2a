from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burau_lab.burau import (
    beta_word,
    braid_oracle,
    burau_generator,
    burau_of_braid,
    burau_oracle,
    charpoly_factorization,
    eigen_specialize,
    genus,
    invariant_span_action,
    laurent_at_companion,
    reduced_burau,
    reduced_oracle,
    vandermonde_blocks,
)
from burau_lab.freegroup import BraidWord, Word, artin_apply, parse_braid, winding
from burau_lab.groupring import LAURENT, ZZ, LaurentPoly, QuotientRing, abelianize_R0
from burau_lab.matrix import RingMatrix
from burau_lab.verify import relation_pairs

t = LAURENT.t(1)


def braids(s, max_size=6):
    return st.lists(st.tuples(st.integers(1, s - 2), st.sampled_from((1, -1))), max_size=max_size).map(
        lambda ls: BraidWord(ls, s))


def test_closed_form_examples():
    assert burau_generator(2, 4).rows == ((1 - t, LAURENT.one()), (t, LAURENT.zero()))
    assert burau_generator(1, 4).rows == ((-t, -t), (LAURENT.zero(), LAURENT.one()))


def test_oracle_examples():
    assert burau_oracle(2, 4) == burau_generator(2, 4)
    assert burau_oracle(1, 4).column(0) == (-t, LAURENT.zero())
    # s1(beta_4) = beta_4 - t beta_2
    assert burau_oracle(1, 5).column(2) == (-t, LAURENT.zero(), LAURENT.one())


@pytest.mark.parametrize("s", range(3, 9))
def test_closed_form_equals_oracle(s):
    for i in range(1, s - 1):
        assert burau_generator(i, s) == burau_oracle(i, s)
        d = burau_generator(i, s).det()
        assert d == -t


@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_extra_generator_has_no_laurent_matrix(s):
    with pytest.raises(ValueError, match="does not preserve R0"):
        burau_oracle(s - 1, s)
    with pytest.raises(ValueError):
        burau_generator(s - 1, s)


def test_index_errors():
    with pytest.raises(ValueError):
        burau_generator(0, 4)
    with pytest.raises(ValueError):
        burau_generator(4, 4)


@pytest.mark.parametrize("s", range(3, 9))
def test_braid_relations_laurent(s):
    for _, u, v in relation_pairs(s):
        assert burau_of_braid(u) == burau_of_braid(v)


def test_braid_of_examples():
    assert burau_of_braid(BraidWord((), 4)).is_identity()
    assert burau_of_braid(parse_braid("s1 s1^-1", 4)).is_identity()
    assert burau_of_braid(parse_braid("s1 s2 s1", 4)) == burau_of_braid(parse_braid("s2 s1 s2", 4))


@given(braids(5))
def test_burau_of_braid_matches_word_oracle(b):
    assert burau_of_braid(b) == braid_oracle(b)
    assert (burau_of_braid(b) @ burau_of_braid(b.inverse())).is_identity()


def r0_words(s):
    def fix(letters):
        w = Word(letters, s)
        return w * Word.gen(1, s, -winding(w))
    return st.lists(st.tuples(st.integers(1, s - 1), st.integers(-2, 2)), max_size=6).map(fix)


@given(st.integers(1, 3), r0_words(5))
def test_braid_action_commutes_with_t(i, w):
    s = 5
    g = BraidWord.gen(i, s)
    x1 = Word.gen(1, s)
    lhs = abelianize_R0(artin_apply(g, x1 * w * x1.inverse()))
    assert lhs == abelianize_R0(artin_apply(g, w)).scale(t)
    # and the matrix is t-linear
    m = burau_generator(i, s)
    v = abelianize_R0(w)
    assert m.apply(v.coords) == abelianize_R0(artin_apply(g, w)).coords


@pytest.mark.parametrize("n", [2, 3, 5])
@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_reduced_braid_relations_and_naturality(n, s):
    for _, u, v in relation_pairs(s):
        assert reduced_burau(u, n) == reduced_burau(v, n)
    for i in range(1, s - 1):
        g = BraidWord.gen(i, s)
        assert reduced_burau(g, n) == reduced_oracle(g, n)


def test_reduced_examples():
    assert reduced_burau(BraidWord((), 4), 3).is_identity()
    assert reduced_burau(BraidWord((), 4), 3).dim == 4
    # n = 2, s = 3: t -> -1, sigma_1 = [-t] -> [1]
    assert reduced_burau(BraidWord.gen(1, 3), 2).rows == ((1,),)


@given(braids(5, 5), st.integers(2, 5))
def test_reduced_oracle_agrees_on_random_braids(b, n):
    assert reduced_burau(b, n) == reduced_oracle(b, n)


@pytest.mark.parametrize("s", [4, 6])
def test_extra_generator_on_complete_curve(s):
    # s_{s-1} preserves R_n only when n divides s
    for n in range(2, s + 1):
        g = BraidWord.gen(s - 1, s)
        if s % n:
            with pytest.raises(ValueError):
                reduced_burau(g, n)
            continue
        m = reduced_burau(g, n)
        assert m.det() in (1, -1)
        # it joins the braid relations with s_{s-2}
        h = BraidWord.gen(s - 2, s)
        assert reduced_burau(g * h * g, n) == reduced_burau(h * g * h, n)
        for i in range(1, s - 2):
            k = BraidWord.gen(i, s)
            assert reduced_burau(g * k, n) == reduced_burau(k * g, n)


def test_laurent_at_companion_is_ring_map():
    n = 5
    p = LaurentPoly({-2: 3, 0: 1, 4: -2})
    q = LaurentPoly({1: 1, 3: 2})
    assert laurent_at_companion(p * q, n) == laurent_at_companion(p, n) @ laurent_at_companion(q, n)
    R = QuotientRing.coaugmentation(n)
    assert laurent_at_companion(p, n) == R.multiplication_matrix(p.substitute(R.t, R))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_rank_and_unit_determinant(n, s):
    b = BraidWord([(1, 1), (s - 2, -1), (1, 1)], s)
    m = reduced_burau(b, n)
    assert m.dim == (n - 1) * (s - 2)
    if m.dim % 2 == 0:
        assert m.dim == 2 * genus(n, s)
    assert m.det() in (1, -1)


def test_genus():
    assert genus(3, 4) == 2
    assert genus(2, 6) == 2
    with pytest.raises(ValueError):
        genus(2, 5)


def test_eigen_examples():
    R = QuotientRing.coaugmentation(5)
    g = parse_braid("s1 s2", 4)
    for _, u, v in relation_pairs(4):
        assert eigen_specialize(u, 5, 2) == eigen_specialize(v, 5, 2)
    m = eigen_specialize(BraidWord((), 4), 5, 2)
    assert m == RingMatrix.identity(R, 2)
    with pytest.raises(ValueError):
        eigen_specialize(g, 5, 0)
    with pytest.raises(ValueError):
        eigen_specialize(g, 5, 5)


def test_eigen_non_primitive_nu():
    # nu = 2 at n = 4: x^2 has order 2, the block factors through the double cover
    b = parse_braid("s1 s2^-1", 4)
    m = eigen_specialize(b, 4, 2)
    R4 = QuotientRing.coaugmentation(4)
    expected = burau_of_braid(b).map(lambda p: p.substitute(lambda k: R4.t(2 * k), R4), R4)
    assert m == expected


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_charpoly_factorization(n):
    b = parse_braid("s1 s2", 4)
    lhs, rhs = charpoly_factorization(b, n)
    assert lhs == rhs


def test_charpoly_factorization_n3_explicit():
    lhs, rhs = charpoly_factorization(parse_braid("s1 s2", 4), 3)
    # the product over the eigenspaces has integer coefficients
    assert all(c.coeffs[1:] == (0,) * (len(c.coeffs) - 1) for c in rhs)
    assert [c.coeffs[0] for c in lhs] == reduced_burau(parse_braid("s1 s2", 4), 3).charpoly()


def test_vandermonde_diagnostic():
    rng = random.Random(3)
    for n in (2, 3, 5):
        b = BraidWord([(rng.randrange(1, 4), rng.choice((1, -1))) for _ in range(5)], 5)
        assert vandermonde_blocks(b, n) < 1e-9


def test_invariant_span_examples():
    n, s = 3, 5
    m = invariant_span_action(BraidWord.gen(1, s), n)
    assert m.column(0) == (0, 1, 0, 0) and m.column(1) == (1, 0, 0, 0)
    m = invariant_span_action(BraidWord.gen(2, s), n)
    assert m.column(1) == (0, 0, 1, 0)
    assert invariant_span_action(BraidWord((), s), n).is_identity()


@given(braids(5, 4), braids(5, 4), st.integers(2, 4))
def test_invariant_span_is_a_permutation_action(a, b, n):
    ma, mb = invariant_span_action(a, n), invariant_span_action(b, n)
    assert invariant_span_action(a * b, n) == ma @ mb
    assert sorted(sum(map(abs, r)) for r in ma.rows) == [1] * 4


def test_beta_word():
    assert beta_word(3, 4, 2) == Word([(1, 2), (3, 1), (1, -3)], 4)
