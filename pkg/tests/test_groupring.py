from __future__ import annotations

import itertools
import json
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from burau_lab.freegroup import Word, parse_word, winding
from burau_lab.groupring import (
    LAURENT,
    CyclicAlgebraElem,
    CyclicRing,
    HomologyVector,
    LadicExponent,
    LaurentPoly,
    QuotientRing,
    TruncatedRing,
    abelianize_R0,
    abelianize_Rn,
    companion_matrix,
    cyclotomic_polynomial,
    gamma,
    project_complete,
    ring_from_json,
)
from burau_lab.matrix import RingMatrix
from burau_lab.schreier import FiniteCyclic, NotInSubgroupError, rewrite, schreier_generators

t = LAURENT.t(1)


def test_ring_examples():
    assert (1 - t) * (1 + t) == 1 - LAURENT.t(2)
    R = CyclicRing(5)
    assert R.t(1) * R.t(4) == R.one()
    T = TruncatedRing(3, 2, 2)
    assert T.t(9) == T.one()
    assert LaurentPoly({0: 0, 1: 2}).terms == {1: 2}


def test_parameter_mismatch():
    with pytest.raises(TypeError):
        CyclicRing(3).t(1) + CyclicRing(4).t(1)
    with pytest.raises(ValueError):
        TruncatedRing(4, 1, 1)
    with pytest.raises(ValueError):
        TruncatedRing(3, 0, 1)
    with pytest.raises(ValueError):
        CyclicAlgebraElem(CyclicRing(3), [1, 2])


laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LAURENT.zero()
    assert all(v != 0 for v in (a * b).terms.values())


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_truncated_ring_axioms(u, v):
    T = TruncatedRing(3, 2, 2)
    a, b = T.from_laurent(LaurentPoly.from_coeffs(u)), T.from_laurent(LaurentPoly.from_coeffs(v))
    assert a * b == b * a
    assert all(0 <= c < 9 for c in (a * b).coeffs)


def test_gamma_examples():
    assert gamma(3) == 1 + t + LAURENT.t(2)
    assert gamma(0) == LAURENT.zero()
    with pytest.raises(ValueError):
        gamma(-1)
    T = TruncatedRing(2, 2, 2)
    g = gamma(6, T)
    assert g.coeffs == (2, 2, 1, 1)
    assert (T.t(1) - 1) * g == T.t(6) - 1 == T.t(2) - 1


@pytest.mark.parametrize("l,K,M", [(2, 1, 1), (2, 3, 2), (3, 2, 2), (5, 1, 2), (3, 3, 1)])
def test_gamma_identity_and_cocycle(l, K, M):
    T = TruncatedRing(l, K, M)
    rng = random.Random(l * 100 + K * 10 + M)
    for _ in range(200):
        a, b = rng.randrange(10**6), rng.randrange(10**6)
        assert (T.t(1) - 1) * gamma(a, T) == T.t(a) - 1
        assert gamma(a + b, T) == gamma(a, T) + T.t(a) * gamma(b, T)
        # only a mod l^(M+K) matters
        assert gamma(a, T) == gamma(a % T.exponent_mod, T)


@given(st.integers(0, 30), st.integers(0, 30))
def test_gamma_laurent_cocycle(a, b):
    assert (t - 1) * gamma(a) == LAURENT.t(a) - 1
    assert gamma(a + b) == gamma(a) + LAURENT.t(a) * gamma(b)


@given(st.integers(2, 9), st.integers(0, 40))
def test_gamma_cyclic(n, a):
    R = CyclicRing(n)
    assert (R.t(1) - 1) * gamma(a, R) == R.t(a) - 1


def test_ladic_exponent():
    T = TruncatedRing(3, 2, 2)
    e = LadicExponent.of(85, T)
    assert e.value == 4 and e.is_unit()
    assert not LadicExponent.of(6, T).is_unit()
    with pytest.raises(ValueError):
        LadicExponent.of(LadicExponent(4, 3, 3), T)


@pytest.mark.parametrize("n", range(2, 9))
def test_companion(n):
    A = companion_matrix(n)
    assert (A ** n).is_identity()
    total = RingMatrix.zeros(A.ring, n - 1)
    for k in range(n):
        total = total + A ** k
    assert total == RingMatrix.zeros(A.ring, n - 1)
    # it is multiplication by x on Z[x]/(1 + ... + x^(n-1))
    R = QuotientRing.coaugmentation(n)
    assert R.multiplication_matrix(R.t(1)) == A


def test_companion_examples():
    assert companion_matrix(2).rows == ((-1,),)
    assert companion_matrix(3).rows == ((0, -1), (1, -1))
    with pytest.raises(ValueError):
        companion_matrix(1)


def test_cyclotomic():
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_abelianize_R0_examples():
    assert abelianize_R0(parse_word("x2 x1^-1", 4)).coords == (LAURENT.one(), LAURENT.zero())
    assert abelianize_R0(parse_word("x1 x2 x1^-2", 4)).coords == (t, LAURENT.zero())
    assert abelianize_R0(parse_word("x1 x2 x1^-1 x2^-1", 4)).coords == (t - 1, LAURENT.zero())
    with pytest.raises(NotInSubgroupError):
        abelianize_R0(Word.gen(2, 4))


def r0_words(s=5):
    def fix(letters):
        w = Word(letters, s)
        return w * Word.gen(1, s, -winding(w))
    return st.lists(st.tuples(st.integers(1, s - 1), st.integers(-2, 2)), max_size=8).map(fix)


@given(r0_words(), r0_words())
def test_abelianize_R0_additive_and_equivariant(u, v):
    assert abelianize_R0(u * v) == abelianize_R0(u) + abelianize_R0(v)
    x1 = Word.gen(1, 5)
    assert abelianize_R0(x1 * u * x1.inverse()) == abelianize_R0(u).scale(t)
    assert abelianize_R0(u.inverse()) == -abelianize_R0(u)


def test_abelianize_Rn_examples():
    n = 3
    R = CyclicRing(n)
    v = abelianize_Rn(Word.gen(1, 3, n), n)
    assert v.coords == (R.zero(),) and v.extra == 1
    v = abelianize_Rn(parse_word("x2 x1^-1", 3), n)
    assert v.coords == (R.one(),) and v.extra == 0
    v = abelianize_Rn(Word.gen(2, 3, n), n)
    assert v.coords == (R.norm(),) and v.extra == 1
    with pytest.raises(NotInSubgroupError):
        abelianize_Rn(Word.gen(2, 3, 2), n)


def rn_words(n, s=4):
    def fix(letters):
        w = Word(letters, s)
        return w * Word.gen(1, s, -(winding(w) % n))
    return st.lists(st.tuples(st.integers(1, s - 1), st.integers(-2, 2)), max_size=8).map(fix)


@given(rn_words(3), rn_words(3))
def test_abelianize_Rn_additive_and_deck_action(u, v):
    n = 3
    assert abelianize_Rn(u * v, n) == abelianize_Rn(u, n) + abelianize_Rn(v, n)
    x1 = Word.gen(1, 4)
    R = CyclicRing(n)
    # deck transformation acts by sigma on H1 of the complete curve
    lhs = project_complete(abelianize_Rn(x1 * u * x1.inverse(), n))
    rhs = project_complete(abelianize_Rn(u, n).scale(R.t(1)))
    assert lhs == rhs


def test_project_complete_examples():
    n, s = 4, 3
    assert project_complete(abelianize_Rn(Word.gen(1, s, n), n)).flat() == [0, 0, 0]
    R = CyclicRing(n)
    v = HomologyVector(R, [R.t(n - 1)], 0)
    assert project_complete(v).flat() == [-1, -1, -1]
    w = HomologyVector(CyclicRing(3), [CyclicRing(3).one()] * 2, 0)
    assert len(project_complete(w).flat()) == 4


@pytest.mark.parametrize("n,s", [(n, s) for n in range(2, 5) for s in range(3, 6)])
def test_project_complete_kernel_is_span_of_powers(n, s):
    # generator coordinates: R_n is free on the Schreier generators
    gens = schreier_generators(FiniteCyclic(n), s)
    index = {str(g): k for k, g in enumerate(gens)}

    def coords(w):
        v = np.zeros(len(gens), dtype=np.int64)
        for g, e in rewrite(w, FiniteCyclic(n)):
            v[index[str(g)]] += e
        return v

    P = np.array([project_complete(abelianize_Rn(g.word, n)).flat() for g in gens], dtype=np.int64).T
    powers = np.array([coords(Word.gen(j, s, n)) for j in range(1, s)], dtype=np.int64).T
    # the powers die
    assert not (P @ powers).any()
    # rank count: kernel has rank r - (n-1)(s-2) = s-1, matching the number of powers
    assert np.linalg.matrix_rank(P) == (n - 1) * (s - 2)
    assert np.linalg.matrix_rank(powers) == s - 1
    # every small kernel vector is an integer combination of the powers
    r = len(gens)
    box = np.array(list(itertools.product((-1, 0, 1), repeat=r)), dtype=np.int64) if r <= 9 else (
        np.random.default_rng(0).integers(-1, 2, size=(20000, r)))
    kernel = box[~(box @ P.T).any(axis=1)]
    sol, *_ = np.linalg.lstsq(powers.astype(float), kernel.T.astype(float), rcond=None)
    assert np.allclose(sol, np.round(sol))
    assert (powers @ np.round(sol).astype(np.int64) == kernel.T).all()


def test_homology_vector_json_round_trip():
    vs = [
        abelianize_R0(parse_word("x1 x3 x1^-2 x2 x1^-1", 4)),
        abelianize_Rn(parse_word("x2^3 x3 x1^-1", 4), 3),
        project_complete(abelianize_Rn(parse_word("x2 x3 x1", 4), 3)),
    ]
    for v in vs:
        text = json.dumps(v.to_json(), sort_keys=True)
        assert HomologyVector.from_json(json.loads(text)) == v


def test_ring_json_tags():
    for ring in (LAURENT, CyclicRing(3), TruncatedRing(2, 2, 3), QuotientRing.coaugmentation(5)):
        assert ring_from_json(ring.to_json()) == ring
    T = TruncatedRing(3, 2, 2)
    x = gamma(7, T)
    assert T.decode(T.encode(x)) == x
    assert LAURENT.encode(t - 1) == {"0": -1, "1": 1}
