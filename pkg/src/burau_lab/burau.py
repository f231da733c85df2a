"""Discrete Burau representation and its reductions to finite cyclic covers.

Matrices act on the basis ``beta_j = xj x1^-1`` (j = 2..s-1) of H1 of the
infinite cyclic cover, images in columns.  Every closed form here has a
word-rewriting oracle next to it that goes through
:func:`~burau_lab.freegroup.artin_apply` and Reidemeister rewriting only.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np

from .freegroup import BraidWord, Word, artin_apply
from .groupring import (
    LAURENT,
    ZZ,
    LaurentPoly,
    QuotientRing,
    abelianize_R0,
    abelianize_Rn,
    companion_matrix,
    project_complete,
)
from .matrix import RingMatrix, poly_mul
from .schreier import NotInSubgroupError

__all__ = [
    "beta_word",
    "burau_generator",
    "burau_oracle",
    "burau_of_braid",
    "braid_oracle",
    "laurent_at_companion",
    "reduced_burau",
    "reduced_oracle",
    "eigen_specialize",
    "invariant_span_action",
    "genus",
    "charpoly_factorization",
    "vandermonde_blocks",
]


def beta_word(j: int, s: int, shift: int = 0) -> Word:
    """``x1^shift xj x1^(-shift-1)``, i.e. ``beta_j`` translated by t^shift."""
    return Word(((1, shift), (j, 1), (1, -shift - 1)), s)


def _check_index(i: int, s: int) -> None:
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    if not 1 <= i <= s - 1:
        raise ValueError(f"braid generator index {i} out of range 1..{s - 1}")


def genus(n: int, s: int) -> int:
    """Genus of the complete n-fold cyclic cover branched at s points (all d_i = 1)."""
    twice = (n - 1) * (s - 2)
    if twice % 2:
        raise ValueError(f"(n-1)(s-2) = {twice} is odd; no such cover")
    return twice // 2


@lru_cache(maxsize=None)
def burau_generator(i: int, s: int) -> RingMatrix:
    """Closed-form Burau matrix of sigma_i over Z[t, t^-1], size s-2."""
    _check_index(i, s)
    if i == s - 1:
        return burau_oracle(i, s)
    t = LAURENT.t(1)
    d = s - 2
    rows = [[LAURENT.one() if a == b else LAURENT.zero() for b in range(d)] for a in range(d)]
    if i == 1:
        for b in range(d):
            rows[0][b] = -t
    else:
        a = i - 2
        rows[a][a] = 1 - t
        rows[a][a + 1] = LAURENT.one()
        rows[a + 1][a] = t
        rows[a + 1][a + 1] = LAURENT.zero()
    return RingMatrix(LAURENT, rows)


def braid_oracle(b: BraidWord) -> RingMatrix:
    """Matrix of a whole braid word, column j = abelianized image of beta_{j+2}."""
    s = b.s
    cols = []
    for j in range(2, s):
        try:
            cols.append(abelianize_R0(artin_apply(b, beta_word(j, s))).coords)
        except NotInSubgroupError as exc:
            raise ValueError(
                f"braid {b} does not preserve R0 (the extra generator s{s - 1} moves the "
                f"puncture at infinity, whose winding is {1 - s}); no matrix over Z[t,t^-1]"
            ) from exc
    return RingMatrix.from_columns(LAURENT, cols)


def burau_oracle(i: int, s: int) -> RingMatrix:
    _check_index(i, s)
    return braid_oracle(BraidWord.gen(i, s))


@lru_cache(maxsize=None)
def _generator_inverse(i: int, s: int) -> RingMatrix:
    return burau_generator(i, s).inverse()


def burau_of_braid(b: BraidWord) -> RingMatrix:
    s = b.s
    out = RingMatrix.identity(LAURENT, s - 2)
    for i, e in b:
        out = out @ (burau_generator(i, s) if e == 1 else _generator_inverse(i, s))
    return out


# --------------------------------------------------------------------------
# complete curve at level n


@lru_cache(maxsize=None)
def _companion_powers(n: int) -> tuple[RingMatrix, ...]:
    A = companion_matrix(n)
    powers = [RingMatrix.identity(ZZ, n - 1)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ A)
    return tuple(powers)


def laurent_at_companion(p: LaurentPoly, n: int) -> RingMatrix:
    """``p(A)`` for the companion matrix A of 1 + x + ... + x^(n-1) (A^n = I)."""
    powers = _companion_powers(n)
    acc = RingMatrix.zeros(ZZ, n - 1)
    for k, c in p.terms.items():
        acc = acc + powers[k % n].scale(c)
    return acc


def reduced_oracle(b: BraidWord, n: int) -> RingMatrix:
    """Action on H1 of the complete curve computed from words alone.

    Basis ``x1^i xj x1^(-i-1)`` (j = 2..s-1, i = 0..n-2) in that nesting; each
    image goes through rewriting into R_n, then the quotient by the x_j^n.
    Also defined for the extra generator s_{s-1} when n divides s.
    """
    s = b.s
    if n < 2:
        raise ValueError("need n >= 2")
    cols = []
    for j in range(2, s):
        for i in range(n - 1):
            img = artin_apply(b, beta_word(j, s, i))
            try:
                v = abelianize_Rn(img, n)
            except NotInSubgroupError as exc:
                raise ValueError(f"braid {b} does not preserve R_{n} (s={s})") from exc
            cols.append(project_complete(v).flat())
    return RingMatrix.from_columns(ZZ, cols)


def reduced_burau(b: BraidWord, n: int) -> RingMatrix:
    """Integer matrix of size (n-1)(s-2) = 2g: every entry p(t) becomes p(A).

    Letters s_{s-1} have no Laurent matrix; when n divides s they are realised
    by :func:`reduced_oracle`, otherwise a ValueError is raised.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    s = b.s
    size = n - 1
    expand = lambda m: m.expand_blocks(lambda p: laurent_at_companion(p, n), ZZ, size)  # noqa: E731
    if all(i <= s - 2 for i, _ in b):
        return expand(burau_of_braid(b))
    if s % n:
        raise ValueError(f"s{s - 1} acts on the level-{n} cover only when n divides s (s={s})")
    out = RingMatrix.identity(ZZ, size * (s - 2))
    for i, e in b:
        letter = BraidWord([(i, e)], s)
        out = out @ (reduced_oracle(letter, n) if i == s - 1 else expand(burau_of_braid(letter)))
    return out


def eigen_specialize(b: BraidWord, n: int, nu: int) -> RingMatrix:
    """Burau matrix with t -> x^nu over Z[x]/(1 + x + ... + x^(n-1)).

    Read x as a primitive n-th root of unity zeta; the result is the action on
    the zeta^nu eigenspace.  For gcd(nu, n) > 1, x^nu has smaller order and the
    eigenspace comes from an intermediate cover; the matrix is still returned.
    """
    if not 1 <= nu <= n - 1:
        raise ValueError(f"nu must lie in 1..{n - 1}, got {nu}")
    ring = QuotientRing.coaugmentation(n)
    return burau_of_braid(b).map(lambda p: p.substitute(lambda k: ring.t(nu * k), ring), ring)


def invariant_span_action(b: BraidWord, n: int) -> RingMatrix:
    """(s-1)x(s-1) integer matrix of b on span{x1^n, ..., x_{s-1}^n} inside R_n/R_n'."""
    s = b.s
    # x1^n -> extra slot; xj^n -> norm*beta_j + extra
    cols = []
    for k in range(1, s):
        img = abelianize_Rn(artin_apply(b, Word.gen(k, s, n)), n)
        col = [0] * (s - 1)
        total = 0
        for j, c in enumerate(img.coords, start=2):
            if len(set(c.coeffs)) != 1:
                raise ValueError(f"image of x{k}^{n} under {b} leaves the span of the x_j^n")
            col[j - 1] = c.coeffs[0]
            total += c.coeffs[0]
        col[0] = img.extra - total
        cols.append(col)
    return RingMatrix.from_columns(ZZ, cols)


def charpoly_factorization(b: BraidWord, n: int):
    """Both sides of ``charpoly(reduced) == prod_nu charpoly(eigen_nu)``.

    The right side is computed over Z[x]/(1 + ... + x^(n-1)) and then pushed to
    Z[x]/(Phi_n), i.e. x -> primitive zeta.  Returns ``(lhs, rhs)`` as lists of
    coefficients in the cyclotomic ring, highest degree first.
    """
    target = QuotientRing.cyclotomic(n)
    lhs = [target.from_int(c) for c in reduced_burau(b, n).charpoly()]
    rhs = [target.one()]
    for nu in range(1, n):
        cp = [c.lift(target) for c in eigen_specialize(b, n, nu).charpoly()]
        rhs = poly_mul(rhs, cp, target.zero())
    return lhs, rhs


def vandermonde_blocks(b: BraidWord, n: int) -> float:
    """Floating diagnostic: conjugate the reduced matrix by the Vandermonde
    matrix of the nontrivial n-th roots and compare every eigen-block with the
    Burau matrix at t = zeta^nu.  Returns the max absolute deviation."""
    s = b.s
    d = s - 2
    zetas = [cmath.exp(2j * cmath.pi * nu / n) for nu in range(1, n)]
    P = np.array([[z**k for k in range(n - 1)] for z in zetas])
    big_P = np.kron(np.eye(d), P)
    R = np.array(reduced_burau(b, n).rows, dtype=complex)
    D = big_P @ R @ np.linalg.inv(big_P)
    B = burau_of_braid(b)
    err = 0.0
    for v, z in enumerate(zetas):
        idx = [j * (n - 1) + v for j in range(d)]
        block = D[np.ix_(idx, idx)]
        ref = np.array([[sum(c * z**k for k, c in p.terms.items()) for p in row] for row in B.rows], dtype=complex)
        err = max(err, float(np.max(np.abs(block - ref))) if d else 0.0)
    return err
