"""Pro-l Burau matrices from finite Ihara-type data.

An automorphism of the form ``x1 -> x1^N``, ``xi -> wi xi^N wi^-1`` acts on
H1 of the infinite cyclic cover semilinearly (``t -> t^N``).  Its matrix on
``beta_i = xi x1^-1`` is assembled in closed form from the tail exponents and
abelianized heads of the ``wi`` (:func:`assemble_matburau`) and, for positive
integer N, recomputed purely by rewriting (:func:`direct_oracle`).

Coefficients live in the truncated completed algebra (Z/l^K)[Z/l^M].
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .freegroup import Word, substitute, winding
from .groupring import (
    LAURENT,
    LadicExponent,
    LaurentPoly,
    TruncatedRing,
    abelianize_R0,
    gamma,
)
from .matrix import RingMatrix

__all__ = [
    "GaloisElemData",
    "WordDecomposition",
    "decompose",
    "pass_over_check",
    "write_inv_check",
    "assemble_matburau",
    "direct_oracle",
    "split_oracle",
    "galois_images",
    "apply_galois",
    "twisted_commutation_check",
    "random_R0_word",
]


@dataclass
class GaloisElemData:
    """Finite description ``(N, w2..w_{s-1})`` of ``xi -> wi xi^N wi^-1`` with w1 = 1.

    If ``w1`` is supplied and nontrivial, every ``wi`` is replaced by
    ``w1^-1 wi`` (composition with an inner automorphism) so that w1 = 1.
    """

    s: int
    l: int  # noqa: E741
    K: int
    M: int
    N: int | LadicExponent
    words: dict[int, Word] = field(default_factory=dict)
    w1: Word | None = None

    def __post_init__(self):
        if self.s < 3:
            raise ValueError(f"need s >= 3, got {self.s}")
        self.ring = TruncatedRing(self.l, self.K, self.M)
        self.exponent = LadicExponent.of(self.N, self.ring)
        if not self.exponent.is_unit():
            raise ValueError(f"N = {self.N} is not a unit mod {self.l}")
        words = {}
        for i, w in self.words.items():
            if not 2 <= i <= self.s - 1:
                raise ValueError(f"word index {i} outside 2..{self.s - 1}")
            if w.s != self.s:
                raise ValueError(f"word w{i} lives over s={w.s}, expected {self.s}")
            words[i] = w
        for i in range(2, self.s):
            words.setdefault(i, Word.identity(self.s))
        if self.w1 is not None and self.w1:
            head = self.w1.inverse()
            words = {i: head * w for i, w in words.items()}
        self.w1 = None
        self.words = words

    @property
    def integer_N(self) -> int | None:
        """N as a plain positive integer when it was given as one."""
        if isinstance(self.N, int) and self.N >= 1:
            return self.N
        return None


@dataclass(frozen=True)
class WordDecomposition:
    """``w = B * x1^a1 ... x_{s-1}^a_{s-1}`` with B of winding 0; only B's class is kept."""

    tail: tuple[int, ...]  # a_1 .. a_{s-1}
    head: Word
    b: tuple[LaurentPoly, ...]  # abelianized B on beta_2 .. beta_{s-1}

    def tail_word(self, s: int) -> Word:
        return Word([(j, a) for j, a in enumerate(self.tail, start=1)], s)

    def reconstruct(self) -> Word:
        return self.head * self.tail_word(self.head.s)


def decompose(w: Word) -> WordDecomposition:
    s = w.s
    tail = tuple(w.exponent_sum(j) for j in range(1, s))
    P = Word([(j, a) for j, a in enumerate(tail, start=1)], s)
    B = w * P.inverse()
    return WordDecomposition(tail, B, abelianize_R0(B).coords)


def _beta_coeff(v, i: int) -> LaurentPoly:
    return v.coords[i - 2]


def _only_slot(v, i: int) -> bool:
    return all(not c for k, c in enumerate(v.coords, start=2) if k != i)


def pass_over_check(i: int, a: int, N: int, s: int) -> bool:
    """``xi^a x1^N xi^-a x1^-N`` abelianizes to ``Gamma(a)(1 - t^N) beta_i``.

    This grouping is the one used when pushing x1^N past the tail of a word;
    the mirrored arrangement ``x1^N xi^-a x1^-N xi^a`` equals ``t^-a`` times it
    and is checked alongside.
    """
    if not (0 <= a and 0 <= N):
        raise ValueError("pass_over_check takes a, N >= 0")
    if not 2 <= i <= s - 1:
        raise ValueError(f"i must lie in 2..{s - 1}")
    xi, x1 = Word.gen(i, s), Word.gen(1, s)
    expected = gamma(a) * (1 - LAURENT.t(N))
    v = abelianize_R0(xi**a * x1**N * xi**-a * x1**-N)
    mirrored = abelianize_R0(x1**N * xi**-a * x1**-N * xi**a)
    return (
        _only_slot(v, i)
        and _beta_coeff(v, i) == expected
        and _only_slot(mirrored, i)
        and _beta_coeff(mirrored, i) == expected * LAURENT.t(-a)
    )


def write_inv_check(k: int, a: int, s: int) -> bool:
    """``xk^a x1^-a`` abelianizes to ``Gamma(a) beta_k``."""
    if a < 0:
        raise ValueError("write_inv_check takes a >= 0")
    if not 2 <= k <= s - 1:
        raise ValueError(f"k must lie in 2..{s - 1}")
    v = abelianize_R0(Word.gen(k, s, a) * Word.gen(1, s, -a))
    return _only_slot(v, k) and _beta_coeff(v, k) == gamma(a)


def assemble_matburau(d: GaloisElemData) -> RingMatrix:
    """Closed form ``Gamma(N) L + (1 - t^N)(M + K)``; column i-2 is the image of beta_i.

    ``L = diag(t^{a_1 + ... + a_{s-1}})``, ``M[j, i] = Gamma(a_j) t^{a_1 + ... + a_{j-1}}``
    and ``K[j, i] = b_j``, all read off the decomposition of w_i.
    """
    ring = d.ring
    s = d.s
    N = d.exponent
    gN = gamma(N, ring)
    c = ring.one() - ring.t(N)
    cols = []
    for i in range(2, s):
        dec = decompose(d.words[i])
        a = dec.tail
        col = []
        for j in range(2, s):
            m = gamma(a[j - 1] % ring.exponent_mod, ring) * ring.t(sum(a[: j - 1]))
            val = c * (m + ring.from_laurent(dec.b[j - 2]))
            if j == i:
                val = val + gN * ring.t(sum(a))
            col.append(val)
        cols.append(col)
    return RingMatrix.from_columns(ring, cols)


def _require_integer_N(d: GaloisElemData) -> int:
    N = d.integer_N
    if N is None:
        raise ValueError("the word oracle needs N as a positive integer")
    return N


def direct_oracle(d: GaloisElemData) -> RingMatrix:
    """Column i: ``wi xi^N wi^-1 x1^-N`` rewritten and abelianized, then truncated."""
    N = _require_integer_N(d)
    s = d.s
    x1 = Word.gen(1, s)
    cols = []
    for i in range(2, s):
        w = d.words[i]
        img = w * Word.gen(i, s, N) * w.inverse() * x1**-N
        cols.append([d.ring.from_laurent(c) for c in abelianize_R0(img).coords])
    return RingMatrix.from_columns(d.ring, cols)


def split_oracle(d: GaloisElemData) -> tuple[RingMatrix, RingMatrix, RingMatrix]:
    """The three summands of the closed form, each obtained by rewriting a factor of

    ``w xi^N w^-1 x1^-N = B . (P xi^N x1^-N P^-1) . (P x1^N P^-1 x1^-N) . (x1^N B^-1 x1^-N)``

    where ``w = B P``.  Returns (L-part, M-part, K-part); their sum is
    :func:`direct_oracle`.
    """
    N = _require_integer_N(d)
    s = d.s
    ring = d.ring
    x1 = Word.gen(1, s)
    parts = ([], [], [])
    for i in range(2, s):
        dec = decompose(d.words[i])
        B, P = dec.head, dec.tail_word(s)
        factors = (
            P * Word.gen(i, s, N) * x1**-N * P.inverse(),
            P * x1**N * P.inverse() * x1**-N,
        )
        vs = [abelianize_R0(f) for f in factors]
        vs.append(abelianize_R0(B) + abelianize_R0(x1**N * B.inverse() * x1**-N))
        for out, v in zip(parts, vs):
            out.append([ring.from_laurent(c) for c in v.coords])
    return tuple(RingMatrix.from_columns(ring, cols) for cols in parts)


def galois_images(d: GaloisElemData) -> dict[int, Word]:
    N = _require_integer_N(d)
    s = d.s
    images = {1: Word.gen(1, s, N)}
    for i in range(2, s):
        w = d.words[i]
        images[i] = w * Word.gen(i, s, N) * w.inverse()
    return images


def apply_galois(d: GaloisElemData, w: Word) -> Word:
    return substitute(w, galois_images(d))


def random_R0_word(rng: random.Random, s: int, length: int) -> Word:
    """Random word of winding 0 (a random word corrected by a power of x1)."""
    letters = [(rng.randrange(1, s), rng.choice((1, -1))) for _ in range(length)]
    w = Word(letters, s)
    return w * Word.gen(1, s, -winding(w))


def twisted_commutation_check(d: GaloisElemData, samples: int = 20, seed: int = 0, length: int = 6) -> bool:
    """On random R0 words, ``[sigma(x1 w x1^-1)] == t^N [sigma(w)]`` over Z[t, t^-1]."""
    N = _require_integer_N(d)
    rng = random.Random(seed)
    s = d.s
    x1 = Word.gen(1, s)
    tN = LAURENT.t(N)
    for _ in range(samples):
        w = random_R0_word(rng, s, rng.randrange(0, length + 1))
        lhs = abelianize_R0(apply_galois(d, x1 * w * x1.inverse()))
        rhs = abelianize_R0(apply_galois(d, w))
        if lhs.coords != tuple(tN * c for c in rhs.coords):
            return False
    return True
