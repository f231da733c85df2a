"""Words in the free group on x1, ..., x_{s-1} and the Artin action of braids.

The ambient free group is ``F_{s-1} = <x1, ..., xs | x1 x2 ... xs = 1>``; only
x1, ..., x_{s-1} are stored, ``xs`` is expanded on demand by :func:`expand_xs`.

Text format for words: ``x1 x2^-1 x3^2`` (the empty word prints as ``1``).
Text format for braids: ``s1 s2^-1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "Word",
    "BraidWord",
    "reduce",
    "multiply",
    "invert",
    "expand_xs",
    "winding",
    "substitute",
    "artin_images",
    "artin_apply",
    "parse_word",
    "parse_braid",
]


def _check_s(s: int) -> None:
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"ambient s must be an integer >= 2, got {s!r}")


def reduce(letters: Iterable[tuple[int, int]], s: int) -> tuple[tuple[int, int], ...]:
    """Freely reduce a raw sequence of ``(generator, exponent)`` pairs."""
    _check_s(s)
    stack: list[list[int]] = []
    for gen, exp in letters:
        gen, exp = int(gen), int(exp)
        if not 1 <= gen <= s - 1:
            raise ValueError(f"generator index x{gen} out of range 1..{s - 1}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


class Word:
    """A freely reduced word; equality is structural."""

    __slots__ = ("letters", "s", "_hash")

    def __init__(self, letters: Iterable[tuple[int, int]], s: int):
        self.letters = reduce(letters, s)
        self.s = s
        self._hash = hash((self.letters, s))

    @classmethod
    def identity(cls, s: int) -> Word:
        return cls((), s)

    @classmethod
    def gen(cls, i: int, s: int, exp: int = 1) -> Word:
        return cls(((i, exp),), s)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.s == other.s and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return invert(self) ** (-k)
        out = Word.identity(self.s)
        base = self
        # square-and-multiply keeps long powers (x_i^81 etc.) cheap
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Word:
        return invert(self)

    def unit_letters(self):
        """Yield ``(generator, +1/-1)`` one letter at a time."""
        for g, e in self.letters:
            sign = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, sign

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r}, s={self.s})"


def multiply(u: Word, v: Word) -> Word:
    if u.s != v.s:
        raise ValueError(f"cannot multiply words over different ambient s ({u.s} vs {v.s})")
    return Word(u.letters + v.letters, u.s)


def invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.letters)), w.s)


def expand_xs(s: int) -> Word:
    """``xs = (x1 x2 ... x_{s-1})^-1`` written in the free basis."""
    if s < 3:
        raise ValueError(f"expand_xs needs s >= 3, got {s}")
    return Word(tuple((g, -1) for g in range(s - 1, 0, -1)), s)


def winding(w: Word) -> int:
    """Exponent sum; the homomorphism F_{s-1} -> Z with every x_i -> 1."""
    return sum(e for _, e in w.letters)


def substitute(w: Word, images: Mapping[int, Word]) -> Word:
    """Apply the endomorphism ``x_j -> images[j]`` (missing j are fixed)."""
    s = w.s
    out: list[tuple[int, int]] = []
    for g, e in w.letters:
        img = images.get(g)
        if img is None:
            out.append((g, e))
            continue
        if img.s != s:
            raise ValueError("image word has a different ambient s")
        piece = img.letters if e > 0 else invert(img).letters
        out.extend(piece * abs(e))
    return Word(out, s)


class BraidWord:
    """Sequence of braid generators ``s_i^{+-1}`` acting on F_{s-1}."""

    __slots__ = ("letters", "s")

    def __init__(self, letters: Iterable[tuple[int, int]], s: int):
        _check_s(s)
        out = []
        for i, e in letters:
            i, e = int(i), int(e)
            if not 1 <= i <= s - 1:
                raise ValueError(f"braid generator s{i} out of range 1..{s - 1}")
            if e not in (1, -1):
                raise ValueError(f"braid letters carry exponent +-1, got {e}")
            out.append((i, e))
        self.letters = tuple(out)
        self.s = s

    @classmethod
    def gen(cls, i: int, s: int, exp: int = 1) -> BraidWord:
        sign = 1 if exp > 0 else -1
        return cls([(i, sign)] * abs(exp), s)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.s != other.s:
            raise ValueError("braid words over different s")
        return BraidWord(self.letters + other.letters, self.s)

    def inverse(self) -> BraidWord:
        return BraidWord([(i, -e) for i, e in reversed(self.letters)], self.s)

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.s == other.s and self.letters == other.letters

    def __hash__(self):
        return hash((self.letters, self.s))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.letters)

    def __repr__(self):
        return f"BraidWord({str(self)!r}, s={self.s})"


def artin_images(i: int, exp: int, s: int) -> dict[int, Word]:
    """Images of the moved generators under ``sigma_i^exp`` (exp = +-1).

    For ``i = s-1`` this is the extra generator acting through ``xs``:
    ``x_{s-1} -> x_{s-1} xs x_{s-1}^-1``, with inverse ``x_{s-1} -> xs``.
    """
    if not 1 <= i <= s - 1:
        raise ValueError(f"braid generator s{i} out of range 1..{s - 1}")
    x = lambda k, e=1: Word.gen(k, s, e)  # noqa: E731
    if i <= s - 2:
        if exp == 1:
            return {i: x(i) * x(i + 1) * x(i, -1), i + 1: x(i)}
        return {i: x(i + 1), i + 1: x(i + 1, -1) * x(i) * x(i + 1)}
    xs = expand_xs(s)
    if exp == 1:
        return {i: x(i) * xs * x(i, -1)}
    return {i: xs}


def artin_apply(g: BraidWord, w: Word) -> Word:
    """Apply a braid word as an automorphism; the rightmost letter acts first,
    so ``artin_apply(a*b, w) == artin_apply(a, artin_apply(b, w))``."""
    if g.s != w.s:
        raise ValueError(f"braid over s={g.s} applied to word over s={w.s}")
    for i, e in reversed(g.letters):
        w = substitute(w, artin_images(i, e, w.s))
    return w


_WORD_TOKEN = re.compile(r"^x(\d+)(?:\^\(?(-?\d+)\)?)?$")
_BRAID_TOKEN = re.compile(r"^s(\d+)(?:\^\(?(-?1)\)?)?$")


def parse_word(text: str, s: int) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return Word.identity(s)
    letters = []
    for tok in text.split():
        m = _WORD_TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad word token {tok!r}; expected x<k> or x<k>^<e>")
        letters.append((int(m.group(1)), int(m.group(2) or 1)))
    return Word(letters, s)


def parse_braid(text: str, s: int) -> BraidWord:
    text = text.strip()
    if text in ("", "1"):
        return BraidWord((), s)
    letters = []
    for tok in text.split():
        m = _BRAID_TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad braid token {tok!r}; expected s<k> or s<k>^-1")
        letters.append((int(m.group(1)), int(m.group(2) or 1)))
    return BraidWord(letters, s)
