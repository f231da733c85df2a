"""Schreier transversals for the winding-number subgroups and Reidemeister rewriting.

Two subgroups of ``F_{s-1}`` are handled, both cut out by the winding map:

* ``R0``, the kernel of ``winding`` (infinite index), with the transversal
  ``{x1^i : i in Z}`` materialised through a finite :class:`Window`;
* ``Rn``, the kernel of ``winding mod n``, with transversal ``{x1^0..x1^(n-1)}``
  (:class:`FiniteCyclic`).

Free generators come in two flavours: ``Beta(i, j) = x1^i xj x1^(-i-1)`` and,
for the finite case only, ``Tail(j) = x1^(n-1) xj``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freegroup import Word, winding

__all__ = [
    "FiniteCyclic",
    "Window",
    "SubgroupGenerator",
    "NotInSubgroupError",
    "WindowExceededError",
    "schreier_generators",
    "rewrite",
    "expand_rewriting",
    "minimal_window",
    "index_check",
]


class NotInSubgroupError(ValueError):
    pass


class WindowExceededError(ValueError):
    def __init__(self, window: Window, required: Window):
        self.window = window
        self.required = required
        super().__init__(
            f"rewriting needs Beta indices in [{required.lo}, {required.hi}] "
            f"but the window is [{window.lo}, {window.hi}]; use Window({required.lo}, {required.hi})"
        )


@dataclass(frozen=True)
class FiniteCyclic:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"FiniteCyclic needs n >= 2, got {self.n}")

    def indices(self) -> range:
        return range(self.n)

    def coset(self, w: Word) -> int:
        return winding(w) % self.n


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if not self.lo <= 0 <= self.hi:
            raise ValueError(f"Window needs lo <= 0 <= hi, got [{self.lo}, {self.hi}]")

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def coset(self, w: Word) -> int:
        return winding(w)

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi


@dataclass(frozen=True)
class SubgroupGenerator:
    """``kind`` is ``"beta"`` (``x1^i xj x1^(-i-1)``) or ``"tail"`` (``x1^i xj`` with i = n-1)."""

    kind: str
    i: int
    j: int
    word: Word = field(compare=False, repr=False)

    @classmethod
    def beta(cls, i: int, j: int, s: int) -> SubgroupGenerator:
        if not 2 <= j <= s - 1:
            raise ValueError(f"Beta generators need 2 <= j <= s-1, got j={j}")
        w = Word(((1, i), (j, 1), (1, -i - 1)), s)
        return cls("beta", i, j, w)

    @classmethod
    def tail(cls, j: int, n: int, s: int) -> SubgroupGenerator:
        w = Word(((1, n - 1), (j, 1)), s)
        return cls("tail", n - 1, j, w)

    def __str__(self):
        if self.kind == "beta":
            return f"Beta({self.i},{self.j})"
        return f"Tail({self.j})"


def _x1_power(i: int, s: int) -> Word:
    return Word(((1, i),), s)


def schreier_generators(t: FiniteCyclic | Window, s: int) -> list[SubgroupGenerator]:
    """All nontrivial ``gamma(r, x) = r x (rep of r x)^-1`` over representatives ``r``.

    The generic Schreier construction is carried out literally and then each
    result is tagged; the tag is checked against its expansion.
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    out = []
    for i in t.indices():
        rep = _x1_power(i, s)
        for j in range(1, s):
            tx = rep * Word.gen(j, s)
            k = t.coset(tx)
            gamma = tx * _x1_power(k, s).inverse()
            if not gamma:
                continue
            if k == i + 1:
                g = SubgroupGenerator.beta(i, j, s)
            else:
                g = SubgroupGenerator.tail(j, t.n, s)
            assert g.word == gamma, (g, gamma)
            out.append(g)
    return out


def _gamma(i: int, j: int, t: FiniteCyclic | Window, s: int) -> SubgroupGenerator | None:
    """Schreier generator for representative ``x1^i`` and letter ``xj``; None if trivial."""
    if isinstance(t, FiniteCyclic) and i == t.n - 1:
        return SubgroupGenerator.tail(j, t.n, s)
    if j == 1:
        return None
    return SubgroupGenerator.beta(i, j, s)


def rewrite(w: Word, t: FiniteCyclic | Window) -> list[tuple[SubgroupGenerator, int]]:
    """Reidemeister rewriting of ``w`` as a product of Schreier generators.

    Raises :class:`NotInSubgroupError` if ``w`` is outside the subgroup and
    :class:`WindowExceededError` (carrying the minimal window) if a ``Beta``
    index falls outside a finite window.
    """
    s = w.s
    if isinstance(t, FiniteCyclic):
        if winding(w) % t.n:
            raise NotInSubgroupError(f"winding {winding(w)} of {w} is not divisible by n={t.n}")
    elif winding(w) != 0:
        raise NotInSubgroupError(f"winding {winding(w)} of {w} is nonzero; not in R0")

    out: list[tuple[SubgroupGenerator, int]] = []
    c = 0
    for j, e in w.unit_letters():
        if e == 1:
            g = _gamma(c, j, t, s)
            if g is not None:
                out.append((g, 1))
            c += 1
        else:
            c -= 1
            if isinstance(t, FiniteCyclic):
                c %= t.n
            g = _gamma(c, j, t, s)
            if g is not None:
                out.append((g, -1))
        if isinstance(t, FiniteCyclic):
            c %= t.n

    if isinstance(t, Window):
        used = [g.i for g, _ in out]
        if used and (min(used) < t.lo or max(used) > t.hi):
            raise WindowExceededError(t, Window(min(min(used), 0), max(max(used), 0)))
    return out


def expand_rewriting(terms: list[tuple[SubgroupGenerator, int]], s: int) -> Word:
    out = Word.identity(s)
    for g, e in terms:
        out = out * (g.word if e > 0 else g.word.inverse())
    return out


def minimal_window(w: Word) -> Window:
    """Smallest window that lets :func:`rewrite` handle ``w`` (winding must be 0)."""
    lo = hi = 0
    c = 0
    for j, e in w.unit_letters():
        if e == -1:
            c -= 1
        if j != 1:
            lo, hi = min(lo, c), max(hi, c)
        if e == 1:
            c += 1
    return Window(lo, hi)


def index_check(n: int, s: int) -> bool:
    """Schreier index formula for Rn: ``r - 1 == n (s - 2)``."""
    if n < 2 or s < 3:
        raise ValueError(f"index_check needs n >= 2 and s >= 3, got n={n}, s={s}")
    r = len(schreier_generators(FiniteCyclic(n), s))
    return r - 1 == n * (s - 2)
