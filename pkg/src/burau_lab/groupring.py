"""Coefficient rings, the geometric-sum operator Gamma, and abelianization maps.

Rings
-----
``ZZ``                 plain Python integers
``LAURENT``            Z[t, t^-1], sparse, exact
``CyclicRing(n)``      Z[Z/nZ] with generator t (the deck transformation)
``TruncatedRing(l,K,M)``  (Z/l^K)[Z/l^M], a finite stand-in for Z_l[[Z_l]]
``QuotientRing(f)``    Z[x]/(f) for monic f; ``QuotientRing.coaugmentation(n)``
                       is Z[x]/(1 + x + ... + x^(n-1)), the co-augmentation module
                       J = Z[Z/nZ]/(norm) with its ring structure.

Every ring exposes ``zero()``, ``one()``, ``t(k)``, ``coerce``, ``unit_inverse``
and a JSON ``encode``/``decode`` pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .freegroup import Word, winding
from .matrix import RingMatrix
from .schreier import FiniteCyclic, NotInSubgroupError, Window, minimal_window, rewrite

__all__ = [
    "ZZ",
    "LAURENT",
    "IntegerRing",
    "LaurentRing",
    "CyclicRing",
    "TruncatedRing",
    "QuotientRing",
    "LaurentPoly",
    "CyclicAlgebraElem",
    "TruncatedCompletedElem",
    "QuotientElem",
    "LadicExponent",
    "HomologyVector",
    "gamma",
    "companion_matrix",
    "cyclotomic_polynomial",
    "abelianize_R0",
    "abelianize_Rn",
    "project_complete",
    "ring_from_json",
]


class _Elem:
    """Shared operator plumbing: ints are promoted into the element's ring."""

    __slots__ = ()

    def _lift(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, _Elem) and other.ring == self.ring:
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self._add(o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self._add(-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o._add(-self)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self._mul(o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.ring.unit_inverse(self) ** (-k)
        out, base = self.ring.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __hash__(self):
        return hash((self.ring, self._key()))


# --------------------------------------------------------------------------
# integers


@dataclass(frozen=True)
class IntegerRing:
    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, c: int) -> int:
        return int(c)

    def coerce(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"expected an integer, got {x!r}")
        return x

    def unit_inverse(self, x: int) -> int:
        if x not in (1, -1):
            raise ValueError(f"{x} is not a unit of Z")
        return x

    def encode(self, x: int):
        return x

    def decode(self, obj) -> int:
        return int(obj)

    def to_json(self):
        return {"ring": "integer"}

    def __str__(self):
        return "Z"


ZZ = IntegerRing()


# --------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentRing:
    def zero(self) -> LaurentPoly:
        return LaurentPoly({})

    def one(self) -> LaurentPoly:
        return LaurentPoly({0: 1})

    def t(self, k: int = 1) -> LaurentPoly:
        return LaurentPoly({k: 1})

    def from_int(self, c: int) -> LaurentPoly:
        return LaurentPoly({0: c})

    def coerce(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into Z[t, t^-1]")

    def unit_inverse(self, x: LaurentPoly) -> LaurentPoly:
        if len(x.terms) == 1:
            (k, c), = x.terms.items()
            if c in (1, -1):
                return LaurentPoly({-k: c})
        raise ValueError(f"{x} is not a unit of Z[t, t^-1]")

    def encode(self, x: LaurentPoly) -> dict:
        return {str(k): c for k, c in sorted(x.terms.items())}

    def decode(self, obj) -> LaurentPoly:
        return LaurentPoly({int(k): int(c) for k, c in obj.items()})

    def to_json(self):
        return {"ring": "laurent"}

    def __str__(self):
        return "Z[t,t^-1]"


LAURENT = LaurentRing()


class LaurentPoly(_Elem):
    """Sparse map exponent -> integer coefficient; zero coefficients never stored."""

    __slots__ = ("terms",)
    ring = LAURENT

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {int(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], start: int = 0) -> LaurentPoly:
        return cls({start + i: c for i, c in enumerate(coeffs)})

    def _key(self):
        return tuple(sorted(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _add(self, o: LaurentPoly) -> LaurentPoly:
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def _mul(self, o: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    def coeff(self, k: int) -> int:
        return self.terms.get(k, 0)

    def substitute(self, power, ring):
        """Evaluate with ``t^k -> power(k)`` inside ``ring``."""
        acc = ring.zero()
        for k, c in sorted(self.terms.items()):
            acc = acc + power(k) * c
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self.terms})"


# --------------------------------------------------------------------------
# Z[Z/nZ]


@dataclass(frozen=True)
class CyclicRing:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("CyclicRing needs n >= 1")

    def zero(self):
        return CyclicAlgebraElem(self, (0,) * self.n)

    def one(self):
        return self.t(0)

    def t(self, k: int = 1):
        c = [0] * self.n
        c[k % self.n] = 1
        return CyclicAlgebraElem(self, c)

    def from_int(self, c: int):
        return CyclicAlgebraElem(self, (c,) + (0,) * (self.n - 1))

    def coerce(self, x):
        if isinstance(x, CyclicAlgebraElem) and x.ring == self:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def norm(self):
        return CyclicAlgebraElem(self, (1,) * self.n)

    def unit_inverse(self, x):
        nz = [(i, c) for i, c in enumerate(x.coeffs) if c]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            i, c = nz[0]
            return self.t(-i) * c
        raise ValueError(f"{x} is not a trivial unit of {self}")

    def encode(self, x) -> list:
        return list(x.coeffs)

    def decode(self, obj):
        return CyclicAlgebraElem(self, obj)

    def to_json(self):
        return {"ring": "cyclic", "n": self.n}

    def __str__(self):
        return f"Z[Z/{self.n}]"


class CyclicAlgebraElem(_Elem):
    """``sum_i coeffs[i] * sigma^i`` in Z[Z/nZ]."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CyclicRing, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ring.n:
            raise ValueError(f"need exactly {ring.n} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.coeffs = coeffs

    def _key(self):
        return self.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def _add(self, o):
        return CyclicAlgebraElem(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __neg__(self):
        return CyclicAlgebraElem(self.ring, [-a for a in self.coeffs])

    def _mul(self, o):
        n = self.ring.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return CyclicAlgebraElem(self.ring, out)

    def __str__(self):
        return _poly_str(self.coeffs, "s")

    def __repr__(self):
        return f"CyclicAlgebraElem(n={self.ring.n}, {list(self.coeffs)})"


# --------------------------------------------------------------------------
# (Z/l^K)[Z/l^M]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class TruncatedRing:
    """(Z/l^K)[Z/l^M]: coefficients kept to precision K, the group Z_l to M digits."""

    l: int  # noqa: E741
    K: int
    M: int

    def __post_init__(self):
        if not _is_prime(self.l):
            raise ValueError(f"l must be prime, got {self.l}")
        if self.K < 1 or self.M < 1:
            raise ValueError("K and M must be >= 1")

    @property
    def coeff_mod(self) -> int:
        return self.l ** self.K

    @property
    def group_order(self) -> int:
        return self.l ** self.M

    @property
    def exponent_mod(self) -> int:
        # Gamma(a) depends on a only through a mod l^(M+K)
        return self.l ** (self.M + self.K)

    def zero(self):
        return TruncatedCompletedElem(self, (0,) * self.group_order)

    def one(self):
        return self.t(0)

    def t(self, k: int = 1):
        if isinstance(k, LadicExponent):
            k = k.value
        c = [0] * self.group_order
        c[k % self.group_order] = 1
        return TruncatedCompletedElem(self, c)

    def from_int(self, c: int):
        return TruncatedCompletedElem(self, (c,) + (0,) * (self.group_order - 1))

    def coerce(self, x):
        if isinstance(x, TruncatedCompletedElem) and x.ring == self:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_laurent(self, p: LaurentPoly):
        """Image of Z[t, t^-1] -> (Z/l^K)[Z/l^M]."""
        c = [0] * self.group_order
        for k, a in p.terms.items():
            c[k % self.group_order] += a
        return TruncatedCompletedElem(self, c)

    def exponent(self, value) -> LadicExponent:
        return LadicExponent.of(value, self)

    def unit_inverse(self, x):
        nz = [(i, c) for i, c in enumerate(x.coeffs) if c]
        if len(nz) == 1 and nz[0][1] % self.l:
            i, c = nz[0]
            return self.t(-i) * pow(c, -1, self.coeff_mod)
        raise ValueError(f"{x} is not a monomial unit of {self}")

    def encode(self, x) -> dict:
        return {"l": self.l, "K": self.K, "M": self.M, "coeffs": list(x.coeffs)}

    def decode(self, obj):
        ring = TruncatedRing(obj["l"], obj["K"], obj["M"])
        if ring != self:
            raise ValueError(f"encoded element lives in {ring}, expected {self}")
        return TruncatedCompletedElem(self, obj["coeffs"])

    def to_json(self):
        return {"ring": "truncated", "l": self.l, "K": self.K, "M": self.M}

    def __str__(self):
        return f"Z/{self.l}^{self.K}[Z/{self.l}^{self.M}]"


class TruncatedCompletedElem(_Elem):
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TruncatedRing, coeffs: Sequence[int]):
        if len(coeffs) != ring.group_order:
            raise ValueError(f"need {ring.group_order} coefficients, got {len(coeffs)}")
        m = ring.coeff_mod
        self.ring = ring
        self.coeffs = tuple(int(c) % m for c in coeffs)

    def _key(self):
        return self.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def _add(self, o):
        return TruncatedCompletedElem(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __neg__(self):
        return TruncatedCompletedElem(self.ring, [-a for a in self.coeffs])

    def _mul(self, o):
        n = self.ring.group_order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return TruncatedCompletedElem(self.ring, out)

    def __str__(self):
        return _poly_str(self.coeffs, "t")

    def __repr__(self):
        return f"TruncatedCompletedElem({self.ring}, {list(self.coeffs)})"


@dataclass(frozen=True)
class LadicExponent:
    """An element of Z_l known modulo l^(M+K), used as an exponent of t."""

    value: int
    l: int  # noqa: E741
    prec: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.l ** self.prec)

    @classmethod
    def of(cls, value, ring: TruncatedRing) -> LadicExponent:
        if isinstance(value, LadicExponent):
            if (value.l, value.prec) != (ring.l, ring.M + ring.K):
                raise ValueError(
                    f"exponent known mod {value.l}^{value.prec}, ring needs mod {ring.l}^{ring.M + ring.K}"
                )
            return value
        return cls(int(value), ring.l, ring.M + ring.K)

    def is_unit(self) -> bool:
        return self.value % self.l != 0

    def __int__(self):
        return self.value


# --------------------------------------------------------------------------
# Z[x]/(f)


def _poly_str(coeffs: Sequence[int], var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dd] // den[dd]
        q[k] = c
        for i, b in enumerate(den):
            num[k + i] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


@dataclass(frozen=True)
class QuotientRing:
    """Z[x]/(f), f monic given low-degree-first; ``order`` n means x^n = 1 holds."""

    modulus: tuple[int, ...]
    order: int | None = None

    def __post_init__(self):
        if len(self.modulus) < 2 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")

    @classmethod
    def coaugmentation(cls, n: int) -> QuotientRing:
        """Z[x]/(1 + x + ... + x^(n-1))."""
        if n < 2:
            raise ValueError("need n >= 2")
        return cls((1,) * n, n)

    @classmethod
    def cyclotomic(cls, n: int) -> QuotientRing:
        return cls(cyclotomic_polynomial(n), n)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        c = list(coeffs)
        d = self.degree
        f = self.modulus
        for k in range(len(c) - 1, d - 1, -1):
            a = c[k]
            if a:
                for i in range(d + 1):
                    c[k - d + i] -= a * f[i]
        c = c[:d] + [0] * (d - len(c))
        return tuple(c)

    def zero(self):
        return QuotientElem(self, (0,) * self.degree)

    def one(self):
        return self.from_int(1)

    def t(self, k: int = 1):
        if k < 0:
            if self.order is None:
                raise ValueError("negative powers of x need a known order")
            k %= self.order
        return QuotientElem(self, self.reduce([0] * k + [1]))

    def from_int(self, c: int):
        return QuotientElem(self, self.reduce([c]))

    def from_poly(self, coeffs: Sequence[int]):
        return QuotientElem(self, self.reduce(coeffs))

    def coerce(self, x):
        if isinstance(x, QuotientElem) and x.ring == self:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def unit_inverse(self, x):
        if x == 1 or x == -1:
            return x
        for k in range(1, (self.order or 0)):
            for sign in (1, -1):
                if x == self.t(k) * sign:
                    return self.t(-k) * sign
        raise ValueError(f"{x} is not a signed power of x in {self}")

    def multiplication_matrix(self, x) -> RingMatrix:
        """Integer matrix of ``y -> x*y`` in the basis 1, x, ..., x^(d-1)."""
        cols = [(x * self.t(k)).coeffs for k in range(self.degree)]
        return RingMatrix.from_columns(ZZ, cols)

    def encode(self, x) -> dict:
        return {"mod": list(self.modulus), "coeffs": list(x.coeffs)}

    def decode(self, obj):
        if tuple(obj["mod"]) != self.modulus:
            raise ValueError("encoded element has a different modulus")
        return QuotientElem(self, obj["coeffs"])

    def to_json(self):
        return {"ring": "quotient", "modulus": list(self.modulus), "order": self.order}

    def __str__(self):
        return f"Z[x]/({_poly_str(self.modulus, 'x')})"


class QuotientElem(_Elem):
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ring.degree:
            raise ValueError(f"need {ring.degree} coefficients")
        self.ring = ring
        self.coeffs = coeffs

    def _key(self):
        return self.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def _add(self, o):
        return QuotientElem(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __neg__(self):
        return QuotientElem(self.ring, [-a for a in self.coeffs])

    def _mul(self, o):
        prod = [0] * (2 * self.ring.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return QuotientElem(self.ring, self.ring.reduce(prod))

    def lift(self, ring: QuotientRing) -> QuotientElem:
        """Push into ``Z[x]/(g)`` when g divides this ring's modulus."""
        return ring.from_poly(self.coeffs)

    def __str__(self):
        return _poly_str(self.coeffs, "x")

    def __repr__(self):
        return f"QuotientElem({self.ring}, {list(self.coeffs)})"


def ring_from_json(obj):
    kind = obj["ring"]
    if kind == "integer":
        return ZZ
    if kind == "laurent":
        return LAURENT
    if kind == "cyclic":
        return CyclicRing(obj["n"])
    if kind == "truncated":
        return TruncatedRing(obj["l"], obj["K"], obj["M"])
    if kind == "quotient":
        return QuotientRing(tuple(obj["modulus"]), obj.get("order"))
    raise ValueError(f"unknown ring tag {kind!r}")


# --------------------------------------------------------------------------
# Gamma(a) = (t^a - 1)/(t - 1)


def gamma(a, ring=LAURENT):
    """``1 + t + ... + t^(a-1)``, extended to l-adic ``a`` in the truncated ring.

    In (Z/l^K)[Z/l^M] with ``a = q l^M + r`` this is ``q*norm + (1 + ... + t^(r-1))``;
    it satisfies ``(t - 1) * gamma(a) == t^a - 1`` in every ring.
    """
    if isinstance(ring, LaurentRing):
        a = int(a)
        if a < 0:
            raise ValueError("gamma over Z[t, t^-1] needs a >= 0")
        return LaurentPoly({k: 1 for k in range(a)})
    if isinstance(ring, TruncatedRing):
        a = LadicExponent.of(a, ring).value
        n = ring.group_order
        q, r = divmod(a, n)
        return TruncatedCompletedElem(ring, [q + (1 if k < r else 0) for k in range(n)])
    if isinstance(ring, CyclicRing):
        q, r = divmod(int(a), ring.n)
        return CyclicAlgebraElem(ring, [q + (1 if k < r else 0) for k in range(ring.n)])
    a = int(a)
    if a < 0:
        raise ValueError(f"gamma over {ring} needs a >= 0")
    acc = ring.zero()
    for k in range(a):
        acc = acc + ring.t(k)
    return acc


def companion_matrix(n: int) -> RingMatrix:
    """(n-1)x(n-1) companion matrix of 1 + x + ... + x^(n-1): multiplication by
    the generator on the co-augmentation module in the basis 1, s, ..., s^(n-2)."""
    if n < 2:
        raise ValueError(f"companion_matrix needs n >= 2, got {n}")
    d = n - 1
    rows = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        rows[i + 1][i] = 1
    for i in range(d):
        rows[i][d - 1] = -1
    return RingMatrix(ZZ, rows)


# --------------------------------------------------------------------------
# homology vectors


class HomologyVector:
    """Coordinates on beta_2, ..., beta_{s-1} (plus an optional x1^n slot)."""

    __slots__ = ("ring", "coords", "extra")

    def __init__(self, ring, coords: Sequence, extra: int | None = None):
        self.ring = ring
        self.coords = tuple(ring.coerce(c) for c in coords)
        self.extra = extra

    @classmethod
    def zero(cls, ring, s: int, with_extra: bool = False) -> HomologyVector:
        return cls(ring, [ring.zero()] * (s - 2), 0 if with_extra else None)

    @classmethod
    def unit(cls, ring, s: int, j: int, coeff=None, with_extra: bool = False) -> HomologyVector:
        """``coeff * beta_j`` (j in 2..s-1)."""
        if not 2 <= j <= s - 1:
            raise ValueError(f"beta_{j} is not a basis vector for s={s}")
        coords = [ring.zero()] * (s - 2)
        coords[j - 2] = ring.one() if coeff is None else ring.coerce(coeff)
        return cls(ring, coords, 0 if with_extra else None)

    @property
    def s(self) -> int:
        return len(self.coords) + 2

    def _check(self, other):
        if self.ring != other.ring or len(self.coords) != len(other.coords):
            raise ValueError("homology vectors live in different modules")
        if (self.extra is None) != (other.extra is None):
            raise ValueError("extra-slot mismatch")

    def __add__(self, other):
        self._check(other)
        extra = None if self.extra is None else self.extra + other.extra
        return HomologyVector(self.ring, [a + b for a, b in zip(self.coords, other.coords)], extra)

    def __neg__(self):
        return HomologyVector(self.ring, [-a for a in self.coords], None if self.extra is None else -self.extra)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HomologyVector:
        """Module action of a ring element (the extra slot is a trivial module)."""
        c = self.ring.coerce(c)
        extra = self.extra
        if extra is not None:
            # Z/nZ acts trivially on the x1^n summand: c acts through its augmentation
            extra = extra * sum(c.coeffs)
        return HomologyVector(self.ring, [c * a for a in self.coords], extra)

    def __eq__(self, other):
        if not isinstance(other, HomologyVector):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords and self.extra == other.extra

    def __hash__(self):
        return hash((self.ring, self.coords, self.extra))

    def flat(self) -> list[int]:
        """Integer coordinates for vectors over a quotient ring (block per beta_j)."""
        out = []
        for c in self.coords:
            out.extend(c.coeffs)
        return out

    def to_json(self):
        d = {"ring": self.ring.to_json(), "coords": [self.ring.encode(c) for c in self.coords]}
        if self.extra is not None:
            d["extra"] = self.extra
        return d

    @classmethod
    def from_json(cls, obj) -> HomologyVector:
        ring = ring_from_json(obj["ring"])
        return cls(ring, [ring.decode(c) for c in obj["coords"]], obj.get("extra"))

    def __str__(self):
        body = ", ".join(str(c) for c in self.coords)
        if self.extra is not None:
            return f"({body} | {self.extra})"
        return f"({body})"

    def __repr__(self):
        return f"HomologyVector({self})"


def abelianize_R0(w: Word, window: Window | None = None) -> HomologyVector:
    """Image of ``w`` in H1(C_s) = R0/R0' = Z[t,t^-1]^(s-2); ``Beta(i,j) -> t^i beta_j``.

    Without an explicit window the minimal sufficient one is used.
    """
    if winding(w) != 0:
        raise NotInSubgroupError(f"winding {winding(w)} != 0; {w} is not in R0")
    s = w.s
    if window is None:
        window = minimal_window(w)
    coords: list[dict[int, int]] = [{} for _ in range(s - 2)]
    for g, e in rewrite(w, window):
        slot = coords[g.j - 2]
        slot[g.i] = slot.get(g.i, 0) + e
    return HomologyVector(LAURENT, [LaurentPoly(c) for c in coords])


def abelianize_Rn(w: Word, n: int) -> HomologyVector:
    """Image of ``w`` in R_n/R_n' = Z[Z/nZ]^(s-2) + Z over the basis
    ``{x1^i xj x1^(-i-1)} u {x1^n}``; the extra slot counts x1^n."""
    s = w.s
    ring = CyclicRing(n)
    coords = [[0] * n for _ in range(s - 2)]
    extra = 0
    for g, e in rewrite(w, FiniteCyclic(n)):
        if g.kind == "beta":
            coords[g.j - 2][g.i] += e
        else:
            # x1^(n-1) xj = (x1^(n-1) xj x1^-n) * x1^n
            extra += e
            if g.j != 1:
                coords[g.j - 2][n - 1] += e
    return HomologyVector(ring, [CyclicAlgebraElem(ring, c) for c in coords], extra)


def project_complete(v: HomologyVector) -> HomologyVector:
    """R_n/R_n' -> H1 of the complete curve = J^(s-2): drop the x1^n slot and
    reduce each coordinate modulo the norm element."""
    if not isinstance(v.ring, CyclicRing):
        raise ValueError("project_complete expects a vector over Z[Z/nZ]")
    n = v.ring.n
    target = QuotientRing.coaugmentation(n)
    coords = []
    for c in v.coords:
        top = c.coeffs[-1]
        coords.append(QuotientElem(target, [a - top for a in c.coeffs[:-1]]))
    return HomologyVector(target, coords)
