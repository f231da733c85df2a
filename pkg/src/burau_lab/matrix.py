"""Dense square matrices over the commutative rings of :mod:`burau_lab.groupring`.

Convention throughout the package: column ``j`` holds the image of the
``j``-th basis vector, so the matrix of a composite ``f o g`` is ``M(f) @ M(g)``.
"""

from __future__ import annotations

from typing import Callable, Sequence

__all__ = ["RingMatrix", "poly_mul"]


class RingMatrix:
    __slots__ = ("ring", "rows", "_hash")

    def __init__(self, ring, rows: Sequence[Sequence]):
        rows = tuple(tuple(ring.coerce(x) for x in r) for r in rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("RingMatrix must be square")
        self.ring = ring
        self.rows = rows
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def identity(cls, ring, d: int) -> RingMatrix:
        z, o = ring.zero(), ring.one()
        return cls(ring, [[o if i == j else z for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, ring, d: int) -> RingMatrix:
        z = ring.zero()
        return cls(ring, [[z] * d for _ in range(d)])

    @classmethod
    def from_columns(cls, ring, columns: Sequence[Sequence]) -> RingMatrix:
        d = len(columns)
        return cls(ring, [[columns[j][i] for j in range(d)] for i in range(d)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    # algebra --------------------------------------------------------------
    def _check(self, other: RingMatrix) -> None:
        if self.ring != other.ring or self.dim != other.dim:
            raise ValueError(f"matrix mismatch: {self.ring}/{self.dim} vs {other.ring}/{other.dim}")

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        return RingMatrix(self.ring, [[a + b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        return RingMatrix(self.ring, [[a - b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __neg__(self) -> RingMatrix:
        return RingMatrix(self.ring, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> RingMatrix:
        c = self.ring.coerce(c)
        return RingMatrix(self.ring, [[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        d = self.dim
        cols = [other.column(j) for j in range(d)]
        z = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out)

    def __pow__(self, k: int) -> RingMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        out = RingMatrix.identity(self.ring, self.dim)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, vec: Sequence) -> tuple:
        z = self.ring.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def map(self, f: Callable, ring=None) -> RingMatrix:
        """Apply ``f`` entrywise, landing in ``ring`` (default: same ring)."""
        return RingMatrix(ring or self.ring, [[f(a) for a in r] for r in self.rows])

    def transpose(self) -> RingMatrix:
        d = self.dim
        return RingMatrix(self.ring, [[self.rows[j][i] for j in range(d)] for i in range(d)])

    def expand_blocks(self, block: Callable, ring, size: int) -> RingMatrix:
        """Replace every entry by the ``size x size`` matrix ``block(entry)``."""
        d = self.dim
        big = [[None] * (d * size) for _ in range(d * size)]
        for i in range(d):
            for j in range(d):
                b = block(self.rows[i][j])
                for a in range(size):
                    for c in range(size):
                        big[i * size + a][j * size + c] = b.rows[a][c]
        return RingMatrix(ring, big)

    def charpoly(self) -> list:
        """Coefficients ``[1, c1, ..., cd]`` of ``det(lambda*I - self)``.

        Berkowitz's algorithm: division free, so valid over any commutative ring.
        """
        ring = self.ring
        A = self.rows
        d = self.dim
        one, zero = ring.one(), ring.zero()
        vec = [one]
        for r in range(1, d + 1):
            a = A[r - 1][r - 1]
            R = A[r - 1][: r - 1]
            C = [A[i][r - 1] for i in range(r - 1)]
            # Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-2} C
            col = [one, -a]
            cur = C
            for _ in range(r - 1):
                acc = zero
                for x, y in zip(R, cur):
                    acc = acc + x * y
                col.append(-acc)
                nxt = []
                for i in range(r - 1):
                    acc = zero
                    for k in range(r - 1):
                        acc = acc + A[i][k] * cur[k]
                    nxt.append(acc)
                cur = nxt
            new = []
            for i in range(r + 1):
                acc = zero
                for k in range(min(i + 1, len(vec))):
                    acc = acc + col[i - k] * vec[k]
                new.append(acc)
            vec = new
        return vec

    def det(self):
        c = self.charpoly()
        return c[-1] if self.dim % 2 == 0 else -c[-1]

    def inverse(self) -> RingMatrix:
        """Exact inverse via Cayley-Hamilton; requires a unit determinant."""
        c = self.charpoly()
        d = self.dim
        # M (M^{d-1} + c1 M^{d-2} + ... + c_{d-1}) = -c_d I
        inv_cd = self.ring.unit_inverse(c[-1])
        acc = RingMatrix.identity(self.ring, d)
        for k in range(1, d):
            acc = (self @ acc) + RingMatrix.identity(self.ring, d).scale(c[k])
        return acc.scale(-inv_cd)

    # comparison / display -------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows))
        return self._hash

    def is_identity(self) -> bool:
        return self == RingMatrix.identity(self.ring, self.dim)

    def to_json(self) -> list:
        return [[self.ring.encode(a) for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, ring, data) -> RingMatrix:
        return cls(ring, [[ring.decode(a) for a in r] for r in data])

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"RingMatrix({self.ring!r}, dim={self.dim})"


def poly_mul(p: Sequence, q: Sequence, zero) -> list:
    """Product of two polynomials given as coefficient lists (any order)."""
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out
