"""Exact scalar fields and dense linear algebra over them.

Two fields are supported: prime fields F_p (numpy ``int64`` arrays reduced
mod p) and the rationals (numpy ``object`` arrays of ``Fraction``).  Every
routine is exact; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

# Products of two residues are summed over at most 2**15 terms in a matmul,
# so p < 2**23 keeps every intermediate inside int64.
MAX_PRIME = 1 << 23


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class Field:
    """Common interface of the exact fields."""

    characteristic: int
    dtype: object

    # -- scalars -----------------------------------------------------------
    def scalar(self, value) -> object:
        raise NotImplementedError

    def inv(self, value) -> object:
        raise NotImplementedError

    def parse(self, text: str) -> object:
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    # -- arrays ------------------------------------------------------------
    def array(self, data) -> np.ndarray:
        raise NotImplementedError

    def reduce(self, m: np.ndarray) -> np.ndarray:
        return m

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def random_matrix(self, rng: np.random.Generator, shape) -> np.ndarray:
        raise NotImplementedError

    def random_scalars(self, rng: np.random.Generator, n: int) -> list:
        return list(self.random_matrix(rng, (n,)))

    def is_zero(self, m: np.ndarray) -> bool:
        return not np.any(m != 0)

    # -- elimination -------------------------------------------------------
    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the pivot columns (nonzero rows only)."""
        r = self.array(m).copy()
        rows, cols = r.shape
        pivots: list[int] = []
        row = 0
        for c in range(cols):
            if row == rows:
                break
            nz = np.nonzero(r[row:, c] != 0)[0]
            if nz.size == 0:
                continue
            i = row + int(nz[0])
            if i != row:
                r[[row, i]] = r[[i, row]]
            piv = r[row, c]
            if piv != 1:
                r[row] = self.reduce(r[row] * self.inv(piv))
            col = r[:, c].copy()
            col[row] = 0
            hit = np.nonzero(col != 0)[0]
            if hit.size:
                r[hit] = self.reduce(r[hit] - np.outer(col[hit], r[row]))
            pivots.append(c)
            row += 1
        return r[:row], pivots

    def rank(self, m: np.ndarray) -> int:
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def nullspace(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Basis of {x : m x = 0} as the columns of a matrix.

        Also returns the free-variable indices: the basis restricted to those
        rows is the identity, so coordinates of a kernel vector are read off
        directly at those positions.
        """
        cols = m.shape[1]
        if m.shape[0] == 0 or cols == 0:
            return self.eye(cols), list(range(cols))
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            basis[f, k] = 1
            for i, p in enumerate(pivots):
                basis[p, k] = -r[i, f]
        return self.reduce(basis), free

    def colspace(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Echelon basis of the column space; identity on the returned rows."""
        if m.size == 0:
            return self.zeros((m.shape[0], 0)), []
        r, pivots = self.rref(m.T)
        return r.T.copy(), pivots

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """One solution x of a x = b (b may be a matrix), or None."""
        rows, cols = a.shape
        width = int(np.prod(b.shape[1:], dtype=int))
        b2 = b.reshape(rows, width)
        if rows == 0:
            return self.zeros((cols, width)).reshape((cols,) + b.shape[1:])
        aug = np.concatenate([self.array(a), self.array(b2)], axis=1)
        r, pivots = self.rref(aug)
        if any(p >= cols for p in pivots):
            return None
        x = self.zeros((cols, b2.shape[1]))
        for i, p in enumerate(pivots):
            x[p] = r[i, cols:]
        return x.reshape((cols,) + b.shape[1:])

    def inverse(self, m: np.ndarray) -> np.ndarray | None:
        n = m.shape[0]
        if m.shape != (n, n):
            return None
        return self.solve(m, self.eye(n))

    def is_invertible(self, m: np.ndarray) -> bool:
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    def in_span(self, basis_rows: np.ndarray, v: np.ndarray) -> bool:
        if basis_rows.shape[0] == 0:
            return self.is_zero(v)
        return self.rank(np.vstack([basis_rows, v[None, :]])) == self.rank(basis_rows)

    def charpoly(self, m: np.ndarray) -> list:
        """Coefficients of det(xI - m), highest degree first (Hessenberg method)."""
        n = m.shape[0]
        h = [[self.scalar(m[i, j]) for j in range(n)] for i in range(n)]
        for col in range(n - 2):
            piv = next((i for i in range(col + 1, n) if h[i][col] != 0), None)
            if piv is None:
                continue
            if piv != col + 1:
                h[piv], h[col + 1] = h[col + 1], h[piv]
                for row in h:
                    row[piv], row[col + 1] = row[col + 1], row[piv]
            inv = self.inv(h[col + 1][col])
            for i in range(col + 2, n):
                u = self._mul(h[i][col], inv)
                if u == 0:
                    continue
                for j in range(n):
                    h[i][j] = self._sub(h[i][j], self._mul(u, h[col + 1][j]))
                for row in h:
                    row[col + 1] = self._add(row[col + 1], self._mul(u, row[i]))
        # p[k] = charpoly of the leading k x k block, lowest degree first.
        polys: list[list] = [[self.scalar(1)]]
        for k in range(n):
            prev = polys[k]
            nxt = [self.scalar(0)] + list(prev)
            for j in range(len(prev)):
                nxt[j] = self._sub(nxt[j], self._mul(h[k][k], prev[j]))
            t = self.scalar(1)
            for i in range(k - 1, -1, -1):
                t = self._mul(t, h[i + 1][i])
                c = self._mul(t, h[i][k])
                for j, pj in enumerate(polys[i]):
                    nxt[j] = self._sub(nxt[j], self._mul(c, pj))
            polys.append(nxt)
        return list(reversed(polys[n]))

    def _add(self, a, b):
        return self.scalar(a + b)

    def _sub(self, a, b):
        return self.scalar(a - b)

    def _mul(self, a, b):
        return self.scalar(a * b)

    def __repr__(self) -> str:
        return f"Field({self.descriptor})"


class PrimeField(Field):
    """The prime field F_p."""

    def __init__(self, p: int = 101):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} too large for int64 kernels (limit {MAX_PRIME})")
        self.p = p
        self.characteristic = p
        self.dtype = np.int64

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    @property
    def descriptor(self) -> str:
        return f"Fp:{self.p}"

    def scalar(self, value) -> int:
        if isinstance(value, Fraction):
            return int(value.numerator) * pow(int(value.denominator), -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, value) -> int:
        v = int(value) % self.p
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(v, self.p - 2, self.p)

    def parse(self, text: str) -> int:
        return self.scalar(Fraction(str(text).strip()))

    def format(self, value) -> str:
        return str(int(value) % self.p)

    def array(self, data) -> np.ndarray:
        if isinstance(data, np.ndarray) and data.dtype == object:
            return np.vectorize(self.scalar, otypes=[np.int64])(data) if data.size else data.astype(np.int64)
        return np.asarray(data, dtype=np.int64) % self.p

    def reduce(self, m: np.ndarray) -> np.ndarray:
        return m % self.p

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a @ b) % self.p

    def random_matrix(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)


class RationalField(Field):
    """The rationals, with ``Fraction`` entries."""

    characteristic = 0
    dtype = object

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    @property
    def descriptor(self) -> str:
        return "Q"

    def scalar(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, value) -> Fraction:
        return 1 / Fraction(value)

    def parse(self, text: str) -> Fraction:
        return Fraction(str(text).strip())

    def format(self, value) -> str:
        return str(Fraction(value))

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = Fraction(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + (b.shape[-1:] if b.ndim > 1 else ()))
        return np.matmul(a, b)

    def random_matrix(self, rng: np.random.Generator, shape) -> np.ndarray:
        return self.array(rng.integers(-9, 10, size=shape))


def make_field(spec: str | int | Field | None = None) -> Field:
    """Build a field from ``"Q"``, ``"Fp:<p>"``, a prime, or pass one through."""
    if spec is None:
        return PrimeField(101)
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec)
    text = str(spec).strip()
    if text.upper() in ("Q", "QQ"):
        return RationalField()
    if text.lower().startswith("fp:"):
        return PrimeField(int(text[3:]))
    if text.isdigit():
        return PrimeField(int(text))
    raise ValueError(f"unknown field descriptor {spec!r}")


def block_diag(field: Field, blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = field.zeros((rows, cols))
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def stack_rows(field: Field, rows: Iterable[np.ndarray], width: int) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return field.zeros((0, width))
    return np.vstack([np.asarray(r).reshape(1, width) for r in rows])
