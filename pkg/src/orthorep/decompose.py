"""Endomorphism algebras, Krull-Schmidt decomposition and isomorphism tests.

Splitting uses the primary decomposition of a random endomorphism: if its
characteristic polynomial has two coprime factors the module splits along
the generalized eigenspaces.  A module is certified indecomposable once
End/rad End is seen to be a field, with the radical computed from trace
forms (Frobenius-corrected in small characteristic).
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Iterable

import numpy as np
import sympy

from .errors import DecompositionFailed, Inconclusive, InvalidModule
from .field import Field
from .module import (
    HomSpace,
    Module,
    Morphism,
    direct_sum_module,
    hom,
    submodule,
)

DEFAULT_BUDGET = 64
DEFAULT_SEED = 20240611


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def set_default_seed(seed: int) -> None:
    """Seed used by every randomized splitting step that is not given one explicitly."""
    global DEFAULT_SEED
    DEFAULT_SEED = int(seed)


def default_seed() -> int:
    return DEFAULT_SEED


# -- endomorphism algebra ------------------------------------------------------

def _stacked(E: HomSpace) -> list[np.ndarray]:
    """Per-vertex arrays of shape (dim E, d_v, d_v) holding the basis."""
    X = E.source
    f = X.field
    out = []
    for v, d in enumerate(X.dims):
        if E.dim == 0:
            out.append(f.zeros((0, d, d)))
        else:
            out.append(np.stack([b.mats[v] for b in E.basis]))
    return out


def end_algebra(X: Module) -> np.ndarray:
    """Structure constants c[i, j, k] with b_i b_j = sum_k c[i, j, k] b_k.

    The product b_i b_j is the matrix product, i.e. b_j is applied first.
    """
    cached = X.info.get("end_table")
    if cached is not None:
        return cached
    E = hom(X, X)
    f = X.field
    d = E.dim
    parts = []
    for B in _stacked(E):
        if B.shape[1] == 0:
            continue
        prod = f.matmul(B[:, None, :, :], B[None, :, :, :])
        parts.append(prod.reshape(d, d, -1))
    flat = np.concatenate(parts, axis=2) if parts else f.zeros((d, d, 0))
    table = flat[:, :, E.free]
    X.info["end_table"] = table
    return table


def _trace_form(X: Module, E: HomSpace) -> np.ndarray:
    f = X.field
    d = E.dim
    T = f.zeros((d, d))
    for B in _stacked(E):
        n = B.shape[1]
        if n == 0:
            continue
        left = B.reshape(d, n * n)
        right = np.transpose(B, (0, 2, 1)).reshape(d, n * n)
        T = f.reduce(T + f.matmul(left, right.T))
    return T


def _regular_matrices(table: np.ndarray) -> np.ndarray:
    """Left regular representation: L[i] has (k, j) entry c[i, j, k]."""
    return np.transpose(table, (0, 2, 1)).copy()


def _frobenius_radical(mats: np.ndarray, p: int, field: Field) -> np.ndarray:
    """Radical of a matrix algebra over F_p by iterated Frobenius-corrected traces.

    ``mats`` holds a basis (d, n, n) of the algebra.  Returns a basis of the
    radical as rows of coordinate vectors.
    """
    d, n, _ = mats.shape
    current = field.eye(d)
    level = 0
    while current.shape[0] and p ** level <= n:
        mod = p ** (level + 1)
        power = p ** level
        rows = []
        for coords in current:
            x = field.reduce(np.tensordot(coords, mats, axes=(0, 0)))
            vals = []
            for y in mats:
                z = field.matmul(x, y).astype(np.int64) % mod
                acc = np.eye(n, dtype=np.int64)
                base, e = z, power
                while e:
                    if e & 1:
                        acc = (acc @ base) % mod
                    base = (base @ base) % mod
                    e >>= 1
                vals.append((int(np.trace(acc)) % mod) // power)
            rows.append(vals)
        G = field.array(np.array(rows, dtype=np.int64).reshape(current.shape[0], d))
        null, _ = field.nullspace(G.T)
        current = field.reduce(field.matmul(null.T, current)) if null.shape[1] else field.zeros((0, d))
        level += 1
    if current.shape[0] == 0:
        return current
    r, _ = field.rref(current)
    return r


def radical_of_end(X: Module) -> tuple[np.ndarray, list[int]]:
    """Basis of rad End(X) as echelon rows of End-coordinates, with pivot columns."""
    cached = X.info.get("end_radical")
    if cached is not None:
        return cached
    E = hom(X, X)
    f = X.field
    d = E.dim
    p = f.characteristic
    if d == 0:
        res = (f.zeros((0, 0)), [])
    elif p == 0 or p > min(X.dim, d):
        if p == 0 or p > X.dim:
            T = _trace_form(X, E)
        else:
            L = _regular_matrices(end_algebra(X))
            T = f.reduce(f.matmul(L.reshape(d, d * d), np.transpose(L, (0, 2, 1)).reshape(d, d * d).T))
        null, _ = f.nullspace(T)
        rows = null.T.copy()
        res = f.rref(rows) if rows.shape[0] else (f.zeros((0, d)), [])
    else:
        mats = _regular_matrices(end_algebra(X))
        rows = _frobenius_radical(mats, p, f)
        res = (rows, f.rref(rows)[1]) if rows.shape[0] else (f.zeros((0, d)), [])
    X.info["end_radical"] = res
    return res


# -- polynomials -----------------------------------------------------------------

def _poly_mul(f: Field, a: list, b: list) -> list:
    out = [f.scalar(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = f.scalar(out[i + j] + x * y)
    return out


def _binomial_power(f: Field, root, n: int) -> list:
    poly = [f.scalar(1)]
    for _ in range(n):
        poly = _poly_mul(f, poly, [f.scalar(1), f.scalar(-root)])
    return poly


def _sympy_poly(f: Field, coeffs: list):
    x = sympy.Symbol("x")
    if f.characteristic:
        return sympy.Poly([int(c) for c in coeffs], x, modulus=f.characteristic)
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], x, domain="QQ")


def _from_sympy(f: Field, poly) -> list:
    coeffs = poly.all_coeffs()
    if f.characteristic:
        return [f.scalar(int(c)) for c in coeffs]
    from fractions import Fraction

    return [Fraction(int(c.p), int(c.q)) for c in coeffs]


def _factor(f: Field, coeffs: list) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities."""
    n = len(coeffs) - 1
    if n == 0:
        return []
    if f.characteristic == 0 or n % f.characteristic:
        root = f.scalar(-coeffs[1] * f.inv(n)) if n > 0 else 0
        if _binomial_power(f, root, n) == [f.scalar(c) for c in coeffs]:
            return [([f.scalar(1), f.scalar(-root)], n)]
    _, factors = _sympy_poly(f, coeffs).factor_list()
    out = []
    for g, m in factors:
        c = _from_sympy(f, g)
        lead = f.inv(c[0])
        out.append(([f.scalar(x * lead) for x in c], m))
    return out


def _poly_at_matrix(f: Field, coeffs: list, m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    acc = f.zeros((n, n))
    for c in coeffs:
        acc = f.reduce(f.matmul(acc, m) + f.eye(n) * f.scalar(c))
    return acc


def _matrix_power(f: Field, m: np.ndarray, e: int) -> np.ndarray:
    acc = f.eye(m.shape[0])
    base = m
    while e:
        if e & 1:
            acc = f.matmul(acc, base)
        base = f.matmul(base, base)
        e >>= 1
    return acc


def _charpoly_of(phi: Morphism) -> list:
    f = phi.field
    total = [f.scalar(1)]
    for m in phi.mats:
        if m.shape[0]:
            total = _poly_mul(f, total, f.charpoly(m))
    return total


# -- splitting -------------------------------------------------------------------

def _primary_split(Y: Module, phi: Morphism) -> list[tuple[Module, Morphism]] | None:
    f = Y.field
    factors = _factor(f, _charpoly_of(phi))
    if len(factors) <= 1:
        return None
    parts = []
    for g, _ in factors:
        bases, piv = [], []
        for m, d in zip(phi.mats, Y.dims):
            if d == 0:
                bases.append(f.zeros((0, 0)))
                piv.append([])
                continue
            ev = _matrix_power(f, _poly_at_matrix(f, g, m), d)
            nb, free = f.nullspace(ev)
            bases.append(nb)
            piv.append(free)
        parts.append(submodule(Y, bases, piv))
    return parts


def _quotient_is_field(Y: Module, phi: Morphism, rad_rows: np.ndarray, rad_piv: list[int]) -> bool:
    """Whether phi generates End/rad as a field of the full residue dimension."""
    f = Y.field
    E = hom(Y, Y)
    d = E.dim
    r = d - len(rad_piv)
    comp = [j for j in range(d) if j not in set(rad_piv)]
    table = end_algebra(Y)
    coords = E.coords(phi)
    left = f.reduce(np.tensordot(coords, table, axes=(0, 0)))  # (j, k): phi * b_j
    L = f.zeros((r, r))
    for col, j in enumerate(comp):
        v = left[j].copy()
        if rad_piv:
            v = f.reduce(v - f.matmul(rad_rows.T, v[rad_piv]))
        L[:, col] = v[comp]
    cp = f.charpoly(L)
    factors = _factor(f, cp)
    return len(factors) == 1 and factors[0][1] == 1


def _try_split(Y: Module, rng: np.random.Generator, budget: int):
    """Return a list of proper submodule summands, or None if Y is indecomposable."""
    if Y.indecomposable:
        return None
    E = hom(Y, Y)
    if E.dim == 1:
        return None
    residue = None
    for _ in range(budget):
        phi = E.random(rng)
        parts = _primary_split(Y, phi)
        if parts:
            return parts
        if residue is None:
            rows, piv = radical_of_end(Y)
            residue = (rows, piv, E.dim - len(piv))
        rows, piv, r = residue
        if r == 1:
            return None
        if _quotient_is_field(Y, phi, rows, piv):
            return None
    raise DecompositionFailed(f"no splitting endomorphism found within {budget} attempts")


def split_summands(
    X: Module, seed=None, budget: int = DEFAULT_BUDGET
) -> list[tuple[Module, Morphism]]:
    """Indecomposable submodules U_i with X = ⊕ U_i internally, with inclusions."""
    rng = _rng(seed)
    out = []
    stack = [(X, None)]
    while stack:
        Y, inc = stack.pop()
        if Y.dim == 0:
            continue
        parts = _try_split(Y, rng, budget)
        if parts is None:
            Y.indecomposable = True
            out.append((Y, inc if inc is not None else _identity(Y)))
            continue
        for U, j in parts:
            stack.append((U, j if inc is None else j.then(inc)))
    return out


def _identity(Y: Module) -> Morphism:
    f = Y.field
    return Morphism(Y, Y, [f.eye(d) for d in Y.dims])


# -- isomorphism -----------------------------------------------------------------

def _indecomposable_iso(X: Module, Y: Module, rng: np.random.Generator, tries: int = 4) -> bool:
    """Exact isomorphism test for two indecomposables."""
    if X.dims != Y.dims:
        return False
    H, G = hom(X, Y), hom(Y, X)
    EX = hom(X, X)
    if H.dim != EX.dim or G.dim != hom(Y, Y).dim:
        return False
    for _ in range(tries):
        if H.random(rng).is_iso():
            return True
    # End(X) is local, so the ideal spanned by composites through Y is all of
    # End(X) exactly when some composite is invertible.
    f = X.field
    rows = [EX.coords(h.then(g)) for h in H.basis for g in G.basis]
    if not rows:
        return False
    return f.rank(np.array(rows).reshape(len(rows), EX.dim)) == EX.dim


def _registry(A) -> dict:
    return A.cache.setdefault("indecomposables", {})


def canonical(Y: Module, seed=None) -> Module:
    """The registered representative isomorphic to the indecomposable Y."""
    reg = _registry(Y.algebra)
    bucket = reg.setdefault(Y.dims, [])
    for R in bucket:
        if R is Y or R == Y:
            return R
    rng = _rng(seed)
    for R in bucket:
        if _indecomposable_iso(Y, R, rng):
            if R.name is None and Y.name is not None:
                R.name = Y.name
            return R
    Y.indecomposable = True
    Y.info["registry_index"] = sum(len(b) for b in reg.values())
    bucket.append(Y)
    return Y


def register(Y: Module) -> Module:
    """Register a known indecomposable so later decompositions reuse it."""
    Y.indecomposable = True
    return canonical(Y)


def _sort_key(M: Module):
    return (sum(M.dims), M.dims, M.info.get("registry_index", 0))


def decompose(X: Module, seed=None, budget: int = DEFAULT_BUDGET) -> list[tuple[Module, int]]:
    """Indecomposable summands of X (canonical representatives) with multiplicities.

    Raises:
        DecompositionFailed: the randomized search ran out of attempts.
    """
    cached = X.info.get("decomposition")
    if cached is not None:
        return cached
    shared = X.algebra.cache.setdefault("decompositions", {})
    cached = shared.get(X.key)
    if cached is not None:
        X.info["decomposition"] = cached
        return cached
    counts: dict[int, list] = {}
    parts = X.info.get("parts")
    if parts and all(U.indecomposable for U in parts):
        pieces = parts
    else:
        pieces = [U for U, _ in split_summands(X, seed, budget)]
    for U in pieces:
        R = canonical(U, seed)
        entry = counts.setdefault(id(R), [R, 0])
        entry[1] += 1
    res = sorted(((R, m) for R, m in counts.values()), key=lambda rm: _sort_key(rm[0]))
    X.info["decomposition"] = res
    shared[X.key] = res
    if len(res) == 1 and res[0][1] == 1:
        X.indecomposable = True
        if res[0][0].name is None and X.name is not None:
            res[0][0].name = X.name
    return res


def summand_count(X: Module, seed=None) -> int:
    """Number of pairwise non-isomorphic indecomposable summands."""
    if X.dim == 0:
        raise InvalidModule("summand count of the zero module is undefined")
    return len(decompose(X, seed))


def is_indecomposable(X: Module, seed=None) -> bool:
    if X.dim == 0:
        return False
    if X.indecomposable is None:
        d = decompose(X, seed)
        X.indecomposable = len(d) == 1 and d[0][1] == 1
    return X.indecomposable


def is_isomorphic(X: Module, Y: Module, seed=None, tries: int = 8) -> bool:
    """Dimension filters, a Las Vegas search, then comparison of decompositions.

    Raises:
        Inconclusive: the fallback decomposition failed.
    """
    if X.dims != Y.dims:
        return False
    if X == Y:
        return True
    H = hom(X, Y)
    if H.dim != hom(X, X).dim or H.dim != hom(Y, Y).dim:
        return False
    rng = _rng(seed)
    for _ in range(tries):
        if H.random(rng).is_iso():
            return True
    try:
        dx, dy = decompose(X, seed), decompose(Y, seed)
    except DecompositionFailed as exc:
        raise Inconclusive(str(exc)) from exc
    return sorted((id(R), m) for R, m in dx) == sorted((id(R), m) for R, m in dy)


# -- add(M) -----------------------------------------------------------------------

@dataclass
class AddSet:
    """Pairwise non-isomorphic indecomposables representing add(M) for a basic M."""

    summands: list[Module] = dc_field(default_factory=list)

    @classmethod
    def of(cls, *modules: Module | Iterable[Module], seed=None) -> "AddSet":
        flat: list[Module] = []
        for m in modules:
            if isinstance(m, Module):
                flat.append(m)
            elif isinstance(m, AddSet):
                flat.extend(m.summands)
            else:
                flat.extend(m)
        out: list[Module] = []
        seen = set()
        for m in flat:
            if m.dim == 0:
                continue
            for R, _ in decompose(m, seed):
                if id(R) not in seen:
                    seen.add(id(R))
                    out.append(R)
        out.sort(key=_sort_key)
        return cls(out)

    @property
    def algebra(self):
        return self.summands[0].algebra if self.summands else None

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __contains__(self, Y: Module) -> bool:
        return self.contains(Y)

    def contains(self, Y: Module) -> bool:
        """Whether the indecomposable Y is isomorphic to a listed summand."""
        R = canonical(Y)
        return any(R is S for S in self.summands)

    def module(self) -> Module:
        """The basic module ⊕ M_i."""
        return direct_sum_module(self.summands, self.algebra)

    def union(self, *others) -> "AddSet":
        return AddSet.of(self, *others)

    def without(self, other: "AddSet | Iterable[Module]") -> "AddSet":
        drop = {id(canonical(Y)) for Y in other}
        return AddSet([S for S in self.summands if id(S) not in drop])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AddSet):
            return NotImplemented
        return {id(S) for S in self.summands} == {id(S) for S in other.summands}

    def __hash__(self) -> int:
        return hash(frozenset(id(S) for S in self.summands))

    def labels(self) -> list[str]:
        return [S.name or repr(S) for S in self.summands]

    def __repr__(self) -> str:
        return "AddSet(" + " ⊕ ".join(self.labels()) + ")"


def add_equal(M: AddSet, N: AddSet) -> bool:
    """add(M) = add(N): every summand of each is isomorphic to one of the other."""
    return all(N.contains(X) for X in M) and all(M.contains(Y) for Y in N)
