"""Modules as quiver representations, morphisms, and Hom spaces.

A module stores one matrix per arrow, shaped (dim at target) x (dim at
source), acting on column vectors.  A morphism stores one matrix per vertex.
``f.then(g)`` composes in diagrammatic order (first f, then g), so ``fg``
in written formulas reads ``f.then(g)``; ``g @ f`` is the same map.
"""

from __future__ import annotations

from collections import OrderedDict
from typing import Sequence

import numpy as np

from .algebra import Algebra, Path
from .errors import AlgebraMismatch, InvalidModule
from .field import Field


class LRU(OrderedDict):
    """Tiny bounded cache."""

    def __init__(self, maxsize: int = 50000):
        super().__init__()
        self.maxsize = maxsize

    def get_or(self, key, factory):
        if key in self:
            self.move_to_end(key)
            return self[key]
        value = factory()
        self[key] = value
        if len(self) > self.maxsize:
            self.popitem(last=False)
        return value


def _cache(algebra: Algebra, name: str) -> LRU:
    c = algebra.cache.get(name)
    if c is None:
        c = algebra.cache[name] = LRU()
    return c


class Module:
    """A finite-dimensional representation of a bound quiver."""

    def __init__(
        self,
        algebra: Algebra,
        dims: Sequence[int],
        maps: Sequence[np.ndarray] | dict,
        name: str | None = None,
        check: bool = True,
    ):
        self.algebra = algebra
        f = algebra.field
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.vertex_count:
            raise InvalidModule("dimension vector length differs from the vertex count")
        arrows = algebra.quiver.arrows
        if isinstance(maps, dict):
            maps = [maps.get(a, maps.get(str(a))) for a in range(len(arrows))]
        if len(maps) != len(arrows):
            raise InvalidModule("need exactly one matrix per arrow")
        mats = []
        for a, (s, t) in enumerate(arrows):
            shape = (self.dims[t], self.dims[s])
            m = maps[a]
            if m is None:
                m = f.zeros(shape)
            if check:
                m = np.asarray(m, dtype=object if f.characteristic == 0 else None)
                if m.size == 0 and 0 in shape:
                    m = m.reshape(shape)
                m = f.array(m)
            if m.shape != shape:
                raise InvalidModule(f"arrow {a} matrix has shape {m.shape}, expected {shape}")
            mats.append(m)
        self.maps = tuple(mats)
        self.name = name
        self._key = None
        self._paths: dict[Path, np.ndarray] = {}
        self.indecomposable: bool | None = None
        self.info: dict = {}
        if check:
            for rel in algebra.relations:
                total = None
                for c, arrows_ in rel:
                    start = algebra.quiver.source(arrows_[0])
                    term = f.reduce(self.path_matrix((start, arrows_)) * f.scalar(c))
                    total = term if total is None else f.reduce(total + term)
                if total is not None and not f.is_zero(total):
                    raise InvalidModule("a relation does not vanish on the representation")

    # -- basic data --------------------------------------------------------
    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def key(self):
        if self._key is None:
            if self.field.characteristic:
                body = tuple(m.tobytes() for m in self.maps)
            else:
                body = tuple(tuple(str(x) for x in m.ravel()) for m in self.maps)
            self._key = (id(self.algebra), self.dims, body)
        return self._key

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Module) and self.key == other.key

    def __repr__(self) -> str:
        label = self.name or "Module"
        return f"<{label} dims={self.dims}>"

    def path_matrix(self, path: Path) -> np.ndarray:
        """Matrix by which a path acts, from the start vertex space to the end one."""
        m = self._paths.get(path)
        if m is None:
            start, arrows = path
            f = self.field
            if not arrows:
                m = f.eye(self.dims[start])
            else:
                prev = self.path_matrix((start, arrows[:-1]))
                m = f.matmul(self.maps[arrows[-1]], prev)
            self._paths[path] = m
        return m

    def element_action(self, element: dict[int, object], start: int, end: int) -> np.ndarray:
        """Matrix of an algebra element (sparse basis coordinates) from start to end."""
        f = self.field
        out = f.zeros((self.dims[end], self.dims[start]))
        A = self.algebra
        for idx, c in element.items():
            p = A.basis[idx]
            if p[0] == start and A.quiver.path_end(p) == end:
                out = f.reduce(out + self.path_matrix(p) * f.scalar(c))
        return out


class Morphism:
    """A module homomorphism given by one matrix per vertex."""

    def __init__(self, source: Module, target: Module, mats: Sequence[np.ndarray], check: bool = False):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.mats = tuple(mats)
        self.info: dict = {}
        if check and not self.is_homomorphism():
            raise InvalidModule("matrices do not intertwine the arrow actions")

    @property
    def field(self) -> Field:
        return self.source.field

    def is_homomorphism(self) -> bool:
        f = self.field
        X, Y = self.source, self.target
        for a, (s, t) in enumerate(X.algebra.quiver.arrows):
            lhs = f.matmul(Y.maps[a], self.mats[s])
            rhs = f.matmul(self.mats[t], X.maps[a])
            if np.any(lhs != rhs):
                return False
        return True

    def then(self, g: "Morphism") -> "Morphism":
        """Diagrammatic composite: first self, then g."""
        if not (self.target is g.source or self.target == g.source):
            raise AlgebraMismatch("composable morphisms need matching middle module")
        f = self.field
        return Morphism(self.source, g.target, [f.matmul(gm, fm) for fm, gm in zip(self.mats, g.mats)])

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return other.then(self)

    def __add__(self, other: "Morphism") -> "Morphism":
        f = self.field
        return Morphism(self.source, self.target, [f.reduce(a + b) for a, b in zip(self.mats, other.mats)])

    def __sub__(self, other: "Morphism") -> "Morphism":
        f = self.field
        return Morphism(self.source, self.target, [f.reduce(a - b) for a, b in zip(self.mats, other.mats)])

    def scaled(self, c) -> "Morphism":
        f = self.field
        c = f.scalar(c)
        return Morphism(self.source, self.target, [f.reduce(m * c) for m in self.mats])

    def flat(self) -> np.ndarray:
        parts = [m.ravel() for m in self.mats]
        if not parts:
            return self.field.zeros(0)
        return np.concatenate(parts) if sum(p.size for p in parts) else self.field.zeros(0)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(m) for m in self.mats)

    def rank(self) -> int:
        return sum(self.field.rank(m) for m in self.mats)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def dual(self) -> "Morphism":
        """D f : D(target) -> D(source) over the opposite algebra."""
        return Morphism(dualize(self.target), dualize(self.source), [m.T.copy() for m in self.mats])

    def __repr__(self) -> str:
        return f"<Morphism {self.source!r} -> {self.target!r}>"


def identity(X: Module) -> Morphism:
    return Morphism(X, X, [X.field.eye(d) for d in X.dims])


def zero_morphism(X: Module, Y: Module) -> Morphism:
    return Morphism(X, Y, [X.field.zeros((dy, dx)) for dx, dy in zip(X.dims, Y.dims)])


class HomSpace:
    """A basis of Hom(X, Y).

    ``free`` lists flat positions at which the basis restricts to the identity,
    so the coordinates of any homomorphism are its entries at those positions.
    """

    def __init__(self, source: Module, target: Module, basis: list[Morphism], free: list[int]):
        self.source = source
        self.target = target
        self.basis = basis
        self.free = free

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def coords(self, f: Morphism) -> np.ndarray:
        return f.flat()[self.free]

    def combine(self, coeffs: Sequence) -> Morphism:
        fld = self.source.field
        mats = [fld.zeros((dy, dx)) for dx, dy in zip(self.source.dims, self.target.dims)]
        for c, b in zip(coeffs, self.basis):
            c = fld.scalar(c)
            if c == 0:
                continue
            mats = [fld.reduce(m + bm * c) for m, bm in zip(mats, b.mats)]
        return Morphism(self.source, self.target, mats)

    def random(self, rng: np.random.Generator) -> Morphism:
        return self.combine(self.source.field.random_scalars(rng, self.dim))


def _same_algebra(*mods: Module) -> Algebra:
    A = mods[0].algebra
    for m in mods[1:]:
        if m.algebra is not A:
            raise AlgebraMismatch("modules live over different algebras")
    return A


def _hom_system(X: Module, Y: Module) -> tuple[np.ndarray, list[int]]:
    f = X.field
    offsets = []
    total = 0
    for dx, dy in zip(X.dims, Y.dims):
        offsets.append(total)
        total += dx * dy
    blocks = []
    for a, (s, t) in enumerate(X.algebra.quiver.arrows):
        rows = Y.dims[t] * X.dims[s]
        if rows == 0:
            continue
        eq = f.zeros((rows, total))
        ns = Y.dims[s] * X.dims[s]
        nt = Y.dims[t] * X.dims[t]
        if ns:
            eq[:, offsets[s] : offsets[s] + ns] = f.reduce(
                eq[:, offsets[s] : offsets[s] + ns] + np.kron(Y.maps[a], f.eye(X.dims[s]))
            )
        if nt:
            eq[:, offsets[t] : offsets[t] + nt] = f.reduce(
                eq[:, offsets[t] : offsets[t] + nt] - np.kron(f.eye(Y.dims[t]), X.maps[a].T)
            )
        blocks.append(eq)
    return (np.vstack(blocks) if blocks else f.zeros((0, total))), offsets


def hom(X: Module, Y: Module) -> HomSpace:
    """Basis of Hom(X, Y), solved from the stacked intertwining equations.

    Raises:
        AlgebraMismatch: X and Y live over different algebras.
    """
    A = _same_algebra(X, Y)
    cache = _cache(A, "hom")
    return cache.get_or((X.key, Y.key), lambda: _hom_uncached(X, Y))


def _hom_uncached(X: Module, Y: Module) -> HomSpace:
    f = X.field
    system, offsets = _hom_system(X, Y)
    null, free = f.nullspace(system)
    basis = []
    for k in range(null.shape[1]):
        col = null[:, k]
        mats = []
        for v, (dx, dy) in enumerate(zip(X.dims, Y.dims)):
            mats.append(col[offsets[v] : offsets[v] + dx * dy].reshape(dy, dx).copy())
        basis.append(Morphism(X, Y, mats))
    return HomSpace(X, Y, basis, free)


def hom_dim(X: Module, Y: Module) -> int:
    return hom(X, Y).dim


# -- constructors ------------------------------------------------------------

def zero_module(A: Algebra) -> Module:
    return Module(A, [0] * A.vertex_count, [A.field.zeros((0, 0)) for _ in A.quiver.arrows], name="0")


def simple(A: Algebra, v: int) -> Module:
    dims = [0] * A.vertex_count
    dims[v] = 1
    f = A.field
    maps = [f.zeros((dims[t], dims[s])) for s, t in A.quiver.arrows]
    S = Module(A, dims, maps, name=f"S_{v}")
    S.indecomposable = True
    return S


def projective(A: Algebra, v: int) -> Module:
    """P_v: basis paths starting at v, arrows acting by appending."""
    cache = A.cache.setdefault("projective", {})
    if v in cache:
        return cache[v]
    f = A.field
    n = A.vertex_count
    idx = {w: A.between.get((v, w), []) for w in range(n)}
    pos = {w: {b: k for k, b in enumerate(idx[w])} for w in range(n)}
    dims = [len(idx[w]) for w in range(n)]
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        m = f.zeros((dims[t], dims[s]))
        for col, b in enumerate(idx[s]):
            p = A.basis[b]
            for k, c in A.reduce((p[0], p[1] + (a,))).items():
                m[pos[t][k], col] = c
        maps.append(m)
    P = Module(A, dims, maps, name=f"P_{v}")
    P.indecomposable = True
    P.info["generators"] = (v,)
    cache[v] = P
    return P


def injective(A: Algebra, v: int) -> Module:
    """I_v: dual of the paths ending at v."""
    cache = A.cache.setdefault("injective", {})
    if v in cache:
        return cache[v]
    f = A.field
    n = A.vertex_count
    idx = {w: A.between.get((w, v), []) for w in range(n)}
    pos = {w: {b: k for k, b in enumerate(idx[w])} for w in range(n)}
    dims = [len(idx[w]) for w in range(n)]
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        m = f.zeros((dims[t], dims[s]))
        for row, b in enumerate(idx[t]):
            q = A.basis[b]
            for k, c in A.reduce((s, (a,) + q[1])).items():
                m[row, pos[s][k]] = c
        maps.append(m)
    I = Module(A, dims, maps, name=f"I_{v}")
    I.indecomposable = True
    cache[v] = I
    return I


def direct_sum(mods: Sequence[Module], A: Algebra | None = None) -> tuple[Module, list[Morphism], list[Morphism]]:
    """Direct sum with its canonical inclusions and projections."""
    if not mods:
        if A is None:
            raise ValueError("empty direct sum needs the algebra")
        Z = zero_module(A)
        return Z, [], []
    A = _same_algebra(*mods)
    f = A.field
    n = A.vertex_count
    dims = [sum(M.dims[v] for M in mods) for v in range(n)]
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        m = f.zeros((dims[t], dims[s]))
        r = c = 0
        for M in mods:
            m[r : r + M.dims[t], c : c + M.dims[s]] = M.maps[a]
            r += M.dims[t]
            c += M.dims[s]
        maps.append(m)
    S = Module(A, dims, maps, check=False)
    incs, projs = [], []
    offs = [0] * n
    for M in mods:
        inc, prj = [], []
        for v in range(n):
            e = f.zeros((dims[v], M.dims[v]))
            for k in range(M.dims[v]):
                e[offs[v] + k, k] = 1
            inc.append(e)
            prj.append(e.T.copy())
            offs[v] += M.dims[v]
        incs.append(Morphism(M, S, inc))
        projs.append(Morphism(S, M, prj))
    if len(mods) == 1:
        S.indecomposable = mods[0].indecomposable
    S.info["parts"] = list(mods)
    return S, incs, projs


def direct_sum_module(mods: Sequence[Module], A: Algebra | None = None) -> Module:
    return direct_sum(mods, A)[0]


def regular_module(A: Algebra) -> Module:
    """A as a module over itself: the sum of all indecomposable projectives."""
    M = direct_sum_module([projective(A, v) for v in range(A.vertex_count)])
    M.name = "A"
    return M


def dualize(X: Module) -> Module:
    """D X = Hom_k(X, k), a module over the opposite algebra."""
    cache = X.info.get("dual")
    if cache is not None:
        return cache
    op = X.algebra.opposite
    D = Module(op, X.dims, [m.T.copy() for m in X.maps], name=None if X.name is None else f"D({X.name})", check=False)
    D.indecomposable = X.indecomposable
    D.info["dual"] = X
    X.info["dual"] = D
    return D


def direct_sum_of_maps(maps: Sequence[Morphism], source: Module, target: Module) -> Morphism:
    """Block-diagonal morphism ⊕ X_i -> ⊕ Y_i with the given components."""
    f = source.field
    mats = []
    for v in range(source.algebra.vertex_count):
        m = f.zeros((target.dims[v], source.dims[v]))
        r = c = 0
        for g in maps:
            m[r : r + g.target.dims[v], c : c + g.source.dims[v]] = g.mats[v]
            r += g.target.dims[v]
            c += g.source.dims[v]
        mats.append(m)
    return Morphism(source, target, mats)


def row_map(maps: Sequence[Morphism], source: Module, target: Module) -> Morphism:
    """[f_1 ... f_k] : ⊕ X_i -> Y assembled from components f_i : X_i -> Y."""
    f = source.field
    mats = []
    for v in range(source.algebra.vertex_count):
        parts = [g.mats[v] for g in maps]
        mats.append(np.concatenate(parts, axis=1) if parts and source.dims[v] else f.zeros((target.dims[v], source.dims[v])))
    return Morphism(source, target, mats)


def column_map(maps: Sequence[Morphism], source: Module, target: Module) -> Morphism:
    """(f_1, ..., f_k)^T : X -> ⊕ Y_i assembled from components f_i : X -> Y_i."""
    f = source.field
    mats = []
    for v in range(source.algebra.vertex_count):
        parts = [g.mats[v] for g in maps]
        mats.append(np.concatenate(parts, axis=0) if parts and target.dims[v] else f.zeros((target.dims[v], source.dims[v])))
    return Morphism(source, target, mats)


# -- submodules, kernels, cokernels -------------------------------------------

def submodule(Y: Module, bases: Sequence[np.ndarray], pivots: Sequence[Sequence[int]]) -> tuple[Module, Morphism]:
    """Submodule spanned vertexwise by ``bases`` (identity on the ``pivots`` rows)."""
    f = Y.field
    A = Y.algebra
    dims = [b.shape[1] for b in bases]
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        img = f.matmul(Y.maps[a], bases[s])
        maps.append(img[list(pivots[t]), :].copy() if dims[t] else f.zeros((0, dims[s])))
    S = Module(A, dims, maps, check=False)
    return S, Morphism(S, Y, list(bases))


def kernel(g: Morphism) -> tuple[Module, Morphism]:
    """Kernel with its inclusion."""
    f = g.field
    bases, piv = [], []
    for m, d in zip(g.mats, g.source.dims):
        if m.shape[0] == 0:
            bases.append(f.eye(d))
            piv.append(list(range(d)))
        else:
            nb, free = f.nullspace(m)
            bases.append(nb)
            piv.append(free)
    return submodule(g.source, bases, piv)


def _colspace_mats(g: Morphism):
    f = g.field
    out = []
    for m, d in zip(g.mats, g.target.dims):
        if m.shape[1] == 0 or d == 0:
            out.append((f.zeros((d, 0)), []))
        else:
            out.append(f.colspace(m))
    return out


def image(g: Morphism) -> tuple[Module, Morphism, Morphism]:
    """Image with the factorisation source ->> image >-> target."""
    f = g.field
    cs = _colspace_mats(g)
    I, inc = submodule(g.target, [b for b, _ in cs], [p for _, p in cs])
    epi = [(g.mats[v][cs[v][1], :].copy() if cs[v][1] else f.zeros((0, g.source.dims[v]))) for v in range(len(cs))]
    return I, Morphism(g.source, I, epi), inc


def quotient(Y: Module, bases: Sequence[np.ndarray], pivots: Sequence[Sequence[int]]) -> tuple[Module, Morphism]:
    """Quotient of Y by the (arrow-stable) vertexwise subspaces given in echelon form."""
    f = Y.field
    A = Y.algebra
    projs, lifts, dims = [], [], []
    for v, d in enumerate(Y.dims):
        P = list(pivots[v])
        Q = [j for j in range(d) if j not in set(P)]
        B = bases[v]
        if P:
            sel = f.zeros((len(P), d))
            for k, j in enumerate(P):
                sel[k, j] = 1
            full = f.reduce(f.eye(d) - f.matmul(B, sel))
        else:
            full = f.eye(d)
        projs.append(full[Q, :].copy())
        lift = f.zeros((d, len(Q)))
        for k, j in enumerate(Q):
            lift[j, k] = 1
        lifts.append(lift)
        dims.append(len(Q))
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        maps.append(f.matmul(projs[t], f.matmul(Y.maps[a], lifts[s])))
    C = Module(A, dims, maps, check=False)
    pi = Morphism(Y, C, projs)
    pi.info["lift"] = lifts
    return C, pi


def cokernel(g: Morphism) -> tuple[Module, Morphism]:
    """Cokernel with its projection; ``proj.info['lift']`` holds linear sections."""
    cs = _colspace_mats(g)
    return quotient(g.target, [b for b, _ in cs], [p for _, p in cs])


def factor_through_cokernel(pi: Morphism, h: Morphism) -> Morphism:
    """Given h vanishing on ker(pi) for a cokernel projection pi, the induced map."""
    f = h.field
    lifts = pi.info["lift"]
    return Morphism(pi.target, h.target, [f.matmul(hm, l) for hm, l in zip(h.mats, lifts)])


def rad(X: Module) -> tuple[Module, Morphism]:
    """Radical: the sum of the images of all arrows, with its inclusion."""
    f = X.field
    A = X.algebra
    bases, piv = [], []
    for v in range(A.vertex_count):
        into = [X.maps[a] for a in A.quiver.arrows_into(v)]
        if X.dims[v] == 0 or not into:
            bases.append(f.zeros((X.dims[v], 0)))
            piv.append([])
            continue
        b, p = f.colspace(np.concatenate(into, axis=1))
        bases.append(b)
        piv.append(p)
    return submodule(X, bases, piv)


def top(X: Module) -> Module:
    R, inc = rad(X)
    return cokernel(inc)[0]


def socle(X: Module) -> tuple[Module, Morphism]:
    """Socle: vectors killed by every arrow, with its inclusion."""
    f = X.field
    A = X.algebra
    bases, piv = [], []
    for v in range(A.vertex_count):
        out = [X.maps[a] for a in A.quiver.arrows_from(v)]
        d = X.dims[v]
        if not out:
            bases.append(f.eye(d))
            piv.append(list(range(d)))
            continue
        b, free = f.nullspace(np.concatenate(out, axis=0))
        bases.append(b)
        piv.append(free)
    return submodule(X, bases, piv)


def top_generators(X: Module) -> list[tuple[int, np.ndarray]]:
    """Vectors whose classes form a basis of top(X), as (vertex, vector) pairs."""
    f = X.field
    A = X.algebra
    gens = []
    for v in range(A.vertex_count):
        into = [X.maps[a] for a in A.quiver.arrows_into(v)]
        d = X.dims[v]
        if d == 0:
            continue
        pivots = f.colspace(np.concatenate(into, axis=1))[1] if into else []
        for j in range(d):
            if j not in pivots:
                vec = f.zeros(d)
                vec[j] = 1
                gens.append((v, vec))
    return gens


def free_module(A: Algebra, gens: Sequence[int]) -> Module:
    """⊕ P_{v} over the generator vertices, remembering the generator list."""
    if not gens:
        Z = zero_module(A)
        Z.info["generators"] = ()
        return Z
    P = direct_sum_module([projective(A, v) for v in gens])
    P.info["generators"] = tuple(gens)
    return P


def free_block(P: Module, j: int, w: int) -> tuple[int, list[int]]:
    """Offset and basis-path indices of generator j's block inside P at vertex w."""
    A = P.algebra
    gens = P.info["generators"]
    off = 0
    for i in range(j):
        off += len(A.between.get((gens[i], w), []))
    return off, A.between.get((gens[j], w), [])


def map_from_free(P: Module, target: Module, images: Sequence[np.ndarray]) -> Morphism:
    """The homomorphism from a free module sending generator j to images[j]."""
    A = P.algebra
    f = A.field
    gens = P.info["generators"]
    mats = []
    for w in range(A.vertex_count):
        cols = []
        for j, v in enumerate(gens):
            for b in A.between.get((v, w), []):
                cols.append(f.matmul(target.path_matrix(A.basis[b]), images[j].reshape(-1, 1)))
        if cols:
            mats.append(np.concatenate(cols, axis=1))
        else:
            mats.append(f.zeros((target.dims[w], 0)))
    return Morphism(P, target, mats)


def free_coordinates(P: Module, w: int, vec: np.ndarray) -> list[dict[int, object]]:
    """Split a vector of a free module at vertex w into algebra elements per generator."""
    out = []
    gens = P.info["generators"]
    for j in range(len(gens)):
        off, idx = free_block(P, j, w)
        elt = {}
        for k, b in enumerate(idx):
            c = vec[off + k]
            if c != 0:
                elt[b] = c
        out.append(elt)
    return out


def projective_cover(X: Module) -> tuple[Module, Morphism]:
    """Projective cover P(X) ->> X; P carries ``info['generators']``."""
    gens = top_generators(X)
    P = free_module(X.algebra, [v for v, _ in gens])
    return P, map_from_free(P, X, [vec for _, vec in gens])


def injective_envelope(X: Module) -> tuple[Module, Morphism]:
    """Injective envelope X >-> I(X), dual to the projective cover over the opposite algebra."""
    P, eps = projective_cover(dualize(X))
    I = dualize(P)
    return I, Morphism(X, I, [m.T.copy() for m in eps.mats])


def is_semisimple(X: Module) -> bool:
    return rad(X)[0].dim == 0


def dim_vector(X: Module) -> tuple[int, ...]:
    return X.dims
