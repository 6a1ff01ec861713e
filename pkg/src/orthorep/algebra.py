"""Bound quiver algebras kQ/I with an explicit path basis.

Paths are written left to right: the path ``(v, (a1, a2))`` starts at ``v``,
traverses ``a1`` and then ``a2``.  The product of two paths is their
concatenation, which makes modules the same thing as representations of the
quiver (covariant, one matrix per arrow).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InfiniteDimensional, NonAdmissible
from .field import Field, make_field

Path = tuple[int, tuple[int, ...]]
# A linear combination of paths: list of (coefficient, arrow-id tuple).  The
# start vertex is implied by the first arrow; pure idempotents never occur in
# relations because relations must live in the square of the arrow ideal.
Relation = list[tuple[object, tuple[int, ...]]]


@dataclass(frozen=True)
class Quiver:
    """A finite quiver; arrow ``k`` goes from ``arrows[k][0]`` to ``arrows[k][1]``."""

    vertex_count: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        for s, t in arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow ({s},{t}) has an endpoint outside the quiver")
        object.__setattr__(self, "arrows", arrows)

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def arrows_from(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple((t, s) for s, t in self.arrows))

    def path_end(self, path: Path) -> int:
        start, arrows = path
        v = start
        for a in arrows:
            if self.source(a) != v:
                raise ValueError(f"arrow {a} does not start at vertex {v}")
            v = self.target(a)
        return v

    def path_from_arrows(self, arrows: Sequence[int]) -> Path:
        arrows = tuple(int(a) for a in arrows)
        if not arrows:
            raise ValueError("empty arrow sequence has no start vertex")
        path = (self.source(arrows[0]), arrows)
        self.path_end(path)
        return path


def cyclic_quiver(e: int) -> Quiver:
    """Oriented cycle on e vertices with arrows i -> i+1 (mod e)."""
    return Quiver(e, tuple((i, (i + 1) % e) for i in range(e)))


@dataclass(frozen=True)
class NakayamaParams:
    """Parameters of the symmetric Nakayama algebra with e vertices and Loewy length ae+1."""

    e: int
    a: int

    def __post_init__(self):
        if self.e < 1 or self.a < 1:
            raise ValueError("Nakayama parameters need e >= 1 and a >= 1")

    @property
    def b(self) -> int:
        return self.a * self.e + 1

    @property
    def name(self) -> str:
        return f"A_{{{self.e},{self.b}}}"


class Algebra:
    """Finite-dimensional quotient kQ/I with a path basis.

    Use :func:`build_algebra` or :func:`nakayama_algebra` to construct one.
    """

    def __init__(
        self,
        quiver: Quiver,
        field: Field,
        relations: list[Relation],
        basis: list[Path],
        normal_forms: dict[Path, dict[int, object]],
        nil_bound: int,
        name: str | None = None,
        nakayama: NakayamaParams | None = None,
    ):
        self.quiver = quiver
        self.field = field
        self.relations = relations
        self.basis = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self._normal = normal_forms
        self.nil_bound = nil_bound
        self.name = name or f"kQ/I({quiver.vertex_count} vertices, {len(quiver.arrows)} arrows)"
        self.nakayama = nakayama
        self._opposite: Algebra | None = None
        self.cache: dict = {}
        self.between: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(basis):
            key = (p[0], quiver.path_end(p))
            self.between.setdefault(key, []).append(i)

    # -- basic data --------------------------------------------------------
    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"<Algebra {self.name} dim={self.dim} over {self.field.descriptor}>"

    def idempotent(self, v: int) -> int:
        return self.index[(v, ())]

    def basis_paths(self, source: int, target: int) -> list[Path]:
        return [self.basis[i] for i in self.between.get((source, target), [])]

    def reduce(self, path: Path) -> dict[int, object]:
        """Coordinates of a path in the basis (sparse: basis index -> coefficient)."""
        if len(path[1]) >= self.nil_bound:
            return {}
        nf = self._normal.get(path)
        if nf is None:
            self.quiver.path_end(path)
            raise KeyError(f"path {path} missing from normal-form table")
        return nf

    def multiply_basis(self, i: int, j: int) -> dict[int, object]:
        p, q = self.basis[i], self.basis[j]
        if self.quiver.path_end(p) != q[0]:
            return {}
        return self.reduce((p[0], p[1] + q[1]))

    @cached_property
    def mult(self) -> np.ndarray:
        """Structure constants: mult[i, j, k] = coefficient of b_k in b_i b_j."""
        n = self.dim
        table = self.field.zeros((n, n, n))
        for i in range(n):
            for j in range(n):
                for k, c in self.multiply_basis(i, j).items():
                    table[i, j, k] = c
        return table

    def check_associative(self) -> bool:
        """Brute-force associativity on all basis triples."""
        f = self.field
        m = self.mult
        for i in range(self.dim):
            # (b_i b_j) b_l against b_i (b_j b_l), for all j, l at once.
            lhs = f.reduce(np.einsum("jk,klm->jlm", m[i], m))
            rhs = f.reduce(np.einsum("jlk,km->jlm", m, m[i]))
            if np.any(lhs != rhs):
                return False
        return True

    def unit_vector(self) -> np.ndarray:
        u = self.field.zeros(self.dim)
        for v in range(self.vertex_count):
            u[self.idempotent(v)] = 1
        return u

    # -- opposite ----------------------------------------------------------
    @property
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            rels = [[(c, tuple(reversed(p))) for c, p in rel] for rel in self.relations]
            op = build_algebra(self.quiver.opposite(), rels, self.field, name=f"{self.name}^op")
            op._opposite = self
            self._opposite = op
        return self._opposite

    def reverse_path(self, path: Path) -> Path:
        """The same arrows read backwards, as a path of the opposite quiver."""
        end = self.quiver.path_end(path)
        return (end, tuple(reversed(path[1])))


def _uniform(quiver: Quiver, rel: Relation) -> tuple[int, int]:
    ends = set()
    for _, arrows in rel:
        if len(arrows) < 2:
            raise NonAdmissible("relation has a component of degree 0 or 1")
        p = quiver.path_from_arrows(arrows)
        ends.add((p[0], quiver.path_end(p)))
    if len(ends) != 1:
        raise NonAdmissible("relation is not a combination of parallel paths")
    return ends.pop()


def _paths_up_to(quiver: Quiver, length: int) -> list[list[Path]]:
    levels = [[(v, ()) for v in range(quiver.vertex_count)]]
    for _ in range(length):
        nxt = []
        for p in levels[-1]:
            end = quiver.path_end(p)
            for a in quiver.arrows_from(end):
                nxt.append((p[0], p[1] + (a,)))
        levels.append(nxt)
    return levels


def _ideal_rows(quiver, field, rels, levels, bound, col_index):
    """Generators p·r·q of the ideal, truncated to paths of length < bound."""
    rows = []
    width = len(col_index)
    for rel in rels:
        start, end = _uniform(quiver, rel)
        min_len = min(len(arrows) for _, arrows in rel)
        for lp in range(bound - min_len):
            for p in levels[lp]:
                if quiver.path_end(p) != start:
                    continue
                for lq in range(bound - min_len - lp):
                    for q in levels[lq]:
                        if q[0] != end:
                            continue
                        row = field.zeros(width)
                        nonzero = False
                        for c, arrows in rel:
                            full = (p[0], p[1] + arrows + q[1])
                            if len(full[1]) < bound:
                                j = col_index[full]
                                row[j] = field.scalar(row[j] + field.scalar(c))
                                nonzero = True
                        if nonzero and not field.is_zero(row):
                            rows.append(row)
    if not rows:
        return field.zeros((0, width))
    return np.vstack(rows)


def _quotient(quiver, field, rels, levels, bound):
    """Row-reduce the truncated ideal inside paths of length < bound.

    Columns are ordered longest path first, so pivots land on long paths and
    the free columns (the normal basis) prefer short paths.
    """
    cols = [p for L in range(bound - 1, -1, -1) for p in levels[L]]
    col_index = {p: i for i, p in enumerate(cols)}
    gens = _ideal_rows(quiver, field, rels, levels, bound, col_index)
    if gens.shape[0]:
        r, pivots = field.rref(gens)
    else:
        r, pivots = gens, []
    return cols, col_index, r, pivots


def build_algebra(
    quiver: Quiver,
    relations: Iterable[Relation],
    field: Field | str | int | None = None,
    max_length: int = 64,
    name: str | None = None,
) -> Algebra:
    """Construct kQ/I from quiver data and relations.

    Relations are lists of ``(coefficient, arrow ids)`` terms; each must be a
    combination of parallel paths of length at least 2.

    Raises:
        NonAdmissible: a relation has a term of length 0 or 1.
        InfiniteDimensional: no power of the arrow ideal dies below ``max_length``.
    """
    field = make_field(field)
    rels = [[(field.scalar(c), tuple(int(a) for a in arrows)) for c, arrows in rel] for rel in relations]
    rels = [r for r in rels if any(c != 0 for c, _ in r)]
    for rel in rels:
        _uniform(quiver, rel)
    for bound in range(1, max_length + 1):
        # Test whether J^bound lies in I + J^(bound+1).
        levels = _paths_up_to(quiver, bound)
        if not levels[bound]:
            break
        cols, col_index, r, pivots = _quotient(quiver, field, rels, levels, bound + 1)
        pivot_set = set(pivots)
        if all(col_index[p] in pivot_set for p in levels[bound]):
            break
    else:
        raise InfiniteDimensional(f"arrow ideal not nilpotent modulo relations below length {max_length}")
    levels = _paths_up_to(quiver, bound)
    cols, col_index, r, pivots = _quotient(quiver, field, rels, levels, bound)
    pivot_set = set(pivots)
    free = [i for i in range(len(cols)) if i not in pivot_set]
    # Basis ordered by (start vertex, length, arrows) for readability.
    basis = sorted((cols[i] for i in free), key=lambda p: (p[0], len(p[1]), p[1]))
    bindex = {p: k for k, p in enumerate(basis)}
    normal: dict[Path, dict[int, object]] = {}
    for p in basis:
        normal[p] = {bindex[p]: field.scalar(1)}
    for row_i, c in enumerate(pivots):
        nf = {}
        for f in free:
            coeff = r[row_i, f]
            if coeff != 0:
                nf[bindex[cols[f]]] = field.scalar(-coeff)
        normal[cols[c]] = nf
    return Algebra(quiver, field, rels, basis, normal, bound, name=name)


def nakayama_algebra(params: NakayamaParams | tuple[int, int], field: Field | str | int | None = None) -> Algebra:
    """The symmetric Nakayama algebra k(cyclic quiver on e vertices)/J^(ae+1)."""
    if not isinstance(params, NakayamaParams):
        params = NakayamaParams(*params)
    e, b = params.e, params.b
    quiver = cyclic_quiver(e)
    relations = [[(1, tuple((i + k) % e for k in range(b)))] for i in range(e)]
    alg = build_algebra(quiver, relations, field, max_length=b + 1, name=params.name)
    alg.nakayama = params
    return alg


def field_algebra(field: Field | str | int | None = None) -> Algebra:
    """The ground field as a one-vertex algebra."""
    return build_algebra(Quiver(1, ()), [], field, name="k")


def path_algebra(quiver: Quiver, field: Field | str | int | None = None, name: str | None = None) -> Algebra:
    """Path algebra of an acyclic quiver (no relations)."""
    return build_algebra(quiver, [], field, name=name)
