"""Transpose, Nakayama functor and (higher) Auslander-Reiten translates.

All translates act on stable categories: projective (resp. injective)
summands are dropped before and after, and every result is returned as a
direct sum of registered indecomposable representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .decompose import AddSet
from .errors import PreconditionFailed
from .homological import (
    _apply_stable,
    cosyzygy,
    ext_dim,
    injective_ids,
    projective_ids,
    resolution,
    strip,
    syzygy,
)
from .module import (
    Module,
    Morphism,
    cokernel,
    dualize,
    free_module,
    injective,
    kernel,
    map_from_free,
    regular_module,
    zero_module,
)
from .relative import stable_hom_dim


@dataclass
class TranslateResult:
    value: Module
    trace: dict


def _dual_presentation(X: Module) -> Morphism:
    """Hom(θ, A) for the minimal presentation θ : P_1 -> P_0 of X, over A^op."""
    A = X.algebra
    op = A.opposite
    res = resolution(X)
    top_gens = res.term(0)
    rel_gens = res.term(1)
    source = free_module(op, list(top_gens))
    target = free_module(op, list(rel_gens))
    f = A.field
    images = []
    for i, v in enumerate(top_gens):
        vec = f.zeros(target.dims[v])
        off = 0
        for j, u in enumerate(rel_gens):
            idx = op.between.get((u, v), [])
            pos = {b: k for k, b in enumerate(idx)}
            elt = res.differentials[1][j][i] if rel_gens else {}
            for b, c in elt.items():
                for ob, oc in op.reduce(A.reverse_path(A.basis[b])).items():
                    vec[off + pos[ob]] = f.scalar(vec[off + pos[ob]] + c * oc)
            off += len(idx)
        images.append(vec)
    return map_from_free(source, target, images)


def _transpose_raw(X: Module) -> Module:
    return cokernel(_dual_presentation(X))[0]


def transpose(X: Module) -> Module:
    """Tr X over A^op, computed from a minimal projective presentation of X."""
    A = X.algebra
    if X.dim == 0:
        return zero_module(A.opposite)

    def step(R: Module) -> Module:
        out = R.info.get("transpose")
        if out is None:
            out = R.info["transpose"] = strip(_transpose_raw(R), set())
        return out

    return _apply_stable(X, step, projective_ids(A), A.opposite)


def tau(X: Module) -> Module:
    """τ X = D Tr X; projective summands of X are ignored."""
    A = X.algebra
    if X.dim == 0:
        return X

    def step(R: Module) -> Module:
        out = R.info.get("tau")
        if out is None:
            T = transpose(R)
            out = strip(dualize(T), set()) if T.dim else zero_module(A)
            R.info["tau"] = out
        return out

    return _apply_stable(X, step, projective_ids(A))


def tau_minus(X: Module) -> Module:
    """τ⁻ X = Tr D X; injective summands of X are ignored."""
    A = X.algebra
    if X.dim == 0:
        return X

    def step(R: Module) -> Module:
        out = R.info.get("tau_minus")
        if out is None:
            T = transpose(dualize(R))
            out = strip(T, set()) if T.dim else zero_module(A)
            R.info["tau_minus"] = out
        return out

    return _apply_stable(X, step, injective_ids(A))


def nakayama_functor(X: Module) -> Module:
    """ν X = D Hom(X, A), read off as D ker Hom(θ, A) from a presentation."""
    A = X.algebra
    if X.dim == 0:
        return X

    def step(R: Module) -> Module:
        out = R.info.get("nu")
        if out is None:
            K = kernel(_dual_presentation(R))[0]
            out = strip(dualize(K), set()) if K.dim else zero_module(A)
            R.info["nu"] = out
        return out

    return _apply_stable(X, step, set())


def nakayama_inverse(X: Module) -> Module:
    """ν⁻ X = Hom(D A, X), computed as D ν_{A^op} D X."""
    A = X.algebra
    if X.dim == 0:
        return X
    Y = nakayama_functor(dualize(X))
    return strip(dualize(Y), set()) if Y.dim else zero_module(A)


def tau_higher(X: Module, n: int) -> Module:
    """τ_{n+1} X = τ Ω^n X."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tau(syzygy(X, n))


def tau_higher_minus(X: Module, n: int) -> Module:
    """τ⁻_{n+1} X = τ⁻ Ω^{-n} X."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tau_minus(cosyzygy(X, n))


def injective_cogenerator(A: Algebra) -> list[Module]:
    return [injective(A, v) for v in range(A.vertex_count)]


def projective_generator(A: Algebra) -> list[Module]:
    return [regular_module(A)]


def _ext_free(X: Module, Y: Module, n: int) -> bool:
    return all(ext_dim(X, Y, i) == 0 for i in range(1, n + 1))


def m_plus(M: AddSet, n: int) -> AddSet:
    """add(τ_{n+1} M ⊕ D A).

    Raises:
        PreconditionFailed: Ext^i(M, A) ≠ 0 for some 1 <= i <= n.
    """
    A = M.algebra
    Areg = regular_module(A)
    if not _ext_free(M.module(), Areg, n):
        raise PreconditionFailed(f"M is not in the left {n}-perpendicular category of A")
    return AddSet.of(tau_higher(M.module(), n), *injective_cogenerator(A))


def m_minus(M: AddSet, n: int) -> AddSet:
    """add(A ⊕ τ⁻_{n+1} M).

    Raises:
        PreconditionFailed: Ext^i(D A, M) ≠ 0 for some 1 <= i <= n.
    """
    A = M.algebra
    DA = AddSet.of(*injective_cogenerator(A)).module()
    if not _ext_free(DA, M.module(), n):
        raise PreconditionFailed(f"M is not in the right {n}-perpendicular category of D(A)")
    return AddSet.of(regular_module(A), tau_higher_minus(M.module(), n))


def ar_duality_terms(X: Module, Z: Module, n: int) -> list[tuple[int, int]]:
    """Pairs (left, right) of dimensions that the AR duality formulas equate."""
    A = X.algebra
    T = tau_higher(X, n)
    pairs = [(ext_dim(X, Z, n + 1 - i), ext_dim(Z, T, i)) for i in range(1, n + 1)]
    projs = AddSet.of(regular_module(A))
    pairs.append((stable_hom_dim(X, Z, projs), ext_dim(Z, T, n + 1)))
    return pairs


def ar_duality_check(X: Module, Z: Module, n: int) -> bool:
    """Dimension form of the higher AR duality for X in the left n-perpendicular of A.

    Raises:
        PreconditionFailed: X is not left n-perpendicular to A.
    """
    if not _ext_free(X, regular_module(X.algebra), n):
        raise PreconditionFailed("X must satisfy Ext^i(X, A) = 0 for 1 <= i <= n")
    return all(a == b for a, b in ar_duality_terms(X, Z, n))


def ar_duality_check_dual(Y: Module, Z: Module, n: int) -> bool:
    """The dual formulas for Y right n-perpendicular to D A (stable Hom modulo injectives)."""
    A = Y.algebra
    DA = AddSet.of(*injective_cogenerator(A))
    if not _ext_free(DA.module(), Y, n):
        raise PreconditionFailed("Y must satisfy Ext^i(D A, Y) = 0 for 1 <= i <= n")
    T = tau_higher_minus(Y, n)
    for i in range(1, n + 1):
        if ext_dim(Z, Y, n + 1 - i) != ext_dim(T, Z, i):
            return False
    return stable_hom_dim(Z, Y, DA) == ext_dim(T, Z, n + 1)
