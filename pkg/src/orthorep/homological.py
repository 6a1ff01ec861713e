"""Syzygies, minimal projective resolutions and Ext dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field

import numpy as np

from .algebra import Algebra
from .decompose import canonical, decompose
from .module import (
    Module,
    cokernel,
    direct_sum_module,
    free_block,
    free_coordinates,
    injective,
    injective_envelope,
    kernel,
    projective,
    projective_cover,
    zero_module,
)


def projective_ids(A: Algebra) -> set[int]:
    ids = A.cache.get("projective_ids")
    if ids is None:
        ids = A.cache["projective_ids"] = {id(canonical(projective(A, v))) for v in range(A.vertex_count)}
    return ids


def injective_ids(A: Algebra) -> set[int]:
    ids = A.cache.get("injective_ids")
    if ids is None:
        ids = A.cache["injective_ids"] = {id(canonical(injective(A, v))) for v in range(A.vertex_count)}
    return ids


def is_projective(X: Module) -> bool:
    ids = projective_ids(X.algebra)
    return all(id(R) in ids for R, _ in decompose(X))


def is_injective(X: Module) -> bool:
    ids = injective_ids(X.algebra)
    return all(id(R) in ids for R, _ in decompose(X))


def _rebuild(A: Algebra, parts: list[tuple[Module, int]]) -> Module:
    mods = [R for R, m in parts for _ in range(m)]
    if not mods:
        return zero_module(A)
    if len(mods) == 1:
        return mods[0]
    S = direct_sum_module(mods)
    S.info["decomposition"] = parts
    return S


def strip(X: Module, drop: set[int]) -> Module:
    """X without the indecomposable summands whose canonical ids are in ``drop``."""
    if X.dim == 0:
        return X
    parts = decompose(X)
    return _rebuild(X.algebra, [(R, m) for R, m in parts if id(R) not in drop])


def strip_projective(X: Module) -> Module:
    return strip(X, projective_ids(X.algebra))


def strip_injective(X: Module) -> Module:
    return strip(X, injective_ids(X.algebra))


def _omega_indec(R: Module) -> Module:
    out = R.info.get("omega")
    if out is None:
        P, eps = projective_cover(R)
        out = strip_projective(kernel(eps)[0])
        R.info["omega"] = out
    return out


def _coomega_indec(R: Module) -> Module:
    out = R.info.get("coomega")
    if out is None:
        I, mono = injective_envelope(R)
        out = strip_injective(cokernel(mono)[0])
        R.info["coomega"] = out
    return out


def _apply_stable(X: Module, step, drop: set[int], target: Algebra | None = None) -> Module:
    counts: dict[int, list] = {}
    for R, m in decompose(X):
        if id(R) in drop:
            continue
        Y = step(R)
        if Y.dim == 0:
            continue
        for S, k in decompose(Y):
            counts.setdefault(id(S), [S, 0])[1] += k * m
    parts = sorted(((S, k) for S, k in counts.values()), key=lambda sk: _order(sk[0]))
    return _rebuild(target or X.algebra, parts)


def _order(M: Module):
    return (sum(M.dims), M.dims, M.info.get("registry_index", 0))


def syzygy(X: Module, k: int = 1, mode: str = "stable") -> Module:
    """k-th syzygy.  Stable mode strips projective summands at every stage."""
    if k < 0:
        return cosyzygy(X, -k, mode)
    if mode == "plain":
        Y = X
        for _ in range(k):
            P, eps = projective_cover(Y)
            Y = kernel(eps)[0]
        return Y
    if mode != "stable":
        raise ValueError(f"unknown syzygy mode {mode!r}")
    drop = projective_ids(X.algebra)
    Y = strip_projective(X)
    for _ in range(k):
        if Y.dim == 0:
            break
        Y = _apply_stable(Y, _omega_indec, drop)
    return Y


def cosyzygy(X: Module, k: int = 1, mode: str = "stable") -> Module:
    """k-th cosyzygy.  Stable mode strips injective summands at every stage."""
    if k < 0:
        return syzygy(X, -k, mode)
    if mode == "plain":
        Y = X
        for _ in range(k):
            I, mono = injective_envelope(Y)
            Y = cokernel(mono)[0]
        return Y
    if mode != "stable":
        raise ValueError(f"unknown syzygy mode {mode!r}")
    drop = injective_ids(X.algebra)
    Y = strip_injective(X)
    for _ in range(k):
        if Y.dim == 0:
            break
        Y = _apply_stable(Y, _coomega_indec, drop)
    return Y


@dataclass
class Resolution:
    """Minimal projective resolution stored combinatorially.

    ``generators[k]`` lists the vertices of the indecomposable summands of P_k.
    ``differentials[k]`` (k >= 1) gives, for each generator j of P_k, the
    algebra elements (sparse basis coordinates) in each generator block of
    P_{k-1} that generator j maps to.
    """

    module: Module
    generators: list[tuple[int, ...]] = dc_field(default_factory=list)
    differentials: list[list[list[dict]]] = dc_field(default_factory=list)
    _kernel: tuple | None = None

    @property
    def length(self) -> int:
        return len(self.generators) - 1

    def terminated(self) -> bool:
        return bool(self.generators) and not self.generators[-1]

    def extend(self, upto: int) -> None:
        if not self.generators:
            P, eps = projective_cover(self.module)
            self.generators.append(P.info["generators"])
            self.differentials.append([])
            self._kernel = (P, kernel(eps))
        while len(self.generators) <= upto and not self.terminated():
            prev, (K, inc) = self._kernel
            Q, cov = projective_cover(K)
            d = cov.then(inc)
            gens = Q.info["generators"]
            cols = []
            for j, u in enumerate(gens):
                off, idx = free_block(Q, j, u)
                col = d.mats[u][:, off + idx.index(Q.algebra.idempotent(u))]
                cols.append(free_coordinates(prev, u, col))
            self.generators.append(gens)
            self.differentials.append(cols)
            self._kernel = (Q, kernel(cov))

    def term(self, k: int) -> tuple[int, ...]:
        self.extend(k)
        return self.generators[k] if k < len(self.generators) else ()


def resolution(X: Module) -> Resolution:
    res = X.info.get("resolution")
    if res is None:
        res = X.info["resolution"] = Resolution(X)
    return res


def _hom_differential(res: Resolution, k: int, Y: Module) -> np.ndarray:
    """Matrix of Hom(d_k, Y) : Hom(P_{k-1}, Y) -> Hom(P_k, Y)."""
    f = Y.field
    src = res.term(k - 1)
    dst = res.term(k)
    rows = sum(Y.dims[u] for u in dst)
    cols = sum(Y.dims[v] for v in src)
    out = f.zeros((rows, cols))
    if rows == 0 or cols == 0:
        return out
    col_off = np.cumsum([0] + [Y.dims[v] for v in src])
    r = 0
    for j, u in enumerate(dst):
        for i, elt in enumerate(res.differentials[k][j]):
            if elt:
                block = out[r : r + Y.dims[u], col_off[i] : col_off[i + 1]]
                out[r : r + Y.dims[u], col_off[i] : col_off[i + 1]] = f.reduce(
                    block + Y.element_action(elt, src[i], u)
                )
        r += Y.dims[u]
    return out


def ext_dim(X: Module, Y: Module, i: int) -> int:
    """dim Ext^i(X, Y) from the Hom complex of a minimal projective resolution of X."""
    if i < 1:
        raise ValueError("Ext degree must be positive")
    if X.dim == 0 or Y.dim == 0:
        return 0
    cache = X.algebra.cache.setdefault("ext", {})
    key = (X.key, Y.key, i)
    if key in cache:
        return cache[key]
    res = resolution(X)
    gens = res.term(i)
    f = Y.field
    if not gens:
        val = 0
    else:
        size = sum(Y.dims[u] for u in gens)
        out_rank = f.rank(_hom_differential(res, i + 1, Y)) if res.term(i + 1) else 0
        in_rank = f.rank(_hom_differential(res, i, Y))
        val = size - out_rank - in_rank
    cache[key] = val
    return val


def ext_vanishes(X: Module, Y: Module, degrees) -> bool:
    return all(ext_dim(X, Y, i) == 0 for i in degrees)


def projective_dimension(X: Module, cap: int) -> int | None:
    """pd X if at most cap, else None."""
    res = resolution(X)
    res.extend(cap + 1)
    for k in range(cap + 2):
        if not res.term(k):
            return max(k - 1, 0) if X.dim else 0
    return None
