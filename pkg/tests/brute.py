"""Independent oracles: linear algebra through sympy's DomainMatrix, no package kernels."""

from __future__ import annotations

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def _domain(module):
    p = module.field.characteristic
    return GF(p) if p else QQ


def _rank(rows, ncols, dom) -> int:
    if not rows or ncols == 0:
        return 0
    return DomainMatrix([[dom(int(v)) if dom != QQ else dom(v) for v in r] for r in rows], (len(rows), ncols), dom).rank()


def hom_dim(X, Y) -> int:
    """Nullity of the intertwining system f_t X_a = Y_a f_s, written out entry by entry."""
    dom = _domain(X)
    offsets, n = [], 0
    for v in range(len(X.dims)):
        offsets.append(n)
        n += X.dims[v] * Y.dims[v]
    rows = []
    for a, (s, t) in enumerate(X.algebra.quiver.arrows):
        Xa, Ya = X.maps[a], Y.maps[a]
        # entry (r, c) of f_t X_a - Y_a f_s, with r < dim Y_t and c < dim X_s
        for r in range(Y.dims[t]):
            for c in range(X.dims[s]):
                row = [0] * n
                for k in range(X.dims[t]):
                    row[offsets[t] + r * X.dims[t] + k] += Xa[k, c]
                for k in range(Y.dims[s]):
                    row[offsets[s] + k * X.dims[s] + c] -= Ya[r, k]
                rows.append(row)
    return n - _rank(rows, n, dom)


def rank(matrix, p: int) -> int:
    dom = GF(p) if p else QQ
    m = [list(r) for r in matrix]
    return _rank(m, len(m[0]) if m else 0, dom)


def ext1_by_shifting(X, Y, omega, cover) -> int:
    """dim Ext^1(X, Y) from 0 -> ΩX -> P -> X -> 0 and brute Hom dimensions."""
    return hom_dim(omega, Y) - hom_dim(cover, Y) + hom_dim(X, Y)
