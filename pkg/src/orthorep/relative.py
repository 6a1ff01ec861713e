"""Approximations by add(M), relative syzygies and resolution dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Callable

import numpy as np

from .algebra import Algebra
from .decompose import AddSet, decompose, radical_of_end
from .errors import NotCogenerator, NotExact, NotGenerator, PreconditionFailed
from .homological import _rebuild
from .module import (
    Module,
    Morphism,
    cokernel,
    column_map,
    direct_sum,
    factor_through_cokernel,
    hom,
    identity,
    injective,
    kernel,
    projective,
    row_map,
    zero_module,
    zero_morphism,
)

# -- verdicts --------------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    value: int

    def shifted(self, n: int) -> "Finite":
        return Finite(self.value + n)

    def __str__(self) -> str:
        return f"Finite({self.value})"


@dataclass(frozen=True)
class InfiniteCertified:
    period: int = 0

    def shifted(self, n: int) -> "InfiniteCertified":
        return self

    def __str__(self) -> str:
        return "InfiniteCertified"


@dataclass(frozen=True)
class UnknownAtCutoff:
    cutoff: int

    def shifted(self, n: int) -> "UnknownAtCutoff":
        return self

    def __str__(self) -> str:
        return f"UnknownAtCutoff({self.cutoff})"


ResolutionVerdict = Finite | InfiniteCertified | UnknownAtCutoff


def verdict_json(v: ResolutionVerdict) -> dict:
    if isinstance(v, Finite):
        return {"tag": "Finite", "value": v.value}
    if isinstance(v, UnknownAtCutoff):
        return {"tag": "UnknownAtCutoff", "cutoff": v.cutoff}
    return {"tag": "InfiniteCertified"}


# -- radical maps between summands ---------------------------------------------

def radical_maps(S: Module, T: Module) -> list[Morphism]:
    """Basis of rad(S, T) for indecomposables S, T (canonical representatives)."""
    H = hom(S, T)
    if S is not T:
        return list(H.basis)
    rows, _ = radical_of_end(S)
    return [H.combine(r) for r in rows]


def _residue_degree(S: Module) -> int:
    rows, piv = radical_of_end(S)
    return hom(S, S).dim - len(piv)


def _complement(field, coords_rows: list[np.ndarray], dim: int) -> list[int]:
    """Coordinate positions completing span(coords_rows) to the full space."""
    if not coords_rows or dim == 0:
        return list(range(dim))
    _, piv = field.rref(np.array(coords_rows).reshape(len(coords_rows), dim))
    return [j for j in range(dim) if j not in set(piv)]


# -- approximations --------------------------------------------------------------

@dataclass
class Approximation:
    """A right (object -> X) or left (X -> object) add(M)-approximation."""

    side: str
    object: Module
    map: Morphism
    complement: Module
    complement_map: Morphism
    minimal: bool
    components: list[tuple[Module, Morphism]] = dc_field(default_factory=list)

    @property
    def kernel(self) -> Module:
        return self.complement


def _assemble(side: str, X: Module, comps: list[tuple[Module, Morphism]], minimal: bool) -> Approximation:
    A = X.algebra
    if not comps:
        Z = zero_module(A)
        if side == "right":
            g = zero_morphism(Z, X)
            K, inc = kernel(g)
            return Approximation(side, Z, g, K, inc, minimal, [])
        g = zero_morphism(X, Z)
        C, pi = cokernel(g)
        return Approximation(side, Z, g, C, pi, minimal, [])
    obj, _, _ = direct_sum([S for S, _ in comps])
    obj.info["decomposition"] = _multiset([S for S, _ in comps])
    if side == "right":
        g = row_map([h for _, h in comps], obj, X)
        K, inc = kernel(g)
        return Approximation(side, obj, g, K, inc, minimal, comps)
    g = column_map([h for _, h in comps], X, obj)
    C, pi = cokernel(g)
    return Approximation(side, obj, g, C, pi, minimal, comps)


def _multiset(mods: list[Module]) -> list[tuple[Module, int]]:
    counts: dict[int, list] = {}
    for S in mods:
        counts.setdefault(id(S), [S, 0])[1] += 1
    return [(S, m) for S, m in counts.values()]


def _components(M: AddSet, X: Module, side: str) -> tuple[list[tuple[Module, Morphism]], bool]:
    f = X.field
    comps: list[tuple[Module, Morphism]] = []
    clean = True
    for Mi in M:
        H = hom(Mi, X) if side == "right" else hom(X, Mi)
        if H.dim == 0:
            continue
        rows = []
        for Mj in M:
            if side == "right":
                through = hom(Mj, X)
                if through.dim == 0:
                    continue
                for h in radical_maps(Mi, Mj):
                    for g in through.basis:
                        rows.append(H.coords(h.then(g)))
            else:
                through = hom(X, Mj)
                if through.dim == 0:
                    continue
                for h in radical_maps(Mj, Mi):
                    for g in through.basis:
                        rows.append(H.coords(g.then(h)))
        keep = _complement(f, rows, H.dim)
        if _residue_degree(Mi) != 1:
            clean = False
        comps.extend((Mi, H.basis[j]) for j in keep)
    return comps, clean


def _has_approximation_property(side: str, M: AddSet, X: Module, comps) -> bool:
    f = X.field
    for Mi in M:
        H = hom(Mi, X) if side == "right" else hom(X, Mi)
        if H.dim == 0:
            continue
        rows = []
        for S, h in comps:
            if side == "right":
                for u in hom(Mi, S).basis:
                    rows.append(H.coords(u.then(h)))
            else:
                for u in hom(S, Mi).basis:
                    rows.append(H.coords(h.then(u)))
        if not rows or f.rank(np.array(rows).reshape(len(rows), H.dim)) < H.dim:
            return False
    return True


def _approx(side: str, M: AddSet, X: Module) -> Approximation:
    comps, clean = _components(M, X, side)
    if not clean:
        # Residue fields larger than k: strip redundant components greedily.
        k = 0
        while k < len(comps):
            trial = comps[:k] + comps[k + 1 :]
            if _has_approximation_property(side, M, X, trial):
                comps = trial
            else:
                k += 1
    return _assemble(side, X, comps, True)


def right_approx(M: AddSet, X: Module) -> Approximation:
    """Minimal right add(M)-approximation of X (complement = kernel)."""
    return _approx("right", M, X)


def left_approx(M: AddSet, X: Module) -> Approximation:
    """Minimal left add(M)-approximation of X (complement = cokernel)."""
    return _approx("left", M, X)


def is_right_approximation(g: Morphism, M: AddSet) -> bool:
    """Every map from a summand of M into the target factors through g."""
    return _has_approximation_property("right", M, g.target, [(g.source, g)])


def is_left_approximation(f: Morphism, M: AddSet) -> bool:
    return _has_approximation_property("left", M, f.source, [(f.target, f)])


def _maps_factoring(X: Module, Y: Module, M: AddSet) -> int:
    """Dimension of the subspace of Hom(X, Y) factoring through add(M)."""
    f = X.field
    H = hom(X, Y)
    if H.dim == 0:
        return 0
    appr = right_approx(M, Y)
    if appr.object.dim == 0:
        return 0
    rows = [H.coords(h.then(appr.map)) for h in hom(X, appr.object).basis]
    if not rows:
        return 0
    return f.rank(np.array(rows).reshape(len(rows), H.dim))


def stable_hom_dim(X: Module, Y: Module, through: AddSet) -> int:
    """dim Hom(X, Y) minus the maps factoring through the right approximation of Y."""
    if X.dim == 0 or Y.dim == 0:
        return 0
    cache = X.algebra.cache.setdefault("stable_hom", {})
    key = (X.key, Y.key, _add_key(through))
    if key not in cache:
        cache[key] = hom(X, Y).dim - _maps_factoring(X, Y, through)
    return cache[key]


def stable_hom_dim_via_compositions(X: Module, Y: Module, through: AddSet) -> int:
    """Independent route: span of all composites X -> M_i -> Y."""
    f = X.field
    H = hom(X, Y)
    rows = []
    for Mi in through:
        for g in hom(Mi, Y).basis:
            for h in hom(X, Mi).basis:
                rows.append(H.coords(h.then(g)))
    if not rows or H.dim == 0:
        return H.dim
    return H.dim - f.rank(np.array(rows).reshape(len(rows), H.dim))


def _add_key(M: AddSet) -> frozenset:
    return frozenset(id(S) for S in M)


# -- membership --------------------------------------------------------------------

def in_add(X: Module, M: AddSet) -> bool:
    """X ∈ add(M): the minimal right approximation of X admits a section."""
    if X.dim == 0:
        return True
    appr = right_approx(M, X)
    if appr.object.dim == 0:
        return False
    f = X.field
    H = hom(X, appr.object)
    if H.dim == 0:
        return False
    cols = np.stack([h.then(appr.map).flat() for h in H.basis], axis=1)
    target = identity(X).flat()
    return f.solve(cols, target) is not None


def in_add_by_decomposition(X: Module, M: AddSet) -> bool:
    return all(M.contains(R) for R, _ in decompose(X))


def is_generator(M: AddSet) -> bool:
    A = M.algebra
    return A is not None and all(in_add(projective(A, v), M) for v in range(A.vertex_count))


def is_cogenerator(M: AddSet) -> bool:
    A = M.algebra
    return A is not None and all(in_add(injective(A, v), M) for v in range(A.vertex_count))


# -- relative syzygies ----------------------------------------------------------------

def _rel_step(M: AddSet, R: Module, side: str) -> Module:
    A = R.algebra
    cache = A.cache.setdefault("rel_step", {})
    key = (_add_key(M), id(R), side)
    if key not in cache:
        appr = right_approx(M, R) if side == "right" else left_approx(M, R)
        cache[key] = strip_add(appr.complement, M)
    return cache[key]


def strip_add(X: Module, M: AddSet) -> Module:
    """X with its add(M) summands removed (canonical representatives)."""
    if X.dim == 0:
        return X
    ids = _add_key(M)
    return _rebuild(X.algebra, [(R, m) for R, m in decompose(X) if id(R) not in ids])


def _classes(X: Module, M: AddSet) -> list[Module]:
    ids = _add_key(M)
    return [R for R, _ in decompose(X) if id(R) not in ids] if X.dim else []


def rel_syzygy(M: AddSet, X: Module, k: int) -> Module:
    """Ω_M^k(X) (k > 0) or Ω_M^{-k} cosyzygy (k < 0), add(M)-summands stripped."""
    if k > 0 and not is_generator(M):
        raise NotGenerator("relative syzygies need a generator")
    if k < 0 and not is_cogenerator(M):
        raise NotCogenerator("relative cosyzygies need a cogenerator")
    side = "right" if k > 0 else "left"
    Y = strip_add(X, M)
    for _ in range(abs(k)):
        if Y.dim == 0:
            break
        counts: dict[int, list] = {}
        for R, m in decompose(Y):
            Z = _rel_step(M, R, side)
            if Z.dim:
                for S, j in decompose(Z):
                    counts.setdefault(id(S), [S, 0])[1] += j * m
        Y = _rebuild(X.algebra, list(counts.values()))
    return Y


def default_cutoff(A: Algebra) -> int:
    size = A.cache.get("catalogue_size")
    return 4 * size if size else 64


def _resdim(M: AddSet, X: Module, cutoff: int | None, side: str) -> ResolutionVerdict:
    A = X.algebra
    if cutoff is None:
        cutoff = default_cutoff(A)
    current = frozenset(id(R) for R in _classes(X, M))
    reps = {id(R): R for R in _classes(X, M)}
    seen = {current: 0}
    for step in range(cutoff + 1):
        if not current:
            return Finite(step)
        if step == cutoff:
            break
        nxt = {}
        for rid in current:
            Z = _rel_step(M, reps[rid], side)
            for R in _classes(Z, M):
                nxt[id(R)] = R
        reps.update(nxt)
        current = frozenset(nxt)
        if current and current in seen:
            return InfiniteCertified(step + 1 - seen[current])
        seen[current] = step + 1
    return UnknownAtCutoff(cutoff)


def m_resdim(M: AddSet, X: Module, cutoff: int | None = None) -> ResolutionVerdict:
    """M-resolution dimension of X via iterated minimal right approximations."""
    if not is_generator(M):
        raise NotGenerator("M-resolution dimension needs a generator")
    return _resdim(M, X, cutoff, "right")


def m_coresdim(M: AddSet, X: Module, cutoff: int | None = None) -> ResolutionVerdict:
    """M-coresolution dimension of X via iterated minimal left approximations."""
    if not is_cogenerator(M):
        raise NotCogenerator("M-coresolution dimension needs a cogenerator")
    return _resdim(M, X, cutoff, "left")


# -- sequences ------------------------------------------------------------------------

def is_short_exact(f: Morphism, g: Morphism) -> bool:
    if not f.then(g).is_zero():
        return False
    return f.is_injective() and g.is_surjective() and f.source.dim + g.target.dim == f.target.dim


def is_add_split_sequence(seq: tuple[Morphism, Morphism], M: AddSet) -> bool:
    """Short exact, middle in add(M), f a left and g a right add(M)-approximation.

    Raises:
        NotExact: the pair is not a short exact sequence.
    """
    f, g = seq
    if not (f.target is g.source or f.target == g.source):
        raise NotExact("maps are not composable")
    if not is_short_exact(f, g):
        raise NotExact("sequence is not short exact")
    return in_add(f.target, M) and is_left_approximation(f, M) and is_right_approximation(g, M)


# -- unit and counit sequences ----------------------------------------------------------

def solve_for_map(P: Module, Q: Module, compose: Callable[[Morphism], Morphism], goal: Morphism) -> Morphism | None:
    """Some f in Hom(P, Q) with compose(f) = goal, where compose is linear."""
    f = P.field
    H = hom(P, Q)
    target = goal.flat()
    if H.dim == 0:
        return zero_morphism(P, Q) if f.is_zero(target) else None
    cols = np.stack([compose(h).flat() for h in H.basis], axis=1)
    if cols.shape[0] == 0:
        return H.combine([0] * H.dim)
    x = f.solve(cols, target)
    return None if x is None else H.combine(list(x))


def factor_through_mono(inc: Morphism, u: Morphism) -> Morphism:
    """The map v with v.then(inc) = u, for an injective inc whose image contains im u."""
    f = u.field
    mats = []
    for v, (m, um) in enumerate(zip(inc.mats, u.mats)):
        if m.shape[1] == 0 or um.shape[1] == 0:
            mats.append(f.zeros((m.shape[1], um.shape[1])))
            continue
        x = f.solve(m, um)
        if x is None:
            raise NotExact("map does not factor through the monomorphism")
        mats.append(x)
    return Morphism(u.source, inc.source, mats)


@dataclass
class ShortExact:
    """0 -> left --f--> middle --g--> right -> 0."""

    f: Morphism
    g: Morphism

    @property
    def left(self) -> Module:
        return self.f.source

    @property
    def middle(self) -> Module:
        return self.f.target

    @property
    def right(self) -> Module:
        return self.g.target

    def is_exact(self) -> bool:
        return is_short_exact(self.f, self.g)


def _check_rigid_gen_cogen(M: AddSet, n: int) -> None:
    from .homological import ext_dim

    if not is_generator(M) or not is_cogenerator(M):
        raise PreconditionFailed("M must be a generator-cogenerator")
    for i in range(1, n + 1):
        for S in M:
            for T in M:
                if ext_dim(S, T, i) != 0:
                    raise PreconditionFailed(f"M is not {n}-rigid: Ext^{i} between summands is nonzero")


def counit_map(M: AddSet, n: int, X: Module) -> tuple[Morphism, Approximation]:
    """ε_X : Ω_M^{-n} Ω_M^n X -> X, lifted along a left add(M)-coresolution.

    Returns ε_X together with the first right approximation r_X : M_X -> X.
    """
    rights = [right_approx(M, X)]
    for _ in range(n - 1):
        rights.append(right_approx(M, rights[-1].complement))
    Y = rights[-1].complement
    h = identity(Y)
    current = Y
    for k in range(n):
        a = rights[n - 1 - k]
        b = left_approx(M, current)
        goal = h.then(a.complement_map)
        lift = solve_for_map(b.object, a.object, lambda u: b.map.then(u), goal)
        if lift is None:
            raise NotExact("left approximation failed to lift a map into add(M)")
        h = factor_through_cokernel(b.complement_map, lift.then(a.map))
        current = b.complement
    return h, rights[0]


def unit_map(M: AddSet, n: int, X: Module) -> tuple[Morphism, Approximation]:
    """η_X : X -> Ω_M^n Ω_M^{-n} X, with the first left approximation l_X : X -> M^X."""
    lefts = [left_approx(M, X)]
    for _ in range(n - 1):
        lefts.append(left_approx(M, lefts[-1].complement))
    Z = lefts[-1].complement
    h = identity(Z)
    current = Z
    for k in range(n):
        c = lefts[n - 1 - k]
        d = right_approx(M, current)
        goal = c.complement_map.then(h)
        lift = solve_for_map(c.object, d.object, lambda u: u.then(d.map), goal)
        if lift is None:
            raise NotExact("right approximation failed to lift a map out of add(M)")
        h = factor_through_mono(d.complement_map, c.map.then(lift))
        current = d.complement
    return h, lefts[0]


def unit_counit_sequences(M: AddSet, n: int, X: Module) -> tuple[ShortExact, ShortExact]:
    """The counit sequence 0 -> K_X -> Ω^{-n}Ω^n X ⊕ M_X -> X -> 0 and the unit
    sequence 0 -> X -> M^X ⊕ Ω^nΩ^{-n} X -> C^X -> 0.

    Raises:
        PreconditionFailed: M is not an n-rigid generator-cogenerator, or n < 1.
    """
    if n < 1:
        raise PreconditionFailed("n must be at least 1")
    _check_rigid_gen_cogen(M, n)
    eps, r = counit_map(M, n, X)
    mid, _, _ = direct_sum([eps.source, r.object], X.algebra)
    g = row_map([eps, r.map], mid, X)
    K, inc = kernel(g)
    eta, l = unit_map(M, n, X)
    mid2, _, _ = direct_sum([l.object, eta.target], X.algebra)
    f2 = column_map([l.map, eta], X, mid2)
    C, pi = cokernel(f2)
    return ShortExact(inc, g), ShortExact(f2, pi)


@dataclass
class CotorsionWitness:
    n: int
    sequence: ShortExact
    u_in_left_perp: bool
    v_resdim: ResolutionVerdict
    ext1_uv: int

    @property
    def holds(self) -> bool:
        return (
            self.sequence.is_exact()
            and self.u_in_left_perp
            and isinstance(self.v_resdim, Finite)
            and self.v_resdim.value <= self.n - 1
            and self.ext1_uv == 0
        )


def cotorsion_witness(M: AddSet, n: int, X: Module) -> CotorsionWitness:
    """0 -> V_X -> U_X -> X -> 0 with U_X left n-perpendicular to M and V_X of
    M-resolution dimension at most n-1, read off the counit sequence."""
    from .homological import ext_dim

    counit, _ = unit_counit_sequences(M, n, X)
    U, V = counit.middle, counit.left
    left_perp = all(ext_dim(U, S, i) == 0 for S in M for i in range(1, n + 1))
    return CotorsionWitness(n, counit, left_perp, m_resdim(M, V), ext_dim(U, V, 1))
