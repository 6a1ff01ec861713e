"""Tilting modules, completion of almost complete tilting modules, the
A-side certificate for tilting bimodules between endomorphism algebras, and
mutations of modules at a summand."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field

from .ar import tau_higher
from .decompose import AddSet, add_equal, decompose
from .errors import ApproximationDegenerate, InternalInconsistency, PreconditionFailed
from .homological import ext_dim, injective_ids, is_projective, projective_ids
from .module import Module, Morphism, direct_sum_module, regular_module
from .orthosym import IndecCatalogue, is_maximal, is_n_orthosymmetric
from .relative import (
    Finite,
    ResolutionVerdict,
    ShortExact,
    in_add,
    is_add_split_sequence,
    left_approx,
    m_resdim,
    right_approx,
    verdict_json,
)

# -- verdicts ---------------------------------------------------------------------

@dataclass(frozen=True)
class Partial:
    n: int

    def __str__(self) -> str:
        return f"Partial({self.n})"


@dataclass(frozen=True)
class Tilting:
    n: int

    def __str__(self) -> str:
        return f"Tilting({self.n})"


@dataclass(frozen=True)
class Fail:
    reason: str

    def __str__(self) -> str:
        return f"Fail({self.reason})"


TiltingVerdict = Partial | Tilting | Fail


@dataclass
class TiltingReport:
    module: Module
    pd: ResolutionVerdict
    self_orthogonal_to: int
    coresolution: list[Module] | None
    verdict: TiltingVerdict

    def to_json(self) -> dict:
        return {
            "report_version": 1,
            "module": AddSet.of(self.module).labels() if self.module.dim else [],
            "pd": verdict_json(self.pd),
            "self_orthogonal_to": self.self_orthogonal_to,
            "coresolution": None
            if self.coresolution is None
            else [AddSet.of(T).labels() if T.dim else [] for T in self.coresolution],
            "verdict": str(self.verdict),
        }


def _label(X: Module) -> str:
    return X.name or "·".join(str(d) for d in X.dims)


def _partial(T: Module, n_cap: int) -> TiltingReport:
    if T.dim == 0:
        raise PreconditionFailed("T must be nonzero")
    A = T.algebra
    projs = AddSet.of(regular_module(A))
    pd = m_resdim(projs, T, n_cap)
    if not isinstance(pd, Finite):
        return TiltingReport(T, pd, 0, None, Fail(f"projective dimension not finite within {n_cap}"))
    n = pd.value
    summands = [R for R, _ in decompose(T)]
    for j in range(1, n + 1):
        for S in summands:
            for R in summands:
                if ext_dim(S, R, j):
                    return TiltingReport(
                        T, pd, j - 1, None, Fail(f"Ext^{j}({_label(S)}, {_label(R)}) ≠ 0")
                    )
    return TiltingReport(T, pd, n, None, Partial(n))


def is_partial_tilting(T: Module, n_cap: int = 16) -> TiltingReport:
    """Finite projective dimension n and Ext^j(T, T) = 0 for 1 <= j <= n."""
    return _partial(T, n_cap)


def is_tilting(T: Module, n_cap: int = 16) -> TiltingReport:
    """Partial tilting, and A admits a finite add(T)-coresolution of length <= pd T.

    The coresolution is built from iterated minimal left add(T)-approximations.
    """
    report = _partial(T, n_cap)
    if isinstance(report.verdict, Fail):
        return report
    n = report.verdict.n
    addT = AddSet.of(T)
    current = regular_module(T.algebra)
    terms: list[Module] = []
    for k in range(n + 1):
        if in_add(current, addT):
            terms.append(current)
            report.coresolution = terms
            report.verdict = Tilting(n)
            return report
        if k == n:
            break
        appr = left_approx(addT, current)
        if not appr.map.is_injective():
            report.verdict = Fail(f"left add(T)-approximation at step {k} is not injective")
            return report
        terms.append(appr.object)
        current = appr.complement
    report.verdict = Fail(f"no add(T)-coresolution of A of length <= {n}")
    return report


# -- completing almost complete tilting modules --------------------------------------------

@dataclass
class Completion:
    terms: list[Module]
    maps: list[Morphism]
    tilting: TiltingReport | None
    verdict: TiltingVerdict


def complete_almost_tilting(P: Module, Q: Module, X: Module, n: int) -> Completion:
    """0 -> P -> Q_{n-1} -> ... -> Q_0 -> X -> 0 from iterated right add(Q)-approximations.

    ``terms`` lists Q_0, ..., Q_{n-1}; ``maps`` the approximation maps Q_i -> K_i.

    Raises:
        PreconditionFailed: A ≠ P ⊕ Q, P is not indecomposable projective, or X
            is projective or decomposable.
    """
    A = X.algebra
    if len(decompose(P)) != 1 or decompose(P)[0][1] != 1 or not is_projective(P):
        raise PreconditionFailed("P must be an indecomposable projective")
    Areg = regular_module(A)
    if not add_equal(AddSet.of(P, Q), AddSet.of(Areg)) or AddSet.of(Q).contains(decompose(P)[0][0]):
        raise PreconditionFailed("A must decompose as P ⊕ Q with P not in add(Q)")
    if X.dim == 0 or len(decompose(X)) != 1 or decompose(X)[0][1] != 1:
        raise PreconditionFailed("X must be indecomposable")
    if n == 0:
        ok = add_equal(AddSet.of(X), AddSet.of(P))
        return Completion([], [], None, Tilting(0) if ok else Fail("for n = 0, X must be isomorphic to P"))
    if is_projective(X):
        raise PreconditionFailed("X must be non-projective")
    T = direct_sum_module([X, Q])
    partial = is_partial_tilting(T, n)
    if isinstance(partial.verdict, Fail):
        return Completion([], [], partial, Fail(f"X ⊕ Q is not partial tilting: {partial.verdict.reason}"))
    if partial.verdict.n > n:
        return Completion([], [], partial, Fail(f"projective dimension exceeds {n}"))
    addQ = AddSet.of(Q)
    terms, maps = [], []
    current = X
    for k in range(n):
        appr = right_approx(addQ, current)
        if not appr.map.is_surjective():
            return Completion(terms, maps, partial, Fail(f"add(Q)-approximation at step {k} is not surjective"))
        terms.append(appr.object)
        maps.append(appr.map)
        current = appr.complement
    if not add_equal(AddSet.of(current), AddSet.of(P)) or len(decompose(current)) != 1 or decompose(current)[0][1] != 1:
        return Completion(terms, maps, partial, Fail("final kernel is not isomorphic to P"))
    report = is_tilting(T, n)
    if not isinstance(report.verdict, Tilting):
        raise InternalInconsistency(f"completed module is not tilting: {report.verdict}")
    return Completion(terms, maps, report, report.verdict)


# -- tilting bimodules between endomorphism algebras -----------------------------------------

@dataclass(frozen=True)
class PartialOneTilting:
    def __str__(self) -> str:
        return "PartialOneTilting"


@dataclass(frozen=True)
class OneTiltingBimodule:
    route: str = "count"

    def __str__(self) -> str:
        return "OneTiltingBimodule"


def theorem_derived_check(
    M: AddSet, N: AddSet, n: int, catalogue: IndecCatalogue, maximal: str = "M"
) -> PartialOneTilting | OneTiltingBimodule | Fail:
    """Certify on the A-side that Hom(M, N) is partial 1-tilting over End(M), and
    whether it is a 1-tilting bimodule.

    ``maximal`` names the side(s) asserted maximal n-ortho-symmetric: "M" or
    "both"; the named side is verified against the catalogue.

    Raises:
        PreconditionFailed: a hypothesis fails; the message names it.
    """
    if maximal not in ("M", "both"):
        raise ValueError("maximal must be 'M' or 'both'")
    if n < 1:
        raise PreconditionFailed("n must be at least 1")
    if not is_maximal(M, n, "orthosymmetric", catalogue):
        raise PreconditionFailed("M is not maximal n-ortho-symmetric")
    if not is_n_orthosymmetric(N, n).ortho_symmetric:
        raise PreconditionFailed("N is not n-ortho-symmetric")
    for i in range(1, n):
        if any(ext_dim(S, R, i) for S in M for R in N):
            raise PreconditionFailed(f"Ext^{i}(M, N) ≠ 0")
    if maximal == "both" and not is_maximal(N, n, "orthosymmetric", catalogue):
        raise PreconditionFailed("N is not maximal n-ortho-symmetric")
    appr = right_approx(M, N.module())
    K = appr.complement
    if not appr.map.is_surjective():
        return Fail("right add(M)-approximation of N is not surjective")
    if K.dim and not all(M.contains(R) for R, _ in decompose(K)):
        return Fail("kernel of the approximation of N is not in add(M)")
    V = M.union(AddSet.of(K)) if K.dim else M
    if not is_n_orthosymmetric(V, n).ortho_symmetric:
        return Fail("K ⊕ M is not n-ortho-symmetric")
    if len(N) == len(M):
        return OneTiltingBimodule("count")
    if maximal == "both":
        f = left_approx(N, M.module())
        if f.map.is_injective() and (f.complement.dim == 0 or all(N.contains(R) for R, _ in decompose(f.complement))):
            return OneTiltingBimodule("coresolution")
    return PartialOneTilting()


# -- mutation ------------------------------------------------------------------------

@dataclass
class MutationResult:
    input: AddSet
    pivot: AddSet
    output: AddSet
    split_sequences: list[ShortExact] = dc_field(default_factory=list)
    side: str = "right"

    @property
    def complement(self) -> AddSet:
        return self.output.without(self.input.without(self.pivot))

    def to_json(self) -> dict:
        return {
            "report_version": 1,
            "side": self.side,
            "input": self.input.labels(),
            "pivot": self.pivot.labels(),
            "output": self.output.labels(),
            "sequences": [
                {
                    "left": AddSet.of(s.left).labels() if s.left.dim else [],
                    "middle": AddSet.of(s.middle).labels() if s.middle.dim else [],
                    "right": AddSet.of(s.right).labels() if s.right.dim else [],
                    "f": [m.tolist() for m in s.f.mats],
                    "g": [m.tolist() for m in s.g.mats],
                }
                for s in self.split_sequences
            ],
        }


def _as_addset(X, M: AddSet) -> AddSet:
    return X if isinstance(X, AddSet) else AddSet.of(X)


def _split(M: AddSet, X) -> tuple[AddSet, AddSet]:
    pivot = _as_addset(X, M)
    if not all(M.contains(R) for R in pivot):
        raise PreconditionFailed("the pivot must be a summand of M")
    N = M.without(pivot)
    if len(pivot) == 0 or all(N.contains(R) for R in pivot):
        raise ApproximationDegenerate("the pivot lies in add(N)")
    return N, pivot


def mutate_right(M: AddSet, X) -> MutationResult:
    """μ⁺_X(M) = Ker(g) ⊕ N for a minimal right add(N)-approximation g : N_0 -> X."""
    N, pivot = _split(M, X)
    appr = right_approx(N, pivot.module())
    K = appr.complement
    out = N.union(AddSet.of(K)) if K.dim else N
    return MutationResult(M, pivot, out, [ShortExact(appr.complement_map, appr.map)], "right")


def mutate_left(M: AddSet, X) -> MutationResult:
    """μ⁻_X(M) = N ⊕ Coker(f) for a minimal left add(N)-approximation f : X -> N^0."""
    N, pivot = _split(M, X)
    appr = left_approx(N, pivot.module())
    C = appr.complement
    out = N.union(AddSet.of(C)) if C.dim else N
    return MutationResult(M, pivot, out, [ShortExact(appr.map, appr.complement_map)], "left")


def _same_add(X: Module, Y: Module) -> bool:
    cx = sorted(id(R) for R, _ in decompose(X)) if X.dim else []
    cy = sorted(id(R) for R, _ in decompose(Y)) if Y.dim else []
    return cx == cy


def mutation_preserves_orthosymmetry(M: AddSet, X, n: int, side: str = "right") -> bool:
    """Recompute ortho-symmetry of the mutation once its hypotheses are verified.

    Raises:
        PreconditionFailed: N is not n-ortho-symmetric or the pivot is not
            fixed by the higher translate.
        InternalInconsistency: hypotheses hold but the mutation is not n-ortho-symmetric.
    """
    N, pivot = _split(M, X)
    if not is_n_orthosymmetric(N, n).ortho_symmetric:
        raise PreconditionFailed("N must be n-ortho-symmetric")
    Xm = pivot.module()
    if not _same_add(tau_higher(Xm, n), Xm):
        raise PreconditionFailed("the pivot must be fixed by the higher translate")
    result = mutate_right(M, pivot) if side == "right" else mutate_left(M, pivot)
    ok = is_n_orthosymmetric(result.output, n).ortho_symmetric
    if not ok:
        raise InternalInconsistency("mutation lost n-ortho-symmetry under verified hypotheses")
    return ok


@dataclass
class ExchangeSequence:
    """0 -> X -> N_1 -> N_0 -> X -> 0 spliced from two add(N)-split sequences."""

    first: ShortExact
    second: ShortExact
    kernel: Module
    checks: dict[str, bool]

    @property
    def maps(self) -> list[Morphism]:
        return [self.second.f, self.second.g.then(self.first.f), self.first.g]

    @property
    def terms(self) -> list[Module]:
        return [self.second.left, self.second.middle, self.first.middle, self.first.right]


def exchange_sequence(M: AddSet, X, catalogue: IndecCatalogue) -> ExchangeSequence:
    """The exchange sequence of a maximal 1-ortho-symmetric module at a summand
    fixed by τ_2.  ``X`` may be a τ_2-stable sum of indecomposable summands.

    Raises:
        PreconditionFailed: M is not maximal 1-ortho-symmetric, X is projective
            or injective, or τ_2 X is not isomorphic to X.
    """
    N, pivot = _split(M, X)
    A = M.algebra
    Xm = pivot.module()
    proj = projective_ids(A)
    inj = injective_ids(A)
    if any(id(R) in proj or id(R) in inj for R in pivot):
        raise PreconditionFailed("X must be neither projective nor injective")
    if not _same_add(tau_higher(Xm, 1), Xm):
        raise PreconditionFailed("τ_2 X must be isomorphic to X")
    if not is_maximal(M, 1, "orthosymmetric", catalogue):
        raise PreconditionFailed("M must be maximal 1-ortho-symmetric")
    g = right_approx(N, Xm)
    K = g.complement
    first = ShortExact(g.complement_map, g.map)
    h = right_approx(N, K)
    second = ShortExact(h.complement_map, h.map)
    mu = mutate_right(M, pivot)
    back = mutate_right(N.union(AddSet.of(K)), AddSet.of(K)) if K.dim else None
    checks = {
        "first_exact": first.is_exact(),
        "second_exact": second.is_exact(),
        "first_split": is_add_split_sequence((first.f, first.g), N),
        "second_split": is_add_split_sequence((second.f, second.g), N),
        "kernel_is_X": _same_add(h.complement, Xm) and len(decompose(h.complement)) == len(pivot),
        "mutation_is_K_plus_N": add_equal(mu.output, N.union(AddSet.of(K))) if K.dim else False,
        "round_trip": back is not None and add_equal(back.output, M),
    }
    return ExchangeSequence(first, second, K, checks)
