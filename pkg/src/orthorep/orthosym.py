"""Decision procedures for rigidity, ortho-symmetry and the homological
dimensions of End(M), all computed on the side of the base algebra."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Iterable

from .algebra import Algebra
from .ar import m_minus, m_plus, nakayama_functor, tau_higher, tau_higher_minus
from .decompose import AddSet, add_equal, canonical, decompose, is_isomorphic
from .errors import (
    CatalogueRequired,
    InternalInconsistency,
    NotSelfInjective,
    PeriodicityFailed,
    PreconditionFailed,
)
from .homological import (
    ext_dim,
    injective_ids,
    is_injective,
    is_projective,
    projective_ids,
    strip_projective,
    syzygy,
)
from .module import Module, regular_module
from .relative import (
    Approximation,
    Finite,
    ResolutionVerdict,
    is_cogenerator,
    is_generator,
    left_approx,
    m_coresdim,
    m_resdim,
    rel_syzygy,
    right_approx,
    verdict_json,
)

REPORT_VERSION = 1
DEFAULT_CAP = 32


@dataclass(frozen=True)
class AtLeast:
    """A lower bound reached at the search cap."""

    value: int

    def __str__(self) -> str:
        return f"AtLeast({self.value})"


@dataclass
class IndecCatalogue:
    """Every indecomposable of a representation-finite algebra, with labels."""

    algebra: Algebra
    modules: list[Module]
    labels: list[str]

    def __post_init__(self):
        self.modules = [canonical(X) for X in self.modules]
        if len({id(X) for X in self.modules}) != len(self.modules):
            raise ValueError("catalogue members must be pairwise non-isomorphic")
        self.algebra.cache["catalogue_size"] = len(self.modules)
        self._label = {id(X): lab for X, lab in zip(self.modules, self.labels)}

    @classmethod
    def from_bridge(cls, bridge) -> "IndecCatalogue":
        mods = bridge.catalogue()
        return cls(bridge.algebra, mods, [str(bridge.label_of(X)) for X in mods])

    @classmethod
    def from_modules(cls, modules: Iterable[Module]) -> "IndecCatalogue":
        mods = list(modules)
        if not mods:
            raise ValueError("empty catalogue")
        labels = [X.name or f"X{k}" for k, X in enumerate(mods)]
        return cls(mods[0].algebra, mods, labels)

    def __iter__(self):
        return iter(self.modules)

    def __len__(self) -> int:
        return len(self.modules)

    def label(self, X: Module) -> str:
        return self._label.get(id(canonical(X)), repr(X))

    def sort(self, mods: Iterable[Module]) -> list[Module]:
        order = {id(X): k for k, X in enumerate(self.modules)}
        return sorted(mods, key=lambda X: order.get(id(X), len(order)))


def _need(catalogue: IndecCatalogue | None) -> IndecCatalogue:
    if catalogue is None:
        raise CatalogueRequired("this test enumerates indecomposables and needs a catalogue")
    return catalogue


# -- rigidity -----------------------------------------------------------------------

def _ext_between(S: Iterable[Module], T: Iterable[Module], i: int) -> bool:
    T = list(T)
    return any(ext_dim(X, Y, i) != 0 for X in S for Y in T)


def rigidity_degree(M: AddSet, cap: int = DEFAULT_CAP) -> int | AtLeast:
    """Largest n <= cap with Ext^i(M, M) = 0 for 1 <= i <= n."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    for i in range(1, cap + 1):
        if _ext_between(M, M, i):
            return i - 1
    return AtLeast(cap)


def is_n_rigid(M: AddSet, n: int) -> bool:
    return all(not _ext_between(M, M, i) for i in range(1, n + 1))


def dominant_dim_lower(M: AddSet, cap: int = DEFAULT_CAP, assume_mueller_exact: bool = False) -> int:
    """Lower bound rigidity + 2 for the dominant dimension of End(M).

    With ``assume_mueller_exact`` the same number is meant as the exact value.
    A rigidity search that hits the cap yields the sentinel cap + 2.
    """
    r = rigidity_degree(M, cap)
    return (r.value if isinstance(r, AtLeast) else r) + 2


# -- perpendicular categories ---------------------------------------------------------

def in_left_perp(X: Module, M: AddSet, p: int) -> bool:
    """Ext^i(X, M) = 0 for 1 <= i <= p."""
    return all(ext_dim(X, S, i) == 0 for i in range(1, p + 1) for S in M)


def in_right_perp(X: Module, M: AddSet, q: int) -> bool:
    """Ext^i(M, X) = 0 for 1 <= i <= q."""
    return all(ext_dim(S, X, i) == 0 for i in range(1, q + 1) for S in M)


def perp_intersection(M: AddSet, p: int, q: int, catalogue: IndecCatalogue) -> list[Module]:
    """Catalogue members in the left p-perpendicular and right q-perpendicular of M."""
    return [X for X in catalogue if in_left_perp(X, M, p) and in_right_perp(X, M, q)]


def _ids(mods: Iterable[Module]) -> frozenset[int]:
    return frozenset(id(X) for X in mods)


def is_nm_orthosymmetric(M: AddSet, n: int, m: int, catalogue: IndecCatalogue | None) -> bool:
    """Literal comparison of the two perpendicular intersections over the catalogue."""
    cat = _need(catalogue)
    if not (is_n_rigid(M, n) and is_generator(M) and is_cogenerator(M)):
        return False
    return _ids(perp_intersection(M, n, m, cat)) == _ids(perp_intersection(M, m, n, cat))


# -- reports ------------------------------------------------------------------------

@dataclass
class OrthoReport:
    module: AddSet
    n: int
    m: int
    is_rigid_to_n: bool
    is_gen: bool
    is_cogen: bool
    ortho_symmetric: bool
    method: str
    gorenstein: tuple[ResolutionVerdict, ResolutionVerdict] | None
    domdim_lower: int
    reason: str = ""
    plus: AddSet | None = None
    minus: AddSet | None = None

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "module": self.module.labels(),
            "n": self.n,
            "m": self.m,
            "is_rigid_to_n": self.is_rigid_to_n,
            "is_gen": self.is_gen,
            "is_cogen": self.is_cogen,
            "ortho_symmetric": self.ortho_symmetric,
            "method": self.method,
            "gorenstein": None
            if self.gorenstein is None
            else {"left": verdict_json(self.gorenstein[0]), "right": verdict_json(self.gorenstein[1])},
            "domdim_lower": self.domdim_lower,
            "reason": self.reason,
        }


def _is_self_injective(A: Algebra) -> bool:
    return projective_ids(A) == injective_ids(A)


def is_n_orthosymmetric(M: AddSet, n: int, cutoff: int | None = None) -> OrthoReport:
    """Decide n-ortho-symmetry by comparing add(M) with add(τ_{n+1} M ⊕ D A)."""
    rigid = is_n_rigid(M, n)
    gen, cogen = is_generator(M), is_cogenerator(M)
    domdim = dominant_dim_lower(M)
    report = OrthoReport(M, n, 0, rigid, gen, cogen, False, "tau-criterion", None, domdim)
    missing = [name for name, ok in (("n-rigid", rigid), ("generator", gen), ("cogenerator", cogen)) if not ok]
    if missing:
        report.reason = "not " + ", not ".join(missing)
        return report
    plus = m_plus(M, n)
    report.plus = plus
    report.minus = m_minus(M, n)
    report.ortho_symmetric = add_equal(M, plus)
    if is_projective(M.module()):
        # A self-injective and add(M) = add(A): End(M) is self-injective.
        report.gorenstein = (Finite(0), Finite(0))
        report.reason = "add(M) = add(A) over a self-injective algebra"
    else:
        report.gorenstein = gorenstein_dims_of_end(M, n, cutoff)
    if not report.ortho_symmetric:
        report.reason = report.reason or "add(M) differs from add(M+)"
    return report


def gorenstein_dims_of_end(
    M: AddSet, n: int, cutoff: int | None = None, allow_selfinjective: bool = False
) -> tuple[ResolutionVerdict, ResolutionVerdict]:
    """Injective dimensions of End(M) on both sides from relative (co)resolutions.

    left = n + 2 + M-coresdim(M⁻), right = n + 2 + M-resdim(M⁺).

    Raises:
        PreconditionFailed: M is not an n-rigid generator-cogenerator, or M is
            projective or injective (unless ``allow_selfinjective`` covers the
            case add(M) = add(A) over a self-injective algebra).
    """
    if not (is_generator(M) and is_cogenerator(M)):
        raise PreconditionFailed("M must be a generator-cogenerator")
    if not is_n_rigid(M, n):
        raise PreconditionFailed(f"M is not {n}-rigid")
    V = M.module()
    if is_projective(V) or is_injective(V):
        if allow_selfinjective and _is_self_injective(M.algebra) and is_projective(V):
            return Finite(0), Finite(0)
        raise PreconditionFailed("M must be neither projective nor injective")
    minus = m_minus(M, n)
    plus = m_plus(M, n)
    left = m_coresdim(M, minus.module(), cutoff).shifted(n + 2)
    right = m_resdim(M, plus.module(), cutoff).shifted(n + 2)
    return left, right


# -- relative Gorenstein projectives ---------------------------------------------------

def _orbit_closure(M: AddSet, X: Module, k: int) -> list[Module]:
    """Indecomposable classes reachable from X by iterating Ω_M^{k}, k = ±1."""
    seen = {id(X): X}
    frontier = [X]
    while frontier:
        nxt = []
        for Y in frontier:
            Z = rel_syzygy(M, Y, k)
            if Z.dim == 0:
                continue
            for R, _ in decompose(Z):
                if id(R) not in seen:
                    seen[id(R)] = R
                    nxt.append(R)
        frontier = nxt
    return list(seen.values())


def g_category(M: AddSet, n: int, catalogue: IndecCatalogue | None) -> list[Module]:
    """Members X of the catalogue with Ω_M^i X in the left n-perpendicular of M and
    Ω_M^{-i} X in the right n-perpendicular for all i >= 0."""
    cat = _need(catalogue)
    if not (is_generator(M) and is_cogenerator(M) and is_n_rigid(M, n)):
        raise PreconditionFailed("M must be an n-rigid generator-cogenerator")
    out = []
    for X in cat:
        if M.contains(X):
            out.append(X)
            continue
        if not all(in_left_perp(Y, M, n) for Y in _orbit_closure(M, X, 1)):
            continue
        if all(in_right_perp(Y, M, n) for Y in _orbit_closure(M, X, -1)):
            out.append(X)
    return out


# -- global dimension --------------------------------------------------------------------

@dataclass
class GldimTest:
    holds: bool
    conditions: dict[str, bool]
    violations: dict[str, list[Module]] = dc_field(default_factory=dict)


def gldim_conditions(M: AddSet, n: int, catalogue: IndecCatalogue | None) -> GldimTest:
    """Evaluate every equality ⊥pM ∩ M^⊥q = add(M) with p + q = n + 1, p, q >= 1,
    along with the two extreme forms (p, q) = (n, 1) and (1, n)."""
    cat = _need(catalogue)
    if not (is_generator(M) and is_cogenerator(M) and is_n_rigid(M, n)):
        raise PreconditionFailed("M must be an n-rigid generator-cogenerator")
    add_ids = _ids(X for X in cat if M.contains(X))
    pairs = {(n, 1), (1, n)} | {(p, n + 1 - p) for p in range(1, n + 1)}
    conditions, violations = {}, {}
    for p, q in sorted(pairs):
        members = perp_intersection(M, p, q, cat)
        extra = [X for X in members if id(X) not in add_ids]
        conditions[f"{p},{q}"] = not extra
        violations[f"{p},{q}"] = extra
    values = set(conditions.values())
    if len(values) != 1:
        raise InternalInconsistency(f"perpendicular conditions disagree: {conditions}")
    return GldimTest(values.pop(), conditions, violations)


def gldim_le_test(M: AddSet, n: int, catalogue: IndecCatalogue | None) -> bool:
    """gldim End(M) <= n + 3, decided by the perpendicular-intersection conditions.

    Raises:
        CatalogueRequired: no catalogue was supplied.
        InternalInconsistency: the equivalent conditions evaluate differently.
    """
    return gldim_conditions(M, n, catalogue).holds


# -- maximality -------------------------------------------------------------------------

def _tau_orbit(X: Module, n: int, limit: int) -> list[Module]:
    """Indecomposable summands reachable from X under τ_{n+1} and τ⁻_{n+1}."""
    seen = {id(X): X}
    frontier = [X]
    while frontier and len(seen) <= limit:
        nxt = []
        for Y in frontier:
            for Z in (tau_higher(Y, n), tau_higher_minus(Y, n)):
                if Z.dim == 0:
                    continue
                for R, _ in decompose(Z):
                    if id(R) not in seen:
                        seen[id(R)] = R
                        nxt.append(R)
        frontier = nxt
    return list(seen.values())


def is_maximal(M: AddSet, n: int, kind: str, catalogue: IndecCatalogue | None) -> bool:
    """Whether add(M) cannot be properly enlarged inside the catalogue keeping the property.

    ``kind`` is "rigid" or "orthosymmetric".  For "rigid" each indecomposable X
    outside add(M) is tried alone.  For "orthosymmetric" X is added together with
    its τ_{n+1}-orbit, since a single summand of a longer orbit can never give an
    ortho-symmetric module on its own.
    """
    cat = _need(catalogue)
    if kind not in ("rigid", "orthosymmetric"):
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "rigid" and not is_n_rigid(M, n):
        return False
    if kind == "orthosymmetric" and not is_n_orthosymmetric(M, n).ortho_symmetric:
        return False
    for X in cat:
        if M.contains(X):
            continue
        rigid = all(
            ext_dim(X, X, i) == 0 and not _ext_between([X], M, i) and not _ext_between(M, [X], i)
            for i in range(1, n + 1)
        )
        if not rigid:
            continue
        if kind == "rigid":
            return False
        orbit = _tau_orbit(X, n, len(cat))
        if is_n_rigid(M.union(AddSet.of(*orbit)), n) and is_n_orthosymmetric(
            M.union(AddSet.of(*orbit)), n
        ).ortho_symmetric:
            return False
    return True


# -- self-injective constructions ---------------------------------------------------------

def weakly_cy_degree(A: Algebra, cap: int, catalogue: IndecCatalogue | None) -> int | None:
    """Least m in 1..cap with Ω^{m+1} ν X ≅ X for all non-projective catalogue members.

    Only iso-classes are compared, not natural isomorphisms of functors.

    Raises:
        NotSelfInjective: A is not self-injective.
    """
    cat = _need(catalogue)
    if not _is_self_injective(A):
        raise NotSelfInjective("weak Calabi-Yau degrees need a self-injective algebra")
    proj = projective_ids(A)
    good = set(range(1, cap + 1))
    for X in cat:
        if id(X) in proj:
            continue
        Y = nakayama_functor(X)
        hits = set()
        for k in range(1, cap + 2):
            Y = syzygy(Y, 1)
            if Y.dim and len(decompose(Y)) == 1 and decompose(Y)[0][0] is X and decompose(Y)[0][1] == 1:
                hits.add(k - 1)
        good &= hits
        if not good:
            return None
    return min(good) if good else None


@dataclass
class OrbitModule:
    module: AddSet
    shifts: list[Module]
    criterion: bool
    failures: list[tuple[int, int]]

    @property
    def ortho_symmetric(self) -> bool:
        return self.criterion


def _same_classes(X: Module, Y: Module) -> bool:
    dx = [(id(R), m) for R, m in decompose(X)] if X.dim else []
    dy = [(id(R), m) for R, m in decompose(Y)] if Y.dim else []
    return sorted(dx) == sorted(dy)


def _nu_power(X: Module, t: int) -> Module:
    for _ in range(t):
        X = nakayama_functor(X)
    return X


def orbit_module(A: Algebra, M: Module, n: int, q: int) -> OrbitModule:
    """A ⊕ ⊕_{j<q} Ω^{(n+2)j} ν^j M, with n-ortho-symmetry decided by the
    vanishing of Ext^{s+(n+2)t}(ν^t M, M) for 1 <= s <= n, 0 <= t < q.

    Raises:
        NotSelfInjective: A is not self-injective.
        PeriodicityFailed: Ω^{(n+2)q} ν^q M is not isomorphic to M.
    """
    if not _is_self_injective(A):
        raise NotSelfInjective("orbit constructions need a self-injective algebra")
    if q < 1:
        raise ValueError("q must be positive")
    M = strip_projective(M)
    Areg = regular_module(A)
    if M.dim == 0:
        return OrbitModule(AddSet.of(Areg), [], True, [])
    if any(m > 1 for _, m in decompose(M)):
        raise PreconditionFailed("M must be basic")
    if not _same_classes(syzygy(_nu_power(M, q), (n + 2) * q), M):
        raise PeriodicityFailed(f"Ω^{(n + 2) * q} ν^{q} M is not isomorphic to M")
    shifts = [syzygy(_nu_power(M, j), (n + 2) * j) for j in range(q)]
    failures = []
    for t in range(q):
        source = _nu_power(M, t)
        for s in range(1, n + 1):
            if _ext_between([source], [M], s + (n + 2) * t):
                failures.append((s, t))
    return OrbitModule(AddSet.of(Areg, *shifts), shifts, not failures, failures)


# -- Gorenstein symmetry for almost ortho-symmetric modules ----------------------------------

@dataclass
class GscReport:
    left: ResolutionVerdict
    right: ResolutionVerdict
    consistent: bool
    left_witness: list[Module] | None = None
    right_witness: list[Module] | None = None
    witness_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "left": verdict_json(self.left),
            "right": verdict_json(self.right),
            "consistent": self.consistent,
            "witness_ok": self.witness_ok,
        }


def _chain(V: AddSet, start: Module, steps: int, side: str) -> tuple[list[Module], Module]:
    terms = []
    current = start
    for _ in range(steps):
        appr: Approximation = left_approx(V, current) if side == "left" else right_approx(V, current)
        terms.append(appr.object)
        current = appr.complement
    return terms, current


def gsc_check_almost(M: AddSet, X: Module, n: int, cutoff: int | None = None) -> GscReport:
    """Both Gorenstein dimensions of End(M ⊕ X) must be finite together and agree.

    When they are finite, n + 2 + m, the two long exact sequences through add(M)
    from τ⁻_{n+1} X to X and from X to τ_{n+1} X are rebuilt from iterated
    approximations by add(M ⊕ X) and checked.

    Raises:
        PreconditionFailed: the almost ortho-symmetric hypotheses fail.
    """
    if not is_n_orthosymmetric(M, n).ortho_symmetric:
        raise PreconditionFailed("M must be n-ortho-symmetric")
    parts = decompose(X) if X.dim else []
    if len(parts) != 1 or parts[0][1] != 1:
        raise PreconditionFailed("X must be indecomposable")
    X = parts[0][0]
    if M.contains(X):
        raise PreconditionFailed("X must not lie in add(M)")
    V = M.union(AddSet.of(X))
    if not is_n_rigid(V, n):
        raise PreconditionFailed("M ⊕ X must be n-rigid")
    tX = tau_higher(X, n)
    if tX.dim and _same_classes(tX, X):
        raise PreconditionFailed("X is fixed by the higher translate; use is_n_orthosymmetric")
    left, right = gorenstein_dims_of_end(V, n, cutoff)
    both_finite = isinstance(left, Finite) and isinstance(right, Finite)
    neither = not isinstance(left, Finite) and not isinstance(right, Finite)
    consistent = (both_finite and left.value == right.value) or neither
    report = GscReport(left, right, consistent)
    if both_finite and consistent:
        m = left.value - n - 2
        lterms, lend = _chain(V, tau_higher_minus(X, n), m, "left")
        rterms, rend = _chain(V, tX, m, "right")
        report.left_witness = lterms
        report.right_witness = rterms
        report.witness_ok = (
            _same_classes(lend, X)
            and _same_classes(rend, X)
            and all(all(M.contains(R) for R, _ in decompose(T)) for T in lterms + rterms if T.dim)
        )
    return report


def almost_selfinjective_check(X: Module, cutoff: int | None = None) -> dict:
    """For self-injective A and indecomposable non-projective X: if End(A ⊕ X) has
    finite injective dimension s, then A ⊕ X is (s-2)-ortho-symmetric."""
    A = X.algebra
    if not _is_self_injective(A):
        raise NotSelfInjective("needs a self-injective algebra")
    V = AddSet.of(regular_module(A), X)
    r = rigidity_degree(V)
    n = r.value if isinstance(r, AtLeast) else r
    left, right = gorenstein_dims_of_end(V, n, cutoff)
    out = {"n": n, "left": left, "right": right, "ortho_symmetric": None}
    if isinstance(left, Finite):
        out["ortho_symmetric"] = is_n_orthosymmetric(V, left.value - 2).ortho_symmetric
    return out


def tau_fixed(X: Module, n: int) -> bool:
    return is_isomorphic(tau_higher(X, n), X)
