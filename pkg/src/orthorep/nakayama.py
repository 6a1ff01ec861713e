"""Closed-form combinatorics for the symmetric Nakayama algebras A_{e,ae+1}.

Indecomposables are the uniserial modules L(i, t) with top S_i and length t.
Everything here is pure integer arithmetic; ``bridge`` links each L(i, t) to
an explicit representation so the generic engine can be used as an oracle.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Iterable

import networkx as nx

from .algebra import Algebra, NakayamaParams, nakayama_algebra
from .decompose import register
from .errors import OutOfRange, ParamsMismatch, SearchBudgetExceeded
from .field import Field, make_field
from .module import Module


@dataclass(frozen=True, order=True)
class NakIndec:
    """The uniserial module L(i, t) over A_{e,ae+1}."""

    i: int
    t: int
    e: int
    a: int

    def __post_init__(self):
        b = self.a * self.e + 1
        if not 1 <= self.t <= b:
            raise OutOfRange(f"length {self.t} outside 1..{b}")
        if not 0 <= self.i < self.e:
            object.__setattr__(self, "i", self.i % self.e)

    @property
    def b(self) -> int:
        return self.a * self.e + 1

    @property
    def params(self) -> NakayamaParams:
        return NakayamaParams(self.e, self.a)

    @property
    def projective(self) -> bool:
        return self.t == self.b

    @property
    def label(self) -> str:
        return f"L({self.i},{self.t})"

    def __str__(self) -> str:
        return self.label


def L(i: int, t: int, params: NakayamaParams | tuple[int, int]) -> NakIndec:
    e, a = (params.e, params.a) if isinstance(params, NakayamaParams) else params
    return NakIndec(i % e, t, e, a)


def _check(x: NakIndec, y: NakIndec) -> None:
    if (x.e, x.a) != (y.e, y.a):
        raise ParamsMismatch("modules over different Nakayama algebras")


def all_indecomposables(params: NakayamaParams | tuple[int, int], projective: bool = True) -> list[NakIndec]:
    e, a = (params.e, params.a) if isinstance(params, NakayamaParams) else params
    b = a * e + 1
    top = b if projective else b - 1
    return [NakIndec(i, t, e, a) for t in range(1, top + 1) for i in range(e)]


def nak_syzygy(x: NakIndec, k: int = 1) -> NakIndec | None:
    """k-th stable syzygy (negative k: cosyzygy); None stands for the zero module."""
    if x.projective:
        return None
    i, t, e, b = x.i, x.t, x.e, x.b
    if k >= 0:
        for _ in range(k):
            i, t = (i + t) % e, b - t
    else:
        for _ in range(-k):
            i, t = (i - (b - t)) % e, b - t
    return NakIndec(i, t, x.e, x.a)


def nak_hom_dim(x: NakIndec, y: NakIndec) -> int:
    """Count image lengths u: quotient L(i_x, u) of x equal to a submodule of y."""
    _check(x, y)
    target = (y.i + y.t - x.i) % x.e
    return sum(1 for u in range(1, min(x.t, y.t) + 1) if u % x.e == target)


def nak_stable_hom_dim(x: NakIndec, y: NakIndec) -> int:
    """Hom modulo maps through projectives: image length u must exceed t_x + t_y - b."""
    _check(x, y)
    if x.projective or y.projective:
        return 0
    target = (y.i + y.t - x.i) % x.e
    low = max(1, x.t + y.t - x.b + 1)
    return sum(1 for u in range(low, min(x.t, y.t) + 1) if u % x.e == target)


def nak_ext_dim(x: NakIndec, y: NakIndec, i: int) -> int:
    """Ext^i(x, y) as the stable Hom from the i-th syzygy of x (A is self-injective)."""
    if i < 1:
        raise ValueError("Ext degree must be positive")
    _check(x, y)
    s = nak_syzygy(x, i)
    if s is None or y.projective:
        return 0
    return nak_stable_hom_dim(s, y)


def rigidity(mods: Iterable[NakIndec], cap: int) -> int:
    """Largest n <= cap with Ext^j vanishing among the given modules for 1 <= j <= n."""
    mods = list(mods)
    for j in range(1, cap + 1):
        if any(nak_ext_dim(x, y, j) for x in mods for y in mods):
            return j - 1
    return cap


def dd(x: NakIndec) -> int:
    """Maximal rigidity degree of L(i, t), computed from Ext vanishing.

    Ω has period 2e on iso-classes, so Ext^{2e}(x, x) is the nonzero stable
    endomorphism space and the search stops before it.
    """
    if x.projective:
        raise OutOfRange("dd is defined for non-projective modules")
    return rigidity([x], 2 * x.e)


def dd_table(e: int, a: int, t: int) -> int:
    """The piecewise closed form of the maximal rigidity degree."""
    if a < 2 or not 1 <= t <= a * e:
        raise OutOfRange(f"dd table needs a >= 2 and 1 <= t <= ae (got a={a}, t={t})")
    if t == 1 or t == a * e:
        return 2 * e - 2
    if 2 <= t <= e - 1 or (a - 1) * e + 2 <= t <= a * e - 1:
        return 1
    return 0


def syzygy_orbit_formulas_check(q: int, a: int) -> bool:
    """Check the closed forms of Ω^{3j+1} L(0,1) and Ω^{3j+1} L(0,2) for 1 <= j <= 2q."""
    e = 3 * q
    b = e * a + 1
    for j in range(1, 2 * q + 1):
        p, odd = (j + 1) // 2, j % 2 == 1
        want1 = L(3 * p - 1, 1, (e, a)) if odd else L(3 * p + 1, b - 1, (e, a))
        want2 = L(3 * p - 1, 2, (e, a)) if odd else L(3 * p + 2, b - 2, (e, a))
        if nak_syzygy(L(0, 1, (e, a)), 3 * j + 1) != want1:
            return False
        if nak_syzygy(L(0, 2, (e, a)), 3 * j + 1) != want2:
            return False
    return True


# -- orbits --------------------------------------------------------------------------

def orbit(x: NakIndec) -> tuple[NakIndec, ...]:
    """The Ω³-orbit of x, sorted; has 2q members when e = 3q."""
    out = {x}
    y = nak_syzygy(x, 3)
    while y not in out:
        out.add(y)
        y = nak_syzygy(y, 3)
    return tuple(sorted(out))


def all_orbits(params: NakayamaParams | tuple[int, int]) -> list[tuple[NakIndec, ...]]:
    seen: set = set()
    out = []
    for x in all_indecomposables(params, projective=False):
        if x not in seen:
            o = orbit(x)
            seen.update(o)
            out.append(o)
    return out


def shift_canonical(mods: Iterable[NakIndec]) -> tuple[tuple[int, int], ...]:
    mods = list(mods)
    if not mods:
        return ()
    e = mods[0].e
    best = None
    for k in range(2 * e):
        key = tuple(sorted((y.i, y.t) for y in (nak_syzygy(x, k) for x in mods)))
        if best is None or key < best:
            best = key
    return best


@dataclass
class ClassificationReport:
    e: int
    a: int
    kind: str
    pruned: bool
    candidates: int
    valid: int
    classes: list[list[str]]
    witnesses: dict = dc_field(default_factory=dict)
    seconds: float = 0.0
    members: list[tuple[tuple[int, int], ...]] = dc_field(default_factory=list)
    valid_sets: list[tuple[tuple[int, int], ...]] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "algebra": f"A_{{{self.e},{self.a * self.e + 1}}}",
            "kind": self.kind,
            "pruned": self.pruned,
            "candidates": self.candidates,
            "valid": self.valid,
            "classes": [["A"] + c for c in self.classes],
            "rejection_witnesses": self.witnesses,
            "seconds": round(self.seconds, 3),
        }


def _ext1_conflict(x: NakIndec, y: NakIndec) -> tuple[str, str] | None:
    if nak_ext_dim(x, y, 1):
        return (x.label, y.label)
    if nak_ext_dim(y, x, 1):
        return (y.label, x.label)
    return None


def classify(
    q: int,
    a: int,
    kind: str = "max-1-orthosymmetric",
    pruned: bool = True,
    budget: int | None = None,
    witness_limit: int = 64,
) -> ClassificationReport:
    """Exhaustive search for maximal 1-ortho-symmetric or maximal 1-rigid modules over A_{3q,3qa+1}.

    Candidates containing A are encoded as sets of non-projective summands.
    Results are reported up to syzygy shift.

    Raises:
        SearchBudgetExceeded: more than ``budget`` candidates would be examined.
    """
    if q < 1 or a < 2:
        raise OutOfRange("classification needs q >= 1 and a >= 2")
    start = time.perf_counter()
    e = 3 * q
    params = (e, a)
    if kind == "max-1-orthosymmetric":
        report = _classify_orbit_unions(params, pruned, budget, witness_limit)
    elif kind == "max-1-rigid":
        report = _classify_rigid(params, budget, witness_limit)
    else:
        raise ValueError(f"unknown classification kind {kind!r}")
    report.seconds = time.perf_counter() - start
    return report


def _classify_orbit_unions(params, pruned: bool, budget, witness_limit: int) -> ClassificationReport:
    e, a = params
    orbits = all_orbits(params)
    if pruned:
        # An orbit alternates lengths t and b - t, and a 1-rigid orbit has a
        # member of length 1 or 2.
        orbits = [o for o in orbits if any(x.t <= 2 for x in o)]
    n = len(orbits)
    total = 1 << n
    if budget is not None and total > budget:
        raise SearchBudgetExceeded(f"{total} candidates exceed the budget {budget}", budget / total)
    conflict: dict[tuple[int, int], tuple[str, str]] = {}
    self_ok = []
    for k, o in enumerate(orbits):
        w = next((c for x in o for y in o if (c := _ext1_conflict(x, y))), None)
        self_ok.append(w is None)
        if w:
            conflict[(k, k)] = w
    compat = [0] * n
    for k in range(n):
        for m in range(n):
            if k == m:
                continue
            w = next((c for x in orbits[k] for y in orbits[m] if (c := _ext1_conflict(x, y))), None)
            if w is None:
                compat[k] |= 1 << m
            else:
                conflict[(k, m)] = w
    good = 0
    for k in range(n):
        if self_ok[k]:
            good |= 1 << k
    valid = []
    witnesses: dict[str, list[str]] = {}
    for mask in range(total):
        bad = mask & ~good
        if bad:
            if len(witnesses) < witness_limit:
                k = (bad & -bad).bit_length() - 1
                witnesses[_mask_label(orbits, mask)] = list(conflict[(k, k)])
            continue
        ok = True
        m = mask
        while m:
            k = (m & -m).bit_length() - 1
            others = mask & ~(1 << k)
            if others & ~compat[k]:
                if len(witnesses) < witness_limit:
                    j = ((others & ~compat[k]) & -(others & ~compat[k])).bit_length() - 1
                    witnesses[_mask_label(orbits, mask)] = list(conflict[(k, j)])
                ok = False
                break
            m &= m - 1
        if ok:
            valid.append(mask)
    valid_set = set(valid)
    maximal = [m for m in valid if not any((m | (1 << k)) in valid_set for k in range(n) if not m >> k & 1)]
    classes = sorted({shift_canonical(x for k in range(n) if m >> k & 1 for x in orbits[k]) for m in maximal})
    valid_sets = [tuple(sorted((x.i, x.t) for k in range(n) if m >> k & 1 for x in orbits[k])) for m in valid]
    return ClassificationReport(
        e, a, "max-1-orthosymmetric", pruned, total, len(valid),
        [[f"L({i},{t})" for i, t in c] for c in classes], witnesses,
        members=list(classes), valid_sets=valid_sets,
    )


def _mask_label(orbits, mask: int) -> str:
    parts = [orbits[k][0].label for k in range(len(orbits)) if mask >> k & 1]
    return "A" + "".join(f"+O[{p}]" for p in parts)


def _classify_rigid(params, budget, witness_limit: int) -> ClassificationReport:
    e, a = params
    mods = [x for x in all_indecomposables(params, projective=False)]
    rigid = [x for x in mods if not nak_ext_dim(x, x, 1)]
    witnesses = {f"A+{x.label}": [x.label, x.label] for x in mods if nak_ext_dim(x, x, 1)}
    G = nx.Graph()
    G.add_nodes_from(rigid)
    for x, y in itertools.combinations(rigid, 2):
        if _ext1_conflict(x, y) is None:
            G.add_edge(x, y)
    cliques = []
    for c in nx.find_cliques(G):
        cliques.append(c)
        if budget is not None and len(cliques) > budget:
            raise SearchBudgetExceeded("too many maximal rigid candidates", 0.0)
    classes = sorted({shift_canonical(c) for c in cliques})
    return ClassificationReport(
        e, a, "max-1-rigid", False, len(cliques), len(cliques),
        [[f"L({i},{t})" for i, t in c] for c in classes], dict(list(witnesses.items())[:witness_limit]),
        members=list(classes),
        valid_sets=[tuple(sorted((x.i, x.t) for x in c)) for c in cliques],
    )


def orbit_union(params, *tops: tuple[int, int]) -> list[NakIndec]:
    """Members of the orbits of the listed L(i, t), deduplicated and sorted."""
    out: set = set()
    for i, t in tops:
        out.update(orbit(L(i, t, params)))
    return sorted(out)


# -- bridge to the generic engine -------------------------------------------------------

@dataclass
class Bridge:
    algebra: Algebra
    params: NakayamaParams
    modules: dict[tuple[int, int], Module]

    def __call__(self, x: NakIndec | tuple[int, int]) -> Module:
        if isinstance(x, NakIndec):
            x = (x.i, x.t)
        i, t = x
        return self.modules[(i % self.params.e, t)]

    def label_of(self, X: Module) -> NakIndec | None:
        for (i, t), M in self.modules.items():
            if M is X:
                return NakIndec(i, t, self.params.e, self.params.a)
        return None

    def catalogue(self) -> list[Module]:
        return list(self.modules.values())


_BRIDGES: dict = {}


def uniserial(A: Algebra, e: int, i: int, t: int) -> Module:
    """L(i, t) as a representation: a chain of one-dimensional pieces along the cycle."""
    f = A.field
    dims = [0] * e
    slots = []
    for k in range(t):
        v = (i + k) % e
        slots.append((v, dims[v]))
        dims[v] += 1
    maps = [f.zeros((dims[(v + 1) % e], dims[v])) for v in range(e)]
    for k in range(t - 1):
        v, row = slots[k]
        _, col = slots[k + 1]
        maps[v][col, row] = 1
    return Module(A, dims, maps, name=f"L({i},{t})")


def bridge(params: NakayamaParams | tuple[int, int], field: Field | str | int | None = None) -> Bridge:
    """Generic-engine algebra plus explicit uniserial modules, shared per parameters."""
    if not isinstance(params, NakayamaParams):
        params = NakayamaParams(*params)
    fld = make_field(field)
    key = (params.e, params.a, fld.descriptor)
    if key in _BRIDGES:
        return _BRIDGES[key]
    A = nakayama_algebra(params, fld)
    mods = {}
    for t in range(1, params.b + 1):
        for i in range(params.e):
            mods[(i, t)] = register(uniserial(A, params.e, i, t))
    A.cache["catalogue_size"] = len(mods)
    br = Bridge(A, params, mods)
    A.cache["bridge"] = br
    _BRIDGES[key] = br
    return br
