import pytest
from conftest import with_regular

from orthorep.algebra import Quiver, path_algebra
from orthorep.ar import m_minus, m_plus
from orthorep.decompose import AddSet, add_equal
from orthorep.errors import (
    CatalogueRequired,
    NotSelfInjective,
    PeriodicityFailed,
    PreconditionFailed,
)
from orthorep.module import regular_module, simple
from orthorep.nakayama import all_indecomposables, bridge
from orthorep.orthosym import (
    AtLeast,
    IndecCatalogue,
    almost_selfinjective_check,
    dominant_dim_lower,
    g_category,
    gldim_conditions,
    gldim_le_test,
    gorenstein_dims_of_end,
    gsc_check_almost,
    is_maximal,
    is_n_orthosymmetric,
    is_n_rigid,
    is_nm_orthosymmetric,
    orbit_module,
    perp_intersection,
    rigidity_degree,
    tau_fixed,
    weakly_cy_degree,
)
from orthorep.relative import (
    Finite,
    UnknownAtCutoff,
    is_cogenerator,
    is_generator,
    m_coresdim,
    m_resdim,
)


def ids(mods):
    return {id(X) for X in mods}


def add_members(M, cat):
    return ids(X for X in cat if M.contains(X))


def test_rigidity_degree(a37):
    B, _ = a37
    assert rigidity_degree(with_regular(B, (0, 1))) == 4
    assert rigidity_degree(with_regular(B, (0, 3))) == 0
    assert rigidity_degree(AddSet.of(regular_module(B.algebra)), cap=5) == AtLeast(5)
    with pytest.raises(ValueError):
        rigidity_degree(with_regular(B), cap=0)


def test_generator_and_cogenerator(a37, a2):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    assert is_generator(projs) and is_cogenerator(projs)
    assert not is_generator(AddSet.of(simple(A, 0)))
    assert is_generator(AddSet.of(regular_module(a2)))
    assert not is_cogenerator(AddSet.of(regular_module(a2)))


def test_orthosymmetry_examples(a37, m1):
    B, _ = a37
    report = is_n_orthosymmetric(m1, 1)
    assert report.ortho_symmetric
    assert report.gorenstein == (Finite(3), Finite(3))
    bigger = m1.union(with_regular(B, (1, 1), (0, 6)))
    report = is_n_orthosymmetric(bigger, 1)
    assert not report.ortho_symmetric and not report.is_rigid_to_n
    projs = AddSet.of(regular_module(B.algebra))
    for n in (1, 2, 3):
        assert is_n_orthosymmetric(projs, n).ortho_symmetric
    assert is_n_orthosymmetric(m1, 1).to_json()["report_version"] == 1


def test_nm_orthosymmetry(a37, m1):
    B, cat = a37
    assert is_nm_orthosymmetric(m1, 1, 0, cat)
    assert is_nm_orthosymmetric(with_regular(B, (0, 1)), 3, 3, cat)
    assert not is_nm_orthosymmetric(with_regular(B, (0, 3)), 1, 0, cat)
    with pytest.raises(CatalogueRequired):
        is_nm_orthosymmetric(m1, 1, 0, None)


def test_g_category(a37, a310, m1):
    B, cat = a37
    assert ids(g_category(m1, 1, cat)) == add_members(m1, cat)
    projs = AddSet.of(regular_module(B.algebra))
    assert ids(g_category(projs, 2, cat)) == ids(cat)
    C, ccat = a310
    M = with_regular(C, (0, 1), (2, 9), (0, 2), (0, 8))
    g = ids(g_category(M, 1, ccat))
    assert g == ids(perp_intersection(M, 1, 1, ccat))
    assert g - add_members(M, ccat) == {id(ccat.modules[ccat.labels.index("L(0,5)")])}


def test_nm_orthosymmetry_matches_g_category(a37):
    B, cat = a37
    panel = [
        (with_regular(B, (0, 1), (2, 6), (0, 2), (0, 5)), 1),
        (with_regular(B, (0, 1)), 2),
        (with_regular(B, (0, 1)), 3),
        (with_regular(B, (0, 1), (2, 6)), 1),
    ]
    for M, n in panel:
        for m in range(n):
            nm = is_nm_orthosymmetric(M, n, m, cat)
            assert nm == (ids(g_category(M, n, cat)) == ids(perp_intersection(M, n, m, cat)))


def test_gorenstein_dimensions(a37, m1):
    B, _ = a37
    assert gorenstein_dims_of_end(m1, 1) == (Finite(3), Finite(3))
    assert gorenstein_dims_of_end(with_regular(B, (0, 1)), 4) == (Finite(6), Finite(6))
    left, right = gorenstein_dims_of_end(with_regular(B, (0, 1)), 2, cutoff=0)
    assert left == UnknownAtCutoff(0) and right == UnknownAtCutoff(0)
    projs = AddSet.of(regular_module(B.algebra))
    with pytest.raises(PreconditionFailed):
        gorenstein_dims_of_end(projs, 1)
    assert gorenstein_dims_of_end(projs, 1, allow_selfinjective=True) == (Finite(0), Finite(0))
    with pytest.raises(PreconditionFailed):
        gorenstein_dims_of_end(with_regular(B, (0, 3)), 1)


@pytest.mark.parametrize("params", [(2, 2), (3, 2)])
def test_plus_minus_and_gorenstein_agree(params):
    B = bridge(params)
    e, a = params
    for x in all_indecomposables(params, projective=False):
        M = with_regular(B, (x.i, x.t))
        for n in range(1, 2 * e - 1):
            if not is_n_rigid(M, n):
                continue
            plus = add_equal(M, m_plus(M, n))
            minus = add_equal(M, m_minus(M, n))
            gor = gorenstein_dims_of_end(M, n) == (Finite(n + 2), Finite(n + 2))
            assert plus == minus == gor


def test_one_step_conditions_agree(a37):
    B, cat = a37
    for x in all_indecomposables((3, 2), projective=False):
        M = with_regular(B, (x.i, x.t))
        for n in range(2, rigidity_degree(M, 6) + 1):
            left = ids(perp_intersection(M, n, 1, cat))
            c1 = left == ids(perp_intersection(M, 1, n, cat)) and left < ids(perp_intersection(M, 0, n, cat))
            c2 = m_coresdim(M, m_minus(M, n).module()) == Finite(1)
            c3 = m_resdim(M, m_plus(M, n).module()) == Finite(1)
            c4 = gorenstein_dims_of_end(M, n) == (Finite(n + 3), Finite(n + 3))
            assert c1 == c2 == c3 == c4


def test_sum_with_minus_is_orthosymmetric(a37):
    B, _ = a37
    M = with_regular(B, (0, 1))
    plus, minus = m_plus(M, 1), m_minus(M, 1)
    assert add_equal(plus, minus)
    assert not is_n_orthosymmetric(M, 1).ortho_symmetric
    assert is_n_orthosymmetric(M.union(minus), 1).ortho_symmetric


def test_dominant_dimension(a37, m1):
    B, _ = a37
    assert dominant_dim_lower(m1) == 3
    assert dominant_dim_lower(with_regular(B, (0, 1))) == 6
    assert dominant_dim_lower(AddSet.of(regular_module(B.algebra)), cap=10) == 12
    assert dominant_dim_lower(m1, assume_mueller_exact=True) == 3


def test_gldim_tests(a37, a310, m1):
    B, cat = a37
    assert gldim_le_test(m1, 1, cat)
    C, ccat = a310
    M = with_regular(C, (0, 1), (2, 9), (0, 2), (0, 8))
    assert not gldim_le_test(M, 1, ccat)
    assert [ccat.label(X) for X in gldim_conditions(M, 1, ccat).violations["1,1"]] == ["L(0,5)"]
    k = path_algebra(Quiver(1, ()))
    S = simple(k, 0)
    assert gldim_le_test(AddSet.of(S), 1, IndecCatalogue.from_modules([S]))
    with pytest.raises(CatalogueRequired):
        gldim_le_test(m1, 1, None)


def test_small_gldim_forces_perp_equal_add(a37, m1):
    B, cat = a37
    # gldim End(M) <= 2n + 2 with n = 1 forces ⊥1 M ∩ M^⊥1 = add(M).
    assert gldim_le_test(m1, 1, cat)
    assert ids(perp_intersection(m1, 1, 1, cat)) == add_members(m1, cat)


def test_maximality(a37, m1):
    B, cat = a37
    assert is_maximal(m1, 1, "orthosymmetric", cat)
    assert is_maximal(m1, 1, "rigid", cat)
    assert not is_maximal(AddSet.of(regular_module(B.algebra)), 1, "rigid", cat)
    assert not is_maximal(with_regular(B, (0, 1), (2, 6)), 1, "orthosymmetric", cat)
    with pytest.raises(ValueError):
        is_maximal(m1, 1, "tilting", cat)


def test_weakly_cy_degree(a37, a2):
    B, cat = a37
    dual = bridge((1, 1))
    assert weakly_cy_degree(dual.algebra, 6, IndecCatalogue.from_bridge(dual)) == 1
    assert weakly_cy_degree(B.algebra, 8, cat) == 5
    assert weakly_cy_degree(B.algebra, 4, cat) is None
    with pytest.raises(NotSelfInjective):
        weakly_cy_degree(a2, 3, IndecCatalogue.from_modules([simple(a2, 0), simple(a2, 1)]))


def test_perpendicular_sides_agree_when_weakly_cy(a37):
    # A_{3,7} is weakly 5-CY, so ⊥4 M = M^⊥4 for every M.
    B, cat = a37
    for x in all_indecomposables((3, 2)):
        M = AddSet.of(B(x))
        assert ids(perp_intersection(M, 4, 0, cat)) == ids(perp_intersection(M, 0, 4, cat))


def test_orbit_modules(a37):
    B, _ = a37
    A = B.algebra
    om = orbit_module(A, B((0, 1)), 4, 1)
    assert add_equal(om.module, with_regular(B, (0, 1))) and om.ortho_symmetric
    om = orbit_module(A, B((0, 1)), 1, 2)
    assert add_equal(om.module, with_regular(B, (0, 1), (2, 6))) and om.ortho_symmetric
    assert is_n_orthosymmetric(om.module, 1).ortho_symmetric
    om = orbit_module(A, regular_module(A), 1, 1)
    assert add_equal(om.module, AddSet.of(regular_module(A)))
    with pytest.raises(PeriodicityFailed):
        orbit_module(A, B((0, 1)), 1, 1)


def test_gsc_almost(a37):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    report = gsc_check_almost(projs, B((0, 1)), 1)
    assert report.consistent
    assert report.left == report.right == Finite(6)
    assert report.witness_ok
    assert tau_fixed(B((0, 1)), 4)
    with pytest.raises(PreconditionFailed):
        gsc_check_almost(projs, B((0, 1)), 4)


def test_almost_selfinjective(a37):
    B, _ = a37
    out = almost_selfinjective_check(B((0, 1)))
    assert isinstance(out["left"], Finite)
    assert out["ortho_symmetric"] is True
