from fractions import Fraction

import pytest

from norden.analysis import Geometry, family_manifold
from norden.curvature import levi_civita
from norden.lie import LieStructure, build_w3_general
from norden.polynomial import Polynomial
from norden.reference import f_table
from norden.structure import (
    NordenManifold,
    F_tensor,
    associated_metric,
    check_norden,
    classify,
    isotropic_kahler_flag,
    lie_form,
    nijenhuis,
    norm_nabla_J,
    norm_nijenhuis,
    standard_J,
    standard_metric,
    w3_bracket_form,
    w3_cyclic_defect,
)
from norden.tensor import DimensionError, MetricMatrix, Tensor

from conftest import at

J, G = standard_J(), standard_metric()
IDENTITY = Tensor.from_nested([[int(i == j) for j in range(4)] for i in range(4)])


def cone(lams):
    l1, l2, l3, l4 = lams
    return l1**2 + l2**2 - l3**2 - l4**2


def test_norden_examples():
    assert check_norden(NordenManifold(LieStructure.abelian(4), G, J)).ok
    bad_J = check_norden(NordenManifold(LieStructure.abelian(4), G, IDENTITY))
    assert not bad_J.ok
    assert ("J^2 = -id", 1, 1, Polynomial.constant(2)) in bad_J.violations
    bad_g = check_norden(NordenManifold(LieStructure.abelian(4), MetricMatrix(IDENTITY), J))
    assert [v for v in bad_g.violations if v[0].startswith("g")][0][1:3] == (1, 1)


def test_manifold_dimension_mismatch():
    with pytest.raises(DimensionError):
        NordenManifold(LieStructure.abelian(3), G, J)


def test_associated_metric():
    gt = associated_metric(NordenManifold(LieStructure.abelian(4), G, J))
    assert gt[1, 3] == -1
    assert all(gt[i, i] == 0 for i in range(1, 5))
    assert all(gt[i, j] == gt[j, i] for i in range(1, 5) for j in range(1, 5))
    M2 = NordenManifold(LieStructure.abelian(4), MetricMatrix(gt), J)
    assert check_norden(M2).ok
    assert associated_metric(M2) == G.g.scale(-1)


def test_F_examples(family, abelian, lams):
    l1 = lams[0]
    assert family.F[1, 2, 2] == -l1
    assert family.F[2, 1, 2] == l1 / 2
    assert abelian.F.is_zero()


def test_F_matches_printed_table_except_misprints(family):
    printed = f_table()
    assert len(printed) == 40
    misprints = {(2, 1, 1), (2, 3, 3)}
    for idx, value in family.F.items():
        if idx in misprints:
            assert value == 2 * printed[idx]
        else:
            assert value == printed.get(idx, 0), idx


def test_F_symmetries_identically(family):
    F = family.F
    n = 4
    Jrow = lambda i: [(k, J[i, k]) for k in range(1, n + 1) if J[i, k]]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                assert F[i, j, k] == F[i, k, j]
                twisted = sum((a * b * F[i, p, q] for p, a in Jrow(j) for q, b in Jrow(k)), Polynomial())
                assert F[i, j, k] == twisted


def test_lie_form(family, abelian):
    assert family.theta.is_zero()
    assert abelian.theta.is_zero()


def test_lie_form_symbolic_then_evaluated():
    from norden.polynomial import PARAMETERS, symbols

    M = NordenManifold(build_w3_general(symbols(*PARAMETERS)), G, J)
    F = F_tensor(M, levi_civita(M.L, G))
    theta = lie_form(F, G.g_inv)
    point = {name: Fraction(int(name == "l5")) for name in PARAMETERS}
    M5 = NordenManifold(build_w3_general([point[p] for p in PARAMETERS]), G, J)
    direct = lie_form(F_tensor(M5, levi_civita(M5.L, G)), G.g_inv)
    assert theta.evaluate(point) == direct
    # W3 forces theta = 0, for every member of the general family
    assert theta.is_zero()


def test_classification_examples(family, abelian):
    assert family.classes.w3 and not family.classes.w0
    assert family.classes.label() == "W3"
    ab = abelian.classes
    assert ab.w0 and ab.w1 and ab.w2 and ab.w3 and ab.label() == "W0"
    point = Geometry(family_manifold([1, 0, 0, 0])).classes
    assert (point.w1, point.w2, point.w3) == (False, False, True)


def test_w3_bracket_form_agrees_with_cyclic_sum():
    from norden.polynomial import PARAMETERS, symbols

    M = NordenManifold(build_w3_general(symbols(*PARAMETERS)), G, J)
    F = F_tensor(M, levi_civita(M.L, G))
    assert w3_bracket_form(M) == w3_cyclic_defect(F)
    # the general 12-parameter brackets are W3 without using Jacobi
    assert w3_cyclic_defect(F).is_zero()


def test_non_w3_example():
    M = NordenManifold(LieStructure.from_brackets(4, {(1, 2): (1, 0, 0, 0)}), G, J)
    F = F_tensor(M, levi_civita(M.L, G))
    flags = classify(M, F, lie_form(F, G.g_inv))
    assert not flags.w3 and not flags.w0


def test_nijenhuis(family, abelian, lams):
    l1, l2, l3, l4 = lams
    N = family.N
    vec = lambda i, j: tuple(N[i, j, k] for k in range(1, 5))
    assert vec(1, 2) == (2 * l4, -2 * l3, 2 * l2, -2 * l1)
    assert vec(3, 4) == tuple(-c for c in vec(1, 2))
    assert vec(1, 4) == (2 * l2, -2 * l1, -2 * l4, 2 * l3)
    assert vec(2, 3) == tuple(-c for c in vec(1, 4))
    assert all(c.is_zero() for c in vec(1, 3))
    assert abelian.N.is_zero()
    for i in range(1, 5):
        for j in range(1, 5):
            assert vec(i, j) == tuple(-c for c in vec(j, i))


def test_nijenhuis_norm(family, abelian, lams):
    assert family.norm_N == -32 * cone(lams)
    assert abelian.norm_N == 0
    assert Geometry(family_manifold([1, 1, 1, 1])).norm_N == 0


def test_norm_nabla_J(family, abelian, lams):
    direct, via_F = family.norm_nabla_J
    assert direct == via_F == 4 * cone(lams)
    assert abelian.norm_nabla_J == (0, 0)
    assert Geometry(family_manifold([3, 4, 5, 0])).norm_nabla_J == (0, 0)


def test_norm_nabla_J_off_invariant_metric():
    M = NordenManifold(build_w3_general([0, 0, 0, 0, 1] + [0] * 7), G, J)
    conn = levi_civita(M.L, G)
    direct, via_F = norm_nabla_J(M, conn, F_tensor(M, conn))
    assert direct == via_F


def test_isotropic_flag(family, lams):
    for point, expected in (([1, 1, 1, 1], True), ([1, 0, 0, 0], False)):
        geo = Geometry(family_manifold(point))
        assert isotropic_kahler_flag(geo.norm_nabla_J[0]) is expected
    assert isotropic_kahler_flag(Polynomial()) is True
    assert isotropic_kahler_flag(family.norm_nabla_J[0]) == cone(lams)
    assert isotropic_kahler_flag(family.norm_N) == cone(lams)


def test_symbolic_norm_evaluates_like_numeric(family):
    point = at(l1=2, l2=Fraction(1, 3), l3=-1, l4=5)
    numeric = Geometry(family_manifold([point[k] for k in ("l1", "l2", "l3", "l4")]))
    assert family.norm_N.evaluate(point) == numeric.norm_N.constant_value()
    assert norm_nijenhuis(numeric.M, nijenhuis(numeric.M)) == numeric.norm_N
