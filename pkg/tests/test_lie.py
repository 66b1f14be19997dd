import pytest

from norden.lie import (
    LieStructure,
    bracket,
    build_w3_general,
    build_w3_killing,
    invariance_defect,
    jacobi_defect,
    killing_as_general,
)
from norden.polynomial import PARAMETERS, symbols
from norden.structure import standard_metric
from norden.tensor import DimensionError, MetricMatrix, basis_vector, vector

from conftest import jacobi_points, satisfies_jacobi

E = {i: basis_vector(i, 4) for i in range(1, 5)}
G = standard_metric()


def family(lams):
    return build_w3_killing(lams)


def test_bracket_examples(lams):
    l1, l2, l3, l4 = lams
    L = family(lams)
    assert bracket(L, E[1], E[3]) == vector(0, l2, 0, l4)
    assert bracket(L, E[2], E[1]) == vector(0, 0, -l2, l1)
    x = vector(1, -2, 3, l1)
    assert all(c.is_zero() for c in bracket(L, x, x))


def test_bracket_is_bilinear(lams):
    L = family(lams)
    x, y, z = vector(1, 2, 0, -1), vector(0, 1, 3, 0), vector(2, 0, 0, 5)
    lhs = bracket(L, tuple(a + 2 * b for a, b in zip(x, y)), z)
    rhs = tuple(a + 2 * b for a, b in zip(bracket(L, x, z), bracket(L, y, z)))
    assert lhs == rhs


def test_bracket_dimension_mismatch(lams):
    with pytest.raises(DimensionError):
        bracket(family(lams), E[1], (1, 0, 0))


def test_structure_constants_must_be_antisymmetric():
    from norden.tensor import Tensor

    C = Tensor.build(3, 2, lambda i, j, k: 1 if (i, j, k) == (1, 2, 1) else 0)
    with pytest.raises(ValueError):
        LieStructure(C)


def test_jacobi_examples(lams):
    assert jacobi_defect(LieStructure.abelian(4)).is_zero()
    assert jacobi_defect(family(lams)).is_zero()
    L = LieStructure.from_brackets(3, {(1, 2): (1, 0, 0), (1, 3): (0, 1, 0)})
    D = jacobi_defect(L)
    assert not D.is_zero()
    assert D[1, 2, 3, 2] == 1


def test_invariance_examples(lams):
    assert invariance_defect(family(lams), G).is_zero()
    assert invariance_defect(LieStructure.abelian(4), G).is_zero()
    L = build_w3_general([0, 0, 0, 0, 1] + [0] * 7)
    D = invariance_defect(L, G)
    assert D[2, 3, 1] == 1
    assert not D.is_zero()


def test_invariance_dimension_mismatch(lams):
    with pytest.raises(DimensionError):
        invariance_defect(family(lams), MetricMatrix.diagonal(1, 1, 1))


def test_general_family_zero_is_abelian():
    assert build_w3_general([0] * 12) == LieStructure.abelian(4)


def test_general_family_specialises_to_killing(lams):
    assert build_w3_general(killing_as_general(lams)) == build_w3_killing(lams)


def test_killing_specialisation_values(lams):
    l1, l2, l3, l4 = lams
    assert killing_as_general(lams) == [l1, l2, l3, l4, -l2, 0, 0, -l3, -l4, l3, 0, 0]


def test_general_family_single_parameter():
    L = build_w3_general([0, 0, 0, 0, 1] + [0] * 7)
    nonzero = {(i, j): L.basis_bracket(i, j) for i in range(1, 5) for j in range(i + 1, 5)
               if any(L.basis_bracket(i, j))}
    assert nonzero == {(1, 4): vector(-1, 0, 0, 0), (2, 3): vector(1, 0, 0, 0)}


def test_general_family_parameter_count():
    with pytest.raises(ValueError):
        build_w3_general([0] * 11)
    with pytest.raises(ValueError):
        build_w3_killing([0] * 3)


def test_killing_family_examples(lams):
    l1, l2, l3, l4 = lams
    assert family([0, 0, 0, 0]) == LieStructure.abelian(4)
    assert family(lams).basis_bracket(3, 4) == vector(-l4, l3, 0, 0)
    L = family([1, 0, 0, 0])
    nonzero = {(i, j): L.basis_bracket(i, j) for i in range(1, 5) for j in range(1, 5)
               if any(L.basis_bracket(i, j))}
    assert nonzero == {
        (2, 4): E[1], (4, 2): vector(-1, 0, 0, 0),
        (4, 1): E[2], (1, 4): vector(0, -1, 0, 0),
        (2, 1): E[4], (1, 2): vector(0, 0, 0, -1),
    }


def test_general_family_symbolic_jacobi_is_nontrivial():
    L = build_w3_general(symbols(*PARAMETERS))
    assert not jacobi_defect(L).is_zero()


def test_jacobi_point_generator_yields_lie_algebras():
    points = jacobi_points(20, seed=3)
    assert all(satisfies_jacobi(p) for p in points)
    for p in points[1::2]:
        assert jacobi_defect(build_w3_general(p)).is_zero()
    # not everything produced is of the invariant 4-parameter kind
    assert any(not invariance_defect(build_w3_general(p), G).is_zero() for p in points)
