"""Lie algebra structure constants and the two bracket families on R^4."""

from __future__ import annotations

from typing import Mapping, Sequence

from .polynomial import ZERO, Polynomial, poly_sum
from .tensor import DimensionError, MetricMatrix, Tensor, Vector, vector


class LieStructure:
    """Structure constants ``C[i, j, k]`` = coefficient of X_k in [X_i, X_j].

    Antisymmetry in (i, j) is checked on construction. The Jacobi identity
    is not; use :func:`jacobi_defect`.
    """

    __slots__ = ("dim", "C")

    def __init__(self, C: Tensor):
        if C.rank != 3:
            raise DimensionError("structure constants must be rank 3")
        for i, j, k in C.indices():
            if i <= j and C[i, j, k] != -C[j, i, k]:
                raise ValueError(f"structure constants not antisymmetric at ({i}, {j}, {k})")
        self.dim = C.dim
        self.C = C

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Sequence]) -> "LieStructure":
        """Build from ``{(i, j): coords of [X_i, X_j]}``; the reverse order is implied."""
        table: dict[tuple[int, int], tuple] = {}
        for (i, j), coords in brackets.items():
            if i == j:
                raise ValueError(f"bracket [X_{i}, X_{i}] must not be given")
            if len(coords) != dim:
                raise DimensionError(f"bracket ({i}, {j}) has {len(coords)} coordinates")
            v = vector(*coords)
            if (j, i) in table and table[(j, i)] != tuple(-c for c in v):
                raise ValueError(f"inconsistent brackets for ({i}, {j}) and ({j}, {i})")
            table[(i, j)] = v
            table[(j, i)] = tuple(-c for c in v)

        def entry(i, j, k):
            v = table.get((i, j))
            return v[k - 1] if v else ZERO

        return cls(Tensor.build(3, dim, entry))

    @classmethod
    def abelian(cls, dim: int) -> "LieStructure":
        return cls(Tensor.zeros(3, dim))

    def basis_bracket(self, i: int, j: int) -> Vector:
        return tuple(self.C[i, j, k] for k in range(1, self.dim + 1))

    def __eq__(self, other):
        return isinstance(other, LieStructure) and self.C == other.C

    def __hash__(self):
        return hash(self.C)


def bracket(L: LieStructure, x: Vector, y: Vector) -> Vector:
    n = L.dim
    if len(x) != n or len(y) != n:
        raise DimensionError("vector dimension does not match the Lie algebra")
    out = []
    for k in range(1, n + 1):
        out.append(
            poly_sum(
                x[i - 1] * y[j - 1] * L.C[i, j, k]
                for i in range(1, n + 1)
                if x[i - 1]
                for j in range(1, n + 1)
                if y[j - 1] and L.C[i, j, k]
            )
        )
    return tuple(out)


def jacobi_defect(L: LieStructure) -> Tensor:
    """Components (i, j, s, l) of the cyclic Jacobi sum; zero iff Jacobi holds."""
    C = L.C
    n = L.dim
    r = range(1, n + 1)

    def comp(i, j, s, l):
        return poly_sum(
            C[i, j, k] * C[k, s, l] + C[j, s, k] * C[k, i, l] + C[s, i, k] * C[k, j, l]
            for k in r
        )

    return Tensor.build(4, n, comp)


def invariance_defect(L: LieStructure, g: MetricMatrix) -> Tensor:
    """D[i, j, k] = g([X_i, X_j], X_k) + g([X_i, X_k], X_j)."""
    if g.dim != L.dim:
        raise DimensionError("metric and Lie algebra dimensions differ")
    n = L.dim
    brackets = {(i, j): L.basis_bracket(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    return Tensor.build(
        3, n, lambda i, j, k: g.lower(k, brackets[i, j]) + g.lower(j, brackets[i, k])
    )


def build_w3_general(lams: Sequence) -> LieStructure:
    """The 12-parameter brackets on R^4 whose F has vanishing cyclic sum.

    Jacobi is not imposed; callers check :func:`jacobi_defect`.
    """
    if len(lams) != 12:
        raise ValueError("expected 12 parameters")
    l = [None] + [Polynomial.coerce(x) for x in lams]
    return LieStructure.from_brackets(
        4,
        {
            (1, 3): (0, l[2], 0, l[4]),
            (2, 4): (l[1], 0, l[3], 0),
            (2, 3): (l[5], l[6], l[7], l[8]),
            (3, 4): (l[9], l[10], l[11], l[12]),
            (4, 1): (l[2] + l[5], l[1] + l[6], l[4] + l[7], l[3] + l[8]),
            (2, 1): (l[9] + l[4], l[10] - l[3], l[11] - l[2], l[12] + l[1]),
        },
    )


def build_w3_killing(lams: Sequence) -> LieStructure:
    """The 4-parameter family for which the diagonal (1, 1, -1, -1) metric is invariant."""
    if len(lams) != 4:
        raise ValueError("expected 4 parameters")
    l1, l2, l3, l4 = (Polynomial.coerce(x) for x in lams)
    return LieStructure.from_brackets(
        4,
        {
            (1, 3): (0, l2, 0, l4),
            (2, 4): (l1, 0, l3, 0),
            (2, 3): (-l2, 0, 0, -l3),
            (3, 4): (-l4, l3, 0, 0),
            (4, 1): (0, l1, l4, 0),
            (2, 1): (0, 0, -l2, l1),
        },
    )


def killing_as_general(lams: Sequence) -> list[Polynomial]:
    """The 12 general-family parameters that reproduce the 4-parameter family."""
    l1, l2, l3, l4 = (Polynomial.coerce(x) for x in lams)
    return [l1, l2, l3, l4, -l2, ZERO, ZERO, -l3, -l4, l3, ZERO, ZERO]
