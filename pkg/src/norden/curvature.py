"""Levi-Civita connection and curvature of a left-invariant metric.

Everything is computed on the left-invariant basis, where the metric has
constant components, so directional derivatives of component functions
vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lie import LieStructure, bracket, invariance_defect
from .polynomial import ZERO, Polynomial, perfect_square_root, poly_sum
from .tensor import (
    DimensionError,
    MetricMatrix,
    Tensor,
    Vector,
    basis_vector,
    pi1,
    pi1_tensor,
    psi1,
)


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


class DegeneratePlaneError(ValueError):
    pass


class IsotropicDirectionError(ValueError):
    pass


class IrrationalRootError(ValueError):
    pass


@dataclass(frozen=True)
class ConnectionCoefficients:
    """``gamma[i, j, k]`` is the X_k component of nabla_{X_i} X_j."""

    gamma: Tensor

    @property
    def dim(self) -> int:
        return self.gamma.dim

    def basis_derivative(self, i: int, j: int) -> Vector:
        return tuple(self.gamma[i, j, k] for k in range(1, self.dim + 1))

    def nabla(self, x: Vector, y: Vector) -> Vector:
        """nabla_x y for left-invariant (constant-coefficient) fields."""
        n = self.dim
        return tuple(
            poly_sum(
                x[i - 1] * y[j - 1] * self.gamma[i, j, k]
                for i in range(1, n + 1)
                if x[i - 1]
                for j in range(1, n + 1)
                if y[j - 1] and self.gamma[i, j, k]
            )
            for k in range(1, n + 1)
        )


def koszul_lowered(L: LieStructure, g: MetricMatrix) -> Tensor:
    """g(nabla_{X_i} X_j, X_k) from the Koszul formula with constant metric."""
    n = L.dim
    br = {(i, j): L.basis_bracket(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    half = Fraction(1, 2)
    return Tensor.build(
        3,
        n,
        lambda i, j, k: (
            g.lower(k, br[i, j]) + g.lower(j, br[k, i]) + g.lower(i, br[k, j])
        )
        * half,
    )


def levi_civita(L: LieStructure, g: MetricMatrix) -> ConnectionCoefficients:
    if g.dim != L.dim:
        raise DimensionError("metric and Lie algebra dimensions differ")
    low = koszul_lowered(L, g)
    gi = g.g_inv
    n = L.dim
    return ConnectionCoefficients(
        Tensor.build(
            3,
            n,
            lambda i, j, k: poly_sum(gi[k, m] * low[i, j, m] for m in range(1, n + 1) if gi[k, m]),
        )
    )


def torsion_defect(conn: ConnectionCoefficients, L: LieStructure) -> Tensor:
    G, C = conn.gamma, L.C
    return Tensor.build(3, L.dim, lambda i, j, k: G[i, j, k] - G[j, i, k] - C[i, j, k])


def metric_compatibility_defect(conn: ConnectionCoefficients, g: MetricMatrix) -> Tensor:
    n = conn.dim
    return Tensor.build(
        3,
        n,
        lambda i, j, k: g.lower(k, conn.basis_derivative(i, j)) + g.lower(j, conn.basis_derivative(i, k)),
    )


def curvature(
    conn: ConnectionCoefficients,
    L: LieStructure,
    g: MetricMatrix,
    cross_check: bool = False,
) -> Tensor:
    """R_{ijks} = g(R(X_i, X_j) X_k, X_s) with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].

    With ``cross_check`` set and an invariant metric, the double-bracket
    shortcut is computed as well and any disagreement raises
    :class:`ConsistencyError`.
    """
    n = L.dim
    G, C = conn.gamma, L.C
    r = range(1, n + 1)

    # R(X_i, X_j) X_k = sum_p R^p_{ijk} X_p
    def upper(i, j, k, p):
        return poly_sum(
            G[j, k, m] * G[i, m, p] - G[i, k, m] * G[j, m, p] - C[i, j, m] * G[m, k, p]
            for m in r
        )

    Rup = Tensor.build(4, n, upper)
    R = Tensor.build(
        4,
        n,
        lambda i, j, k, s: poly_sum(Rup[i, j, k, p] * g.g[p, s] for p in r if g.g[p, s]),
    )
    if cross_check and invariance_defect(L, g).is_zero():
        shortcut = curvature_double_bracket(L, g)
        if shortcut != R:
            bad = next(idx for idx in R.indices() if R[idx] != shortcut[idx])
            raise ConsistencyError(
                f"definitional and double-bracket curvature differ at {bad}: "
                f"{R[bad]} vs {shortcut[bad]}"
            )
    return R


def curvature_double_bracket(L: LieStructure, g: MetricMatrix) -> Tensor:
    """-1/4 g([[X_i, X_j], X_k], X_s); valid only for an invariant metric."""
    n = L.dim
    quarter = Fraction(-1, 4)

    def comp(i, j, k, s):
        inner = L.basis_bracket(i, j)
        outer = bracket(L, inner, basis_vector(k, n))
        return g.lower(s, outer) * quarter

    return Tensor.build(4, n, comp)


def curvature_symmetry_defects(R: Tensor) -> dict[str, Tensor]:
    """Antisymmetries, pair symmetry and first Bianchi, each as a defect tensor."""
    return {
        "antisym_12": Tensor.build(4, R.dim, lambda i, j, k, s: R[i, j, k, s] + R[j, i, k, s]),
        "antisym_34": Tensor.build(4, R.dim, lambda i, j, k, s: R[i, j, k, s] + R[i, j, s, k]),
        "pair": Tensor.build(4, R.dim, lambda i, j, k, s: R[i, j, k, s] - R[k, s, i, j]),
        "bianchi": Tensor.build(
            4, R.dim, lambda i, j, k, s: R[i, j, k, s] + R[j, k, i, s] + R[k, i, j, s]
        ),
    }


def ricci_and_scalar(R: Tensor, g_inv: Tensor) -> tuple[Tensor, Polynomial]:
    n = R.dim
    pairs = [(i, j, g_inv[i, j]) for i in range(1, n + 1) for j in range(1, n + 1) if g_inv[i, j]]
    rho = Tensor.build(2, n, lambda a, b: poly_sum(gij * R[i, a, b, j] for i, j, gij in pairs))
    tau = poly_sum(gij * rho[i, j] for i, j, gij in pairs)
    return rho, tau


def weyl(R: Tensor, rho: Tensor, tau: Polynomial, g: MetricMatrix) -> Tensor:
    """W = R - psi1(rho)/(2n-2) + tau/((2n-1)(2n-2)) pi1, with 2n = dim."""
    dim = R.dim
    if dim < 4 or dim % 2:
        raise ValueError("Weyl tensor needs an even dimension of at least 4")
    a = Fraction(1, dim - 2)
    b = Fraction(1, (dim - 1) * (dim - 2))
    return R - psi1(rho, g).scale(a) + pi1_tensor(g).scale(tau * b)


def weyl_trace(W: Tensor, g_inv: Tensor) -> Tensor:
    """g^{is} W_{ijks}."""
    n = W.dim
    pairs = [(i, s, g_inv[i, s]) for i in range(1, n + 1) for s in range(1, n + 1) if g_inv[i, s]]
    return Tensor.build(2, n, lambda j, k: poly_sum(gis * W[i, j, k, s] for i, s, gis in pairs))


def _eval_R(R: Tensor, x: Vector, y: Vector, z: Vector, u: Vector) -> Polynomial:
    n = R.dim
    terms = []
    for i in range(1, n + 1):
        if not x[i - 1]:
            continue
        for j in range(1, n + 1):
            if not y[j - 1]:
                continue
            xy = x[i - 1] * y[j - 1]
            for k in range(1, n + 1):
                if not z[k - 1]:
                    continue
                xyz = xy * z[k - 1]
                for s in range(1, n + 1):
                    if u[s - 1] and R[i, j, k, s]:
                        terms.append(xyz * u[s - 1] * R[i, j, k, s])
    return poly_sum(terms)


def curvature_on(R: Tensor, x: Vector, y: Vector, z: Vector, u: Vector) -> Polynomial:
    """R(x, y, z, u) by multilinear extension of the basis components."""
    for v in (x, y, z, u):
        if len(v) != R.dim:
            raise DimensionError("vector dimension does not match the curvature tensor")
    return _eval_R(R, x, y, z, u)


def sectional_curvature(
    R: Tensor, g: MetricMatrix, plane: tuple[Vector, Vector]
) -> tuple[Polynomial, Polynomial]:
    """(R(x,y,y,x), pi1(x,y,y,x)) for the plane spanned by ``plane``; not reduced."""
    x, y = plane
    den = pi1(x, y, y, x, g)
    if den.is_zero():
        raise DegeneratePlaneError("plane is degenerate: pi1(x, y, y, x) = 0")
    return curvature_on(R, x, y, y, x), den


def apply_J(J: Tensor, x: Vector) -> Vector:
    """J x, where row i of ``J`` holds the coordinates of J X_i."""
    n = J.dim
    return tuple(
        poly_sum(x[i - 1] * J[i, k] for i in range(1, n + 1) if x[i - 1] and J[i, k])
        for k in range(1, n + 1)
    )


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def classify_plane(plane: tuple[Vector, Vector], J: Tensor, g: MetricMatrix) -> str:
    """'holomorphic', 'totally_real' or 'neither' for a constant rational plane.

    Only a linearly dependent pair is rejected; a null plane (pi1 = 0) still
    has a well defined type.
    """
    x, y = plane
    try:
        xs = [c.constant_value() for c in x]
        ys = [c.constant_value() for c in y]
    except ValueError:
        raise ValueError("plane classification needs constant rational coordinates") from None
    if _rank([xs, ys]) < 2:
        raise DegeneratePlaneError("x and y do not span a plane")
    jx, jy = apply_J(J, x), apply_J(J, y)
    jxs = [c.constant_value() for c in jx]
    jys = [c.constant_value() for c in jy]
    if _rank([xs, ys, jxs, jys]) == 2:
        return "holomorphic"
    if all(g(a, b).is_zero() for a in (x, y) for b in (jx, jy)):
        return "totally_real"
    return "neither"


def holo_bisectional(R: Tensor, g: MetricMatrix, J: Tensor, x: Vector, y: Vector) -> Polynomial:
    """-R(x, Jx, y, Jy) / sqrt(pi1(x,Jx,x,Jx) pi1(y,Jy,y,Jy)), exactly.

    Raises when either direction is isotropic or the root is not rational.
    """
    jx, jy = apply_J(J, x), apply_J(J, y)
    for name, v, jv in (("x", x, jx), ("y", y, jy)):
        if g(v, v).is_zero() and g(v, jv).is_zero():
            raise IsotropicDirectionError(f"{name} lies along a totally isotropic direction")
    a = pi1(x, jx, x, jx, g)
    b = pi1(y, jy, y, jy, g)
    if a.is_zero() or b.is_zero():
        raise IsotropicDirectionError("normalising factor vanishes")
    root = perfect_square_root(a * b)
    if root is None:
        raise IrrationalRootError(f"sqrt({a * b}) is not a polynomial with rational coefficients")
    if not root.is_constant():
        # Only constant normalisers are divided out exactly.
        raise IrrationalRootError("normalising factor depends on parameters")
    return -curvature_on(R, x, jx, y, jy) / root.constant_value()


def covariant_derivative_R(R: Tensor, conn: ConnectionCoefficients) -> Tensor:
    """(nabla_{X_l} R)_{ijks}, stored with the derivative index first: [l, i, j, k, s]."""
    n = R.dim
    G = conn.gamma
    r = range(1, n + 1)

    def comp(l, i, j, k, s):
        return -poly_sum(
            G[l, i, m] * R[m, j, k, s]
            + G[l, j, m] * R[i, m, k, s]
            + G[l, k, m] * R[i, j, m, s]
            + G[l, s, m] * R[i, j, k, m]
            for m in r
        )

    return Tensor.build(5, n, comp)


def nabla_J(conn: ConnectionCoefficients, J: Tensor, x: Vector, y: Vector) -> Vector:
    """(nabla_x J) y = nabla_x (J y) - J (nabla_x y)."""
    a = conn.nabla(x, apply_J(J, y))
    b = apply_J(J, conn.nabla(x, y))
    return tuple(p - q for p, q in zip(a, b))


def w3_identity_defect(R: Tensor, conn: ConnectionCoefficients, J: Tensor, g: MetricMatrix) -> Tensor:
    """Left minus right side of the curvature identity satisfied by every W3-manifold.

    Entry (i, j, k, s) evaluates the identity at (X, Y, Z, U) = (X_i, X_j, X_k, X_s).
    """
    n = R.dim
    e = {i: basis_vector(i, n) for i in range(1, n + 1)}
    je = {i: apply_J(J, e[i]) for i in e}
    dJ = {(i, j): nabla_J(conn, J, e[i], e[j]) for i in e for j in e}

    def sym(i, j):
        return tuple(p + q for p, q in zip(dJ[i, j], dJ[j, i]))

    def comp(x, y, z, u):
        X, Y, Z, U = e[x], e[y], e[z], e[u]
        JX, JY, JZ, JU = je[x], je[y], je[z], je[u]
        lhs = poly_sum(
            curvature_on(R, *args)
            for args in (
                (X, JZ, Y, JU), (X, JY, U, JZ), (X, JY, Z, JU),
                (X, JZ, U, JY), (X, JU, Y, JZ), (X, JU, Z, JY),
                (JX, Z, JY, U), (JX, Y, JU, Z), (JX, Y, JZ, U),
                (JX, Z, JU, Y), (JX, U, JY, Z), (JX, U, JZ, Y),
            )
        )
        rhs = -poly_sum(g(sym(a, b), sym(c, u)) for a, b, c in ((x, y, z), (y, z, x), (z, x, y)))
        return lhs - rhs

    return Tensor.build(4, n, comp)
