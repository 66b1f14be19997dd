"""Almost complex structures with Norden metric on a Lie algebra.

Covers the Norden conditions, the fundamental tensor F and its Lie form,
membership in W0 and the three basic classes, the Nijenhuis tensor and the
square norms of N and of nabla J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curvature import ConnectionCoefficients, apply_J, nabla_J
from .lie import LieStructure, bracket
from .polynomial import Polynomial, poly_sum
from .tensor import DimensionError, MetricMatrix, Tensor, Vector, basis_vector, full_contract


@dataclass(frozen=True)
class NordenManifold:
    """Lie algebra with a constant metric and a constant endomorphism J.

    Row i of ``J`` holds the coordinates of J X_i. The Norden conditions are
    not enforced here; see :func:`check_norden`.
    """

    L: LieStructure
    g: MetricMatrix
    J: Tensor

    def __post_init__(self):
        if not (self.L.dim == self.g.dim == self.J.dim) or self.J.rank != 2:
            raise DimensionError("Lie algebra, metric and J must share one dimension")

    @property
    def dim(self) -> int:
        return self.L.dim


@dataclass
class NordenCheck:
    violations: list[tuple[str, int, int, Polynomial]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class ClassificationFlags:
    w0: bool
    w1: bool
    w2: bool
    w3: bool
    theta_zero: bool
    defects: dict[str, Tensor] = field(default_factory=dict)

    def label(self) -> str:
        if self.w0:
            return "W0"
        names = [name for name, on in (("W1", self.w1), ("W2", self.w2), ("W3", self.w3)) if on]
        return "+".join(names) if names else "none of W1, W2, W3"


def standard_J() -> Tensor:
    """J X1 = X3, J X2 = X4, J X3 = -X1, J X4 = -X2."""
    rows = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    return Tensor.from_nested(rows)


def standard_metric() -> MetricMatrix:
    return MetricMatrix.diagonal(1, 1, -1, -1)


def check_norden(M: NordenManifold) -> NordenCheck:
    """Report every (i, j) where J^2 != -1 or g(JX_i, JX_j) != -g(X_i, X_j)."""
    n, J, G = M.dim, M.J, M.g.g
    out = NordenCheck()
    r = range(1, n + 1)
    for i in r:
        for k in r:
            sq = poly_sum(J[i, m] * J[m, k] for m in r)
            defect = sq + (1 if i == k else 0)
            if defect:
                out.violations.append(("J^2 = -id", i, k, defect))
    for i in r:
        for j in r:
            val = poly_sum(J[i, a] * J[j, b] * G[a, b] for a in r for b in r if J[i, a] and J[j, b])
            defect = val + G[i, j]
            if defect:
                out.violations.append(("g(JX,JY) = -g(X,Y)", i, j, defect))
    return out


def associated_metric(M: NordenManifold) -> Tensor:
    """g~(X_i, X_j) = g(X_i, J X_j)."""
    n = M.dim
    return Tensor.build(2, n, lambda i, j: M.g.lower(i, apply_J(M.J, basis_vector(j, n))))


def F_tensor(M: NordenManifold, conn: ConnectionCoefficients) -> Tensor:
    """F_{ijk} = g((nabla_{X_i} J) X_j, X_k)."""
    n = M.dim
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    dJ = {(i, j): nabla_J(conn, M.J, e[i], e[j]) for i in range(1, n + 1) for j in range(1, n + 1)}
    return Tensor.build(3, n, lambda i, j, k: M.g.lower(k, dJ[i, j]))


def lie_form(F: Tensor, g_inv: Tensor) -> Tensor:
    """theta_k = g^{ij} F_{ijk}."""
    n = F.dim
    pairs = [(i, j, g_inv[i, j]) for i in range(1, n + 1) for j in range(1, n + 1) if g_inv[i, j]]
    return Tensor.build(1, n, lambda k: poly_sum(gij * F[i, j, k] for i, j, gij in pairs))


def _F_on(F: Tensor, x: Vector, y: Vector, z: Vector) -> Polynomial:
    n = F.dim
    return poly_sum(
        x[i - 1] * y[j - 1] * z[k - 1] * F[i, j, k]
        for i in range(1, n + 1)
        if x[i - 1]
        for j in range(1, n + 1)
        if y[j - 1]
        for k in range(1, n + 1)
        if z[k - 1] and F[i, j, k]
    )


def _theta_on(theta: Tensor, z: Vector) -> Polynomial:
    return poly_sum(theta[k] * z[k - 1] for k in range(1, theta.dim + 1) if z[k - 1])


def w1_defect(M: NordenManifold, F: Tensor, theta: Tensor) -> Tensor:
    n = M.dim
    if n % 2:
        raise ValueError("almost complex structures need an even dimension")
    c = Fraction(1, 2 * n)  # 1/(4m) with n = 2m
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    Je = [None] + [apply_J(M.J, e[i]) for i in range(1, n + 1)]
    g = M.g

    def comp(i, j, k):
        closed = (
            g(e[i], e[j]) * _theta_on(theta, e[k])
            + g(e[i], e[k]) * _theta_on(theta, e[j])
            + g(e[i], Je[j]) * _theta_on(theta, Je[k])
            + g(e[i], Je[k]) * _theta_on(theta, Je[j])
        )
        return F[i, j, k] - closed * c

    return Tensor.build(3, n, comp)


def w2_cyclic_defect(M: NordenManifold, F: Tensor) -> Tensor:
    """Cyclic sum over (x, y, z) of F(x, y, Jz) on basis triples."""
    n = M.dim
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    Je = [None] + [apply_J(M.J, e[i]) for i in range(1, n + 1)]
    return Tensor.build(
        3,
        n,
        lambda i, j, k: _F_on(F, e[i], e[j], Je[k])
        + _F_on(F, e[j], e[k], Je[i])
        + _F_on(F, e[k], e[i], Je[j]),
    )


def w3_cyclic_defect(F: Tensor) -> Tensor:
    return Tensor.build(3, F.dim, lambda i, j, k: F[i, j, k] + F[j, k, i] + F[k, i, j])


def w3_bracket_form(M: NordenManifold) -> Tensor:
    """Cyclic sum of F written through brackets only (constant metric, invariant J).

    g([X_i,JX_j]+[X_j,JX_i], X_k) + g([X_j,JX_k]+[X_k,JX_j], X_i)
    + g([X_k,JX_i]+[X_i,JX_k], X_j)
    """
    n, L, g = M.dim, M.L, M.g
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    Je = [None] + [apply_J(M.J, e[i]) for i in range(1, n + 1)]
    br = {(a, b): bracket(L, e[a], Je[b]) for a in range(1, n + 1) for b in range(1, n + 1)}

    def pair(a, b, c):
        return g.lower(c, br[a, b]) + g.lower(c, br[b, a])

    return Tensor.build(3, n, lambda i, j, k: pair(i, j, k) + pair(j, k, i) + pair(k, i, j))


def classify(M: NordenManifold, F: Tensor, theta: Tensor) -> ClassificationFlags:
    defects: dict[str, Tensor] = {}
    w0 = F.is_zero()
    if not w0:
        defects["w0"] = F
    theta_zero = theta.is_zero()
    if not theta_zero:
        defects["theta"] = theta
    d1 = w1_defect(M, F, theta)
    w1 = d1.is_zero()
    if not w1:
        defects["w1"] = d1
    d2 = w2_cyclic_defect(M, F)
    w2 = d2.is_zero() and theta_zero
    if not w2:
        defects["w2"] = d2
    d3 = w3_cyclic_defect(F)
    w3 = d3.is_zero()
    if not w3:
        defects["w3"] = d3
    return ClassificationFlags(w0=w0, w1=w1, w2=w2, w3=w3, theta_zero=theta_zero, defects=defects)


def nijenhuis(M: NordenManifold) -> Tensor:
    """N[i, j, k] = X_k coordinate of [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY] at (X_i, X_j)."""
    n, L, J = M.dim, M.L, M.J
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    Je = [None] + [apply_J(J, e[i]) for i in range(1, n + 1)]
    cache: dict[tuple[int, int], Vector] = {}

    def value(i, j):
        if (i, j) not in cache:
            a = bracket(L, e[i], e[j])
            b = apply_J(J, bracket(L, Je[i], e[j]))
            c = apply_J(J, bracket(L, e[i], Je[j]))
            d = bracket(L, Je[i], Je[j])
            cache[i, j] = tuple(p + q + r - s for p, q, r, s in zip(a, b, c, d))
        return cache[i, j]

    return Tensor.build(3, n, lambda i, j, k: value(i, j)[k - 1])


def norm_nijenhuis(M: NordenManifold, N: Tensor) -> Polynomial:
    """g^{ip} g^{jq} g(N(X_i, X_j), N(X_p, X_q))."""
    n = M.dim
    lowered = Tensor.build(
        3, n, lambda i, j, c: M.g.lower(c, tuple(N[i, j, a] for a in range(1, n + 1)))
    )
    return full_contract(lowered, lowered, M.g.g_inv, [(0, 0), (1, 1), (2, 2)])


def norm_nabla_J(
    M: NordenManifold, conn: ConnectionCoefficients, F: Tensor
) -> tuple[Polynomial, Polynomial]:
    """The square norm of nabla J, from its definition and from F."""
    n = M.dim
    gi = M.g.g_inv
    e = [None] + [basis_vector(i, n) for i in range(1, n + 1)]
    dJ = {(i, k): nabla_J(conn, M.J, e[i], e[k]) for i in range(1, n + 1) for k in range(1, n + 1)}
    nz = [(i, j, gi[i, j]) for i in range(1, n + 1) for j in range(1, n + 1) if gi[i, j]]
    direct = poly_sum(
        gij * gkl * M.g(dJ[i, k], dJ[j, l]) for i, j, gij in nz for k, l, gkl in nz
    )
    via_F = full_contract(F, F, gi, [(0, 0), (1, 1), (2, 2)])
    return direct, via_F


def isotropic_kahler_flag(norm: Polynomial) -> bool | Polynomial:
    """True/False for a constant norm; otherwise the normalised cone polynomial."""
    if norm.is_constant():
        return norm.is_zero()
    _, lead = norm.leading_term()
    return norm / lead
