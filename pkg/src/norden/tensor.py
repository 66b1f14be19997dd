"""Dense tensor components over :class:`Polynomial` scalars.

All indices are 1-based so that ``T[1, 2, 2, 1]`` reads like the component
``T_{1221}`` in the basis X_1 .. X_n.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .polynomial import ONE_POLY, ZERO, Polynomial, poly_sum

Vector = tuple  # tuple[Polynomial, ...] of length dim


class DimensionError(ValueError):
    pass


class SingularMetricError(ValueError):
    pass


class Tensor:
    """Rank-r, dimension-n array of polynomials, immutable after construction."""

    __slots__ = ("rank", "dim", "_data")

    def __init__(self, rank: int, dim: int, entries: Iterable):
        data = tuple(Polynomial.coerce(e) for e in entries)
        if len(data) != dim ** rank:
            raise DimensionError(f"expected {dim ** rank} entries, got {len(data)}")
        self.rank = rank
        self.dim = dim
        self._data = data

    @classmethod
    def zeros(cls, rank: int, dim: int) -> "Tensor":
        return cls(rank, dim, [ZERO] * dim ** rank)

    @classmethod
    def build(cls, rank: int, dim: int, fn: Callable[..., object]) -> "Tensor":
        """Fill entry ``(i1, .., ir)`` (1-based) with ``fn(i1, .., ir)``."""
        return cls(rank, dim, (fn(*idx) for idx in cls.index_range(rank, dim)))

    @classmethod
    def from_nested(cls, rows: Sequence) -> "Tensor":
        """Rank-2 tensor from a list of rows."""
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise DimensionError("matrix must be square")
        return cls(2, dim, (x for r in rows for x in r))

    @staticmethod
    def index_range(rank: int, dim: int) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(1, dim + 1), repeat=rank)

    def indices(self) -> Iterator[tuple[int, ...]]:
        return self.index_range(self.rank, self.dim)

    def _offset(self, idx: tuple[int, ...]) -> int:
        if len(idx) != self.rank:
            raise IndexError(f"rank-{self.rank} tensor indexed with {len(idx)} indices")
        off = 0
        for i in idx:
            if not 1 <= i <= self.dim:
                raise IndexError(f"index {i} outside 1..{self.dim}")
            off = off * self.dim + (i - 1)
        return off

    def __getitem__(self, idx) -> Polynomial:
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self._data[self._offset(idx)]

    def entries(self) -> tuple[Polynomial, ...]:
        return self._data

    def items(self) -> Iterator[tuple[tuple[int, ...], Polynomial]]:
        return zip(self.indices(), self._data)

    def nonzero(self) -> list[tuple[tuple[int, ...], Polynomial]]:
        return [(idx, p) for idx, p in self.items() if p]

    def is_zero(self) -> bool:
        return not any(self._data)

    def map(self, fn: Callable[[Polynomial], Polynomial]) -> "Tensor":
        return Tensor(self.rank, self.dim, (fn(p) for p in self._data))

    def evaluate(self, assignment) -> "Tensor":
        """Substitute rational values for parameters, entrywise."""
        return self.map(lambda p: p.subs(assignment))

    def _check_same_shape(self, other: "Tensor"):
        if (self.rank, self.dim) != (other.rank, other.dim):
            raise DimensionError(
                f"shape mismatch: ({self.rank}, {self.dim}) vs ({other.rank}, {other.dim})"
            )

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same_shape(other)
        return Tensor(self.rank, self.dim, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_same_shape(other)
        return Tensor(self.rank, self.dim, (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "Tensor":
        return self.map(lambda p: -p)

    def scale(self, factor) -> "Tensor":
        factor = Polynomial.coerce(factor)
        return self.map(lambda p: p * factor)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.rank, self.dim, self._data) == (other.rank, other.dim, other._data)

    def __hash__(self):
        return hash((self.rank, self.dim, self._data))

    def __repr__(self) -> str:
        nz = self.nonzero()
        return f"Tensor(rank={self.rank}, dim={self.dim}, nonzero={len(nz)})"


class MetricMatrix:
    """A symmetric, constant, nonsingular metric with its cached inverse."""

    __slots__ = ("g", "g_inv")

    def __init__(self, g: Tensor):
        if g.rank != 2:
            raise DimensionError("metric must be rank 2")
        for i, j in g.indices():
            if g[i, j] != g[j, i]:
                raise ValueError(f"metric is not symmetric at ({i}, {j})")
        self.g = g
        self.g_inv = metric_inverse(g)

    @classmethod
    def diagonal(cls, *values) -> "MetricMatrix":
        n = len(values)
        return cls(Tensor.build(2, n, lambda i, j: values[i - 1] if i == j else 0))

    @property
    def dim(self) -> int:
        return self.g.dim

    def __call__(self, x: Vector, y: Vector) -> Polynomial:
        """Inner product of two coordinate vectors."""
        _check_vec(x, self.dim)
        _check_vec(y, self.dim)
        terms = []
        for i in range(1, self.dim + 1):
            if not x[i - 1]:
                continue
            for j in range(1, self.dim + 1):
                gij = self.g[i, j]
                if gij and y[j - 1]:
                    terms.append(x[i - 1] * gij * y[j - 1])
        return poly_sum(terms)

    def lower(self, i: int, x: Vector) -> Polynomial:
        """g(X_i, x)."""
        return poly_sum(self.g[i, j] * x[j - 1] for j in range(1, self.dim + 1) if self.g[i, j])

    def __eq__(self, other):
        return isinstance(other, MetricMatrix) and self.g == other.g

    def __hash__(self):
        return hash(self.g)


def _check_vec(x: Vector, dim: int):
    if len(x) != dim:
        raise DimensionError(f"vector of length {len(x)} used with dimension {dim}")


def vector(*coords) -> Vector:
    return tuple(Polynomial.coerce(c) for c in coords)


def basis_vector(i: int, dim: int) -> Vector:
    return tuple(ONE_POLY if k == i else ZERO for k in range(1, dim + 1))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_combination(coeffs: Iterable, vectors: Iterable[Vector], dim: int) -> Vector:
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k in range(dim):
            if v[k]:
                out[k] = out[k] + c * v[k]
    return tuple(out)


def metric_inverse(g: Tensor) -> Tensor:
    """Exact Gauss-Jordan inverse of a constant rational matrix."""
    n = g.dim
    if g.rank != 2:
        raise DimensionError("metric must be rank 2")
    try:
        rows = [[g[i, j].constant_value() for j in range(1, n + 1)] for i in range(1, n + 1)]
    except ValueError:
        raise ValueError("metric entries must be constant rationals") from None
    aug = [row + [Fraction(int(i == k)) for k in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMetricError("metric is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return Tensor(2, n, (aug[i][n + j] for i in range(n) for j in range(n)))


def pi1(x: Vector, y: Vector, z: Vector, u: Vector, g: MetricMatrix) -> Polynomial:
    """g(y,z) g(x,u) - g(x,z) g(y,u)."""
    return g(y, z) * g(x, u) - g(x, z) * g(y, u)


def pi1_tensor(g: MetricMatrix) -> Tensor:
    G = g.g
    return Tensor.build(4, g.dim, lambda i, j, k, s: G[j, k] * G[i, s] - G[i, k] * G[j, s])


def psi1(rho: Tensor, g: MetricMatrix) -> Tensor:
    """g(y,z)rho(x,u) - g(x,z)rho(y,u) + rho(y,z)g(x,u) - rho(x,z)g(y,u)."""
    if rho.rank != 2 or rho.dim != g.dim:
        raise DimensionError("psi1 needs a rank-2 tensor of the metric's dimension")
    G = g.g

    def comp(x, y, z, u):
        return (
            G[y, z] * rho[x, u]
            - G[x, z] * rho[y, u]
            + rho[y, z] * G[x, u]
            - rho[x, z] * G[y, u]
        )

    return Tensor.build(4, g.dim, comp)


def full_contract(
    a: Tensor, b: Tensor, g_inv: Tensor, pairing: Sequence[tuple[int, int]]
) -> Polynomial:
    """Contract every slot of ``a`` with a slot of ``b`` through ``g_inv``.

    ``pairing`` lists ``(slot_in_a, slot_in_b)`` with 0-based slot positions
    and must be a perfect matching. Each pair contributes one ``g^{pq}``
    factor.
    """
    if a.rank != b.rank or a.dim != b.dim or g_inv.dim != a.dim:
        raise DimensionError("full_contract needs equal ranks and dimensions")
    r = a.rank
    if (
        len(pairing) != r
        or sorted(p for p, _ in pairing) != list(range(r))
        or sorted(q for _, q in pairing) != list(range(r))
    ):
        raise ValueError(f"pairing {list(pairing)} is not a perfect matching of {r} slots")
    n = a.dim
    partners = {
        i: [(j, g_inv[i, j]) for j in range(1, n + 1) if g_inv[i, j]] for i in range(1, n + 1)
    }
    terms = []
    for idx_a, va in a.items():
        if not va:
            continue
        choices = [partners[idx_a[p]] for p, _ in pairing]
        for combo in itertools.product(*choices):
            idx_b = [0] * r
            weight = ONE_POLY
            for (p, q), (j, gij) in zip(pairing, combo):
                idx_b[q] = j
                weight = weight * gij
            vb = b[tuple(idx_b)]
            if vb:
                terms.append(va * vb * weight)
    return poly_sum(terms)
