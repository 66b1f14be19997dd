"""Brute-force sympy reference for the curvature pipeline.

Independent of norden's tensor code: the connection is obtained by solving
the Koszul equations as a linear system and curvature is applied to basis
fields through explicit matrix products.
"""

import itertools

import sympy as sp


def bracket_matrix(brackets, n):
    """ad-table C[i][j] = sympy vector of [X_i, X_j] (0-based)."""
    C = [[sp.zeros(n, 1) for _ in range(n)] for _ in range(n)]
    for (i, j), coords in brackets.items():
        v = sp.Matrix(coords)
        C[i - 1][j - 1] = v
        C[j - 1][i - 1] = -v
    return C


def connection(C, g):
    n = g.shape[0]
    unknowns = sp.symbols(f"G0:{n ** 3}")
    G = {(i, j, k): unknowns[(i * n + j) * n + k] for i in range(n) for j in range(n) for k in range(n)}
    eqs = []
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = 2 * sum(G[i, j, m] * g[m, k] for m in range(n))
        rhs = (C[i][j].T * g[:, k])[0] + (C[k][i].T * g[:, j])[0] + (C[k][j].T * g[:, i])[0]
        eqs.append(lhs - rhs)
    sol = sp.solve(eqs, unknowns, dict=True)[0]
    return {key: sp.expand(sol[sym]) for key, sym in G.items()}


def curvature(C, g, G):
    """R_{ijks} = g(R(X_i, X_j) X_k, X_s)."""
    n = g.shape[0]
    nab = [sp.Matrix(n, n, lambda k, j, i=i: G[i, j, k]) for i in range(n)]  # column j = nabla_i X_j
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        ad = C[i][j]
        nabla_bracket = sum((ad[m] * nab[m] for m in range(n)), sp.zeros(n, n))
        Rop = nab[i] * nab[j] - nab[j] * nab[i] - nabla_bracket
        for k, s in itertools.product(range(n), repeat=2):
            out[i + 1, j + 1, k + 1, s + 1] = sp.expand((Rop[:, k].T * g[:, s])[0])
    return out


def ricci_scalar(R, g):
    n = g.shape[0]
    gi = g.inv()
    rho = {
        (a, b): sp.expand(sum(gi[i - 1, j - 1] * R[i, a, b, j] for i in range(1, n + 1) for j in range(1, n + 1)))
        for a in range(1, n + 1) for b in range(1, n + 1)
    }
    tau = sp.expand(sum(gi[i - 1, j - 1] * rho[i, j] for i in range(1, n + 1) for j in range(1, n + 1)))
    return rho, tau


def to_sympy(p):
    """norden Polynomial -> sympy expression via its printed form."""
    return sp.sympify(str(p).replace("^", "**"))
