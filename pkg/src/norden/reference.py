"""Published component tables for the 4-parameter family, as printed.

Values are kept exactly as printed, including the entries that the
computation shows to be misprints (F211/F233, R1441, rho44 and the repeated
alpha14 label); ``CORRECTIONS`` holds recomputed values for two of them.
"""

from __future__ import annotations

from fractions import Fraction

from .parser import parse_scalar

# Each group: entries c * F_{ijk} all equal to the named parameter.
F_GROUPS = {
    "l1": [(-1, "122"), (-1, "144"), (2, "212"), (2, "221"), (2, "234"),
           (2, "243"), (2, "414"), (-2, "423"), (-2, "432"), (2, "441")],
    "l2": [(2, "112"), (2, "121"), (2, "134"), (2, "143"), (-2, "211"),
           (-2, "233"), (-2, "314"), (2, "323"), (2, "332"), (-2, "341")],
    "l3": [(2, "214"), (-2, "223"), (-2, "232"), (2, "241"), (1, "322"),
           (1, "344"), (-2, "412"), (-2, "421"), (-2, "434"), (-2, "443")],
    "l4": [(-2, "114"), (2, "123"), (2, "132"), (-2, "141"), (-2, "312"),
           (-2, "321"), (-2, "334"), (-2, "343"), (1, "411"), (1, "433")],
}


def f_table():
    """{(i, j, k): polynomial} for every printed nonzero F component."""
    out = {}
    for name, entries in F_GROUPS.items():
        lam = parse_scalar(name)
        for coeff, idx in entries:
            out[tuple(int(c) for c in idx)] = lam / Fraction(coeff)
    return out


# N(X_i, X_j) as coordinates in X_1..X_4.
NIJENHUIS = {
    (1, 2): "2*l4, -2*l3, 2*l2, -2*l1",
    (3, 4): "-2*l4, 2*l3, -2*l2, 2*l1",
    (1, 4): "2*l2, -2*l1, -2*l4, 2*l3",
    (2, 3): "-2*l2, 2*l1, 2*l4, -2*l3",
}

NIJENHUIS_NORM = "-32*(l1^2 + l2^2 - l3^2 - l4^2)"
NABLA_J_NORM = "4*(l1^2 + l2^2 - l3^2 - l4^2)"

CURVATURE = {
    (1, 2, 2, 1): "-1/4*(l1^2 + l2^2)",
    (1, 3, 3, 1): "1/4*(l2^2 - l4^2)",
    (1, 4, 4, 1): "-1/4*(l1^2 - l4^2)",
    (2, 3, 3, 2): "1/4*(l2^2 - l3^2)",
    (2, 4, 4, 2): "1/4*(l1^2 - l3^2)",
    (3, 4, 4, 3): "1/4*(l3^2 + l4^2)",
    (1, 3, 4, 1): "-1/4*l1*l2",
    (2, 3, 4, 2): "-1/4*l1*l2",
    (2, 1, 3, 2): "1/4*l1*l3",
    (4, 1, 3, 4): "-1/4*l1*l3",
    (1, 2, 3, 1): "1/4*l1*l4",
    (4, 2, 3, 4): "-1/4*l1*l4",
    (2, 1, 4, 2): "1/4*l2*l3",
    (3, 1, 4, 3): "-1/4*l2*l3",
    (1, 2, 4, 1): "1/4*l2*l4",
    (3, 2, 4, 3): "-1/4*l2*l4",
    (3, 1, 2, 3): "1/4*l3*l4",
    (4, 1, 2, 4): "1/4*l3*l4",
}

RICCI = {
    (1, 1): "-1/2*(l1^2 + l2^2 - l4^2)",
    (2, 2): "-1/2*(l1^2 + l2^2 - l3^2)",
    (3, 3): "1/2*(l2^2 - l3^2 - l4^2)",
    (4, 4): "1/2*(l1^2 + l3^2 - l4^2)",
    (1, 2): "-1/2*l3*l4",
    (1, 3): "1/2*l1*l3",
    (1, 4): "1/2*l2*l3",
    (2, 3): "1/2*l1*l4",
    (2, 4): "1/2*l2*l4",
    (3, 4): "-1/2*l1*l2",
}

SCALAR = "-3/2*(l1^2 + l2^2 - l3^2 - l4^2)"

# (printed label, plane, value); the last row repeats the label (1, 4).
SECTIONAL = [
    ((1, 3), (1, 3), "-1/4*(l2^2 - l4^2)"),
    ((2, 4), (2, 4), "-1/4*(l1^2 - l3^2)"),
    ((1, 2), (1, 2), "-1/4*(l1^2 + l2^2)"),
    ((1, 4), (1, 4), "-1/4*(l1^2 - l4^2)"),
    ((2, 3), (2, 3), "-1/4*(l2^2 - l3^2)"),
    ((1, 4), (3, 4), "1/4*(l3^2 + l4^2)"),
]

HOLOMORPHIC_PLANES = [(1, 3), (2, 4)]
TOTALLY_REAL_PLANES = [(1, 2), (1, 4), (2, 3), (3, 4)]

CONE = "l1^2 + l2^2 - l3^2 - l4^2"

CORRECTIONS = {
    "R1441": "1/4*(l1^2 - l4^2)",
    "rho44": "1/2*(l1^2 - l3^2 - l4^2)",
}
