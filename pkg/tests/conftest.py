import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from norden.analysis import Geometry, family_manifold
from norden.lie import build_w3_general, jacobi_defect, killing_as_general
from norden.polynomial import PARAMETERS, Polynomial, symbols

SMALL_PARAMS = PARAMETERS[:4]


@pytest.fixture(scope="session")
def lams():
    return symbols("l1", "l2", "l3", "l4")


@pytest.fixture(scope="session")
def family(lams):
    """Geometry of the symbolic 4-parameter family, shared across the session."""
    return Geometry(family_manifold(lams))


@pytest.fixture(scope="session")
def abelian():
    return Geometry(family_manifold([0, 0, 0, 0]))


def at(**values):
    """Assignment helper: at(l1=1, l2=2) -> {'l1': Fraction(1), ...} with the rest of l1..l4 zero."""
    out = {name: Fraction(0) for name in SMALL_PARAMS}
    out.update({k: Fraction(v) for k, v in values.items()})
    return out


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, max_terms=4, max_exp=2, names=SMALL_PARAMS):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = [0] * len(PARAMETERS)
        for name in names:
            exps[PARAMETERS.index(name)] = draw(st.integers(0, max_exp))
        terms[tuple(exps)] = draw(rationals)
    return Polynomial(terms)


_general = None


def _jacobi_components():
    global _general
    if _general is None:
        lam = symbols(*PARAMETERS)
        _general = [p for _, p in jacobi_defect(build_w3_general(lam)).nonzero()]
    return _general


def satisfies_jacobi(point) -> bool:
    assignment = dict(zip(PARAMETERS, point))
    return all(p.evaluate(assignment) == 0 for p in _jacobi_components())


def jacobi_points(count, seed=0):
    """Rational 12-parameter points of the W3 bracket family that satisfy Jacobi.

    Half come from the 4-parameter invariant family, the rest are sparse
    random points scaled by a random rational and kept only if the Jacobi
    quadrics vanish there.
    """
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        if len(points) % 2 == 0:
            base = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4)]
            points.append([p.constant_value() for p in killing_as_general(base)])
            continue
        while True:
            raw = [rng.randint(-3, 3) if rng.random() < 0.35 else 0 for _ in range(12)]
            if any(raw) and satisfies_jacobi(raw):
                break
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 5)) * rng.choice((-1, 1))
        points.append([scale * x for x in raw])
    return points


# One summary line per acceptance criterion -------------------------------

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (rep.when == "call" or rep.failed):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((item.name, doc, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, doc, status in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {name}: {doc}")
