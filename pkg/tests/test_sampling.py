from fractions import Fraction

import pytest

from norden.sampling import draw_points, evaluate_point, sample


def test_draw_points_deterministic_and_in_range():
    a = draw_points(50, 9, Fraction(-2), Fraction(3))
    assert a == draw_points(50, 9, Fraction(-2), Fraction(3))
    assert a != draw_points(50, 10, Fraction(-2), Fraction(3))
    assert all(Fraction(-2) <= x <= 3 and (x * 1000).denominator == 1 for p in a for x in p)


def test_invalid_range():
    with pytest.raises(ValueError):
        draw_points(1, 0, Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        draw_points(1, 0, Fraction(1, 3), Fraction(1))
    with pytest.raises(ValueError):
        sample(0, 0, Fraction(0), Fraction(1))


def test_evaluate_point_values():
    p = evaluate_point((Fraction(2), Fraction(0), Fraction(1), Fraction(0)))
    assert p.tau == Fraction(-9, 2)
    assert p.norm_nabla_J == 12 and p.norm_N == -96
    assert not p.isotropic


def test_forced_point_on_cone():
    s = sample(1, 0, Fraction(-10), Fraction(10), include=[(1, 1, 1, 1)])
    assert s.isotropic_count == 1
    assert s.points[0].lams == (1, 1, 1, 1)


def test_forced_points_count_towards_total():
    s = sample(3, 5, Fraction(-1), Fraction(1), include=[(3, 4, 5, 0)])
    assert len(s.points) == 3 and s.isotropic_count >= 1
    with pytest.raises(ValueError):
        sample(1, 0, Fraction(0), Fraction(1), include=[(1, 1, 1, 1), (0, 0, 0, 0)])


def test_summary_is_reproducible():
    a = sample(10, 42, Fraction(-10), Fraction(10))
    b = sample(10, 42, Fraction(-10), Fraction(10))
    assert a.to_dict(True) == b.to_dict(True)
    d = a.to_dict()
    taus = [p.tau for p in a.points]
    assert d["tau_min"] == str(min(taus)) and d["tau_max"] == str(max(taus))
    assert "points" not in d


def test_parallel_matches_serial():
    a = sample(6, 1, Fraction(-3), Fraction(3))
    b = sample(6, 1, Fraction(-3), Fraction(3), workers=2)
    assert a.to_dict(True) == b.to_dict(True)
