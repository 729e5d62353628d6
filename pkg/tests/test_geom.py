import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dequehull.geom import (
    Direction,
    Point,
    Turn,
    compare_along,
    cross,
    lex_less,
    orientation,
)

coord = st.integers(min_value=-50, max_value=50)
pts = st.builds(Point, coord, coord)


def test_orientation_basic():
    assert orientation(Point(0, 0), Point(1, 0), Point(1, 1)) is Turn.LEFT
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 0)) is Turn.RIGHT
    # collinear mid-point resolves Right, per the fixed perturbation rule
    assert orientation(Point(0, 0), Point(1, 0), Point(2, 0)) is Turn.RIGHT


def test_orientation_duplicate_raises():
    with pytest.raises(ValueError):
        orientation(Point(0, 0), Point(0, 0), Point(1, 1))


def test_orientation_collinear_vertical_and_reversed():
    assert orientation(Point(0, 0), Point(0, 1), Point(0, 2)) is Turn.RIGHT
    assert orientation(Point(0, 2), Point(0, 1), Point(0, 0)) is Turn.LEFT
    assert orientation(Point(2, 0), Point(1, 0), Point(0, 0)) is Turn.LEFT


@given(pts, pts, pts)
def test_orientation_antisymmetric_noncollinear(p, q, r):
    if len({(a.x, a.y) for a in (p, q, r)}) < 3:
        return
    if cross(p, q, r) == 0:
        return
    assert orientation(p, q, r) is not orientation(p, r, q)


@given(pts, pts, pts)
def test_orientation_matches_rational_sign(p, q, r):
    if len({(a.x, a.y) for a in (p, q, r)}) < 3:
        return
    c = Fraction(q.x - p.x) * Fraction(r.y - p.y) - Fraction(q.y - p.y) * Fraction(r.x - p.x)
    if c > 0:
        assert orientation(p, q, r) is Turn.LEFT
    elif c < 0:
        assert orientation(p, q, r) is Turn.RIGHT


def test_orientation_near_coordinate_limit():
    m = (1 << 62) - 1
    assert orientation(Point(-m, -m), Point(m, m - 1), Point(m, m)) in (Turn.LEFT, Turn.RIGHT)
    assert orientation(Point(0, 0), Point(m, 0), Point(m, m)) is Turn.LEFT


def test_compare_along():
    d = Direction(0, 1)
    assert compare_along(d, Point(0, 3), Point(5, 1)) > 0
    # equal dot products break on (x, y, ord): (2,0) orders before (2,9)
    d = Direction(1, 0)
    assert compare_along(d, Point(2, 9), Point(2, 0)) > 0
    assert compare_along(Direction(1, 1), Point(1, 1), Point(2, -1)) > 0


def test_collinear_triples_exhaust_small_grid():
    rng = random.Random(7)
    for _ in range(2000):
        xs = sorted(rng.sample(range(-8, 9), 3))
        p, q, r = (Point(x, 3 * x + 1) for x in xs)  # collinear by construction
        assert orientation(p, q, r) is Turn.RIGHT
        assert orientation(r, q, p) is Turn.LEFT


def test_lex_less():
    assert lex_less(Point(0, 5), Point(1, -5))
    assert lex_less(Point(0, 0), Point(0, 4))
