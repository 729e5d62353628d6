import random

from dequehull.geom import Direction, Line, Point
from dequehull.oracle import (
    naive_bridges,
    naive_extreme,
    naive_locate,
    naive_tangents,
    path_is_simple,
    static_hull_points,
    static_hull_path,
)


def P(x, y, o=None):
    return Point(x, y, o)


def test_hull_single_and_triangle():
    assert static_hull_points([P(1, 2)]) == [P(1, 2)]
    got = static_hull_points([P(0, 0), P(2, 0), P(1, 2)])
    assert got == [P(0, 0), P(2, 0), P(1, 2)]


def test_hull_five_point_concave_cap():
    # slopes 2, 1, -1, -2 strictly decrease: every point is a hull vertex
    pts = [P(0, 0), P(1, 2), P(2, 3), P(3, 2), P(4, 0)]
    assert static_hull_points(pts) == [P(0, 0), P(4, 0), P(3, 2), P(2, 3), P(1, 2)]


def test_hull_five_point_triangle():
    pts = [P(0, 0), P(1, 1), P(2, 3), P(3, 1), P(4, 0)]
    assert static_hull_points(pts) == [P(0, 0), P(4, 0), P(2, 3)]


def test_hull_two_points():
    assert static_hull_points([P(3, 1), P(0, 0)]) == [P(0, 0), P(3, 1)]


def test_collinear_on_upper_kept_lower_dropped():
    # interior collinear points survive on the top boundary, not the bottom
    pts = [P(0, 0), P(2, 0), P(4, 0), P(0, 4), P(2, 4), P(4, 4)]
    got = static_hull_points(pts)
    assert got == [P(0, 0), P(4, 0), P(4, 4), P(2, 4), P(0, 4)]


def test_melkman_agrees_with_sweep_on_random_simple_paths():
    rng = random.Random(11)
    done = 0
    while done < 300:
        n = rng.randrange(3, 40)
        path = random_simple_path(rng, n)
        if path is None:
            continue
        done += 1
        assert static_hull_path(path) == static_hull_points(path), path


def random_simple_path(rng, n, span=40):
    for _ in range(30):
        pts = []
        seen = set()
        while len(pts) < n:
            p = Point(rng.randrange(-span, span), rng.randrange(-span, span), len(pts))
            if (p.x, p.y) in seen:
                continue
            npth = pts + [p]
            ok = True
            if len(pts) >= 1:
                a = pts[-1]
                for c, d in zip(pts, pts[1:]):
                    from dequehull.geom import segments_cross, on_segment

                    if (c, d) == (pts[-1], p):
                        continue
                    if d is a:
                        if on_segment(c, d, p) or on_segment(a, p, c):
                            ok = False
                            break
                        continue
                    if segments_cross(a, p, c, d):
                        ok = False
                        break
                if ok and any(on_segment(pts[-1], p, q) for q in pts[:-1]):
                    ok = False
            if ok:
                seen.add((p.x, p.y))
                pts.append(p)
            else:
                break
        if len(pts) == n and path_is_simple(pts):
            return pts
    return None


def test_naive_queries_small():
    hull = static_hull_points([P(0, 0), P(4, 0), P(2, 3)])
    assert naive_extreme(hull, Direction(0, 1)) == P(2, 3)
    assert naive_locate(hull, P(2, 1)) == "in"
    assert naive_locate(hull, P(2, 0)) == "on"
    assert naive_locate(hull, P(9, 9)) == "out"
    t = naive_tangents(hull, P(2, 10))
    assert t == (P(4, 0), P(0, 0))
    b = naive_bridges(hull, Line(P(2, -9), P(2, 9)))
    assert b is not None
    far, near = b
    assert near == (P(0, 0), P(4, 0))


def test_path_is_simple():
    assert path_is_simple([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
    assert not path_is_simple([P(0, 0), P(2, 0), P(1, 1), P(1, -1)])
    assert path_is_simple([P(0, 0), P(1, 0), P(2, 0)])  # straight continuation is fine
    assert not path_is_simple([P(0, 0), P(2, 0), P(1, 0)])  # backtracking overlaps
