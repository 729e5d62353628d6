"""Brute-force references: static hulls and linear-scan hull queries.

Everything here shares the exact tie rules of `geom`, so structure output
can be compared against these references by literal equality.  The scans are
deliberately naive; they are the ground truth the dynamic structures are
validated against, not production paths.
"""

from __future__ import annotations

from .geom import (
    Direction,
    Kind,
    Line,
    Point,
    Turn,
    compare_along,
    lex_key,
    line_along,
    line_side,
    on_segment,
    orientation,
    segments_cross,
)


def _build_chain(pts: list[Point], kind: Kind) -> list[Point]:
    keep = Turn.RIGHT if kind is Kind.UPPER else Turn.LEFT
    out: list[Point] = []
    for p in pts:
        while len(out) >= 2 and orientation(out[-2], out[-1], p) is not keep:
            out.pop()
        out.append(p)
    return out


def hull_chains(points: list[Point]) -> tuple[list[Point], list[Point]]:
    """(lower, upper) chains of the point set, both including the two
    lex-extreme vertices, after dropping duplicate (x, y) pairs."""
    seen: set[tuple[int, int]] = set()
    pts: list[Point] = []
    for p in sorted(points, key=lex_key):
        if (p.x, p.y) not in seen:
            seen.add((p.x, p.y))
            pts.append(p)
    if not pts:
        return [], []
    lower = _build_chain(pts, Kind.LOWER)
    upper = _build_chain(pts, Kind.UPPER)
    return lower, upper


def ccw_hull(lower: list[Point], upper: list[Point]) -> list[Point]:
    """Canonical report: counterclockwise from the lex-min vertex."""
    if not lower:
        return []
    if len(lower) == 1 and len(upper) == 1:
        return [lower[0]]
    return lower + upper[-2:0:-1]


def static_hull_points(points: list[Point]) -> list[Point]:
    """Monotone-sweep hull of a point set, canonical CCW order."""
    lower, upper = hull_chains(points)
    return ccw_hull(lower, upper)


def static_hull_path(path: list[Point]) -> list[Point]:
    """Hull of a simple path by the rolling-deque method, canonical order.

    Linear time along the path; equals static_hull_points on the vertex set
    (cross-checked in tests, relied on nowhere).
    """
    pts = [p for p in path]
    if len(pts) <= 2:
        return static_hull_points(pts)
    from collections import deque

    a, b, c = pts[0], pts[1], pts[2]
    if orientation(a, b, c) is Turn.LEFT:
        dq = deque([c, a, b, c])
    else:
        dq = deque([c, b, a, c])
    for p in pts[3:]:
        if orientation(dq[-2], dq[-1], p) is Turn.LEFT and orientation(dq[0], dq[1], p) is Turn.LEFT:
            continue
        while len(dq) >= 2 and orientation(dq[-2], dq[-1], p) is not Turn.LEFT:
            dq.pop()
        dq.append(p)
        while len(dq) >= 2 and orientation(p, dq[0], dq[1]) is not Turn.LEFT:
            dq.popleft()
        dq.appendleft(p)
    cyc = list(dq)[:-1]  # CCW cycle, arbitrary rotation
    start = min(range(len(cyc)), key=lambda i: lex_key(cyc[i]))
    return cyc[start:] + cyc[:start]


def path_is_simple(path: list[Point]) -> bool:
    """O(n^2) segment-pair check, shared by generators and tests."""
    segs = list(zip(path, path[1:]))
    for i in range(len(segs)):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if j == i + 1:
                # adjacent segments share exactly the joint vertex
                if on_segment(c, d, a) or on_segment(a, b, d):
                    return False
                continue
            if segments_cross(a, b, c, d):
                return False
    seen = {(p.x, p.y) for p in path}
    return len(seen) == len(path)


# ---------------------------------------------------------------------------
# Naive query answers against a canonical CCW hull list.


def naive_extreme(hull: list[Point], d: Direction) -> Point:
    best = hull[0]
    for p in hull[1:]:
        if compare_along(d, p, best) > 0:
            best = p
    return best


def naive_locate(hull: list[Point], p: Point) -> str:
    n = len(hull)
    if n == 1:
        return "on" if (hull[0].x, hull[0].y) == (p.x, p.y) else "out"
    if n == 2:
        return "on" if on_segment(hull[0], hull[1], p) else "out"
    on_edge = False
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        s = orientation_sign(a, b, p)
        if s < 0:
            return "out"
        if s == 0 and on_segment(a, b, p):
            on_edge = True
        elif s == 0:
            return "out"
    return "on" if on_edge else "in"


def orientation_sign(a: Point, b: Point, p: Point) -> int:
    v = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
    return 0 if v == 0 else (1 if v > 0 else -1)


def naive_tangents(hull: list[Point], q: Point) -> tuple[Point, Point] | None:
    """(clockwise-most, counterclockwise-most) tangency vertices from q, or
    None when q is inside or on the hull."""
    if naive_locate(hull, q) != "out":
        return None
    n = len(hull)
    if n == 1:
        return hull[0], hull[0]
    if n == 2:
        a, b = hull[0], hull[1]
        return (a, b) if orientation(q, a, b) is Turn.LEFT else (b, a)
    vis = [orientation(hull[i], hull[(i + 1) % n], q) is Turn.RIGHT for i in range(n)]
    start = end = None
    for i in range(n):
        if vis[i] and not vis[(i - 1) % n]:
            start = i
        if vis[i] and not vis[(i + 1) % n]:
            end = (i + 1) % n
    assert start is not None and end is not None
    return hull[start], hull[end]


def _stick(v: int) -> int:
    return v if v != 0 else 1


def naive_bridges(hull: list[Point], l: Line) -> tuple[tuple[Point, Point], tuple[Point, Point]] | None:
    """((far edge), (near edge)) crossing the line, far meaning the larger
    position along the line direction; None when the line misses the hull.
    Vertices exactly on the line stick to the positive side."""
    n = len(hull)
    if n < 2:
        return None
    sides = [_stick(line_side(l, p)) for p in hull]
    if n == 2:
        if sides[0] != sides[1]:
            e = (hull[0], hull[1])
            return e, e
        return None
    crossings: list[tuple[int, tuple[Point, Point]]] = []
    for i in range(n):
        j = (i + 1) % n
        if sides[i] != sides[j]:
            crossings.append((i, (hull[i], hull[j])))
    if not crossings:
        return None
    assert len(crossings) == 2, crossings

    def along_num_den(e: tuple[Point, Point]) -> tuple[int, int]:
        a, b = e
        ta, tb = line_side_val(l, a), line_side_val(l, b)
        # crossing parameter along the edge: ta / (ta - tb); position along l
        sa, sb = line_along(l, a), line_along(l, b)
        num = sa * (ta - tb) + (sb - sa) * ta
        den = ta - tb
        return num, den

    (e1, e2) = (crossings[0][1], crossings[1][1])
    n1, d1 = along_num_den(e1)
    n2, d2 = along_num_den(e2)
    v = n1 * d2 - n2 * d1
    if d1 * d2 < 0:
        v = -v
    far, near = (e1, e2) if v > 0 else (e2, e1)
    return far, near


def line_side_val(l: Line, p: Point) -> int:
    (ax, ay, _), (bx, by, _) = l.a, l.b
    return (bx - ax) * (p.y - ay) - (by - ay) * (p.x - ax)
