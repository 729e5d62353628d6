"""Exact planar primitives: points, turns, and tie-free predicates.

All predicates are computed in exact integer arithmetic.  Degenerate inputs
(collinear triples, equal coordinates) are resolved by a fixed deterministic
perturbation so that every caller - dynamic structures and brute-force
oracles alike - sees the same general-position world and produces
byte-identical answers.

The perturbation, conceptually: first shear x := x + g*y for an
infinitesimal g > 0 (orders equal-x points bottom-to-top without changing
any orientation sign), then nudge every point's y down by eps**(rank+1),
where rank is the point's position in (x, y, ord) lexicographic order and
eps is a second, much smaller infinitesimal.  Under this rule a horizontal
collinear triple taken left-to-right turns Right, so a point interior to a
collinear run survives on an upper chain and is dropped from a lower chain.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .steps import COUNTER

COORD_BITS = 62  # |x|,|y| < 2**62 keeps every 3-point predicate in 126 bits


class Point(NamedTuple):
    x: int
    y: int
    ord: int | None = None  # path/insertion ordinal; unique within a structure

    def __repr__(self) -> str:  # ords are bookkeeping, keep reprs short
        return f"({self.x},{self.y})" if self.ord is None else f"({self.x},{self.y};{self.ord})"


class Direction(NamedTuple):
    dx: int
    dy: int


class Line(NamedTuple):
    a: Point
    b: Point


class Turn(enum.Enum):
    LEFT = 1
    RIGHT = -1


class Kind(enum.Enum):
    """Chain kind: Upper chains turn Right left-to-right, Lower chains Left."""

    UPPER = 0
    LOWER = 1


def lex_key(p: Point) -> tuple[int, int, int]:
    return (p.x, p.y, p.ord if p.ord is not None else 0)


def lex_less(p: Point, q: Point) -> bool:
    """The left-to-right order used by every monotone structure."""
    return lex_key(p) < lex_key(q)


def cross(p: Point, q: Point, r: Point) -> int:
    """Exact 2x2 cross product of (q-p, r-p); positive means left turn."""
    COUNTER.bump()
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def _shear_cmp(a: Point, b: Point) -> int:
    """Sign of sheared-x(a) - sheared-x(b); 0 only for coincident (x, y)."""
    if a.x != b.x:
        return 1 if a.x > b.x else -1
    if a.y != b.y:
        return 1 if a.y > b.y else -1
    return 0


def orientation(p: Point, q: Point, r: Point) -> Turn:
    """Turn of the path p -> q -> r, total and deterministic.

    Collinear triples are resolved by the module's perturbation rule:
    the sign is taken from the dominant (lexicographically smallest)
    point's downward nudge, using sheared x-differences of the other two.
    """
    c = cross(p, q, r)
    if c > 0:
        return Turn.LEFT
    if c < 0:
        return Turn.RIGHT
    kp, kq, kr = lex_key(p), lex_key(q), lex_key(r)
    if kp == kq or kq == kr or kp == kr:
        raise ValueError("degenerate triple")
    if kp < kq and kp < kr:
        s = _shear_cmp(r, q)
    elif kq < kr:
        s = _shear_cmp(p, r)
    else:
        s = _shear_cmp(q, p)
    # s cannot be 0: the other two points are distinct and collinear triples
    # with equal sheared x would coincide.
    return Turn.RIGHT if s > 0 else Turn.LEFT


def convex_turn(kind: Kind, p: Point, q: Point, r: Point) -> bool:
    """True when q is a convex (keepable) vertex between p and r."""
    t = orientation(p, q, r)
    return t is Turn.RIGHT if kind is Kind.UPPER else t is Turn.LEFT


def dot(d: Direction, p: Point) -> int:
    COUNTER.bump()
    return d.dx * p.x + d.dy * p.y


def compare_along(d: Direction, p: Point, q: Point) -> int:
    """Total order along direction d: sign of p - q, dot products first,
    (x, y, ord) lexicographic on ties.  0 only for identical points."""
    a, b = dot(d, p), dot(d, q)
    if a != b:
        return 1 if a > b else -1
    kp, kq = lex_key(p), lex_key(q)
    if kp != kq:
        return 1 if kp > kq else -1
    return 0


def direction_cmp_ccw(a: Direction, b: Direction) -> int:
    """Compare directions by angle in [0, 2pi), counterclockwise from +x."""
    # half: False for angle in [0, pi), i.e. dy > 0 or (dy == 0 and dx > 0)
    ha = not (a.dy > 0 or (a.dy == 0 and a.dx > 0))
    hb = not (b.dy > 0 or (b.dy == 0 and b.dx > 0))
    if ha != hb:
        return 1 if ha else -1
    COUNTER.bump()
    c = a.dx * b.dy - a.dy * b.dx
    if c != 0:
        return -1 if c > 0 else 1
    return 0


def line_side(l: Line, p: Point) -> int:
    """Sign of p against the directed line a->b: +1 left, -1 right, 0 on."""
    COUNTER.bump()
    (ax, ay, _), (bx, by, _) = l.a, l.b
    v = (bx - ax) * (p.y - ay) - (by - ay) * (p.x - ax)
    return 0 if v == 0 else (1 if v > 0 else -1)


def line_along(l: Line, p: Point) -> int:
    """Position of p along the line direction (exact dot with b - a)."""
    COUNTER.bump()
    (ax, ay, _), (bx, by, _) = l.a, l.b
    return (bx - ax) * (p.x - ax) + (by - ay) * (p.y - ay)


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True when p lies on the closed segment ab (exact, unperturbed)."""
    if (b.x - a.x) * (p.y - a.y) != (b.y - a.y) * (p.x - a.x):
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Proper or improper intersection of closed segments ab and cd."""

    def sgn(p: Point, q: Point, r: Point) -> int:
        v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
        return 0 if v == 0 else (1 if v > 0 else -1)

    d1, d2 = sgn(a, b, c), sgn(a, b, d)
    d3, d4 = sgn(c, d, a), sgn(c, d, b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(a, b, c))
        or (d2 == 0 and on_segment(a, b, d))
        or (d3 == 0 and on_segment(c, d, a))
        or (d4 == 0 and on_segment(c, d, b))
    )


def check_coord(v: int) -> int:
    if not -(1 << COORD_BITS) < v < (1 << COORD_BITS):
        raise OverflowError(f"coordinate {v} needs more than {COORD_BITS + 1} signed bits")
    return v
