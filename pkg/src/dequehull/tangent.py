"""Common tangent of two sheared-x-separated convex chains.

Tandem binary search: each round classifies the two candidate vertices
against the candidate line as Supporting, Prev-above, or Next-above, and the
pair of states dictates a sound window shrink.  The one genuinely ambiguous
pair (left candidate's next edge above, right candidate's prev edge above)
is resolved by intersecting the two offending edge lines and comparing the
intersection against a separator abscissa between the chains, exactly.

Two drivers share the classification logic: a tree-descent driver used by
the incremental merge processes (O(1) work per step, windows are subtrees),
and a rank-window driver for query-time views, with an optional exponential
left-anchored probe policy whose cost scales with the distance of the
tangent from the left end rather than the chain size.
"""

from __future__ import annotations

from .geom import Kind, Point, Turn, lex_key, orientation
from .hulltree import ChainView, Node, size
from .steps import COUNTER

# Sheared coordinates are x + g*y for an infinitesimal g > 0; quantities in
# the separator test are degree <= 2 polynomials in g, kept exactly.


def _p1(x: int, y: int) -> tuple[int, int, int]:
    return (x, y, 0)


def _pmul(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    # both factors have degree <= 1
    return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1])


def _psub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])

def _padd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _pscale(a, k: int):
    return (a[0] * k, a[1] * k, a[2] * k)


def _psign(a) -> int:
    for c in a:
        if c:
            return 1 if c > 0 else -1
    return 0


class _Side:
    """One chain's candidate cursor: current vertex plus true neighbours."""

    __slots__ = ("pt", "prev", "next")

    def __init__(self, pt: Point, prev: Point | None, nxt: Point | None) -> None:
        self.pt = pt
        self.prev = prev
        self.next = nxt


def _classify(kind: Kind, a: _Side, b: _Side) -> tuple[int, int]:
    """(state_a, state_b): 0 supporting, 1 prev-above, 2 next-above."""
    above = Turn.LEFT if kind is Kind.UPPER else Turn.RIGHT

    def st(s: _Side) -> int:
        if s.prev is not None and orientation(a.pt, b.pt, s.prev) is above:
            return 1
        if s.next is not None and orientation(a.pt, b.pt, s.next) is above:
            return 2
        return 0

    return st(a), st(b)


def _z_before_separator(a: _Side, b: _Side, sep2: tuple[int, int]) -> bool:
    """Separator rule for the (next-above, prev-above) state pair.

    Intersect the left chain's out-edge line with the right chain's in-edge
    line; True when the intersection lies at or left of the separator in
    sheared order, in which case the tangent is right of the left candidate.
    """
    p, q = a.pt, a.next
    r, s = b.prev, b.pt
    dx1 = _p1(q.x - p.x, q.y - p.y)
    dy1 = q.y - p.y
    dx2 = _p1(s.x - r.x, s.y - r.y)
    dy2 = s.y - r.y
    # D = dx1*dy2 - dy1*dx2 (degree <= 1), nonzero in this state pair
    D = _psub(_pscale(dx1, dy2), _pscale(dx2, dy1))
    rpx = _p1(r.x - p.x, r.y - p.y)
    N = _psub(_pscale(rpx, dy2), _pscale(dx2, r.y - p.y))
    px = _p1(p.x, p.y)
    zxD = _padd(_pmul(px, D), _pmul(dx1, N))
    sepx = _p1(sep2[0], sep2[1])
    expr = _psub(_pscale(zxD, 2), _pmul(sepx, D))
    sd = _psign(D)
    v = _psign(expr) * sd
    return v <= 0


_FOUND, _A_LEFT, _A_RIGHT, _B_LEFT, _B_RIGHT, _BOTH_IN = range(6)


def _decide(kind: Kind, a: _Side, b: _Side, sep2: tuple[int, int]) -> int:
    sa, sb = _classify(kind, a, b)
    if sa == 0 and sb == 0:
        return _FOUND
    if sa == 2 and sb == 0:
        return _A_RIGHT
    if sa == 1 and sb == 0:
        return _A_LEFT
    if sa == 0 and sb == 2:
        return _B_RIGHT
    if sa == 0 and sb == 1:
        return _B_LEFT
    if sa == 2 and sb == 2:
        return _B_RIGHT
    if sa == 1 and sb == 1:
        return _A_LEFT
    if sa == 1 and sb == 2:
        return _BOTH_IN
    # sa == 2 and sb == 1: separator rule
    return _A_RIGHT if _z_before_separator(a, b, sep2) else _B_LEFT


class TangentDescent:
    """Resumable tangent search descending two tree roots in tandem.

    Each step() performs one classification and one child move; total steps
    are bounded by the two heights.  State is six handles, so snapshots for
    the rollback journal are O(1).
    """

    __slots__ = ("kind", "sep2", "na", "pa", "sa", "nb", "pb", "sb", "done", "result")

    def __init__(self, left: Node, right: Node, kind: Kind) -> None:
        self.kind = kind
        la, fb = left.lp, right.fp
        self.sep2 = (la.x + fb.x, la.y + fb.y)
        self.na, self.pa, self.sa = left, None, None  # node, pred-anchor, succ-anchor
        self.nb, self.pb, self.sb = right, None, None
        self.done = False
        self.result: tuple[Point, Point] | None = None

    def _side(self, node: Node, pred_anchor: Point | None, succ_anchor: Point | None) -> _Side:
        prev = node.l.lp if node.l else pred_anchor
        nxt = node.r.fp if node.r else succ_anchor
        return _Side(node.pt, prev, nxt)

    def snapshot(self):
        return (self.na, self.pa, self.sa, self.nb, self.pb, self.sb, self.done, self.result)

    def restore(self, snap) -> None:
        (self.na, self.pa, self.sa, self.nb, self.pb, self.sb, self.done, self.result) = snap

    def _a_left(self) -> None:
        nxt = self.na.l
        assert nxt is not None, "tangent search moved off the left chain"
        self.sa = self.na.pt
        self.na = nxt

    def _a_right(self) -> None:
        nxt = self.na.r
        assert nxt is not None, "tangent search moved off the left chain"
        self.pa = self.na.pt
        self.na = nxt

    def _b_left(self) -> None:
        nxt = self.nb.l
        assert nxt is not None, "tangent search moved off the right chain"
        self.sb = self.nb.pt
        self.nb = nxt

    def _b_right(self) -> None:
        nxt = self.nb.r
        assert nxt is not None, "tangent search moved off the right chain"
        self.pb = self.nb.pt
        self.nb = nxt

    def step(self) -> bool:
        if self.done:
            return True
        COUNTER.bump()
        a = self._side(self.na, self.pa, self.sa)
        b = self._side(self.nb, self.pb, self.sb)
        act = _decide(self.kind, a, b, self.sep2)
        if act == _FOUND:
            self.done = True
            self.result = (a.pt, b.pt)
            return True
        if act == _A_RIGHT:
            self._a_right()
        elif act == _A_LEFT:
            self._a_left()
        elif act == _B_RIGHT:
            self._b_right()
        elif act == _B_LEFT:
            self._b_left()
        else:  # _BOTH_IN: tangent is left of a and right of b
            self._a_left()
            self._b_right()
        return False

    def run(self) -> tuple[Point, Point]:
        while not self.step():
            pass
        assert self.result is not None
        return self.result


def tree_tangent(left: Node, right: Node, kind: Kind) -> tuple[Point, Point]:
    return TangentDescent(left, right, kind).run()


class _ViewCursor:
    __slots__ = ("v", "lo", "hi", "i")

    def __init__(self, v: ChainView) -> None:
        self.v = v
        self.lo, self.hi = 0, len(v) - 1
        self.i = (self.lo + self.hi) // 2

    def side(self) -> _Side:
        v, i = self.v, self.i
        prev = v.get(i - 1) if i > 0 else None
        nxt = v.get(i + 1) if i + 1 < len(v) else None
        return _Side(v.get(i), prev, nxt)


def view_tangent(
    left: ChainView, right: ChainView, exponential_left: bool = False
) -> tuple[Point, Point]:
    """Tangent between separated view chains.

    With exponential_left the left probe starts at the left end and doubles
    its offset until the window brackets the answer, so the cost depends on
    the final tangent offset, not on len(left).
    """
    if len(left) == 0 or len(right) == 0:
        raise ValueError("empty chain")
    kind = left.kind
    la, fb = left.last(), right.first()
    sep2 = (la.x + fb.x, la.y + fb.y)
    ca, cb = _ViewCursor(left), _ViewCursor(right)
    span = 1
    bracketed = not exponential_left
    if exponential_left:
        ca.i = 0

    def a_move_right() -> None:
        nonlocal span
        ca.lo = ca.i + 1
        if bracketed:
            ca.i = (ca.lo + ca.hi) // 2
        else:
            span *= 2
            ca.i = min(ca.lo + span - 1, ca.hi)

    def a_move_left() -> None:
        nonlocal bracketed
        bracketed = True
        ca.hi = ca.i - 1
        ca.i = (ca.lo + ca.hi) // 2

    while True:
        COUNTER.bump()
        a, b = ca.side(), cb.side()
        act = _decide(kind, a, b, sep2)
        if act == _FOUND:
            return a.pt, b.pt
        if act == _A_RIGHT:
            a_move_right()
        elif act == _A_LEFT:
            a_move_left()
        elif act == _B_RIGHT:
            cb.lo = cb.i + 1
            cb.i = (cb.lo + cb.hi) // 2
        elif act == _B_LEFT:
            cb.hi = cb.i - 1
            cb.i = (cb.lo + cb.hi) // 2
        else:  # _BOTH_IN
            a_move_left()
            cb.lo = cb.i + 1
            cb.i = (cb.lo + cb.hi) // 2


def brute_tangent(left: list[Point], right: list[Point], kind: Kind) -> tuple[Point, Point]:
    """Quadratic reference: the unique pair supporting both chains."""
    above = Turn.LEFT if kind is Kind.UPPER else Turn.RIGHT

    def supported(a: Point, b: Point, pts: list[Point]) -> bool:
        return all(
            orientation(a, b, w) is not above
            for w in pts
            if lex_key(w) != lex_key(a) and lex_key(w) != lex_key(b)
        )

    for a in left:
        for b in right:
            if supported(a, b, left) and supported(a, b, right):
                return a, b
    raise AssertionError("no tangent found")
