"""Immutable joinable balanced trees over convex chains, plus read-only views.

Nodes are persistent (path-copied) height-balanced AVL nodes; join and split
run in worst-case O(log n) with structure sharing, so retaining any old root
is an O(1) versioning operation and unreachable versions are reclaimed by
the garbage collector.  In-order sequences are strictly increasing in the
sheared (x, y, ord) order; Upper chains turn Right at every interior vertex,
Lower chains turn Left.

A ChainView is a list of rank-interval segments over tree roots or
array-like backings; it supports O(log) positional access without
materializing joins, which keeps query paths allocation-free and makes
"roll back after the query" a no-op.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .geom import Direction, Kind, Point, Turn, compare_along, lex_key, orientation
from .steps import COUNTER


class Node:
    __slots__ = ("pt", "l", "r", "h", "n", "fp", "lp", "omin", "omax")

    def __init__(self, pt: Point, l: "Node | None", r: "Node | None") -> None:
        COUNTER.bump()
        self.pt = pt
        self.l = l
        self.r = r
        self.h = 1 + max(l.h if l else 0, r.h if r else 0)
        self.n = 1 + (l.n if l else 0) + (r.n if r else 0)
        self.fp = l.fp if l else pt
        self.lp = r.lp if r else pt
        o = pt.ord if pt.ord is not None else 0
        self.omin = min(o, l.omin if l else o, r.omin if r else o)
        self.omax = max(o, l.omax if l else o, r.omax if r else o)


def height(t: Node | None) -> int:
    return t.h if t else 0


def size(t: Node | None) -> int:
    return t.n if t else 0


def leaf(p: Point) -> Node:
    return Node(p, None, None)


def _rot_l(t: Node) -> Node:
    r = t.r
    return Node(r.pt, Node(t.pt, t.l, r.l), r.r)


def _rot_r(t: Node) -> Node:
    l = t.l
    return Node(l.pt, l.l, Node(t.pt, l.r, t.r))


def _bal(pt: Point, l: Node | None, r: Node | None) -> Node:
    hl, hr = height(l), height(r)
    if hl > hr + 1:
        if height(l.l) >= height(l.r):
            return _rot_r(Node(pt, l, r))
        return _rot_r(Node(pt, _rot_l(l), r))
    if hr > hl + 1:
        if height(r.r) >= height(r.l):
            return _rot_l(Node(pt, l, r))
        return _rot_l(Node(pt, l, _rot_r(r)))
    return Node(pt, l, r)


def join3(l: Node | None, pt: Point, r: Node | None) -> Node:
    """Concatenate l, [pt], r; O(|height(l) - height(r)|) new nodes."""
    hl, hr = height(l), height(r)
    if abs(hl - hr) <= 1:
        return Node(pt, l, r)
    if hl > hr:
        return _bal(l.pt, l.l, join3(l.r, pt, r))
    return _bal(r.pt, join3(l, pt, r.l), r.r)


def join2(l: Node | None, r: Node | None) -> Node | None:
    """Concatenate two trees; the seam convexity is the caller's contract."""
    if l is None:
        return r
    if r is None:
        return l
    l2, p = split_last(l)
    return join3(l2, p, r)


def split_last(t: Node) -> tuple[Node | None, Point]:
    if t.r is None:
        return t.l, t.pt
    rest, p = split_last(t.r)
    return _bal(t.pt, t.l, rest), p


def split_first(t: Node) -> tuple[Point, Node | None]:
    if t.l is None:
        return t.pt, t.r
    p, rest = split_first(t.l)
    return p, _bal(t.pt, rest, t.r)


def split_rank(t: Node | None, k: int) -> tuple[Node | None, Node | None]:
    """(first k elements, the rest); 0 <= k <= size(t)."""
    if t is None:
        return None, None
    COUNTER.bump()
    ln = size(t.l)
    if k <= ln:
        a, b = split_rank(t.l, k)
        return a, join3(b, t.pt, t.r)
    if k == ln + 1:
        return join3(t.l, t.pt, None), t.r
    a, b = split_rank(t.r, k - ln - 1)
    return join3(t.l, t.pt, a), b


def get(t: Node, i: int) -> Point:
    while True:
        COUNTER.bump()
        ln = size(t.l)
        if i < ln:
            t = t.l
        elif i == ln:
            return t.pt
        else:
            i -= ln + 1
            t = t.r


def rank_of(t: Node | None, p: Point) -> int | None:
    """In-order rank of the vertex with lex key equal to p, if present."""
    k = lex_key(p)
    acc = 0
    while t is not None:
        COUNTER.bump()
        kt = lex_key(t.pt)
        if k == kt:
            return acc + size(t.l)
        if k < kt:
            t = t.l
        else:
            acc += size(t.l) + 1
            t = t.r
    return None


def split_at_point(t: Node | None, p: Point) -> tuple[Node | None, Node | None]:
    """(prefix through p, strict suffix); raises if p is absent."""
    r = rank_of(t, p)
    if r is None:
        raise KeyError("split key not found")
    return split_rank(t, r + 1)


def iter_tree(t: Node | None) -> Iterator[Point]:
    if t is None:
        return
    stack: list[Node] = []
    cur: Node | None = t
    while stack or cur:
        while cur:
            stack.append(cur)
            cur = cur.l
        cur = stack.pop()
        COUNTER.bump()
        yield cur.pt
        cur = cur.r


def build(points: Sequence[Point]) -> Node | None:
    """Balanced tree over an already-valid chain, O(n)."""
    def rec(lo: int, hi: int) -> Node | None:
        if lo >= hi:
            return None
        mid = (lo + hi) // 2
        return Node(points[mid], rec(lo, mid), rec(mid + 1, hi))

    return rec(0, len(points))


def tree_max_ord(t: Node) -> tuple[Point, int]:
    """Vertex with the maximum ordinal, with its rank."""
    acc = 0
    while True:
        COUNTER.bump()
        o = t.pt.ord if t.pt.ord is not None else 0
        if t.l is not None and t.l.omax == t.omax and (t.r is None or t.l.omax >= t.r.omax) and t.l.omax >= o:
            t = t.l
            continue
        if o == t.omax:
            return t.pt, acc + size(t.l)
        acc += size(t.l) + 1
        t = t.r


def tree_min_ord(t: Node) -> tuple[Point, int]:
    acc = 0
    while True:
        COUNTER.bump()
        o = t.pt.ord if t.pt.ord is not None else 0
        if t.l is not None and t.l.omin == t.omin and (t.r is None or t.l.omin <= t.r.omin) and t.l.omin <= o:
            t = t.l
            continue
        if o == t.omin:
            return t.pt, acc + size(t.l)
        acc += size(t.l) + 1
        t = t.r


class TreeSeq:
    """Rank-addressable adapter over a tree root."""

    __slots__ = ("root",)

    def __init__(self, root: Node | None) -> None:
        self.root = root

    def __len__(self) -> int:
        return size(self.root)

    def get(self, i: int) -> Point:
        return get(self.root, i)


class Segment:
    """Half-open rank slice [lo, hi) of a rank-addressable backing."""

    __slots__ = ("src", "lo", "hi")

    def __init__(self, src, lo: int, hi: int) -> None:
        self.src = src
        self.lo = lo
        self.hi = hi

    def __len__(self) -> int:
        return self.hi - self.lo

    def get(self, i: int) -> Point:
        return self.src.get(self.lo + i)


class ChainView:
    """A convex chain as up to a handful of contiguous segments."""

    __slots__ = ("segs", "kind", "_sizes", "_total")

    def __init__(self, segs: Iterable[Segment], kind: Kind) -> None:
        self.segs = [s for s in segs if len(s) > 0]
        self.kind = kind
        self._sizes = [len(s) for s in self.segs]
        self._total = sum(self._sizes)

    @classmethod
    def of_tree(cls, root: Node | None, kind: Kind) -> "ChainView":
        if root is None:
            return cls([], kind)
        return cls([Segment(TreeSeq(root), 0, root.n)], kind)

    @classmethod
    def of_seq(cls, seq, kind: Kind) -> "ChainView":
        return cls([Segment(seq, 0, len(seq))], kind)

    def __len__(self) -> int:
        return self._total

    def get(self, i: int) -> Point:
        if i < 0:
            i += self._total
        for s, n in zip(self.segs, self._sizes):
            if i < n:
                return s.get(i)
            i -= n
        raise IndexError("chain rank out of range")

    def first(self) -> Point:
        return self.get(0)

    def last(self) -> Point:
        return self.get(self._total - 1)

    def slice(self, lo: int, hi: int) -> "ChainView":
        """View of ranks [lo, hi), sharing backings."""
        out: list[Segment] = []
        for s, n in zip(self.segs, self._sizes):
            a, b = max(lo, 0), min(hi, n)
            if a < b:
                out.append(Segment(s.src, s.lo + a, s.lo + b))
            lo -= n
            hi -= n
        return ChainView(out, self.kind)

    def points(self) -> list[Point]:
        out: list[Point] = []
        for s in self.segs:
            if isinstance(s.src, TreeSeq) and s.lo == 0 and s.hi == len(s.src):
                out.extend(iter_tree(s.src.root))
            else:
                out.extend(s.get(i) for i in range(len(s)))
        return out


def chain_points(t: Node | None) -> list[Point]:
    return list(iter_tree(t))


def validate_chain(t: Node | None, kind: Kind) -> None:
    """Debug check: strict sheared order and the turn invariant."""
    pts = chain_points(t)
    for a, b in zip(pts, pts[1:]):
        assert lex_key(a) < lex_key(b), f"chain order broken at {a} {b}"
    want = Turn.RIGHT if kind is Kind.UPPER else Turn.LEFT
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        assert orientation(a, b, c) is want, f"turn invariant broken at {b}"
    assert t is None or height(t) <= 2 * max(1, size(t)).bit_length(), "height bound broken"


# ---------------------------------------------------------------------------
# Single-chain searches over views.


def extreme_vertex(v: ChainView, d: Direction) -> Point:
    """Vertex maximizing d (dot products, (x, y, ord) ties), O(log n).

    The dot sequence along a convex chain is strictly increasing then
    strictly decreasing under the tie-broken comparison, so the maximum is
    found by bisecting on the direction of increase.
    """
    n = len(v)
    if n == 0:
        raise ValueError("empty chain")
    up = d.dy > 0 or (d.dy == 0 and d.dx > 0)
    rising = (lambda a, b: compare_along(d, b, a) > 0)
    if (v.kind is Kind.UPPER) != up:
        # Direction points at the open side: the maximum sits at an end.
        a, b = v.first(), v.last()
        return a if compare_along(d, a, b) > 0 else b
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if rising(v.get(mid), v.get(mid + 1)):
            lo = mid + 1
        else:
            hi = mid
    return v.get(lo)


def point_below_chain(v: ChainView, p: Point) -> bool:
    """True when p is strictly on the closed side of the chain (below an
    Upper chain, above a Lower one) within or outside its x-span.

    Outside the sheared x-span of the chain the answer is False.
    """
    n = len(v)
    if n == 0:
        return False
    k = lex_key(p)
    if k <= lex_key(v.first()) or k >= lex_key(v.last()):
        return False
    lo, hi = 0, n - 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if lex_key(v.get(mid)) <= k:
            lo = mid
        else:
            hi = mid
    a, b = v.get(lo), v.get(hi)
    t = orientation(a, p, b)
    return t is (Turn.LEFT if v.kind is Kind.UPPER else Turn.RIGHT)


def lex_rank(v: ChainView, k) -> int:
    """Number of chain vertices with lex key < k; O(log n)."""
    lo, hi = 0, len(v)
    while lo < hi:
        mid = (lo + hi) // 2
        if lex_key(v.get(mid)) < k:
            lo = mid + 1
        else:
            hi = mid
    return lo


def edge_visible(v: ChainView, i: int, q: Point) -> bool:
    """True when chain edge i faces q: q strictly on the open side of its
    supporting line (above for Upper, below for Lower)."""
    want = Turn.LEFT if v.kind is Kind.UPPER else Turn.RIGHT
    return orientation(v.get(i), v.get(i + 1), q) is want


def visible_edge_block(v: ChainView, q: Point) -> tuple[int, int] | None:
    """The contiguous block [lo, hi] of chain edges facing q, or None.

    Edge supporting lines rotate monotonically along a convex chain, so the
    facing predicate is a single contiguous block; a binary search toward an
    anchor edge locates each end in O(log n).
    """
    n = len(v)
    if n < 2:
        return None
    kq = lex_key(q)
    if kq <= lex_key(v.first()):
        anchor = 0
    elif kq >= lex_key(v.last()):
        anchor = n - 2
    else:
        anchor = min(n - 2, max(0, lex_rank(v, kq) - 1))
    if not edge_visible(v, anchor, q):
        return None
    lo, hi = 0, anchor
    while lo < hi:  # pattern F..T up to the anchor
        mid = (lo + hi) // 2
        if edge_visible(v, mid, q):
            hi = mid
        else:
            lo = mid + 1
    left = lo
    lo, hi = anchor, n - 2
    while lo < hi:  # pattern T..F from the anchor on
        mid = (lo + hi + 1) // 2
        if edge_visible(v, mid, q):
            lo = mid
        else:
            hi = mid - 1
    return left, lo


def tangents_from_point(v: ChainView, q: Point) -> tuple[Point, Point] | None:
    """The two tangency vertices of the chain seen from q, or None when q is
    strictly on the chain's closed side.  A q coinciding with a chain vertex
    returns that vertex twice; a q beyond the span with no facing edge
    returns the nearer end twice.
    """
    n = len(v)
    if n == 0:
        raise ValueError("empty chain")
    kq = lex_key(q)
    r = lex_rank(v, kq)
    if r < n and lex_key(v.get(r)) == kq:
        p = v.get(r)
        return p, p
    if point_below_chain(v, q):
        return None
    if n == 1:
        p = v.first()
        return p, p
    block = visible_edge_block(v, q)
    if block is None:
        end = v.first() if kq < lex_key(v.first()) else v.last()
        return end, end
    lo, hi = block
    return v.get(lo), v.get(hi + 1)


def _bridge_sign(l, p: Point, far: int) -> int:
    """Side of p against the query line; on-line vertices stick to the far
    side so that the crossing edge reported is the one ending at them."""
    from .geom import line_side

    s = line_side(l, p)
    return s if s != 0 else far


def chain_bridge(v: ChainView, l) -> tuple[Point, Point] | None:
    """The chain edge crossing the query line, or None when both chain ends
    fall on one side.  The chain ends must straddle the line for a hit
    (vertical-like usage); a line through a vertex resolves to the edge
    ending at that vertex.
    """
    from .geom import line_side

    n = len(v)
    if n < 2:
        return None
    s0 = line_side(l, v.first())
    s1 = line_side(l, v.last())
    if s0 == 0:
        s0 = -s1 if s1 != 0 else 1
    if s1 == 0 or s1 == s0:
        if s1 == 0 and s0 != 0:
            s1 = -s0
        else:
            return None
    lo, hi = 0, n - 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if _bridge_sign(l, v.get(mid), far=s1) == s0:
            lo = mid
        else:
            hi = mid
    return v.get(lo), v.get(hi)
