"""Merging x-separated convex chains, in one call or one step at a time.

The resumable variants are explicit state machines whose step() does O(1)
work (one tangent-descent move, one split-descent move, or one spine
rebalance), so an interrupted merge can be paused, resumed, snapshotted for
the rollback journal, and charged against a fixed per-update budget without
any step secretly costing O(log n).
"""

from __future__ import annotations

from .geom import Kind, Point, lex_key
from .hulltree import Node, _bal, height, join3, leaf
from .steps import COUNTER
from .tangent import TangentDescent, tree_tangent


def merge_chains(l: Node | None, r: Node | None, kind: Kind) -> Node | None:
    """Hull chain of the union of two sheared-x-separated chains."""
    if l is None:
        return r
    if r is None:
        return l
    a, b = tree_tangent(l, r, kind)
    la = _split_keep(l, lex_key(a), before=True)
    rb = _split_keep(r, lex_key(b), before=False, inclusive=True)
    return join3(la, a, rb)


def _split_keep(t: Node | None, key, before: bool, inclusive: bool = False) -> Node | None:
    """Pure reference for the split machines: keep the side of the key."""
    pieces: list[tuple[Node | None, Point]] = []
    cur = t
    if before:
        while cur is not None:
            if lex_key(cur.pt) < key:
                pieces.append((cur.l, cur.pt))
                cur = cur.r
            else:
                cur = cur.l
        acc: Node | None = None
        for lsub, pt in reversed(pieces):  # deepest piece is rightmost
            acc = join3(lsub, pt, acc)
        return acc
    while cur is not None:
        take = lex_key(cur.pt) >= key if inclusive else lex_key(cur.pt) > key
        if take:
            pieces.append((cur.r, cur.pt))
            cur = cur.l
        else:
            cur = cur.r
    acc = None
    for rsub, pt in reversed(pieces):  # deepest piece is leftmost
        acc = join3(acc, pt, rsub)
    return acc


class _Join3M:
    """Resumable join3: descend the taller spine, then rebalance upward."""

    __slots__ = ("l", "pt", "r", "spine", "acc", "phase", "out")

    def __init__(self, l: Node | None, pt: Point, r: Node | None) -> None:
        self.l, self.pt, self.r = l, pt, r
        self.spine = None  # cons list of passed spine nodes
        self.acc: Node | None = None
        self.phase = 0
        self.out: Node | None = None

    def snapshot(self):
        return (self.l, self.pt, self.r, self.spine, self.acc, self.phase, self.out)

    def restore(self, s) -> None:
        self.l, self.pt, self.r, self.spine, self.acc, self.phase, self.out = s

    def step(self) -> bool:
        COUNTER.bump()
        if self.phase == 2:
            return True
        if self.phase == 0:
            hl, hr = height(self.l), height(self.r)
            if abs(hl - hr) <= 1:
                self.acc = Node(self.pt, self.l, self.r)
                self.phase = 1
                return False
            if hl > hr:
                self.spine = ((self.l, True), self.spine)
                self.l = self.l.r
            else:
                self.spine = ((self.r, False), self.spine)
                self.r = self.r.l
            return False
        # phase 1: rebuild upward
        if self.spine is None:
            self.out = self.acc
            self.phase = 2
            return True
        (node, was_left), self.spine = self.spine
        if was_left:
            self.acc = _bal(node.pt, node.l, self.acc)
        else:
            self.acc = _bal(node.pt, self.acc, node.r)
        return False


class _SplitM:
    """Resumable one-sided split at a lex key (strictly-before or from-key)."""

    __slots__ = ("cur", "key", "before", "inclusive", "pieces", "sub", "phase", "out")

    def __init__(self, t: Node | None, key, before: bool, inclusive: bool = False) -> None:
        self.cur = t
        self.key = key
        self.before = before
        self.inclusive = inclusive
        self.pieces = None  # cons; head = nearest-to-seam piece
        self.sub: _Join3M | None = None
        self.phase = 0
        self.out: Node | None = None

    def snapshot(self):
        sub = self.sub.snapshot() if self.sub is not None else None
        return (self.cur, self.key, self.before, self.inclusive, self.pieces, sub, self.phase, self.out)

    def restore(self, s) -> None:
        cur, key, before, inclusive, pieces, sub, phase, out = s
        self.cur, self.key, self.before, self.inclusive = cur, key, before, inclusive
        self.pieces, self.phase, self.out = pieces, phase, out
        if sub is None:
            self.sub = None
        else:
            self.sub = _Join3M(None, Point(0, 0), None)
            self.sub.restore(sub)

    def step(self) -> bool:
        COUNTER.bump()
        if self.phase == 3:
            return True
        if self.phase == 0:  # descend
            cur = self.cur
            if cur is None:
                self.phase = 1
                return False
            if self.before:
                if lex_key(cur.pt) < self.key:
                    self.pieces = ((cur.l, cur.pt), self.pieces)
                    self.cur = cur.r
                else:
                    self.cur = cur.l
            else:
                take = lex_key(cur.pt) >= self.key if self.inclusive else lex_key(cur.pt) > self.key
                if take:
                    self.pieces = ((cur.r, cur.pt), self.pieces)
                    self.cur = cur.l
                else:
                    self.cur = cur.r
            return False
        if self.phase == 1:  # pull next piece into a join machine
            if self.pieces is None:
                self.phase = 3
                return True
            (sub_tree, pt), self.pieces = self.pieces
            if self.before:
                self.sub = _Join3M(sub_tree, pt, self.out)
            else:
                self.sub = _Join3M(self.out, pt, sub_tree)
            self.phase = 2
            return False
        # phase 2: run the join machine
        if self.sub.step():
            self.out = self.sub.out
            self.sub = None
            self.phase = 1
        return False


class ChainMergeProcess:
    """Incremental hull merge of two frozen x-separated chains.

    Phases: tangent descent, split left chain strictly before the tangent,
    split right chain from its tangent point, then a final three-way join.
    The operand roots are immutable, so pausing, snapshotting, and restoring
    are all O(1).
    """

    __slots__ = ("kind", "left", "right", "tan", "sa", "sb", "jn", "phase", "out", "tangent")

    def __init__(self, left: Node | None, right: Node | None, kind: Kind) -> None:
        self.kind = kind
        self.left, self.right = left, right
        self.tan: TangentDescent | None = None
        self.sa: _SplitM | None = None
        self.sb: _SplitM | None = None
        self.jn: _Join3M | None = None
        self.phase = 0
        self.out: Node | None = None
        self.tangent: tuple[Point, Point] | None = None

    def snapshot(self):
        return (
            self.phase,
            self.out,
            self.tangent,
            self.tan.snapshot() if self.tan else None,
            self.sa.snapshot() if self.sa else None,
            self.sb.snapshot() if self.sb else None,
            self.jn.snapshot() if self.jn else None,
        )

    def restore(self, s) -> None:
        self.phase, self.out, self.tangent, tsnap, sasnap, sbsnap, jnsnap = s
        self.tan = self.sa = self.sb = self.jn = None
        if tsnap is not None:
            self.tan = TangentDescent.__new__(TangentDescent)
            self.tan.kind = self.kind
            la, fb = self.left.lp, self.right.fp
            self.tan.sep2 = (la.x + fb.x, la.y + fb.y)
            self.tan.restore(tsnap)
        if sasnap is not None:
            self.sa = _SplitM(None, None, True)
            self.sa.restore(sasnap)
        if sbsnap is not None:
            self.sb = _SplitM(None, None, False)
            self.sb.restore(sbsnap)
        if jnsnap is not None:
            self.jn = _Join3M(None, Point(0, 0), None)
            self.jn.restore(jnsnap)

    @property
    def done(self) -> bool:
        return self.phase == 5

    def result(self) -> Node | None:
        assert self.phase == 5
        return self.out

    def step(self) -> bool:
        ph = self.phase
        if ph == 5:
            return True
        if ph == 0:
            COUNTER.bump()
            if self.left is None or self.right is None:
                self.out = self.left if self.right is None else self.right
                self.phase = 5
                return True
            self.tan = TangentDescent(self.left, self.right, self.kind)
            self.phase = 1
            return False
        if ph == 1:
            if self.tan.step():
                self.tangent = self.tan.result
                self.sa = _SplitM(self.left, lex_key(self.tangent[0]), before=True)
                self.phase = 2
            return False
        if ph == 2:
            if self.sa.step():
                self.sb = _SplitM(self.right, lex_key(self.tangent[1]), before=False, inclusive=True)
                self.phase = 3
            return False
        if ph == 3:
            if self.sb.step():
                self.jn = _Join3M(self.sa.out, self.tangent[0], self.sb.out)
                self.phase = 4
            return False
        if self.jn.step():
            self.out = self.jn.out
            self.phase = 5
            return True
        return False

    def run(self) -> Node | None:
        while not self.step():
            pass
        return self.out


class PlainJoinProcess:
    """Incremental concatenation of two order-separated plain trees."""

    __slots__ = ("left", "right", "spl", "jn", "phase", "out")

    def __init__(self, left: Node | None, right: Node | None) -> None:
        self.left, self.right = left, right
        self.spl: _SplitM | None = None
        self.jn: _Join3M | None = None
        self.phase = 0
        self.out: Node | None = None

    def snapshot(self):
        return (
            self.phase,
            self.out,
            self.spl.snapshot() if self.spl else None,
            self.jn.snapshot() if self.jn else None,
        )

    def restore(self, s) -> None:
        self.phase, self.out, ssnap, jsnap = s
        self.spl = self.jn = None
        if ssnap is not None:
            self.spl = _SplitM(None, None, True)
            self.spl.restore(ssnap)
        if jsnap is not None:
            self.jn = _Join3M(None, Point(0, 0), None)
            self.jn.restore(jsnap)

    @property
    def done(self) -> bool:
        return self.phase == 3

    def result(self) -> Node | None:
        assert self.phase == 3
        return self.out

    def step(self) -> bool:
        ph = self.phase
        if ph == 3:
            return True
        if ph == 0:
            COUNTER.bump()
            if self.left is None or self.right is None:
                self.out = self.left if self.right is None else self.right
                self.phase = 3
                return True
            # expose the left tree's last element to use as the join middle
            self.spl = _SplitM(self.left, lex_key(self.left.lp), before=True)
            self.phase = 1
            return False
        if ph == 1:
            if self.spl.step():
                self.jn = _Join3M(self.spl.out, self.left.lp, self.right)
                self.phase = 2
            return False
        if self.jn.step():
            self.out = self.jn.out
            self.phase = 3
            return True
        return False

    def run(self) -> Node | None:
        while not self.step():
            pass
        return self.out
