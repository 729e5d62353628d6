"""Stack tree: worst-case O(1) stack updates under a leveled summary ladder.

Levels T_0..T_L hold summaries of contiguous push-order blocks, with |T_i|
zero or in [2^(2^i), 2^(2^(i+1))] and all of T_i preceding all of T_j for
j < i.  A two-range binary counter names the level that receives delayed
work on each push; joins of adjacent levels run as resumable merge
processes, a bounded number of primitive steps per push, so pushes and
journal-driven pops are worst-case constant.  Retrieval completes all live
processes (journaled in a session for exact rollback) and folds the level
summaries into one value in O(log n) merge work.

The structure is generic over a mergeable summary (plain sorted trees,
monotone hull chains, or path-block hull pairs) via a mode object.
"""

from __future__ import annotations

from .geom import Kind, Point, lex_key
from .chainmerge import ChainMergeProcess, PlainJoinProcess, merge_chains
from .hulltree import Node, build, join2
from .journal import Record
from .steps import COUNTER


class StructureError(AssertionError):
    """A structural invariant failed; state is unusable."""


# Per-push budget, in primitive steps, for advancing one live join process.
# Calibrated: the worst convex-position level-1 merge costs 77 steps and must
# complete within a single budget window; level-2 merges (worst 142) get two
# windows, deeper levels exponentially more.  Frozen after the stress suite.
MONO_BUDGET = 96


class _Level:
    __slots__ = ("summary", "n", "proc")

    def __init__(self) -> None:
        self.summary = None
        self.n = 0
        self.proc = None


def counter_increment(ranges):
    """Increment the 1-run representation of N; returns (ranges', flip).

    ranges is a cons list of inclusive [lo, hi] runs of 1-bits, least
    significant first; only the first two runs are touched.
    """
    COUNTER.bump()
    if ranges is None or ranges[0][0] > 0:
        flip = 0
        if ranges is not None and ranges[0][0] == 1:
            (lo, hi), tail = ranges
            return ((0, hi), tail), flip
        return ((0, 0), ranges), flip
    (lo, hi), tail = ranges
    flip = hi + 1
    if tail is not None and tail[0][0] == hi + 2:
        (lo2, hi2), tail2 = tail
        return ((hi + 1, hi2), tail2), flip
    return ((hi + 1, hi + 1), tail), flip


def ranges_to_int(ranges) -> int:
    n = 0
    while ranges is not None:
        (lo, hi), ranges = ranges
        for b in range(lo, hi + 1):
            n |= 1 << b
    return n


class PlainMode:
    """Summaries are balanced trees over the raw points."""

    def __init__(self, grow_right: bool = True) -> None:
        self.grow_right = grow_right

    def brute(self, pts: tuple[Point, ...]) -> Node | None:
        seq = pts if self.grow_right else pts[::-1]
        return build(seq)

    def _ordered(self, older, newer):
        return (older, newer) if self.grow_right else (newer, older)

    def start_merge(self, older, newer):
        l, r = self._ordered(older, newer)
        return PlainJoinProcess(l, r)

    def merge_now(self, older, newer):
        l, r = self._ordered(older, newer)
        return join2(l, r)


class ChainMode:
    """Summaries are hull chains (one kind) of the block's points."""

    def __init__(self, kind: Kind, grow_right: bool = True) -> None:
        self.kind = kind
        self.grow_right = grow_right

    def brute(self, pts: tuple[Point, ...]) -> Node | None:
        from .oracle import hull_chains

        lower, upper = hull_chains(list(pts))
        return build(upper if self.kind is Kind.UPPER else lower)

    def _ordered(self, older, newer):
        return (older, newer) if self.grow_right else (newer, older)

    def start_merge(self, older, newer):
        l, r = self._ordered(older, newer)
        return ChainMergeProcess(l, r, self.kind)

    def merge_now(self, older, newer):
        l, r = self._ordered(older, newer)
        return merge_chains(l, r, self.kind)


class Session:
    __slots__ = ("owner", "record", "open")

    def __init__(self, owner, record: Record) -> None:
        self.owner = owner
        self.record = record
        self.open = True


class StackTree:
    """One stack end of points with summary levels; see module docstring."""

    def __init__(
        self,
        mode,
        budget: int = MONO_BUDGET,
        order_check: bool = True,
        track_raw: bool = True,
    ) -> None:
        self.mode = mode
        self.budget = budget
        self.order_check = order_check and track_raw
        self.track_raw = track_raw
        self.levels: list[_Level] = [_Level()]
        self.t0_raw: tuple[Point, ...] = ()
        self.raw = None  # cons stack of live points, newest first
        self.count = 0
        self.ranges = ((0, 0), None)  # N = 1
        self.journal: list[Record] = []
        self.session_open = False

    # -- updates ----------------------------------------------------------

    def newest(self) -> Point:
        if self.raw is None:
            raise IndexError("empty stack")
        return self.raw[0]

    def _check_order(self, p: Point) -> None:
        if not self.order_check or self.raw is None:
            return
        top = self.raw[0]
        ok = lex_key(top) < lex_key(p) if self.mode.grow_right else lex_key(p) < lex_key(top)
        if not ok:
            raise ValueError("not a stack push")

    def push(self, p: Point, rec: Record | None = None) -> Record:
        if self.session_open:
            raise RuntimeError("retrieval session open")
        self._check_order(p)
        own = rec is None
        if own:
            rec = Record()
        rec.payload = p
        if self.track_raw:
            rec.set(self, "raw", (p, self.raw))
        rec.set(self, "count", self.count + 1)
        lv0 = self.levels[0]
        rec.set(self, "t0_raw", self.t0_raw + (p,))
        rec.set(lv0, "summary", self.mode.brute(self.t0_raw))
        rec.set(lv0, "n", lv0.n + 1)
        new_ranges, flip = counter_increment(self.ranges)
        rec.set(self, "ranges", new_ranges)
        if 1 <= flip < len(self.levels):
            lv = self.levels[flip]
            if lv.proc is not None:
                rec.note_proc(lv, "proc")
                start = COUNTER.total
                proc = lv.proc
                while not proc.done and COUNTER.total - start < self.budget:
                    proc.step()
                if proc.done:
                    rec.set(lv, "summary", proc.result())
                    rec.set(lv, "proc", None)
        if flip < len(self.levels):
            self._maybe_overflow(flip, rec)
        if own:
            self.journal.append(rec)
        return rec

    def _cap(self, i: int) -> int:
        return 1 << (1 << (i + 1))

    def _maybe_overflow(self, i: int, rec: Record) -> None:
        lv = self.levels[i]
        if lv.proc is not None or lv.n < self._cap(i):
            return
        if lv.n > self._cap(i):
            raise StructureError(f"level {i} size {lv.n} exceeds its cap")
        if i + 1 == len(self.levels):
            self.levels.append(_Level())
            rec.note_append(self.levels)
        nxt = self.levels[i + 1]
        if nxt.proc is not None:
            raise StructureError(f"level {i + 1} blocked when level {i} filled")
        rec.set(nxt, "proc", self.mode.start_merge(nxt.summary, lv.summary))
        rec.set(nxt, "n", nxt.n + lv.n)
        rec.set(lv, "summary", None)
        rec.set(lv, "n", 0)
        if i == 0:
            rec.set(self, "t0_raw", ())
        if nxt.n == self._cap(i + 1) and i + 2 < len(self.levels):
            if self.levels[i + 2].proc is not None:
                raise StructureError(f"level {i + 2} blocked when level {i + 1} filled")

    def pop(self, expect_rec: bool = True) -> Point:
        if self.session_open:
            raise RuntimeError("retrieval session open")
        if not self.journal:
            raise IndexError("empty stack")
        rec = self.journal.pop()
        rec.undo()
        return rec.payload

    def undo_one(self) -> None:
        self.pop()

    # -- retrieval --------------------------------------------------------

    def retrieve(self):
        """(summary, session): completes live joins, folds all levels."""
        if self.session_open:
            raise RuntimeError("retrieval session open")
        rec = Record()
        for lv in self.levels:
            if lv.proc is not None:
                rec.note_proc(lv, "proc")
                proc = lv.proc
                while not proc.done:
                    proc.step()
                rec.set(lv, "summary", proc.result())
                rec.set(lv, "proc", None)
        acc = None
        for lv in reversed(self.levels):
            if lv.summary is not None:
                acc = lv.summary if acc is None else self.mode.merge_now(acc, lv.summary)
        self.session_open = True
        return acc, Session(self, rec)

    def release(self, session: Session) -> None:
        if not session.open or session.owner is not self:
            raise RuntimeError("session already released")
        session.record.undo()
        session.open = False
        self.session_open = False

    # -- path-hull hooks ---------------------------------------------------

    def top_level_index(self) -> int | None:
        for i in range(len(self.levels) - 1, -1, -1):
            if self.levels[i].n > 0:
                return i
        return None

    def detach_top_level(self, rec: Record):
        """Freeze and remove the top level's block; returns its summary.

        The caller owns scheduling; the level must not be mid-join.
        """
        i = self.top_level_index()
        assert i is not None
        lv = self.levels[i]
        assert lv.proc is None, "detaching a blocked level"
        out = lv.summary
        n = lv.n
        rec.set(lv, "summary", None)
        rec.set(lv, "n", 0)
        rec.set(self, "count", self.count - n)
        if i == 0:
            rec.set(self, "t0_raw", ())
        return out, n

    # -- checks ------------------------------------------------------------

    def validate(self) -> None:
        assert self.count == sum(lv.n for lv in self.levels), "size ledger broken"
        assert self.levels[0].n <= 4, "level 0 overfull"
        assert self.levels[0].proc is None
        for i, lv in enumerate(self.levels):
            if i == 0:
                continue
            lo = 1 << (1 << i)
            if lv.n != 0:
                assert lo <= lv.n <= self._cap(i), f"level {i} window broken: {lv.n}"
                assert lv.n % lo == 0, f"level {i} not a multiple of {lo}"
        if self.track_raw:
            m = 0
            node = self.raw
            while node is not None:
                m += 1
                node = node[1]
            assert m == self.count, "raw stack out of sync"
