import random

import pytest

from dequehull.geom import Kind, Point
from dequehull import hulltree as ht
from dequehull.oracle import hull_chains
from dequehull.stacktree import ChainMode, PlainMode, StackTree, counter_increment, ranges_to_int
from dequehull.steps import COUNTER


def P(x, y, o=None):
    return Point(x, y, o)


def canon(st: StackTree):
    raw = []
    node = st.raw
    while node is not None:
        raw.append(node[0])
        node = node[1]
    return (
        st.count,
        ranges_to_int(st.ranges),
        tuple(raw),
        st.t0_raw,
        tuple((lv.n, lv.proc is None, tuple(ht.chain_points(lv.summary))) for lv in st.levels),
        len(st.journal),
    )


def test_counter_increment_paper_example():
    r = ((0, 2), ((5, 6), ((8, 8), None)))
    assert ranges_to_int(r) == 0b101100111
    r2, flip = counter_increment(r)
    assert flip == 3
    assert ranges_to_int(r2) == 0b101101000
    assert r2 == ((3, 3), ((5, 6), ((8, 8), None)))


def test_counter_increment_small():
    r = ((0, 0), None)  # N = 1
    r2, flip = counter_increment(r)
    assert flip == 1 and r2 == ((1, 1), None)
    r3, flip = counter_increment(r2)
    assert flip == 0 and r3 == ((0, 1), None)


def test_counter_random_against_int():
    rng = random.Random(31)
    r = ((0, 0), None)
    n = 1
    for _ in range(3000):
        r, flip = counter_increment(r)
        n += 1
        assert ranges_to_int(r) == n
        assert (n >> flip) & 1 == 1 and ((n - 1) >> flip) & 1 == 0


def test_plain_pushes_and_retrieve():
    st = StackTree(PlainMode())
    for i in range(1, 11):
        st.push(P(i, i % 3, i))
        st.validate()
    s, sess = st.retrieve()
    assert [p.x for p in ht.chain_points(s)] == list(range(1, 11))
    st.release(sess)
    s2, sess2 = st.retrieve()
    assert ht.chain_points(s2) == [P(i, i % 3, i) for i in range(1, 11)]
    st.release(sess2)


def test_first_levels_schedule():
    st = StackTree(PlainMode())
    sizes = []
    for i in range(1, 6):
        st.push(P(i, 0, i))
        sizes.append(st.levels[0].n)
    # n_0 cycles 1,2,3,4 then resets on the 4th push's overflow
    assert sizes == [1, 2, 3, 0, 1]
    assert st.levels[1].n == 4


def test_empty_retrieve_and_pop_errors():
    st = StackTree(PlainMode())
    s, sess = st.retrieve()
    assert s is None
    st.release(sess)
    with pytest.raises(RuntimeError):
        st.release(sess)
    with pytest.raises(IndexError):
        st.pop()


def test_order_violation():
    st = StackTree(PlainMode())
    st.push(P(5, 0, 0))
    with pytest.raises(ValueError):
        st.push(P(4, 0, 1))
    left = StackTree(PlainMode(grow_right=False))
    left.push(P(5, 0, 0))
    with pytest.raises(ValueError):
        left.push(P(6, 0, 1))
    left.push(P(4, 0, 1))


def test_push_pop_roundtrip_exact():
    rng = random.Random(32)
    st = StackTree(ChainMode(Kind.UPPER))
    xs = sorted(rng.sample(range(0, 10000), 300))
    pts = [P(x, rng.randrange(-50, 50), i) for i, x in enumerate(xs)]
    marks = [canon(st)]
    for p in pts:
        st.push(p)
        marks.append(canon(st))
    for i in range(len(pts) - 1, -1, -1):
        q = st.pop()
        assert q == pts[i]
        assert canon(st) == marks[i]
    assert st.count == 0


def test_hull_summary_matches_oracle_along_trace():
    rng = random.Random(33)
    for kind in (Kind.UPPER, Kind.LOWER):
        st = StackTree(ChainMode(kind))
        xs = sorted(rng.sample(range(0, 100000), 500))
        pts = [P(x, rng.randrange(-1000, 1000), i) for i, x in enumerate(xs)]
        live = []
        for step, p in enumerate(pts):
            st.push(p)
            live.append(p)
            if rng.random() < 0.15 and live:
                st.pop()
                live.pop()
            if step % 37 == 0:
                s, sess = st.retrieve()
                lower, upper = hull_chains(live)
                want = upper if kind is Kind.UPPER else lower
                assert ht.chain_points(s) == want, step
                st.release(sess)
                st.validate()


def test_left_growing_hull_stack():
    rng = random.Random(34)
    st = StackTree(ChainMode(Kind.UPPER, grow_right=False))
    xs = sorted(rng.sample(range(0, 5000), 200), reverse=True)
    pts = [P(x, rng.randrange(-40, 40), i) for i, x in enumerate(xs)]
    for p in pts:
        st.push(p)
    s, sess = st.retrieve()
    lower, upper = hull_chains(pts)
    assert ht.chain_points(s) == upper
    st.release(sess)


def test_retrieve_release_preserves_state_and_interleaves():
    rng = random.Random(35)
    st = StackTree(ChainMode(Kind.UPPER))
    xs = sorted(rng.sample(range(0, 40000), 400))
    pts = [P(x, rng.randrange(-99, 99), i) for i, x in enumerate(xs)]
    live = []
    for p in pts:
        st.push(p)
        live.append(p)
        if rng.random() < 0.3:
            before = canon(st)
            s, sess = st.retrieve()
            with pytest.raises(RuntimeError):
                st.push(P(10**6, 0, 10**6))
            st.release(sess)
            assert canon(st) == before
        if rng.random() < 0.2 and live:
            st.pop()
            live.pop()
    s, sess = st.retrieve()
    lower, upper = hull_chains(live)
    assert ht.chain_points(s) == upper
    st.release(sess)


def test_invariants_under_long_trace():
    rng = random.Random(36)
    st = StackTree(ChainMode(Kind.UPPER))
    x = 0
    live = 0
    for i in range(10000):
        if live and rng.random() < 0.35:
            st.pop()
            live -= 1
        else:
            x += rng.randrange(1, 5)
            st.push(P(x, rng.randrange(-30, 30), i))
            live += 1
        if i % 251 == 0:
            st.validate()
    st.validate()


def test_push_steps_do_not_grow_with_n():
    # convex-position input makes every merge as expensive as possible, so
    # the per-push budget cap binds at the small size already
    def max_push_cost(n: int) -> tuple[int, int]:
        st = StackTree(ChainMode(Kind.UPPER), order_check=False)
        worst_push = worst_pop = 0
        for i in range(n):
            p = P(i, -(i * i), i)
            before = COUNTER.total
            st.push(p)
            worst_push = max(worst_push, COUNTER.total - before)
            if i % 7 == 3:
                before = COUNTER.total
                st.pop()
                worst_pop = max(worst_pop, COUNTER.total - before)
                st.push(p)
        return worst_push, worst_pop

    small_push, small_pop = max_push_cost(1 << 10)
    big_push, big_pop = max_push_cost(1 << 15)
    assert big_push <= small_push, (small_push, big_push)
    assert big_pop <= small_pop, (small_pop, big_pop)
