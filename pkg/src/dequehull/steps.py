"""Primitive-step instrumentation.

The counter tallies logical work units: orientation/dot evaluations, tree
node visits, ring-buffer cell touches, and journal records.  Allocator and
list-resize work is deliberately excluded.  Incremental-join budgets inside
the stack tree are charged against this same counter, so the measured
per-operation deltas are the quantities the harness regressions assert on.
"""

from __future__ import annotations


class StepCounter:
    __slots__ = ("total",)

    def __init__(self) -> None:
        self.total = 0

    def bump(self, n: int = 1) -> None:
        self.total += n

    def reset(self) -> None:
        self.total = 0


COUNTER = StepCounter()
