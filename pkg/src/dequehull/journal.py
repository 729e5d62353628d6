"""Rollback journal: every update appends one record of inverse entries.

Entries are (kind, ...) tuples; undoing a record applies them in reverse.
Because all tree values are immutable, restoring a field to an old handle
is an exact restoration, and records stay O(1)-sized per update.
"""

from __future__ import annotations

from .steps import COUNTER

SET = 0      # (SET, obj, attr, old_value)
PROC = 1     # (PROC, obj, attr, process_object, snapshot_or_None)
LIST_POP = 2 # (LIST_POP, list)   undo of one append
SUB = 3      # (SUB, structure)   undo of one update on a sub-structure


class Record:
    __slots__ = ("entries", "token", "payload")

    def __init__(self) -> None:
        self.entries: list = []
        self.token = False
        self.payload = None

    def set(self, obj, attr: str, new) -> None:
        """setattr with an inverse entry; skips no-op writes."""
        COUNTER.bump()
        old = getattr(obj, attr)
        if old is new:
            return
        self.entries.append((SET, obj, attr, old))
        setattr(obj, attr, new)

    def note_proc(self, obj, attr: str) -> None:
        """Record a process's state before advancing it in place."""
        COUNTER.bump()
        proc = getattr(obj, attr)
        self.entries.append((PROC, obj, attr, proc, proc.snapshot() if proc else None))

    def note_append(self, lst: list) -> None:
        self.entries.append((LIST_POP, lst))

    def note_sub(self, structure) -> None:
        self.entries.append((SUB, structure))

    def undo(self) -> None:
        for e in reversed(self.entries):
            COUNTER.bump()
            k = e[0]
            if k == SET:
                _, obj, attr, old = e
                setattr(obj, attr, old)
            elif k == PROC:
                _, obj, attr, proc, snap = e
                if proc is not None:
                    proc.restore(snap)
                setattr(obj, attr, proc)
            elif k == LIST_POP:
                e[1].pop()
            else:
                e[1].undo_one()
