"""Search budgets with cooperative cancellation."""

import threading
import time

from .errors import BudgetExhausted


class Budget:
    """Counts search nodes and stops a search when any limit is hit.

    A budget may be shared by several sub-searches of one task; ``used``
    accumulates across them. ``max_nodes=None`` means unbounded.
    """

    __slots__ = ("max_nodes", "used", "deadline", "cancel")

    def __init__(self, max_nodes=None, seconds=None, cancel=None):
        self.max_nodes = max_nodes
        self.used = 0
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.cancel = cancel

    def tick(self, n=1):
        self.used += n
        if self.max_nodes is not None and self.used > self.max_nodes:
            raise BudgetExhausted(f"node budget {self.max_nodes} exhausted")
        # clock and event checks are comparatively costly
        if self.used & 1023 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise BudgetExhausted("time budget exhausted")
            if self.cancel is not None and self.cancel.is_set():
                raise BudgetExhausted("cancelled")

    @classmethod
    def unlimited(cls):
        return cls()

    @staticmethod
    def token():
        """A fresh cancellation token for :class:`Budget`."""
        return threading.Event()


def ensure(budget):
    return Budget() if budget is None else budget
