"""
Lazily extended lower-triangular arrays.
"""

import logging
import threading
from typing import Callable, List, Tuple

from catalantri.core.exact import Scalar
from catalantri.exceptions import DomainError

logger = logging.getLogger(__name__)

EntryFunction = Callable[[int, int], Scalar]


class Triangle:
    """
    A lower triangle whose rows are computed on demand and kept as tuples.

    Row ``n`` holds the entries for ``k = 0 .. width(n) - 1``; anything
    outside that range reads as 0. Rows are only ever appended, under a
    lock, so a row handed out once never changes.
    """

    def __init__(
        self,
        label: str,
        entry: EntryFunction,
        width: Callable[[int], int] = lambda n: n + 1,
    ):
        """
        Args:
            label: Short name used in logs and table headers
            entry: Function computing the (n, k) entry inside the support
            width: Number of columns in row n (n + 1 for a full triangle)
        """
        self.label = label
        self._entry = entry
        self._width = width
        self._rows: List[Tuple[Scalar, ...]] = []
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"Triangle({self.label!r}, rows_cached={len(self._rows)})"

    def in_support(self, n: int, k: int) -> bool:
        """Whether (n, k) lies inside the printed support of the triangle."""
        return n >= 0 and 0 <= k < self._width(n)

    def _extend_to(self, n: int) -> None:
        if n < len(self._rows):
            return
        with self._lock:
            start = len(self._rows)
            for row in range(start, n + 1):
                self._rows.append(
                    tuple(self._entry(row, k) for k in range(self._width(row)))
                )
            if n >= start:
                logger.debug("%s: extended cache to %d rows", self.label, n + 1)

    def row(self, n: int) -> Tuple[Scalar, ...]:
        """Return row n as an immutable tuple."""
        if n < 0:
            raise DomainError(f"row index must be non-negative, got {n}")
        self._extend_to(n)
        return self._rows[n]

    def rows(self, count: int) -> List[Tuple[Scalar, ...]]:
        """Return rows 0 .. count - 1."""
        if count < 0:
            raise DomainError(f"row count must be non-negative, got {count}")
        if count:
            self._extend_to(count - 1)
        return self._rows[:count]

    def entry(self, n: int, k: int) -> Scalar:
        """Entry (n, k), zero outside the support."""
        if not self.in_support(n, k):
            return 0
        return self.row(n)[k]

    def row_sum(self, n: int, alternating: bool = False) -> Scalar:
        """Sum of row n, with signs (-1)^k when alternating."""
        total = 0
        for k, value in enumerate(self.row(n)):
            total += -value if alternating and k % 2 else value
        return total
