"""
The four base triangles: ballot numbers C, Shapiro's Catalan triangle B,
the admissible triangle A, and the weighted partial Motzkin triangle M(x, y).

C, B and A come from closed forms; M(x, y) from the step recurrence
M_{n+1,0} = x M_{n,0} + M_{n,1},
M_{n+1,k} = M_{n,k-1} + y M_{n,k} + M_{n,k+1}.
"""

import logging
from functools import lru_cache
from typing import Optional, Tuple

from catalantri.core.exact import Scalar, binomial, exact_div, normalize
from catalantri.exceptions import DomainError
from catalantri.models.schema import TriangleKind
from catalantri.triangles.base import Triangle

logger = logging.getLogger(__name__)

# Weighted triangles kept alive at once; each (x, y) pair gets its own.
MOTZKIN_CACHE_SIZE = 512


def ballot_closed_forms(n: int, k: int) -> Tuple[int, int]:
    """
    Both closed forms of the ballot number C_{n,k}, for 0 <= k <= n:
    (k+1)/(2n-k+1) * binom(2n-k+1, n-k) and (k+1)/(n+1) * binom(2n-k, n).
    """
    if not 0 <= k <= n:
        raise DomainError(f"ballot closed forms need 0 <= k <= n, got ({n}, {k})")
    first = exact_div((k + 1) * binomial(2 * n - k + 1, n - k), 2 * n - k + 1)
    second = exact_div((k + 1) * binomial(2 * n - k, n), n + 1)
    return first, second


@lru_cache(maxsize=None)
def ballot(n: int, k: int) -> int:
    """Ballot number C_{n,k}; 0 outside 0 <= k <= n."""
    if not 0 <= k <= n:
        return 0
    first, second = ballot_closed_forms(n, k)
    if first != second:
        raise ArithmeticError(f"ballot closed forms disagree at ({n}, {k})")
    return first


@lru_cache(maxsize=None)
def shapiro(n: int, k: int) -> int:
    """Shapiro's Catalan triangle B_{n,k} = (k+1)/(n+1) binom(2n+2, n-k)."""
    if not 0 <= k <= n:
        return 0
    return exact_div((k + 1) * binomial(2 * n + 2, n - k), n + 1)


@lru_cache(maxsize=None)
def admissible(n: int, k: int) -> int:
    """Admissible triangle A_{n,k} = (2k+1)/(2n+1) binom(2n+1, n-k)."""
    if not 0 <= k <= n:
        return 0
    return exact_div((2 * k + 1) * binomial(2 * n + 1, n - k), 2 * n + 1)


@lru_cache(maxsize=MOTZKIN_CACHE_SIZE)
def motzkin_triangle(x: Scalar, y: Scalar) -> Triangle:
    """
    The triangle M(x, y), one instance per weight pair.

    Args:
        x: Weight of a horizontal step on the axis
        y: Weight of a horizontal step above the axis

    Returns:
        A Triangle whose rows are filled by the step recurrence
    """
    x, y = normalize(x), normalize(y)

    def entry(n: int, k: int) -> Scalar:
        if n == 0:
            return 1
        prev = tri.row(n - 1)

        def at(j: int) -> Scalar:
            return prev[j] if 0 <= j < len(prev) else 0

        if k == 0:
            return normalize(x * at(0) + at(1))
        return normalize(at(k - 1) + y * at(k) + at(k + 1))

    tri = Triangle(f"M({x},{y})", entry)
    logger.debug("created Motzkin triangle for x=%s, y=%s", x, y)
    return tri


def motzkin_weight(n: int, k: int, x: Scalar, y: Scalar) -> Scalar:
    """
    Total weight M_{n,k}(x, y) of the partial Motzkin paths ending at (n, k).

    Raises:
        DomainError: if n is negative
    """
    if n < 0:
        raise DomainError(f"motzkin_weight needs n >= 0, got n={n}")
    return motzkin_triangle(normalize(x), normalize(y)).entry(n, k)


def motzkin_zero_closed_form(n: int, k: int) -> int:
    """M_{n,k}(0, 0): (k+1)/(n+1) binom(n+1, (n-k)/2) when n - k is even, else 0."""
    if n < 0 or not 0 <= k <= n:
        raise DomainError(f"closed form needs 0 <= k <= n, got ({n}, {k})")
    if (n - k) % 2:
        return 0
    return exact_div((k + 1) * binomial(n + 1, (n - k) // 2), n + 1)


_BASE_ENTRIES = {
    TriangleKind.BALLOT: ballot,
    TriangleKind.SHAPIRO: shapiro,
    TriangleKind.ADMISSIBLE: admissible,
}


@lru_cache(maxsize=None)
def _closed_form_triangle(kind: TriangleKind) -> Triangle:
    return Triangle(kind.value, _BASE_ENTRIES[kind])


def base_triangle(
    kind: TriangleKind, x: Optional[Scalar] = None, y: Optional[Scalar] = None
) -> Triangle:
    """
    Triangle for one of the base kinds C, B, A or M.

    Raises:
        DomainError: if x/y are missing for M or given for another kind
    """
    kind = TriangleKind(kind)
    if kind is TriangleKind.MOTZKIN:
        if x is None or y is None:
            raise DomainError("triangle M needs both x and y")
        return motzkin_triangle(normalize(x), normalize(y))
    if kind.is_derived:
        raise DomainError(f"{kind.value} is a derived triangle, not a base one")
    if x is not None or y is not None:
        raise DomainError(f"x and y only apply to triangle M, not {kind.value}")
    return _closed_form_triangle(kind)
