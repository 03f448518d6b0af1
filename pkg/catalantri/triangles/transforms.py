"""
Derived triangles X, Y, Z and W built from 2x2 minors, permanents and
products of ballot numbers.
"""

import logging
from functools import lru_cache
from typing import Optional, Union

from catalantri.core.exact import Scalar
from catalantri.exceptions import DomainError
from catalantri.models.schema import TriangleKind
from catalantri.triangles.base import Triangle
from catalantri.triangles.catalan import ballot, base_triangle

logger = logging.getLogger(__name__)

C = ballot


def det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    """Determinant of the matrix [[a, b], [c, d]]."""
    return a * d - b * c


def per2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    """Permanent of the matrix [[a, b], [c, d]]."""
    return a * d + b * c


def x_entry(n: int, k: int) -> int:
    """det [[C(n+k, 2k), C(n+k, 2k+1)], [C(n+k+1, 2k), C(n+k+1, 2k+1)]]."""
    if not 0 <= k <= n:
        return 0
    return det2(
        C(n + k, 2 * k), C(n + k, 2 * k + 1),
        C(n + k + 1, 2 * k), C(n + k + 1, 2 * k + 1),
    )


def y_entry(n: int, k: int) -> int:
    """det [[C(n+k+1, 2k+1), C(n+k+1, 2k+2)], [C(n+k+2, 2k+1), C(n+k+2, 2k+2)]]."""
    if not 0 <= k <= n:
        return 0
    return det2(
        C(n + k + 1, 2 * k + 1), C(n + k + 1, 2 * k + 2),
        C(n + k + 2, 2 * k + 1), C(n + k + 2, 2 * k + 2),
    )


def z_entry(row: int, col: int) -> int:
    """
    Product transform Z, indexed by a single row and column.

    The defining products use n = ceil(row / 2) and k = floor(col / 2):
        even row, even col: C(n+k, 2k)   C(n+k+1, 2k+1)
        even row, odd col:  C(n+k+1, 2k+1) C(n+k+1, 2k+2)
        odd row, even col:  C(n+k, 2k)   C(n+k, 2k+1)
        odd row, odd col:   C(n+k, 2k+1) C(n+k+1, 2k+2)
    """
    if not 0 <= col <= row:
        return 0
    n, k = (row + 1) // 2, col // 2
    if row % 2 == 0:
        if col % 2 == 0:
            return C(n + k, 2 * k) * C(n + k + 1, 2 * k + 1)
        return C(n + k + 1, 2 * k + 1) * C(n + k + 1, 2 * k + 2)
    if col % 2 == 0:
        return C(n + k, 2 * k) * C(n + k, 2 * k + 1)
    return C(n + k, 2 * k + 1) * C(n + k + 1, 2 * k + 2)


def w_support(row: int) -> int:
    """Number of columns of W in a row: k runs over 0 .. row // 2."""
    return row // 2 + 1


def w_entry(row: int, k: int) -> int:
    """
    Permanent transform W.

    Even rows 2n use C(n+k, .) over C(n+k+1, .); odd rows 2n+1 use
    C(n+k, .) over C(n+k+2, .). Entries with k > row // 2 are 0.
    """
    if row < 0 or not 0 <= k < w_support(row):
        return 0
    n, gap = divmod(row, 2)
    return per2(
        C(n + k, 2 * k), C(n + k, 2 * k + 1),
        C(n + k + 1 + gap, 2 * k), C(n + k + 1 + gap, 2 * k + 1),
    )


_DERIVED = {
    TriangleKind.X: (x_entry, lambda n: n + 1),
    TriangleKind.Y: (y_entry, lambda n: n + 1),
    TriangleKind.Z: (z_entry, lambda n: n + 1),
    TriangleKind.W: (w_entry, w_support),
}


@lru_cache(maxsize=None)
def derived_triangle(kind: TriangleKind) -> Triangle:
    """Cached Triangle for X, Y, Z or W."""
    kind = TriangleKind(kind)
    if not kind.is_derived:
        raise DomainError(f"{kind.value} is not a derived triangle")
    entry, width = _DERIVED[kind]
    return Triangle(kind.value, entry, width)


def get_triangle(
    kind: Union[TriangleKind, str],
    x: Optional[Scalar] = None,
    y: Optional[Scalar] = None,
) -> Triangle:
    """Any of the eight triangles by kind; x and y apply to M only."""
    kind = TriangleKind(kind)
    if kind.is_derived:
        if x is not None or y is not None:
            raise DomainError(f"x and y only apply to triangle M, not {kind.value}")
        return derived_triangle(kind)
    return base_triangle(kind, x, y)


def row_sum(t: Triangle, n: int, alternating: bool = False) -> Scalar:
    """
    Sum of row n of a triangle, optionally with signs (-1)^k.

    Raises:
        DomainError: if n is negative
    """
    if n < 0:
        raise DomainError(f"row_sum needs n >= 0, got n={n}")
    return t.row_sum(n, alternating=alternating)
