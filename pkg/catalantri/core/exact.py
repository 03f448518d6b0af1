"""
Exact integer and rational arithmetic shared by every other module.

Python's ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` keeps rationals in lowest terms with a positive
denominator, so the Integer and Rational types are those two. This module
adds the combinatorial scalars on top of them.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from catalantri.exceptions import DomainError, InexactDivisionError

Integer = int
Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def exact_div(numerator: int, denominator: int) -> int:
    """
    Divide two integers, insisting that the division is exact.

    Raises:
        InexactDivisionError: if denominator does not divide numerator
    """
    if denominator == 0:
        raise ZeroDivisionError("exact division by zero")
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(f"{denominator} does not divide {numerator}")
    return quotient


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k) with the zero extension C(n, k) = 0 for
    k < 0 or k > n.

    Raises:
        DomainError: if n is negative
    """
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return _binomial(n, k)


@lru_cache(maxsize=None)
def _binomial(n: int, k: int) -> int:
    return math.comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """The n-th Catalan number binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise DomainError(f"catalan needs n >= 0, got n={n}")
    return exact_div(binomial(2 * n, n), n + 1)


def rising_factorial(x: Scalar, k: int) -> Scalar:
    """
    Pochhammer symbol (x)_k = x (x + 1) ... (x + k - 1), with (x)_0 = 1.

    The result has the type of x: integer in, integer out.
    """
    if k < 0:
        raise DomainError(f"rising factorial needs k >= 0, got k={k}")
    result = x ** 0
    for i in range(k):
        result *= x + i
    return result


def normalize(value: Scalar) -> Scalar:
    """Collapse integral fractions to int so equal values print the same."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def parse_rational(text: str) -> Scalar:
    """
    Parse an exact rational literal: ``"7"``, ``"-3"`` or ``"p/q"``.

    Decimal notation is rejected; values come back as int when integral.

    Raises:
        DomainError: if text is not a rational literal or q is zero
    """
    match = _RATIONAL_LITERAL.match(text)
    if not match:
        raise DomainError(f"not an exact rational literal: {text!r} (use p or p/q)")
    numerator, denominator = match.groups()
    if denominator is None:
        return int(numerator)
    if int(denominator) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return normalize(Fraction(int(numerator), int(denominator)))


def format_scalar(value: Scalar) -> str:
    """Render an exact value as ``"p"`` or ``"p/q"``."""
    value = normalize(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)
