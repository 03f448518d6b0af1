"""
Truncated formal power series with exact rational coefficients, and the
Riordan-array descriptions of the triangles A, B and C.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Sequence, Tuple

from catalantri.core.exact import Scalar, catalan, format_scalar, normalize
from catalantri.exceptions import DomainError, SeriesError
from catalantri.models.schema import Counterexample, TriangleKind, VerificationReport
from catalantri.triangles.catalan import admissible, ballot, shapiro

logger = logging.getLogger(__name__)


class PowerSeries:
    """
    c_0 + c_1 t + ... + c_N t^N, known exactly up to the order N.

    Arithmetic keeps the smaller order of its operands; reading a
    coefficient past the order raises SeriesError.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar]):
        coeffs = tuple(normalize(c) for c in coefficients)
        if not coeffs:
            raise SeriesError("a power series needs at least one coefficient")
        self._coeffs: Tuple[Scalar, ...] = coeffs

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> Tuple[Scalar, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Scalar:
        if n < 0:
            return 0
        if n > self.order:
            raise SeriesError(f"coefficient of t^{n} is beyond the order {self.order}")
        return self._coeffs[n]

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(format_scalar(c) for c in self._coeffs)}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        """Drop every coefficient past t^order."""
        if order > self.order:
            raise SeriesError(f"cannot raise the order from {self.order} to {order}")
        return PowerSeries(self._coeffs[: order + 1])

    def _lift(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other] + [0] * self.order)
        return NotImplemented

    def __add__(self, other) -> "PowerSeries":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return PowerSeries(self[i] + other[i] for i in range(order + 1))

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self._coeffs)

    def __sub__(self, other) -> "PowerSeries":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return PowerSeries(other * c for c in self._coeffs)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        return power(self, k)

    def is_zero(self) -> bool:
        return not any(self._coeffs)


def multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    order = min(a.order, b.order)
    return PowerSeries(
        sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order + 1)
    )


def power(a: PowerSeries, k: int) -> PowerSeries:
    """a ** k by repeated squaring; a ** 0 is 1."""
    if k < 0:
        raise DomainError(f"power needs k >= 0, got k={k}")
    result = PowerSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def shift(a: PowerSeries, k: int) -> PowerSeries:
    """Multiply by t^k; the order goes up by k."""
    if k < 0:
        raise DomainError(f"shift needs k >= 0, got k={k}")
    return PowerSeries([0] * k + list(a.coefficients))


@lru_cache(maxsize=64)
def catalan_series(order: int) -> PowerSeries:
    """
    The Catalan generating function C(t) to the given order, from the
    functional equation C = 1 + t C^2, i.e. c_{n+1} = sum_i c_i c_{n-i}.
    """
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    coeffs = [1]
    for n in range(order):
        coeffs.append(sum(coeffs[i] * coeffs[n - i] for i in range(n + 1)))
    return PowerSeries(coeffs)


def functional_equation_residual(order: int) -> PowerSeries:
    """(1 + t C(t)^2) - C(t), truncated to the order; all zero when C is right."""
    c = catalan_series(order)
    return (1 + shift(c * c, 1).truncate(order)) - c


# Column k of a Riordan array (d, h) has generating function d * h^k,
# with h = t * C^h_exp and d = C^d_exp.
RIORDAN_PAIRS: Dict[TriangleKind, Tuple[int, int]] = {
    TriangleKind.ADMISSIBLE: (1, 2),
    TriangleKind.SHAPIRO: (2, 2),
    TriangleKind.BALLOT: (1, 1),
}

_ENTRIES: Dict[TriangleKind, Callable[[int, int], int]] = {
    TriangleKind.ADMISSIBLE: admissible,
    TriangleKind.SHAPIRO: shapiro,
    TriangleKind.BALLOT: ballot,
}


def riordan_pair(which: TriangleKind, order: int) -> Tuple[PowerSeries, PowerSeries]:
    """(d(t), h(t)) for A = (C, tC^2), B = (C^2, tC^2) or C = (C, tC)."""
    which = TriangleKind(which)
    if which not in RIORDAN_PAIRS:
        raise DomainError(f"no Riordan pair for triangle {which.value}")
    d_exp, h_exp = RIORDAN_PAIRS[which]
    c = catalan_series(order)
    return power(c, d_exp), shift(power(c, h_exp), 1).truncate(order)


def riordan_column(which: TriangleKind, k: int, order: int) -> PowerSeries:
    """d(t) h(t)^k, the generating function of column k."""
    d, h = riordan_pair(which, order)
    return multiply(d, power(h, k))


def riordan_column_check(which: TriangleKind, k: int, order: int) -> bool:
    """
    Whether [t^n] d(t) h(t)^k equals entry (n, k) of the triangle for
    every n up to the order.
    """
    if not 0 <= k <= order:
        raise DomainError(f"riordan_column_check needs 0 <= k <= order, got k={k}")
    which = TriangleKind(which)
    column = riordan_column(which, k, order)
    entry = _ENTRIES[which]
    return all(column[n] == entry(n, k) for n in range(order + 1))


def check_riordan(
    k_max: int, order: int, kinds: Sequence[TriangleKind] = tuple(RIORDAN_PAIRS)
) -> VerificationReport:
    """Riordan column checks for every kind and every k <= k_max."""
    domain = {"k": f"0..{k_max}", "order": str(order),
              "triangles": ",".join(TriangleKind(t).value for t in kinds)}
    cases = 0
    for which in kinds:
        which = TriangleKind(which)
        entry = _ENTRIES[which]
        for k in range(min(k_max, order) + 1):
            column = riordan_column(which, k, order)
            for n in range(order + 1):
                cases += 1
                if column[n] != entry(n, k):
                    return VerificationReport(
                        id="series_riordan", domain=domain, passed=False, cases=cases,
                        counterexample=Counterexample(
                            params={"triangle": which.value, "n": str(n), "k": str(k)},
                            lhs=format_scalar(column[n]),
                            rhs=format_scalar(entry(n, k)),
                            note="[t^n] d h^k vs triangle entry",
                        ),
                    )
    logger.info("series_riordan: %d coefficients agree", cases)
    return VerificationReport(
        id="series_riordan", domain=domain, passed=True, cases=cases,
        statement="A = (C, tC^2), B = (C^2, tC^2), C = (C, tC)",
    )


def check_catalan_series(order: int) -> VerificationReport:
    """C = 1 + tC^2 through the order, and c_n = catalan(n)."""
    domain = {"order": str(order)}
    residual = functional_equation_residual(order)
    series = catalan_series(order)
    for n in range(order + 1):
        for lhs, rhs, note in (
            (residual[n], 0, "1 + tC^2 - C"),
            (series[n], catalan(n), "coefficient vs catalan(n)"),
        ):
            if lhs != rhs:
                return VerificationReport(
                    id="series_catalan", domain=domain, passed=False, cases=n + 1,
                    counterexample=Counterexample(
                        params={"n": str(n)}, lhs=format_scalar(lhs),
                        rhs=format_scalar(rhs), note=note,
                    ),
                )
    return VerificationReport(
        id="series_catalan", domain=domain, passed=True, cases=order + 1,
        statement="C(t) = 1 + t C(t)^2",
    )
