"""
Registry of identities on Catalan, ballot and Motzkin numbers.

Each entry is an IdentityDescriptor: declared parameters with their
default desk-scale values, a cross-parameter constraint, and the two
sides as pure functions of a parameter assignment. Sums run to their
stated upper limit; where a tail is given it evaluates the terms just
past that limit, which must all vanish.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional

from catalantri.core.exact import Scalar, binomial, catalan, rising_factorial
from catalantri.exceptions import UnknownIdentityError
from catalantri.identities import helpers
from catalantri.models.schema import IdentityDescriptor, ParamSpec, TriangleKind
from catalantri.paths.bijections import count_dyck_by_pivot
from catalantri.triangles.catalan import (
    admissible,
    ballot,
    ballot_closed_forms,
    motzkin_weight,
    motzkin_zero_closed_form,
    shapiro,
)
from catalantri.triangles.transforms import derived_triangle, det2, per2, w_entry

C = ballot
B = shapiro
M = motzkin_weight
binom = binomial

DESK_N = 25

REGISTRY: Dict[str, IdentityDescriptor] = {}


def _int(name: str, hi: int, lo: int = 0, minimum: Optional[int] = 0) -> ParamSpec:
    return ParamSpec(name=name, minimum=minimum, default=tuple(range(lo, hi + 1)))


def _rational(name: str, values: Iterable[Scalar]) -> ParamSpec:
    return ParamSpec(name=name, minimum=None, default=tuple(values), rational=True)


def _kw(fn: Callable[..., Scalar]) -> Callable[[Mapping[str, Scalar]], Scalar]:
    return lambda a: fn(**a)


def _sum(lo: int, hi: int, term: Callable[[int], Scalar]) -> Scalar:
    return sum((term(k) for k in range(lo, hi + 1)), 0)


def _abs_sum(lo: int, hi: int, term: Callable[[int], Scalar]) -> Scalar:
    return sum((abs(term(k)) for k in range(lo, hi + 1)), 0)


def _ratio_sum(lo: int, hi: int, numerator: Callable[[int], int], denominator: int) -> Fraction:
    """Sum of integer numerators over one k-independent denominator."""
    return Fraction(_sum(lo, hi, numerator), denominator)


def register(
    identity_id: str,
    title: str,
    statement: str,
    params: Iterable[ParamSpec],
    lhs: Callable[..., Scalar],
    rhs: Callable[..., Scalar],
    constraint: Optional[Callable[..., bool]] = None,
    tail: Optional[Callable[..., Scalar]] = None,
    degree_bound: Optional[Callable[..., int]] = None,
) -> IdentityDescriptor:
    """Add an identity; the callables take the parameters as keywords."""
    descriptor = IdentityDescriptor(
        id=identity_id,
        title=title,
        statement=statement,
        params=tuple(params),
        lhs=_kw(lhs),
        rhs=_kw(rhs),
        constraint=_kw(constraint) if constraint else None,
        tail=_kw(tail) if tail else None,
        degree_bound=_kw(degree_bound) if degree_bound else None,
    )
    REGISTRY[identity_id] = descriptor
    return descriptor


def get_identity(identity_id: str) -> IdentityDescriptor:
    """
    Raises:
        UnknownIdentityError: if nothing is registered under the id
    """
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {identity_id!r}; run the 'identities' command for the list"
        ) from None


def identity_ids() -> List[str]:
    """Registered ids in registration order."""
    return list(REGISTRY)


# Shapiro's triangle

register(
    "row_sum_B",
    "Row sums of Shapiro's triangle",
    "sum_{k=0}^{n} B_{n,k} = (2n+1) C_n",
    [_int("n", DESK_N)],
    lhs=lambda n: _sum(0, n, lambda k: B(n, k)),
    rhs=lambda n: (2 * n + 1) * catalan(n),
)

register(
    "shapiro_convolution",
    "Shapiro's convolution",
    "sum_{k=0}^{min(m,n)} B_{n,k} B_{m,k} = C_{m+n+1}",
    [_int("n", DESK_N), _int("m", DESK_N)],
    lhs=lambda n, m: _sum(0, min(m, n), lambda k: B(n, k) * B(m, k)),
    rhs=lambda n, m: catalan(m + n + 1),
)

register(
    "eplett",
    "Alternating row sums of Shapiro's triangle",
    "sum_{k=0}^{n} (-1)^k B_{n,k} = C_n",
    [_int("n", DESK_N)],
    lhs=lambda n: _sum(0, n, lambda k: (-1) ** k * B(n, k)),
    rhs=lambda n: catalan(n),
)


# Determinant sums over M(x, y)


def _minor_sum_terms(n, m, l, r, x, y):
    def term(k):
        return det2(
            M(n, k, x, y), M(m, k + l + 1, x, y),
            M(n + r + 1, k, x, y), M(m + r + 1, k + l + 1, x, y),
        )

    return term


def _n_r(n, m, l, r):
    return min(n + r + 1, m + r - l)


register(
    "thm_1_1",
    "Sums of 2x2 minors of M(x, y)",
    "sum_{k=0}^{N_r} det[[M_{n,k}, M_{m,k+l+1}], [M_{n+r+1,k}, M_{m+r+1,k+l+1}]](x,y)"
    " = sum_{i=0}^{r} M_{n+i,0}(x,y) M_{m+r-i,l}(y,y), N_r = min(n+r+1, m+r-l)",
    [_int("n", 4), _int("m", 4), _int("l", 4), _int("r", 5),
     _rational("x", range(-3, 4)), _rational("y", range(-3, 4))],
    lhs=lambda n, m, l, r, x, y: _sum(0, _n_r(n, m, l, r), _minor_sum_terms(n, m, l, r, x, y)),
    rhs=lambda n, m, l, r, x, y: _sum(
        0, r, lambda i: M(n + i, 0, x, y) * M(m + r - i, l, y, y)
    ),
    constraint=lambda n, m, l, r, x, y: l <= m,
    tail=lambda n, m, l, r, x, y: _abs_sum(
        _n_r(n, m, l, r) + 1, max(n, m) + r + 2, _minor_sum_terms(n, m, l, r, x, y)
    ),
    degree_bound=lambda n, m, l, r, x, y: n + m + r + 1,
)


# Determinant sums over the ballot triangle


def _det_a(n, m, l):
    return lambda k: det2(
        C(n + k, 2 * k), C(m + k, 2 * k + l + 1),
        C(n + k + 1, 2 * k), C(m + k + 1, 2 * k + l + 1),
    )


def _det_b(n, m, l):
    return lambda k: det2(
        C(n + k + 1, 2 * k + 1), C(m + k + 1, 2 * k + l + 2),
        C(n + k + 2, 2 * k + 1), C(m + k + 2, 2 * k + l + 2),
    )


def _cap(n, m, l):
    return min(n + 1, m - l)


_NML = [_int("n", DESK_N), _int("m", DESK_N), _int("l", DESK_N)]

register(
    "thm_2_1_det_a",
    "Ballot minor sum against C_n",
    "sum_{k=0}^{N} det[[C_{n+k,2k}, C_{m+k,2k+l+1}], [C_{n+k+1,2k}, C_{m+k+1,2k+l+1}]]"
    " = C_n C_{m,l}, N = min(n+1, m-l)",
    _NML,
    lhs=lambda n, m, l: _sum(0, _cap(n, m, l), _det_a(n, m, l)),
    rhs=lambda n, m, l: catalan(n) * C(m, l),
    constraint=lambda n, m, l: l <= m,
    tail=lambda n, m, l: _abs_sum(_cap(n, m, l) + 1, n + m + 2, _det_a(n, m, l)),
)

register(
    "thm_2_1_det_b",
    "Ballot minor sum against C_{n+1}",
    "sum_{k=0}^{N} det[[C_{n+k+1,2k+1}, C_{m+k+1,2k+l+2}], [C_{n+k+2,2k+1}, C_{m+k+2,2k+l+2}]]"
    " = C_{n+1} C_{m,l}, N = min(n+1, m-l)",
    _NML,
    lhs=lambda n, m, l: _sum(0, _cap(n, m, l), _det_b(n, m, l)),
    rhs=lambda n, m, l: catalan(n + 1) * C(m, l),
    constraint=lambda n, m, l: l <= m,
    tail=lambda n, m, l: _abs_sum(_cap(n, m, l) + 1, n + m + 2, _det_b(n, m, l)),
)

register(
    "thm_2_1_sum_a",
    "Ballot minor sum in binomial form (lambda)",
    "C_{m,l} C_n = sum_{k=0}^{N} (2k+1)(2k+l+2) lambda_{n,k}(m,l) binom(2n+3,n-k+1)"
    " binom(2m-l+2,m-k-l) / ((2n+1)_3 (2m-l)_3), for 2m - l >= 1",
    _NML,
    lhs=lambda n, m, l: C(m, l) * catalan(n),
    rhs=lambda n, m, l: _ratio_sum(
        0, _cap(n, m, l),
        lambda k: (2 * k + 1) * (2 * k + l + 2) * helpers.lam(n, k, m, l)
        * binom(2 * n + 3, n - k + 1) * binom(2 * m - l + 2, m - k - l),
        rising_factorial(2 * n + 1, 3) * rising_factorial(2 * m - l, 3),
    ),
    constraint=lambda n, m, l: l <= m and 2 * m - l >= 1,
)

register(
    "thm_2_1_sum_b",
    "Ballot minor sum in binomial form (mu)",
    "C_{m,l} C_{n+1} = sum_{k=0}^{N} (2k+2)(2k+l+3) mu_{n,k}(m,l) binom(2n+4,n-k+1)"
    " binom(2m-l+3,m-k-l) / ((2n+2)_3 (2m-l+1)_3)",
    _NML,
    lhs=lambda n, m, l: C(m, l) * catalan(n + 1),
    rhs=lambda n, m, l: _ratio_sum(
        0, _cap(n, m, l),
        lambda k: (2 * k + 2) * (2 * k + l + 3) * helpers.mu(n, k, m, l)
        * binom(2 * n + 4, n - k + 1) * binom(2 * m - l + 3, m - k - l),
        rising_factorial(2 * n + 2, 3) * rising_factorial(2 * m - l + 1, 3),
    ),
    constraint=lambda n, m, l: l <= m,
)


# Squares and products of Catalan numbers

_N = [_int("n", DESK_N)]


def _product_sum(
    hi: Callable[[int], int],
    numerator: Callable[[int, int], int],
    denominator: Callable[[int], int],
) -> Callable[[int], Fraction]:
    return lambda n: _ratio_sum(0, hi(n), lambda k: numerator(n, k), denominator(n))


register(
    "cor_2_2_a",
    "C_{n+1}^2 as a binomial sum",
    "C_{n+1}^2 = sum_{k=0}^{n} (2k+1)(2k+3)(8nk+10k+2n+4) binom(2n+2,n-k) binom(2n+5,n-k+2) / (2n+1)_5",
    _N,
    lhs=lambda n: catalan(n + 1) ** 2,
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 2 * n + 4)
        * binom(2 * n + 2, n - k) * binom(2 * n + 5, n - k + 2),
        lambda n: rising_factorial(2 * n + 1, 5),
    ),
)

register(
    "cor_2_2_b",
    "C_n C_{n+1} as a binomial sum",
    "C_n C_{n+1} = sum_{k=0}^{n} (2k+1)(2k+2)(2k+3) binom(2n+3,n-k) binom(2n+3,n-k+1)"
    " / ((2n+1)(2n+2)(2n+3)^2)",
    _N,
    lhs=lambda n: catalan(n) * catalan(n + 1),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 1) * (2 * k + 2) * (2 * k + 3)
        * binom(2 * n + 3, n - k) * binom(2 * n + 3, n - k + 1),
        lambda n: (2 * n + 1) * (2 * n + 2) * (2 * n + 3) ** 2,
    ),
)

register(
    "cor_2_2_c",
    "C_n C_{n+2} as a binomial sum",
    "C_n C_{n+2} = sum_{k=0}^{n} (2k+1)(2k+3)(8nk+10k+14n+16) binom(2n+2,n-k) binom(2n+5,n-k+1) / (2n+1)_5",
    _N,
    lhs=lambda n: catalan(n) * catalan(n + 2),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 14 * n + 16)
        * binom(2 * n + 2, n - k) * binom(2 * n + 5, n - k + 1),
        lambda n: rising_factorial(2 * n + 1, 5),
    ),
)

register(
    "cor_2_3_a",
    "C_{n+1} C_{n+2} as a binomial sum",
    "C_{n+1} C_{n+2} = sum_{k=0}^{n} (2k+2)(2k+4)(8nk+6n+14k+12) binom(2n+3,n-k) binom(2n+6,n-k+2) / (2n+2)_5",
    _N,
    lhs=lambda n: catalan(n + 1) * catalan(n + 2),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 2) * (2 * k + 4) * (8 * n * k + 6 * n + 14 * k + 12)
        * binom(2 * n + 3, n - k) * binom(2 * n + 6, n - k + 2),
        lambda n: rising_factorial(2 * n + 2, 5),
    ),
)

register(
    "cor_2_3_b",
    "C_{n+1}^2 as a binomial sum (mu form)",
    "C_{n+1}^2 = sum_{k=0}^{n} (2k+2)(2k+3)(2k+4) binom(2n+4,n-k) binom(2n+4,n-k+1)"
    " / ((2n+2)(2n+3)(2n+4)^2)",
    _N,
    lhs=lambda n: catalan(n + 1) ** 2,
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 2) * (2 * k + 3) * (2 * k + 4)
        * binom(2 * n + 4, n - k) * binom(2 * n + 4, n - k + 1),
        lambda n: (2 * n + 2) * (2 * n + 3) * (2 * n + 4) ** 2,
    ),
)

register(
    "cor_2_3_c",
    "C_{n+1} C_{n+2} as a binomial sum (second form)",
    "C_{n+1} C_{n+2} = sum_{k=0}^{n} (2k+2)(2k+4)(8nk+14k+18n+30) binom(2n+3,n-k) binom(2n+6,n-k+1) / (2n+2)_5",
    _N,
    lhs=lambda n: catalan(n + 1) * catalan(n + 2),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 2) * (2 * k + 4) * (8 * n * k + 14 * k + 18 * n + 30)
        * binom(2 * n + 3, n - k) * binom(2 * n + 6, n - k + 1),
        lambda n: rising_factorial(2 * n + 2, 5),
    ),
)


def _diagonal_lhs(n, l, cat):
    return Fraction(binom(2 * n - l + 1, n - l), 2 * n - l + 1) * cat


register(
    "cor_2_4_a",
    "Diagonal case m = n (lambda bar)",
    "binom(2n-l+1,n-l) C_n / (2n-l+1) = sum_{k=0}^{n-l} (2k+1)(2k+l+2) lambdabar_{n,k}(l)"
    " binom(2n+2,n-k+1) binom(2n-l+2,n-k-l) / ((2n+1)_2 (2n-l)_3), for 2n - l >= 1",
    [_int("n", DESK_N), _int("l", DESK_N)],
    lhs=lambda n, l: _diagonal_lhs(n, l, catalan(n)),
    rhs=lambda n, l: _ratio_sum(
        0, n - l,
        lambda k: (2 * k + 1) * (2 * k + l + 2) * helpers.lam_bar(n, k, l)
        * binom(2 * n + 2, n - k + 1) * binom(2 * n - l + 2, n - k - l),
        rising_factorial(2 * n + 1, 2) * rising_factorial(2 * n - l, 3),
    ),
    constraint=lambda n, l: l <= n and 2 * n - l >= 1,
)

register(
    "cor_2_4_b",
    "Diagonal case m = n (mu bar)",
    "binom(2n-l+1,n-l) C_{n+1} / (2n-l+1) = sum_{k=0}^{n-l} (2k+2)(2k+l+3) mubar_{n,k}(l)"
    " binom(2n+3,n-k+1) binom(2n-l+3,n-k-l) / ((2n+2)_2 (2n-l+1)_3)",
    [_int("n", DESK_N), _int("l", DESK_N)],
    lhs=lambda n, l: _diagonal_lhs(n, l, catalan(n + 1)),
    rhs=lambda n, l: _ratio_sum(
        0, n - l,
        lambda k: (2 * k + 2) * (2 * k + l + 3) * helpers.mu_bar(n, k, l)
        * binom(2 * n + 3, n - k + 1) * binom(2 * n - l + 3, n - k - l),
        rising_factorial(2 * n + 2, 2) * rising_factorial(2 * n - l + 1, 3),
    ),
    constraint=lambda n, l: l <= n,
)

register(
    "cor_2_5_a",
    "Central binomial times C_{n-1}",
    "binom(2n,n) C_{n-1} = sum_{k=0}^{n} (2k+1)^2 (4nk-n-k) binom(2n,n-k) binom(2n+1,n-k)"
    " / ((2n-1)^2 (2n) (2n+1)), n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1)],
    lhs=lambda n: binom(2 * n, n) * catalan(n - 1),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 1) ** 2 * (4 * n * k - n - k)
        * binom(2 * n, n - k) * binom(2 * n + 1, n - k),
        lambda n: (2 * n - 1) ** 2 * (2 * n) * (2 * n + 1),
    ),
)

register(
    "cor_2_5_b",
    "Central binomial times C_n",
    "binom(2n,n) C_n = sum_{k=0}^{n} (k+1)^2 (4nk+n+k) binom(2n+1,n-k) binom(2n+2,n-k)"
    " / (n (n+1) (2n+1)^2), n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1)],
    lhs=lambda n: binom(2 * n, n) * catalan(n),
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (k + 1) ** 2 * (4 * n * k + n + k)
        * binom(2 * n + 1, n - k) * binom(2 * n + 2, n - k),
        lambda n: n * (n + 1) * (2 * n + 1) ** 2,
    ),
)


# Product transform sums and Dyck-path bisection


def _z_sum(n, m, sign):
    return _sum(
        0, min(m, n),
        lambda k: C(m + k + 1, 2 * k + 1) * (C(n + k, 2 * k) + sign * C(n + k + 1, 2 * k + 2)),
    )


register(
    "thm_3_1_sum",
    "Ballot product sum",
    "sum_{k=0}^{min(m,n)} C_{m+k+1,2k+1} (C_{n+k,2k} + C_{n+k+1,2k+2}) = C_{m+n+1}",
    [_int("n", DESK_N), _int("m", DESK_N)],
    lhs=lambda n, m: _z_sum(n, m, 1),
    rhs=lambda n, m: catalan(m + n + 1),
)

register(
    "thm_3_1_alt",
    "Alternating ballot product sum",
    "sum_{k=0}^{min(m,n)} C_{m+k+1,2k+1} (C_{n+k,2k} - C_{n+k+1,2k+2}) = G_{n,m}(m-n+1)",
    [_int("n", DESK_N), _int("m", DESK_N)],
    lhs=lambda n, m: _z_sum(n, m, -1),
    rhs=lambda n, m: helpers.catalan_g(n, m, m - n + 1),
)


def _pivot_difference(n: int, m: int) -> int:
    up, down = count_dyck_by_pivot(n, m)
    return up - down


register(
    "cor_3_2_a",
    "Dyck paths of length 4n are bisected by their (2n+1)-th step",
    "#{(2n+1)-th step up} = #{(2n+1)-th step down} over Dyck paths of length 4n, n >= 1",
    [_int("n", 4, lo=1, minimum=1)],
    lhs=lambda n: count_dyck_by_pivot(n, n - 1)[0],
    rhs=lambda n: count_dyck_by_pivot(n, n - 1)[1],
)

register(
    "cor_3_2_b",
    "Pivot parity of Dyck paths of length 4n + 2",
    "#{up} - #{down} over Dyck paths of length 4n+2 = C_n^2",
    [_int("n", 4)],
    lhs=lambda n: _pivot_difference(n, n),
    rhs=lambda n: helpers.catalan_g(n, n, 1),
)

register(
    "cor_3_2_c",
    "Pivot parity of Dyck paths of length 4n + 4",
    "#{up} - #{down} over Dyck paths of length 4n+4 = 2 C_n C_{n+1}",
    [_int("n", 3)],
    lhs=lambda n: _pivot_difference(n, n + 1),
    rhs=lambda n: helpers.catalan_g(n, n + 1, 2),
)


# Permanent sums


def _perm_m(n, m, r, y):
    return lambda k: per2(
        M(n, k, y, y), M(n + r, k + 1, y, y), M(m, k, y, y), M(m + r, k + 1, y, y)
    )


register(
    "thm_4_1",
    "Permanent sum over M(y, y)",
    "sum_{k=0}^{m} per[[M_{n,k}, M_{n+r,k+1}], [M_{m,k}, M_{m+r,k+1}]](y,y)"
    " = M_{m+n+r,1}(y,y) + H_{n,m}(r), m >= n >= 0, r >= -n",
    [_int("n", DESK_N), _int("m", DESK_N), _int("r", 5, lo=-5, minimum=None),
     _rational("y", range(-3, 4))],
    lhs=lambda n, m, r, y: _sum(0, m, _perm_m(n, m, r, y)),
    rhs=lambda n, m, r, y: M(m + n + r, 1, y, y) + helpers.motzkin_h(n, m, r, y),
    constraint=lambda n, m, r, y: m >= n and r >= -n,
    tail=lambda n, m, r, y: _abs_sum(m + 1, m + abs(r) + 2, _perm_m(n, m, r, y)),
    degree_bound=lambda n, m, r, y: n + m + abs(r) + 1,
)


def _perm_c_a(n, m, p):
    return lambda k: per2(
        C(n + k, 2 * k), C(n + p + k, 2 * k + 1), C(m + k, 2 * k), C(m + p + k, 2 * k + 1)
    )


def _perm_c_b(n, m, p):
    return lambda k: per2(
        C(n + k, 2 * k + 1), C(n + p + k + 1, 2 * k + 2),
        C(m + k, 2 * k + 1), C(m + p + k + 1, 2 * k + 2),
    )


_NMP = [_int("n", DESK_N), _int("m", DESK_N), _int("p", 5, lo=-5, minimum=None)]

register(
    "thm_4_2_a",
    "Permanent sum over the ballot triangle (even columns)",
    "sum_{k=0}^{m} per[[C_{n+k,2k}, C_{n+p+k,2k+1}], [C_{m+k,2k}, C_{m+p+k,2k+1}]]"
    " = C_{m+n+p,1} + F_{n,m}(p), m >= n >= 0, p >= -n",
    _NMP,
    lhs=lambda n, m, p: _sum(0, m, _perm_c_a(n, m, p)),
    rhs=lambda n, m, p: C(m + n + p, 1) + helpers.catalan_f(n, m, p),
    constraint=lambda n, m, p: m >= n and p >= -n,
    tail=lambda n, m, p: _abs_sum(m + 1, m + abs(p) + 2, _perm_c_a(n, m, p)),
)

register(
    "thm_4_2_b",
    "Permanent sum over the ballot triangle (odd columns)",
    "sum_{k=0}^{m} per[[C_{n+k,2k+1}, C_{n+p+k+1,2k+2}], [C_{m+k,2k+1}, C_{m+p+k+1,2k+2}]]"
    " = C_{m+n+p,1} + F_{n,m}(p), m >= n >= 1, p >= -n",
    _NMP,
    lhs=lambda n, m, p: _sum(0, m, _perm_c_b(n, m, p)),
    rhs=lambda n, m, p: C(m + n + p, 1) + helpers.catalan_f(n, m, p),
    constraint=lambda n, m, p: m >= n >= 1 and p >= -n,
    tail=lambda n, m, p: _abs_sum(m + 1, m + abs(p) + 2, _perm_c_b(n, m, p)),
)


def _pq_den(n, m):
    return (2 * n) * (2 * n + 1) * (2 * m) * (2 * m + 1)


register(
    "cor_4_3_a",
    "C_{n+m} from the even-column permanent sum",
    "C_{n+m} = sum_{k=0}^{n} (2k+1)(2k+2)(4mn-2(m+n)k) binom(2n+1,n-k) binom(2m+1,m-k)"
    " / ((2n)(2n+1)(2m)(2m+1)), m >= n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1), _int("m", DESK_N, lo=1, minimum=1)],
    lhs=lambda n, m: catalan(n + m),
    rhs=lambda n, m: _ratio_sum(
        0, n,
        lambda k: (2 * k + 1) * (2 * k + 2) * (4 * m * n - 2 * (m + n) * k)
        * binom(2 * n + 1, n - k) * binom(2 * m + 1, m - k),
        _pq_den(n, m),
    ),
    constraint=lambda n, m: m >= n,
)

register(
    "cor_4_3_b",
    "C_{n+m} from the odd-column permanent sum",
    "C_{n+m} = sum_{k=0}^{n-1} (2k+2)(2k+3)(4mn+4m+4n+2(m+n)k) binom(2n+1,n-k-1) binom(2m+1,m-k-1)"
    " / ((2n)(2n+1)(2m)(2m+1)), m >= n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1), _int("m", DESK_N, lo=1, minimum=1)],
    lhs=lambda n, m: catalan(n + m),
    rhs=lambda n, m: _ratio_sum(
        0, n - 1,
        lambda k: (2 * k + 2) * (2 * k + 3) * (4 * m * n + 4 * m + 4 * n + 2 * (m + n) * k)
        * binom(2 * n + 1, n - k - 1) * binom(2 * m + 1, m - k - 1),
        _pq_den(n, m),
    ),
    constraint=lambda n, m: m >= n,
)

register(
    "cor_4_3_c",
    "C_{2n} as a binomial sum",
    "C_{2n} = sum_{k=0}^{n-1} (2k+1)(2k+2) binom(2n,n-k-1) binom(2n+1,n-k) / (n(2n+1)), n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1)],
    lhs=lambda n: catalan(2 * n),
    rhs=_product_sum(
        lambda n: n - 1,
        lambda n, k: (2 * k + 1) * (2 * k + 2) * binom(2 * n, n - k - 1) * binom(2 * n + 1, n - k),
        lambda n: n * (2 * n + 1),
    ),
)

register(
    "cor_4_3_d",
    "C_{2n} as a binomial sum (second form)",
    "C_{2n} = sum_{k=0}^{n-1} (2k+2)(2k+3) binom(2n,n-k-1) binom(2n+1,n-k-1) / (n(2n+1)), n >= 1",
    [_int("n", DESK_N, lo=1, minimum=1)],
    lhs=lambda n: catalan(2 * n),
    rhs=_product_sum(
        lambda n: n - 1,
        lambda n, k: (2 * k + 2) * (2 * k + 3) * binom(2 * n, n - k - 1) * binom(2 * n + 1, n - k - 1),
        lambda n: n * (2 * n + 1),
    ),
)

register(
    "cor_4_4_a",
    "C_{n+m+1} + C_n C_m as a binomial sum",
    "C_{n+m+1} + C_n C_m = sum_{k=0}^{n} (2k+1)(2k+2) eta_{n,m}(k) binom(2n+2,n-k) binom(2m+2,m-k)"
    " / ((2n+1)(2n+2)(2m+1)(2m+2)), m >= n >= 0",
    [_int("n", DESK_N), _int("m", DESK_N)],
    lhs=lambda n, m: catalan(n + m + 1) + catalan(n) * catalan(m),
    rhs=lambda n, m: _ratio_sum(
        0, n,
        lambda k: (2 * k + 1) * (2 * k + 2) * helpers.eta(n, m, k)
        * binom(2 * n + 2, n - k) * binom(2 * m + 2, m - k),
        (2 * n + 1) * (2 * n + 2) * (2 * m + 1) * (2 * m + 2),
    ),
    constraint=lambda n, m: m >= n,
)

register(
    "cor_4_4_b",
    "C_{2n+1} + C_n^2 as a binomial sum",
    "C_{2n+1} + C_n^2 = sum_{k=0}^{n} (2k+1)(2k+2) binom(2n+1,n-k) binom(2n+2,n-k) / ((n+1)(2n+1))",
    _N,
    lhs=lambda n: catalan(2 * n + 1) + catalan(n) ** 2,
    rhs=_product_sum(
        lambda n: n,
        lambda n, k: (2 * k + 1) * (2 * k + 2) * binom(2 * n + 1, n - k) * binom(2 * n + 2, n - k),
        lambda n: (n + 1) * (2 * n + 1),
    ),
)


def _perm_b(n, m, p):
    return lambda k: per2(B(n, k), B(n + p, k + 1), B(m, k), B(m + p, k + 1))


register(
    "thm_4_4",
    "Permanent sum over Shapiro's triangle",
    "sum_{k=0}^{m} per[[B_{n,k}, B_{n+p,k+1}], [B_{m,k}, B_{m+p,k+1}]]"
    " = B_{m+n+p,1} + F_{n+1,m+1}(p), m >= n >= 0, p >= -n",
    _NMP,
    lhs=lambda n, m, p: _sum(0, m, _perm_b(n, m, p)),
    rhs=lambda n, m, p: B(m + n + p, 1) + helpers.catalan_f(n + 1, m + 1, p),
    constraint=lambda n, m, p: m >= n and p >= -n,
    tail=lambda n, m, p: _abs_sum(m + 1, m + abs(p) + 2, _perm_b(n, m, p)),
)

register(
    "cor_4_5_a",
    "Shapiro permanent sum at p = 0",
    "2 binom(2n+2m+2,n+m-1) / (n+m+1) = sum_{k=0}^{n} (2k+2)(2k+4) nu_{n,k}(m) binom(2n+3,n-k)"
    " binom(2m+3,m-k) / ((2n+2)_2 (2m+2)_2), m >= n >= 0",
    [_int("n", DESK_N), _int("m", DESK_N)],
    lhs=lambda n, m: Fraction(2 * binom(2 * n + 2 * m + 2, n + m - 1), n + m + 1),
    rhs=lambda n, m: _ratio_sum(
        0, n,
        lambda k: (2 * k + 2) * (2 * k + 4) * helpers.nu(n, k, m)
        * binom(2 * n + 3, n - k) * binom(2 * m + 3, m - k),
        rising_factorial(2 * n + 2, 2) * rising_factorial(2 * m + 2, 2),
    ),
    constraint=lambda n, m: m >= n,
)

register(
    "cor_4_5_b",
    "Shapiro permanent sum at p = 0, m = n",
    "binom(4n+2,2n-1) / (2n+1) = sum_{k=0}^{n-1} (k+1)(k+2) binom(2n+2,n-k-1) binom(2n+2,n-k) / (n+1)^2",
    _N,
    lhs=lambda n: Fraction(binom(4 * n + 2, 2 * n - 1), 2 * n + 1),
    rhs=_product_sum(
        lambda n: n - 1,
        lambda n, k: (k + 1) * (k + 2) * binom(2 * n + 2, n - k - 1) * binom(2 * n + 2, n - k),
        lambda n: (n + 1) ** 2,
    ),
)


# Relations between the triangles

_NK = [_int("n", 40), _int("k", 40)]


def _k_le_n(n, k, **_):
    return k <= n


register(
    "relation_a_from_c",
    "Admissible triangle inside the ballot triangle",
    "A_{n,k} = C_{n+k,2k}",
    _NK,
    lhs=lambda n, k: admissible(n, k),
    rhs=lambda n, k: C(n + k, 2 * k),
    constraint=_k_le_n,
)

register(
    "relation_b_from_c",
    "Shapiro's triangle inside the ballot triangle",
    "B_{n,k} = C_{n+k+1,2k+1}",
    _NK,
    lhs=lambda n, k: B(n, k),
    rhs=lambda n, k: C(n + k + 1, 2 * k + 1),
    constraint=_k_le_n,
)

register(
    "relation_c_first_column",
    "First column of the ballot triangle",
    "C_{n,0} = C_n",
    [_int("n", 40)],
    lhs=lambda n: C(n, 0),
    rhs=lambda n: catalan(n),
)

register(
    "relation_c_second_column",
    "Second column of the ballot triangle",
    "C_{n+1,1} = C_{n+1}",
    [_int("n", 40)],
    lhs=lambda n: C(n + 1, 1),
    rhs=lambda n: catalan(n + 1),
)

register(
    "relation_c_row_sum",
    "Row sums of the ballot triangle",
    "sum_{k=0}^{n} C_{n,k} = C_{n+1}; the often printed '= C_n' is off by one in the"
    " index (row 3: 5+5+3+1 = 14 = C_4)",
    [_int("n", 40)],
    lhs=lambda n: _sum(0, n, lambda k: C(n, k)),
    rhs=lambda n: catalan(n + 1),
)

register(
    "relation_b_first_column",
    "First column of Shapiro's triangle",
    "B_{n,0} = C_{n+1}",
    [_int("n", 40)],
    lhs=lambda n: B(n, 0),
    rhs=lambda n: catalan(n + 1),
)

register(
    "ballot_closed_forms",
    "The two ballot closed forms agree",
    "(k+1)/(2n-k+1) binom(2n-k+1,n-k) = (k+1)/(n+1) binom(2n-k,n)",
    [_int("n", 60), _int("k", 60)],
    lhs=lambda n, k: ballot_closed_forms(n, k)[0],
    rhs=lambda n, k: ballot_closed_forms(n, k)[1],
    constraint=_k_le_n,
)


# Specializations of M(x, y)

register(
    "specialization_a_motzkin",
    "A is M(1, 2)",
    "A_{n,k} = M_{n,k}(1,2)",
    _NK,
    lhs=lambda n, k: admissible(n, k),
    rhs=lambda n, k: M(n, k, 1, 2),
    constraint=_k_le_n,
)

register(
    "specialization_b_motzkin",
    "B is M(2, 2)",
    "B_{n,k} = M_{n,k}(2,2)",
    _NK,
    lhs=lambda n, k: B(n, k),
    rhs=lambda n, k: M(n, k, 2, 2),
    constraint=_k_le_n,
)

register(
    "specialization_c_motzkin",
    "C sits inside M(0, 0)",
    "C_{n,k} = M_{2n-k,k}(0,0)",
    _NK,
    lhs=lambda n, k: C(n, k),
    rhs=lambda n, k: M(2 * n - k, k, 0, 0),
    constraint=_k_le_n,
)

register(
    "motzkin_zero_closed_form",
    "Closed form of M(0, 0)",
    "M_{n,k}(0,0) = (k+1)/(n+1) binom(n+1,(n-k)/2) if n-k is even, else 0",
    [_int("n", 20), _int("k", 20)],
    lhs=lambda n, k: M(n, k, 0, 0),
    rhs=lambda n, k: motzkin_zero_closed_form(n, k),
    constraint=_k_le_n,
)


# lambda and mu at special arguments

_SPECIAL_CASES = sorted(helpers.SPECIALIZATIONS)


def _special_general(n, k, case):
    name, shift, l = _SPECIAL_CASES[case]
    return getattr(helpers, name)(n, k, n + shift, l)


register(
    "lambda_mu_specializations",
    "lambda and mu at m in {n, n+1, n+2}",
    "e.g. lambda_{n,k}(n,0) = 2k(2n+1)(n+k+2), mu_{n,k}(n+1,1) = (2k+3)(2n+2)(2n+3);"
    " case indexes the ten (helper, m - n, l) closed forms",
    [_int("n", 20), _int("k", 20), ParamSpec(
        name="case", minimum=0, maximum=len(_SPECIAL_CASES) - 1,
        default=tuple(range(len(_SPECIAL_CASES))),
    )],
    lhs=_special_general,
    rhs=lambda n, k, case: helpers.SPECIALIZATIONS[_SPECIAL_CASES[case]](n, k),
    constraint=lambda n, k, case: k <= n,
)

register(
    "lambda_diagonal",
    "lambda on the diagonal m = n",
    "lambda_{n,k}(n,l) = (l+1)(n+k+2) lambdabar_{n,k}(l)",
    [_int("n", 20), _int("k", 20), _int("l", 20)],
    lhs=lambda n, k, l: helpers.lam(n, k, n, l),
    rhs=lambda n, k, l: (l + 1) * (n + k + 2) * helpers.lam_bar(n, k, l),
    constraint=lambda n, k, l: k <= n and l <= n,
)

register(
    "mu_diagonal",
    "mu on the diagonal m = n",
    "mu_{n,k}(n,l) = (l+1)(n+k+3) mubar_{n,k}(l)",
    [_int("n", 20), _int("k", 20), _int("l", 20)],
    lhs=lambda n, k, l: helpers.mu(n, k, n, l),
    rhs=lambda n, k, l: (l + 1) * (n + k + 3) * helpers.mu_bar(n, k, l),
    constraint=lambda n, k, l: k <= n and l <= n,
)


# Row sums of the derived triangles


def _derived_row_sum(kind: TriangleKind, n: int, alternating: bool = False) -> Scalar:
    return derived_triangle(kind).row_sum(n, alternating=alternating)


register(
    "x_row_sum",
    "Row sums of X",
    "sum_k X_{n,k} = C_n^2",
    _N,
    lhs=lambda n: _derived_row_sum(TriangleKind.X, n),
    rhs=lambda n: catalan(n) ** 2,
)

register(
    "y_row_sum",
    "Row sums of Y",
    "sum_k Y_{n,k} = C_n C_{n+1}",
    _N,
    lhs=lambda n: _derived_row_sum(TriangleKind.Y, n),
    rhs=lambda n: catalan(n) * catalan(n + 1),
)

register(
    "z_row_sum",
    "Row sums of Z",
    "sum_k Z_{n,k} = C_{n+1}",
    _N,
    lhs=lambda n: _derived_row_sum(TriangleKind.Z, n),
    rhs=lambda n: catalan(n + 1),
)

register(
    "z_alternating_row_sum",
    "Alternating row sums of Z",
    "sum_k (-1)^k Z_{n,k} = C_{n/2}^2 for even n, 0 for odd n",
    _N,
    lhs=lambda n: _derived_row_sum(TriangleKind.Z, n, alternating=True),
    rhs=lambda n: 0 if n % 2 else catalan(n // 2) ** 2,
)

register(
    "w_row_sum",
    "Row sums of W",
    "sum_k W_{n,k} = C_{n+1}",
    _N,
    lhs=lambda n: _derived_row_sum(TriangleKind.W, n),
    rhs=lambda n: catalan(n + 1),
)


def _w_row_from_permanent(row: int) -> int:
    n, gap = divmod(row, 2)
    return _sum(0, n + 1 + gap, _perm_c_a(n, n + 1 + gap, 0))


register(
    "w_rows_from_permanent_sum",
    "W rows as the p = 0 even-column permanent sum",
    "sum_{k=0}^{m} per[[C_{n+k,2k}, C_{n+k,2k+1}], [C_{m+k,2k}, C_{m+k,2k+1}]] with"
    " m = n+1 (row 2n) or m = n+2 (row 2n+1) = sum_k W_{row,k}",
    [_int("row", 20)],
    lhs=_w_row_from_permanent,
    rhs=lambda row: _sum(0, row // 2, lambda k: w_entry(row, k)),
)
