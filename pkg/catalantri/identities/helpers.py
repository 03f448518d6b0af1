"""
Scalar helper functions that appear inside the registered identities.

The identity evaluators look these up through the module
(``helpers.lam(...)``) rather than importing the names, so patching one
here changes every identity that uses it.
"""

from typing import Callable, Dict, Tuple

from catalantri.core.exact import Scalar, catalan
from catalantri.triangles.catalan import motzkin_weight


def lam(n: int, k: int, m: int, l: int) -> int:
    """(2m-l)(2m-l+1)(n-k+1)(n+k+2) - (2n+1)(2n+2)(m-l-k)(m+k+2)"""
    return (
        (2 * m - l) * (2 * m - l + 1) * (n - k + 1) * (n + k + 2)
        - (2 * n + 1) * (2 * n + 2) * (m - l - k) * (m + k + 2)
    )


def mu(n: int, k: int, m: int, l: int) -> int:
    """(2m-l+1)(2m-l+2)(n-k+1)(n+k+3) - (2n+2)(2n+3)(m-l-k)(m+k+3)"""
    return (
        (2 * m - l + 1) * (2 * m - l + 2) * (n - k + 1) * (n + k + 3)
        - (2 * n + 2) * (2 * n + 3) * (m - l - k) * (m + k + 3)
    )


def lam_bar(n: int, k: int, l: int) -> int:
    """2k(2n+1) + l(n-k+1)"""
    return 2 * k * (2 * n + 1) + l * (n - k + 1)


def mu_bar(n: int, k: int, l: int) -> int:
    """(2k+1)(2n+2) + l(n-k+1)"""
    return (2 * k + 1) * (2 * n + 2) + l * (n - k + 1)


def eta(n: int, m: int, k: int) -> int:
    """4mn + 5(m+n) + 2(m+n+1)k + 4"""
    return 4 * m * n + 5 * (m + n) + 2 * (m + n + 1) * k + 4


def nu(n: int, k: int, m: int) -> int:
    """2mn + 3m + 3n - 6k - 2k^2"""
    return 2 * m * n + 3 * m + 3 * n - 6 * k - 2 * k * k


def catalan_g(n: int, m: int, p: int) -> int:
    """
    G_{n,m}(p):
        sum_{i=0}^{p-1} C_{n+i} C_{m-i}      if p >= 1
        0                                    if p = 0
        -sum_{i=1}^{|p|} C_{n-i} C_{m+i}     if p <= -1
    """
    if p >= 1:
        return sum(catalan(n + i) * catalan(m - i) for i in range(p))
    if p == 0:
        return 0
    return -sum(catalan(n - i) * catalan(m + i) for i in range(1, -p + 1))


def catalan_f(n: int, m: int, p: int) -> int:
    """
    F_{n,m}(p):
        sum_{i=0}^{p-1} C_{n+i} C_{m+p-i-1}       if p >= 1
        0                                         if p = 0
        -sum_{i=1}^{|p|} C_{n-i} C_{m-|p|+i-1}    if p <= -1
    """
    if p >= 1:
        return sum(catalan(n + i) * catalan(m + p - i - 1) for i in range(p))
    if p == 0:
        return 0
    q = -p
    return -sum(catalan(n - i) * catalan(m - q + i - 1) for i in range(1, q + 1))


def motzkin_h(n: int, m: int, r: int, y: Scalar) -> Scalar:
    """
    H_{n,m}(r) at (y, y), with M_j = M_{j,0}(y, y):
        sum_{i=0}^{r-1} M_{n+i} M_{m+r-i-1}       if r >= 1
        0                                         if r = 0
        -sum_{i=1}^{|r|} M_{n-i} M_{m-|r|+i-1}    if r <= -1
    """

    def axis(j: int) -> Scalar:
        return motzkin_weight(j, 0, y, y)

    if r >= 1:
        return sum(axis(n + i) * axis(m + r - i - 1) for i in range(r))
    if r == 0:
        return 0
    q = -r
    return -sum(axis(n - i) * axis(m - q + i - 1) for i in range(1, q + 1))


# The ten closed forms of lambda and mu at m in {n, n+1, n+2}, l in {0, 1}.
# Keys: (helper name, m - n, l).
SPECIALIZATIONS: Dict[Tuple[str, int, int], Callable[[int, int], int]] = {
    ("lam", 0, 0): lambda n, k: 2 * k * (2 * n + 1) * (n + k + 2),
    ("lam", 0, 1): lambda n, k: (n + k + 2) * (8 * n * k + 2 * k + 2 * n + 2),
    ("lam", 1, 0): lambda n, k: (2 * k + 3) * (n - k + 1) * (2 * n + 2),
    ("lam", 1, 1): lambda n, k: (2 * k + 2) * (2 * n + 1) * (2 * n + 2),
    ("lam", 2, 1): lambda n, k: (n - k + 1) * (8 * n * k + 10 * k + 14 * n + 16),
    ("mu", 0, 0): lambda n, k: (2 * k + 1) * (2 * n + 2) * (n + k + 3),
    ("mu", 0, 1): lambda n, k: (n + k + 3) * (8 * n * k + 6 * k + 6 * n + 6),
    ("mu", 1, 0): lambda n, k: (2 * k + 4) * (n - k + 1) * (2 * n + 3),
    ("mu", 1, 1): lambda n, k: (2 * k + 3) * (2 * n + 2) * (2 * n + 3),
    ("mu", 2, 1): lambda n, k: (n - k + 1) * (8 * n * k + 14 * k + 18 * n + 30),
}
