"""
Brute-force oracles: closed forms and recurrences checked against
exhaustive lattice-path enumeration.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from catalantri.core.exact import Scalar, catalan, format_scalar, normalize
from catalantri.models.schema import Counterexample, VerificationReport
from catalantri.paths.lattice import (
    horizontal_profile,
    iter_dyck,
    iter_motzkin,
    iter_partial_dyck,
    iter_up_down,
)
from catalantri.triangles.catalan import ballot, motzkin_weight, motzkin_zero_closed_form

logger = logging.getLogger(__name__)

Point = Tuple[Scalar, Scalar]

DEFAULT_POINTS: Tuple[Point, ...] = (
    (0, 0),
    (1, 1),
    (2, 2),
    (1, 2),
    (-1, 3),
    (Fraction(1, 2), Fraction(1, 3)),
)


def _failure(
    report_id: str,
    domain: Dict[str, str],
    cases: int,
    params: Dict[str, Scalar],
    lhs: Scalar,
    rhs: Scalar,
    note: Optional[str] = None,
) -> VerificationReport:
    logger.info("%s: counterexample after %d cases at %s", report_id, cases, params)
    return VerificationReport(
        id=report_id,
        domain=domain,
        passed=False,
        cases=cases,
        counterexample=Counterexample(
            params={k: format_scalar(v) for k, v in params.items()},
            lhs=format_scalar(lhs),
            rhs=format_scalar(rhs),
            note=note,
        ),
    )


def weight_profile(n: int, k: int) -> Counter:
    """
    Multiset of (h steps on the axis, h steps above it) over every
    partial Motzkin path from (0, 0) to (n, k).
    """
    return Counter(horizontal_profile(word) for word in iter_motzkin(n, k))


def evaluate_profile(profile: Counter, x: Scalar, y: Scalar) -> Scalar:
    """Total weight of the enumerated paths at one (x, y)."""
    total: Scalar = 0
    for (on_axis, above), count in profile.items():
        total += count * x**on_axis * y**above
    return normalize(total)


def check_motzkin_oracle(
    n_max: int, points: Iterable[Point] = DEFAULT_POINTS
) -> VerificationReport:
    """
    Compare the recurrence M_{n,k}(x, y) with the summed weight of every
    enumerated path, for 0 <= k <= n <= n_max and each (x, y).

    Args:
        n_max: Largest path length
        points: Weight pairs to evaluate at

    Returns:
        A report with id ``oracle_motzkin``
    """
    points = tuple(points)
    domain = {
        "n": f"0..{n_max}",
        "points": " ".join(f"({format_scalar(x)},{format_scalar(y)})" for x, y in points),
    }
    cases = 0
    for n in range(n_max + 1):
        for k in range(n + 1):
            profile = weight_profile(n, k)
            for x, y in points:
                cases += 1
                enumerated = evaluate_profile(profile, x, y)
                expected = motzkin_weight(n, k, x, y)
                if enumerated != expected:
                    return _failure(
                        "oracle_motzkin", domain, cases,
                        {"n": n, "k": k, "x": x, "y": y}, enumerated, expected,
                        note="enumeration vs recurrence",
                    )
    logger.info("oracle_motzkin: %d cases agree", cases)
    return VerificationReport(
        id="oracle_motzkin", domain=domain, passed=True, cases=cases,
        statement="sum of path weights over M_{n,k} = recurrence value M_{n,k}(x,y)",
    )


def check_ballot_oracle(n_max: int) -> VerificationReport:
    """Count partial Dyck paths to level k of length 2n - k against C_{n,k}."""
    domain = {"n": f"0..{n_max}"}
    cases = 0
    for n in range(n_max + 1):
        for k in range(n + 1):
            cases += 1
            counted = sum(1 for _ in iter_partial_dyck(n, k))
            if counted != ballot(n, k):
                return _failure(
                    "oracle_ballot", domain, cases, {"n": n, "k": k},
                    counted, ballot(n, k), note="path count vs closed form",
                )
    logger.info("oracle_ballot: %d cases agree", cases)
    return VerificationReport(
        id="oracle_ballot", domain=domain, passed=True, cases=cases,
        statement="#partial Dyck paths of length 2n-k ending at level k = C_{n,k}",
    )


def check_dyck_oracle(n_max: int) -> VerificationReport:
    """
    Count Dyck paths of semilength n against C_n, and u/d paths of length
    n ending at level k against the closed form for M_{n,k}(0, 0).
    """
    domain = {"n": f"0..{n_max}"}
    cases = 0
    for n in range(n_max + 1):
        cases += 1
        counted = sum(1 for _ in iter_dyck(n))
        if counted != catalan(n):
            return _failure(
                "oracle_dyck", domain, cases, {"n": n}, counted, catalan(n),
                note="Dyck path count vs Catalan number",
            )
        for k in range(n + 1):
            cases += 1
            counted = sum(1 for _ in iter_up_down(n, k))
            expected = motzkin_zero_closed_form(n, k)
            if counted != expected:
                return _failure(
                    "oracle_dyck", domain, cases, {"n": n, "k": k}, counted, expected,
                    note="u/d path count vs M(0,0) closed form",
                )
    logger.info("oracle_dyck: %d cases agree", cases)
    return VerificationReport(
        id="oracle_dyck", domain=domain, passed=True, cases=cases,
        statement="#Dyck paths = C_n; #u/d paths to (n,k) = M_{n,k}(0,0)",
    )


def check_motzkin_grid(
    n_max: int, xs: Sequence[Scalar], ys: Sequence[Scalar]
) -> VerificationReport:
    """The Motzkin oracle over a tensor grid of x and y values."""
    return check_motzkin_oracle(n_max, [(x, y) for x in xs for y in ys])
