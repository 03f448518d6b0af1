"""
Executable bijections on lattice paths.

``dyck_split`` cuts a Dyck path of length 2n + 2m + 2 at its (2n+1)-th
step. ``phi_forward`` / ``phi_backward`` pair the path pairs counted by
the permanent sum over M(y, y) with the paths in M_{m+n+r,1}(y, y),
leaving out an excluded family whose weight is H_{n,m}(r).
"""

import logging
from typing import Dict, Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from catalantri.core.exact import Scalar, format_scalar
from catalantri.exceptions import DomainError, PathError
from catalantri.identities import helpers
from catalantri.models.schema import Counterexample, VerificationReport
from catalantri.paths.lattice import (
    LatticePath,
    iter_dyck,
    iter_motzkin,
    r_visible_indices,
    reverse_word,
    word_weight,
)

logger = logging.getLogger(__name__)


class DyckSplit(BaseModel):
    """A Dyck path cut as first + pivot + second at step index 2n."""

    model_config = ConfigDict(frozen=True)

    source: LatticePath
    n: int
    m: int
    pivot_index: int = Field(description="0-based index of the pivot step (2n)")
    pivot: Literal["u", "d"]
    level: int = Field(description="Level of the pivot step, always 2k + 1")
    k: int
    first: LatticePath = Field(description="Steps before the pivot")
    second_reversed: LatticePath = Field(description="Reverse of the steps after the pivot")

    def reconstruct(self) -> LatticePath:
        """Glue the parts back together."""
        return LatticePath(
            steps=self.first.steps + self.pivot + reverse_word(self.second_reversed.steps)
        )

    def ballot_cells(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """
        Ballot-number cells the two parts are counted by: (n+k, 2k) or
        (n+k+1, 2k+2) for the first part, (m+k+1, 2k+1) for the second.
        """
        if self.pivot == "u":
            first = (self.n + self.k, 2 * self.k)
        else:
            first = (self.n + self.k + 1, 2 * self.k + 2)
        return first, (self.m + self.k + 1, 2 * self.k + 1)


def _end(word: str) -> int:
    return word.count("u") - word.count("d")


def _is_motzkin(word: str, length: int, end: int) -> bool:
    if len(word) != length:
        return False
    level = 0
    for step in word:
        level += 1 if step == "u" else -1 if step == "d" else 0
        if level < 0:
            return False
    return level == end


def dyck_split(p: LatticePath, n: int) -> DyckSplit:
    """
    Split a Dyck path of length 2n + 2m + 2 at its (2n+1)-th step.

    Raises:
        PathError: if p is not a Dyck path or is too short for n
    """
    if not p.is_dyck():
        raise PathError(f"not a Dyck path: {p}")
    if n < 0 or len(p) < 2 * n + 2:
        raise PathError(f"a Dyck path of length {len(p)} has no split at n={n}")
    m = (len(p) - 2) // 2 - n
    word = p.steps
    pivot = word[2 * n]
    level = _end(word[: 2 * n + 1])
    if level % 2 != 1:
        raise PathError(f"pivot of {p} ends at even level {level}")
    return DyckSplit(
        source=p,
        n=n,
        m=m,
        pivot_index=2 * n,
        pivot=pivot,
        level=level,
        k=(level - 1) // 2,
        first=LatticePath(steps=word[: 2 * n]),
        second_reversed=LatticePath(steps=reverse_word(word[2 * n + 1:])),
    )


def count_dyck_by_pivot(n: int, m: int) -> Tuple[int, int]:
    """
    Count the Dyck paths of length 2n + 2m + 2 by their (2n+1)-th step.

    Returns:
        (number with an up pivot, number with a down pivot)
    """
    if n < 0 or m < 0:
        raise DomainError(f"count_dyck_by_pivot needs n, m >= 0, got ({n}, {m})")
    up = down = 0
    for word in iter_dyck(n + m + 1):
        if word[2 * n] == "u":
            up += 1
        else:
            down += 1
    logger.debug("dyck pivot counts n=%d m=%d: up=%d down=%d", n, m, up, down)
    return up, down


class PhiInput(BaseModel):
    """
    A path pair on one side of the phi bijection.

    Side ``B``: first in M_{n+r,k+1}, second in M_{m,k}.
    Side ``A``: first in M_{n,k}, second in M_{m+r,k+1}, with the last
    R-visible up step of second preceded by at least r steps.
    """

    model_config = ConfigDict(frozen=True)

    side: Literal["A", "B"]
    first: LatticePath
    second: LatticePath
    k: int

    def serialize(self) -> str:
        first = self.first.steps or "-"
        second = self.second.steps or "-"
        return f"{self.side}({first}, {second})"


def _check_membership(inp: PhiInput, n: int, m: int, r: int) -> None:
    p, q, k = inp.first.steps, inp.second.steps, inp.k
    if inp.side == "B":
        shapes = ((p, n + r, k + 1), (q, m, k))
    else:
        shapes = ((p, n, k), (q, m + r, k + 1))
    for word, length, end in shapes:
        if not _is_motzkin(word, length, end):
            raise PathError(
                f"{inp.serialize()} is not on side {inp.side} for (n, m, r, k)="
                f"({n}, {m}, {r}, {k}): {word or '-'} is not in M_{{{length},{end}}}"
            )


def _last_r_visible(word: str) -> int:
    visible = r_visible_indices(word)
    if not visible:
        raise PathError(f"{word or '-'} has no R-visible up step")
    return visible[-1]


def is_excluded(inp: PhiInput, r: int) -> bool:
    """Whether an A-side pair belongs to the excluded family."""
    return inp.side == "A" and _last_r_visible(inp.second.steps) < r


def phi_forward(inp: PhiInput, n: int, m: int, r: int) -> LatticePath:
    """
    Map a pair to a path in M_{m+n+r,1}.

    B-side pairs become first + reverse(second). On the A-side, second is
    cut at its last R-visible up step u* as Q1 u* Q2 and the image is
    first + reverse(Q1) + u* + Q2.

    Raises:
        DomainError: if r is negative
        PathError: if the pair fails its side's membership or is excluded
    """
    if r < 0:
        raise DomainError(f"phi is only defined for r >= 0, got r={r}")
    _check_membership(inp, n, m, r)
    p, q = inp.first.steps, inp.second.steps
    if inp.side == "B":
        return LatticePath(steps=p + reverse_word(q))
    j = _last_r_visible(q)
    if j < r:
        raise PathError(
            f"{inp.serialize()} is in the excluded family: its last R-visible up "
            f"step has {j} < r={r} steps before it"
        )
    return LatticePath(steps=p + reverse_word(q[:j]) + "u" + q[j + 1:])


def phi_backward(target: LatticePath, n: int, m: int, r: int) -> PhiInput:
    """
    Recover the pair mapped to a path in M_{m+n+r,1}.

    Raises:
        DomainError: if r is negative
        PathError: if target is not a partial Motzkin path of length
            n + m + r ending at level 1
    """
    if r < 0:
        raise DomainError(f"phi is only defined for r >= 0, got r={r}")
    t = target.steps
    if not _is_motzkin(t, n + m + r, 1):
        raise PathError(f"{t or '-'} is not in M_{{{n + m + r},1}}")
    (u,) = r_visible_indices(t)
    if u < n + r:
        p = t[: n + r]
        return PhiInput(
            side="B",
            first=LatticePath(steps=p),
            second=LatticePath(steps=reverse_word(t[n + r:])),
            k=_end(p) - 1,
        )
    p = t[:n]
    return PhiInput(
        side="A",
        first=LatticePath(steps=p),
        second=LatticePath(steps=reverse_word(t[n:u]) + "u" + t[u + 1:]),
        k=_end(p),
    )


def iter_side_pairs(n: int, m: int, r: int, side: str) -> Iterator[PhiInput]:
    """Every pair on one side, excluded ones included, ordered by k."""
    for k in range(n + m + r + 1):
        if side == "B":
            firsts, seconds = (n + r, k + 1), (m, k)
        else:
            firsts, seconds = (n, k), (m + r, k + 1)
        for p in iter_motzkin(*firsts):
            for q in iter_motzkin(*seconds):
                yield PhiInput(
                    side=side,
                    first=LatticePath(steps=p),
                    second=LatticePath(steps=q),
                    k=k,
                )


def phi_domain(n: int, m: int, r: int) -> Iterator[PhiInput]:
    """All B-side pairs, then the A-side pairs outside the excluded family."""
    yield from iter_side_pairs(n, m, r, "B")
    for inp in iter_side_pairs(n, m, r, "A"):
        if not is_excluded(inp, r):
            yield inp


def phi_pairing(n: int, m: int, r: int) -> Iterator[Tuple[PhiInput, LatticePath]]:
    """(pair, image) for every pair in the domain of phi."""
    for inp in phi_domain(n, m, r):
        yield inp, phi_forward(inp, n, m, r)


def excluded_family_weight(n: int, m: int, r: int, k: int, y: Scalar) -> Scalar:
    """
    Weight at (y, y) of the A-side pairs with a given k whose second path
    has its last R-visible up step at index i with k <= i <= r - 1.

    Summed over k this equals H_{n,m}(r).
    """
    if k < 0:
        raise DomainError(f"k must be non-negative, got k={k}")
    if k >= r:
        return 0
    total: Scalar = 0
    for p in iter_motzkin(n, k):
        weight_p = word_weight(p, y, y)
        for q in iter_motzkin(m + r, k + 1):
            if k <= _last_r_visible(q) <= r - 1:
                total += weight_p * word_weight(q, y, y)
    return total


def _pair_weight(inp: PhiInput, y: Scalar) -> Scalar:
    return word_weight(inp.first.steps, y, y) * word_weight(inp.second.steps, y, y)


def check_phi(n: int, m: int, r: int, y: Scalar = 1) -> VerificationReport:
    """
    Exhaustively check phi for one (n, m, r): forward then backward is the
    identity on every pair, backward then forward is the identity on every
    target, lengths and h-step counts are preserved, and the weights satisfy
    |B| + |A| - |excluded| = M_{m+n+r,1}(y, y).
    """
    report_id = "bijection_phi"
    domain = {"n": str(n), "m": str(m), "r": str(r), "y": format_scalar(y)}
    cases = 0

    def fail(params: Dict[str, str], lhs: str, rhs: str, note: str) -> VerificationReport:
        logger.info("%s: %s", report_id, note)
        return VerificationReport(
            id=report_id, domain=domain, passed=False, cases=cases,
            counterexample=Counterexample(params=params, lhs=lhs, rhs=rhs, note=note),
        )

    images: Dict[str, PhiInput] = {}
    side_weight: Scalar = 0
    excluded_weight: Scalar = 0
    for side in ("B", "A"):
        for inp in iter_side_pairs(n, m, r, side):
            weight = _pair_weight(inp, y)
            side_weight += weight
            if is_excluded(inp, r):
                excluded_weight += weight
                continue
            cases += 1
            image = phi_forward(inp, n, m, r).steps
            pair = {"pair": inp.serialize()}
            if image in images:
                return fail(pair, image, images[image].serialize(), "phi is not injective")
            images[image] = inp
            if len(image) != len(inp.first) + len(inp.second):
                return fail(pair, image, "-", "length not preserved")
            if image.count("h") != inp.first.steps.count("h") + inp.second.steps.count("h"):
                return fail(pair, image, "-", "h-step count not preserved")
            back = phi_backward(LatticePath(steps=image), n, m, r)
            if back != inp:
                return fail(pair, image, back.serialize(), "backward(forward(pair)) != pair")

    target_weight: Scalar = 0
    targets = 0
    for word in iter_motzkin(n + m + r, 1):
        cases += 1
        targets += 1
        target_weight += word_weight(word, y, y)
        if word not in images:
            return fail({"target": word}, "-", word, "target not reached by phi")
        again = phi_forward(phi_backward(LatticePath(steps=word), n, m, r), n, m, r).steps
        if again != word:
            return fail({"target": word}, again, word, "forward(backward(target)) != target")
    if len(images) != targets:
        return fail({}, str(len(images)), str(targets), "image has paths outside M_{m+n+r,1}")

    if side_weight - excluded_weight != target_weight:
        return fail(
            {},
            format_scalar(side_weight - excluded_weight),
            format_scalar(target_weight),
            "|B| + |A| - |excluded| != |M_{m+n+r,1}|",
        )
    logger.info("%s n=%d m=%d r=%d: %d cases", report_id, n, m, r, cases)
    return VerificationReport(
        id=report_id, domain=domain, passed=True, cases=cases,
        statement="phi: B-side + (A-side - excluded) <-> M_{m+n+r,1}(y,y)",
    )


def check_dyck_split(n: int, m: int) -> VerificationReport:
    """
    Split every Dyck path of length 2n + 2m + 2, check reconstruction and
    the ballot cells of both parts, and compare pivot counts with the
    expected up-minus-down difference G_{n,m}(m - n + 1).
    """
    report_id = "bijection_dyck_split"
    domain = {"n": str(n), "m": str(m)}
    cases = 0
    up = down = 0
    failure: Optional[Tuple[Dict[str, str], str, str, str]] = None
    for word in iter_dyck(n + m + 1):
        cases += 1
        split = dyck_split(LatticePath(steps=word), n)
        if split.reconstruct().steps != word:
            failure = ({"path": word}, split.reconstruct().steps, word, "reconstruction")
            break
        (a, b), (c, d) = split.ballot_cells()
        if not _is_motzkin(split.first.steps, 2 * a - b, b):
            failure = ({"path": word}, split.first.steps, f"C_{{{a},{b}}}", "first part")
            break
        if not _is_motzkin(split.second_reversed.steps, 2 * c - d, d):
            failure = ({"path": word}, split.second_reversed.steps, f"C_{{{c},{d}}}", "second part")
            break
        if split.pivot == "u":
            up += 1
        else:
            down += 1
    if failure is None:
        expected = helpers.catalan_g(n, m, m - n + 1)
        if up - down != expected:
            failure = ({}, str(up - down), str(expected), "up - down != G_{n,m}(m-n+1)")
    if failure is not None:
        params, lhs, rhs, note = failure
        return VerificationReport(
            id=report_id, domain=domain, passed=False, cases=cases,
            counterexample=Counterexample(params=params, lhs=lhs, rhs=rhs, note=note),
        )
    return VerificationReport(
        id=report_id, domain=domain, passed=True, cases=cases,
        statement=f"pivot up={up}, down={down}, difference G_{{n,m}}(m-n+1)",
    )


def excluded_weights(n: int, m: int, r: int, y: Scalar) -> List[Scalar]:
    """excluded_family_weight for k = 0 .. r - 1."""
    return [excluded_family_weight(n, m, r, k, y) for k in range(max(r, 0))]
