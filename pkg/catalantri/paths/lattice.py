"""
Lattice paths over the steps u = (1, 1), d = (1, -1) and h = (1, 0).

Paths are plain step words over the alphabet {u, d, h}. Enumeration is
exhaustive and ordered lexicographically with u < h < d, so the same
arguments always produce the same sequence.
"""

from enum import Enum
from itertools import accumulate
from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from catalantri.core.exact import Scalar, normalize
from catalantri.exceptions import PathError


class Step(str, Enum):
    """The three step types."""

    U = "u"
    D = "d"
    H = "h"

    @property
    def rise(self) -> int:
        return _RISE[self.value]


_RISE = {"u": 1, "d": -1, "h": 0}
_REVERSE = str.maketrans("ud", "du")

# Children in the order they are tried; the stack pops the last pushed first.
_MOTZKIN_ORDER = ("u", "h", "d")
_DYCK_ORDER = ("u", "d")


class LatticePath(BaseModel):
    """
    An immutable step word such as ``"uudhd"``.

    The word itself may dip below the axis (a reversed segment usually
    does); ``is_partial_motzkin`` is the validity predicate.
    """

    model_config = ConfigDict(frozen=True)

    steps: str = Field(default="", pattern=r"^[udh]*$")

    @field_validator("steps", mode="before")
    @classmethod
    def _lowercase(cls, value):
        if isinstance(value, str):
            return value.strip().lower()
        return value

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        """
        Build a path from its compact serialization.

        Raises:
            PathError: if the text has letters other than u, d, h
        """
        try:
            return cls(steps=text)
        except ValueError as e:
            raise PathError(f"not a step word over u/d/h: {text!r}") from e

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(steps=self.steps + other.steps)

    def segment(self, start: int, stop: int) -> "LatticePath":
        """Sub-path of steps start .. stop - 1."""
        return LatticePath(steps=self.steps[start:stop])

    def levels(self) -> List[int]:
        """y-coordinate after each step."""
        return list(accumulate(_RISE[s] for s in self.steps))

    @property
    def end_level(self) -> int:
        return sum(_RISE[s] for s in self.steps)

    def count(self, step: Step) -> int:
        """Number of steps of one type."""
        return self.steps.count(Step(step).value)

    def is_partial_motzkin(self) -> bool:
        """Whether the path never goes below the axis."""
        return all(level >= 0 for level in self.levels())

    def is_partial_dyck(self) -> bool:
        return "h" not in self.steps and self.is_partial_motzkin()

    def is_dyck(self) -> bool:
        """A partial Dyck path that returns to the axis."""
        return self.is_partial_dyck() and self.end_level == 0


def _iter_words(length: int, end: int, alphabet: Tuple[str, ...]) -> Iterator[str]:
    """
    Depth-first generation of non-negative step words of a given length and
    end level, in the order of ``alphabet``.
    """
    if length < 0 or end < 0 or end > length:
        return
    stack: List[Tuple[str, int]] = [("", 0)]
    while stack:
        word, level = stack.pop()
        remaining = length - len(word)
        if remaining == 0:
            yield word
            continue
        for step in reversed(alphabet):
            nxt = level + _RISE[step]
            if nxt < 0 or abs(nxt - end) > remaining - 1:
                continue
            stack.append((word + step, nxt))


def iter_motzkin(n: int, k: int) -> Iterator[str]:
    """Step words of the partial Motzkin paths of length n ending at level k."""
    return _iter_words(n, k, _MOTZKIN_ORDER)


def enumerate_motzkin(n: int, k: int) -> List[LatticePath]:
    """
    All partial Motzkin paths from (0, 0) to (n, k), each exactly once.

    Empty when k > n.
    """
    if n < 0 or k < 0:
        raise PathError(f"enumerate_motzkin needs n, k >= 0, got ({n}, {k})")
    return [LatticePath(steps=w) for w in iter_motzkin(n, k)]


def iter_partial_dyck(n: int, k: int) -> Iterator[str]:
    """Step words of the partial Dyck paths counted by the ballot number C_{n,k}."""
    return _iter_words(2 * n - k, k, _DYCK_ORDER)


def enumerate_partial_dyck(n: int, k: int) -> List[LatticePath]:
    """
    All u/d paths of length 2n - k from level 0 to level k that stay
    on or above the axis.
    """
    if not 0 <= k <= n:
        raise PathError(f"enumerate_partial_dyck needs 0 <= k <= n, got ({n}, {k})")
    return [LatticePath(steps=w) for w in iter_partial_dyck(n, k)]


def iter_up_down(length: int, end: int) -> Iterator[str]:
    """Step words of the u/d paths of a given length and end level that stay on or above the axis."""
    return _iter_words(length, end, _DYCK_ORDER)


def iter_dyck(semilength: int) -> Iterator[str]:
    """Step words of the Dyck paths of length 2 * semilength."""
    return _iter_words(2 * semilength, 0, _DYCK_ORDER)


def reverse_word(word: str) -> str:
    return word[::-1].translate(_REVERSE)


def reverse_path(p: LatticePath) -> LatticePath:
    """Reverse the step order and swap u with d; h is fixed."""
    return LatticePath(steps=reverse_word(p.steps))


def step_level(p: LatticePath, i: int) -> int:
    """
    Level (end y-coordinate) of step i.

    Raises:
        PathError: if i is not a valid step index
    """
    if not 0 <= i < len(p):
        raise PathError(f"step index {i} out of range for a path of length {len(p)}")
    return p.levels()[i]


def r_visible_indices(word: str) -> List[int]:
    """
    Indices of the up steps that no later step ends below, ascending.

    Scanning from the right, an up step ending at level L is visible
    when L is at most the minimum level reached after it.
    """
    levels = list(accumulate(_RISE[s] for s in word))
    visible = []
    lowest = None
    for j in range(len(word) - 1, -1, -1):
        if word[j] == "u" and (lowest is None or levels[j] <= lowest):
            visible.append(j)
        lowest = levels[j] if lowest is None else min(lowest, levels[j])
    visible.reverse()
    return visible


def r_visible_up_steps(p: LatticePath) -> List[int]:
    """
    R-visible up steps of a path: for a path ending at level k there is
    exactly one at each level 1 .. k and none above.
    """
    return r_visible_indices(p.steps)


def word_weight(word: str, x: Scalar, y: Scalar) -> Scalar:
    """Weight of a step word: h on the axis weighs x, h above it weighs y."""
    weight: Scalar = 1
    level = 0
    for step in word:
        level += _RISE[step]
        if step == "h":
            weight *= x if level == 0 else y
    return normalize(weight)


def path_weight(p: LatticePath, x: Scalar, y: Scalar) -> Scalar:
    """Product of the step weights; u and d weigh 1."""
    return word_weight(p.steps, x, y)


def horizontal_profile(word: str) -> Tuple[int, int]:
    """Number of h steps on the axis and above it."""
    on_axis = above = 0
    level = 0
    for step in word:
        level += _RISE[step]
        if step == "h":
            if level == 0:
                on_axis += 1
            else:
                above += 1
    return on_axis, above
