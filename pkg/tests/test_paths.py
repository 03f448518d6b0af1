"""Tests for lattice paths and their enumeration."""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from catalantri.exceptions import PathError
from catalantri.paths.lattice import (
    LatticePath,
    Step,
    enumerate_motzkin,
    enumerate_partial_dyck,
    iter_dyck,
    iter_motzkin,
    path_weight,
    r_visible_indices,
    r_visible_up_steps,
    reverse_path,
    reverse_word,
    step_level,
    word_weight,
)
from catalantri.triangles.catalan import motzkin_weight

words = st.text(alphabet="udh", max_size=14)


def test_parse_normalizes_case():
    p = LatticePath.parse(" UDH ")
    assert p.steps == "udh"
    assert str(p) == "udh"
    assert len(p) == 3


def test_parse_rejects_other_letters():
    with pytest.raises(PathError):
        LatticePath.parse("uxd")
    with pytest.raises(ValidationError):
        LatticePath(steps="abc")


def test_paths_are_frozen():
    p = LatticePath(steps="ud")
    with pytest.raises(ValidationError):
        p.steps = "uu"


def test_levels_and_predicates():
    p = LatticePath(steps="uhdud")
    assert p.levels() == [1, 1, 0, 1, 0]
    assert p.end_level == 0
    assert p.count(Step.H) == 1
    assert p.is_partial_motzkin()
    assert not p.is_partial_dyck()
    assert LatticePath(steps="udud").is_dyck()
    assert not LatticePath(steps="du").is_partial_motzkin()


def test_enumerate_motzkin():
    assert {p.steps for p in enumerate_motzkin(2, 0)} == {"hh", "ud"}
    assert len(enumerate_motzkin(3, 1)) == 5
    assert enumerate_motzkin(4, 6) == []
    with pytest.raises(PathError):
        enumerate_motzkin(-1, 0)


def test_enumeration_is_deterministic_and_ordered():
    assert list(iter_motzkin(2, 0)) == ["ud", "hh"]
    assert list(iter_dyck(2)) == ["uudd", "udud"]
    assert list(iter_motzkin(4, 1)) == list(iter_motzkin(4, 1))


def test_enumeration_counts_match_recurrence():
    for n in range(8):
        for k in range(n + 1):
            paths = list(iter_motzkin(n, k))
            assert len(paths) == len(set(paths)) == motzkin_weight(n, k, 1, 1)


def test_enumerate_partial_dyck():
    assert len(enumerate_partial_dyck(2, 0)) == 2
    assert len(enumerate_partial_dyck(5, 2)) == 28
    assert [p.steps for p in enumerate_partial_dyck(3, 3)] == ["uuu"]
    with pytest.raises(PathError):
        enumerate_partial_dyck(2, 3)


def test_weights():
    assert word_weight("hh", 2, 3) == 4
    assert word_weight("uhd", 2, 3) == 3
    assert sum(path_weight(p, 2, 2) for p in enumerate_motzkin(2, 0)) == 5


def test_reverse():
    assert reverse_word("uud") == "udd"
    assert reverse_word("ud") == "ud"
    assert reverse_path(LatticePath(steps="uhd")).steps == "uhd"
    assert reverse_path(LatticePath(steps="uuh")).steps == "hdd"


def test_step_level():
    p = LatticePath(steps="uud")
    assert step_level(p, 1) == 2
    assert step_level(p, 2) == 1
    assert step_level(LatticePath(steps="h"), 0) == 0
    with pytest.raises(PathError):
        step_level(p, 3)


def test_r_visible_up_steps():
    assert r_visible_indices("uu") == [0, 1]
    assert r_visible_indices("udu") == [2]
    assert r_visible_indices("uududd") == []
    assert r_visible_up_steps(LatticePath(steps="uudhu")) == [0, 4]


def test_one_r_visible_up_step_per_level():
    for n in range(8):
        for k in range(n + 1):
            for word in iter_motzkin(n, k):
                visible = r_visible_indices(word)
                levels = LatticePath(steps=word).levels()
                assert [levels[j] for j in visible] == list(range(1, k + 1))


@given(words)
def test_reverse_is_an_involution(word):
    assert reverse_word(reverse_word(word)) == word
    assert LatticePath(steps=reverse_word(word)).end_level == -LatticePath(steps=word).end_level


@given(words, words)
def test_concatenation_adds_levels_and_weights(a, b):
    p, q = LatticePath(steps=a), LatticePath(steps=b)
    assert (p + q).end_level == p.end_level + q.end_level
    assert len(p + q) == len(p) + len(q)
