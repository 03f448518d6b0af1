"""Tests for the Dyck-path split and the phi bijection."""

import pytest

from catalantri.exceptions import DomainError, PathError
from catalantri.identities import helpers
from catalantri.paths.bijections import (
    PhiInput,
    check_dyck_split,
    check_phi,
    count_dyck_by_pivot,
    dyck_split,
    excluded_family_weight,
    excluded_weights,
    is_excluded,
    iter_side_pairs,
    phi_backward,
    phi_domain,
    phi_forward,
    phi_pairing,
)
from catalantri.paths.lattice import LatticePath, iter_dyck, iter_motzkin, reverse_word


def pair(side, first, second, k):
    return PhiInput(side=side, first=LatticePath(steps=first), second=LatticePath(steps=second), k=k)


# Dyck-path split


def test_split_of_the_smallest_path():
    split = dyck_split(LatticePath(steps="ud"), 0)
    assert split.pivot_index == 0
    assert split.pivot == "u"
    assert split.k == 0
    assert split.first.steps == ""
    assert reverse_word(split.second_reversed.steps) == "d"
    assert split.ballot_cells() == ((0, 0), (1, 1))


def test_split_pivots_of_length_four():
    assert dyck_split(LatticePath(steps="uudd"), 1).pivot == "d"
    assert dyck_split(LatticePath(steps="udud"), 1).pivot == "u"
    assert count_dyck_by_pivot(1, 0) == (1, 1)


def test_split_reconstructs_every_path():
    for word in iter_dyck(5):
        for n in range(5):
            split = dyck_split(LatticePath(steps=word), n)
            assert split.reconstruct().steps == word
            assert split.level == 2 * split.k + 1


def test_split_rejects_bad_input():
    with pytest.raises(PathError):
        dyck_split(LatticePath(steps="uu"), 0)
    with pytest.raises(PathError):
        dyck_split(LatticePath(steps="ud"), 1)


@pytest.mark.parametrize(
    "n, m, counts",
    [
        (2, 1, (7, 7)),
        (1, 1, (3, 2)),
        (1, 2, (9, 5)),
    ],
)
def test_pivot_counts(n, m, counts):
    assert count_dyck_by_pivot(n, m) == counts


def test_pivot_counts_reject_negative():
    with pytest.raises(DomainError):
        count_dyck_by_pivot(-1, 0)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5) if n + m <= 6])
def test_check_dyck_split(n, m):
    report = check_dyck_split(n, m)
    assert report.passed, report.summary()
    assert report.id == "bijection_dyck_split"


# phi


def test_phi_forward_b_side():
    assert phi_forward(pair("B", "u", "", 0), 0, 0, 1).steps == "u"


def test_phi_forward_a_side():
    inp = pair("A", "", "hu", 0)
    target = phi_forward(inp, 0, 1, 1)
    assert target.steps == "hu"
    assert phi_backward(target, 0, 1, 1) == inp


def test_phi_backward_sides():
    assert phi_backward(LatticePath(steps="u"), 0, 0, 1) == pair("B", "u", "", 0)
    back = phi_backward(LatticePath(steps="hhhu"), 1, 1, 2)
    assert back == pair("A", "h", "hhu", 0)
    assert phi_forward(back, 1, 1, 2).steps == "hhhu"


def test_phi_rejects_bad_pairs():
    # the last R-visible up step of "u" has no step before it, fewer than r = 1
    excluded = pair("A", "", "u", 0)
    assert is_excluded(excluded, 1)
    with pytest.raises(PathError):
        phi_forward(excluded, 0, 0, 1)
    with pytest.raises(PathError):
        phi_forward(pair("B", "d", "", 0), 0, 0, 1)
    with pytest.raises(DomainError):
        phi_forward(pair("B", "u", "", 0), 0, 0, -1)
    with pytest.raises(PathError):
        phi_backward(LatticePath(steps="uu"), 0, 0, 2)


def test_phi_pairing_listing():
    listing = [(inp.serialize(), target.steps) for inp, target in phi_pairing(0, 0, 1)]
    assert listing == [("B(u, -)", "u")]


@pytest.mark.parametrize(
    "n, m, r",
    [(n, m, r) for m in range(4) for n in range(m + 1) for r in range(4)],
)
def test_phi_round_trips(n, m, r):
    report = check_phi(n, m, r)
    assert report.passed, report.summary()


def test_phi_weighted_check():
    assert check_phi(1, 2, 2, y=2).passed
    assert check_phi(2, 3, 1, y=-1).passed


def test_phi_is_a_bijection_onto_level_one_paths():
    n, m, r = 1, 2, 2
    images = [phi_forward(inp, n, m, r).steps for inp in phi_domain(n, m, r)]
    assert sorted(images) == sorted(iter_motzkin(n + m + r, 1))


def test_excluded_family_weight():
    assert excluded_family_weight(0, 0, 1, 0, 1) == 1
    assert excluded_family_weight(2, 2, 0, 0, 3) == 0
    assert excluded_family_weight(1, 1, 2, 2, 1) == 0
    with pytest.raises(DomainError):
        excluded_family_weight(1, 1, 1, -1, 1)


@pytest.mark.parametrize("n, m, r, y", [(0, 0, 1, 1), (1, 1, 1, 1), (1, 2, 3, 2), (2, 2, 2, 2)])
def test_excluded_weights_sum_to_h(n, m, r, y):
    assert sum(excluded_weights(n, m, r, y)) == helpers.motzkin_h(n, m, r, y)


def test_excluded_weight_value():
    # H_{2,2}(2) at y = 2 is 5 * 14 + 14 * 5
    assert sum(excluded_weights(2, 2, 2, 2)) == 140


def test_side_pairs_satisfy_membership():
    for inp in iter_side_pairs(1, 1, 1, "A"):
        assert len(inp.first) == 1
        assert len(inp.second) == 2
        assert inp.second.end_level == inp.k + 1
