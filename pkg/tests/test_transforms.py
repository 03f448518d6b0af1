"""Tests for the derived triangles X, Y, Z and W."""

import pytest

from catalantri.core.exact import catalan
from catalantri.exceptions import DomainError
from catalantri.models.schema import TriangleKind
from catalantri.triangles.catalan import ballot
from catalantri.triangles.transforms import (
    derived_triangle,
    det2,
    get_triangle,
    per2,
    row_sum,
    w_entry,
    w_support,
    x_entry,
    y_entry,
    z_entry,
)

X_ROWS = [
    [1],
    [0, 1],
    [0, 3, 1],
    [0, 14, 10, 1],
    [0, 84, 90, 21, 1],
    [0, 594, 825, 308, 36, 1],
]
X_ROW_SUMS = [1, 1, 4, 25, 196, 1764]

Y_ROWS = [
    [1],
    [1, 1],
    [3, 6, 1],
    [14, 40, 15, 1],
    [84, 300, 175, 28, 1],
    [594, 2475, 1925, 504, 45, 1],
]
Y_ROW_SUMS = [1, 2, 10, 70, 588, 5544]

Z_ROWS = [
    [1],
    [1, 1],
    [2, 2, 1],
    [4, 6, 3, 1],
    [10, 15, 12, 4, 1],
    [25, 45, 36, 20, 5, 1],
    [70, 126, 126, 70, 30, 6, 1],
]
Z_ROW_SUMS = [1, 2, 5, 14, 42, 132, 429]
Z_ALTERNATING_SUMS = [1, 0, 1, 0, 4, 0, 25]

W_ROWS = [
    [1],
    [2],
    [4, 1],
    [10, 4],
    [20, 21, 1],
    [56, 70, 6],
    [140, 238, 50, 1],
    [420, 792, 210, 8],
    [1176, 2604, 990, 91, 1],
]
W_ROW_SUMS = [1, 2, 5, 14, 42, 132, 429, 1430, 4862]


@pytest.mark.parametrize(
    "kind, golden, sums",
    [
        (TriangleKind.X, X_ROWS, X_ROW_SUMS),
        (TriangleKind.Y, Y_ROWS, Y_ROW_SUMS),
        (TriangleKind.Z, Z_ROWS, Z_ROW_SUMS),
        (TriangleKind.W, W_ROWS, W_ROW_SUMS),
    ],
)
def test_derived_tables(kind, golden, sums):
    t = derived_triangle(kind)
    assert [list(r) for r in t.rows(len(golden))] == golden
    assert [row_sum(t, n) for n in range(len(golden))] == sums


def test_z_alternating_sums():
    t = derived_triangle(TriangleKind.Z)
    assert [row_sum(t, n, alternating=True) for n in range(7)] == Z_ALTERNATING_SUMS


def test_det2_and_per2():
    assert det2(1, 0, 0, 1) == 1
    assert det2(3, 1, 9, 4) == 3
    assert det2(5, 7, 5, 7) == 0
    assert per2(1, 0, 0, 1) == 1
    assert per2(9, 4, 28, 14) == 238
    assert per2(9, 4, 90, 48) == 792


def test_entry_values():
    assert x_entry(3, 1) == 14
    assert x_entry(4, 2) == 90
    assert x_entry(2, 0) == 0
    assert y_entry(3, 1) == 40
    assert y_entry(2, 1) == 6
    assert y_entry(5, 0) == 594
    assert z_entry(4, 2) == 12
    assert z_entry(5, 1) == 45
    assert z_entry(6, 3) == 70
    assert w_entry(6, 1) == 238
    assert w_entry(8, 3) == 91
    assert w_entry(3, 0) == 10


def test_x_entry_is_a_ballot_minor():
    # X_{2,1} from C_{3,2}, C_{3,3}, C_{4,2}, C_{4,3}
    assert x_entry(2, 1) == det2(ballot(3, 2), ballot(3, 3), ballot(4, 2), ballot(4, 3))


def test_w_support_width():
    assert [w_support(row) for row in range(9)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    t = derived_triangle(TriangleKind.W)
    assert not t.in_support(7, 4)
    assert t.entry(7, 4) == 0


def test_named_row_sums():
    assert row_sum(get_triangle(TriangleKind.X), 4) == 196
    assert row_sum(get_triangle(TriangleKind.Z), 6, alternating=True) == 25
    assert row_sum(get_triangle(TriangleKind.W), 7) == 1430


def test_row_sums_follow_catalan_products():
    for n in range(20):
        assert row_sum(get_triangle("X"), n) == catalan(n) ** 2
        assert row_sum(get_triangle("Y"), n) == catalan(n) * catalan(n + 1)
        assert row_sum(get_triangle("Z"), n) == catalan(n + 1)
        assert row_sum(get_triangle("W"), n) == catalan(n + 1)


def test_get_triangle_errors():
    with pytest.raises(DomainError):
        get_triangle(TriangleKind.X, x=1)
    with pytest.raises(DomainError):
        derived_triangle(TriangleKind.BALLOT)
    with pytest.raises(DomainError):
        row_sum(get_triangle(TriangleKind.W), -1)
    with pytest.raises(ValueError):
        get_triangle("Q")
