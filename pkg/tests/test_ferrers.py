import itertools

import pytest

from rankmetric.errors import BadIndex
from rankmetric.ferrers import (
    FerrersDiagram,
    Partition,
    conjugate,
    enumerate_diagrams,
    ferrers_bound_exponent,
    v_count,
    v_count_bruteforce,
)


def D(*rows):
    return FerrersDiagram(rows)


def all_in_box(a, b):
    """Oracle: every weakly decreasing positive sequence of length <= a with parts <= b."""
    out = []
    for length in range(a + 1):
        for seq in itertools.product(range(1, b + 1), repeat=length):
            if all(seq[k] >= seq[k + 1] for k in range(length - 1)):
                out.append(seq)
    return out


def test_parse_and_str():
    F = FerrersDiagram.parse("4,4,2")
    assert F.rows == (4, 4, 2)
    assert str(F) == "4,4,2"
    assert F.box == (3, 4)
    assert F.size == 10


def test_invalid_rows():
    with pytest.raises(ValueError):
        D(2, 3)
    with pytest.raises(ValueError):
        D(2, 0)


def test_right_alignment():
    F = D(4, 4, 2)
    assert F.render() == "****\n****\n  **"
    assert F.dots == {(0, c) for c in range(4)} | {(1, c) for c in range(4)} | {(2, 2), (2, 3)}


def test_column_counts_weakly_decreasing_right_to_left():
    for rows in all_in_box(4, 4):
        if rows:
            counts = D(*rows).column_counts()
            rev = counts[::-1]
            assert all(rev[k] >= rev[k + 1] for k in range(len(rev) - 1))


def test_partition_order_free():
    assert Partition.from_summands([1, 1, 3]) == Partition.from_summands([3, 1, 1])
    assert Partition.from_summands([1, 1, 3]).total == 5


def transpose_oracle(F):
    """Reflect the dot set across the secondary diagonal of the a x b box."""
    a, b = F.box
    new = {(b - 1 - c, a - 1 - r) for r, c in F.dots}
    rows = [sum(1 for (r, _) in new if r == k) for k in range(b)]
    result = D(*[x for x in rows if x])
    assert result.dots == new
    return result


def test_conjugate_example():
    assert transpose_oracle(D(4, 4, 2)).rows == (3, 3, 2, 2)
    assert conjugate(D(4, 4, 2)).rows == (3, 3, 2, 2)


def test_conjugate_row_to_column():
    assert conjugate(D(5)) == D(1, 1, 1, 1, 1)


def test_conjugate_involution_5x5():
    for rows in all_in_box(5, 5):
        F = D(*rows)
        assert conjugate(conjugate(F)) == F
        if rows:
            assert conjugate(F) == transpose_oracle(F)
            assert conjugate(F).box == (F.b, F.a)


def test_v_count_examples():
    F = D(4, 4, 2)
    assert v_count(F, 2, 0) == 7
    assert v_count(F, 2, 1) == 6
    assert v_count(F, 1, 0) == F.size


def test_v_count_bad_index():
    with pytest.raises(BadIndex):
        v_count(D(2), 2, 2)
    with pytest.raises(BadIndex):
        v_count(D(2), 0, 0)
    with pytest.raises(BadIndex):
        v_count(D(2), 3, -1)


def test_v_count_matches_bruteforce():
    for rows in all_in_box(4, 5):
        F = D(*rows)
        for d in range(1, 6):
            for i in range(d):
                assert v_count(F, d, i) == v_count_bruteforce(F, d, i)


def test_bound_exponent():
    B = ferrers_bound_exponent(D(4, 4, 2), 2)
    assert B.exponent == 6
    assert B.counts == (7, 6)
    assert B.minimizers == (1,)
    assert ferrers_bound_exponent(D(1), 2).exponent == 0
    assert ferrers_bound_exponent(D(1), 2).minimizers == (0, 1)
    for rows in all_in_box(3, 3):
        assert ferrers_bound_exponent(D(*rows), 1).exponent == sum(rows)


@pytest.mark.parametrize("a", range(1, 6))
@pytest.mark.parametrize("b", range(1, 6))
def test_rectangle_reconciliation(a, b):
    F = FerrersDiagram.rectangle(a, b)
    for d in range(1, min(a, b) + 1):
        assert ferrers_bound_exponent(F, d).exponent == min(a * (b - d + 1), b * (a - d + 1))


def test_enumerate_examples():
    assert [F.rows for F in enumerate_diagrams(4, 4, 4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [F.rows for F in enumerate_diagrams(1, 3, 2)] == [(2,)]
    assert [F.rows for F in enumerate_diagrams(2, 2)] == [(1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert [F.rows for F in enumerate_diagrams(3, 3, 0)] == [()]


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 3), (4, 2), (5, 5)])
def test_enumerate_is_complete(a, b):
    got = [F.rows for F in enumerate_diagrams(a, b)]
    assert len(got) == len(set(got))
    assert set(got) == {rows for rows in all_in_box(a, b) if rows}
    sizes = [sum(r) for r in got]
    assert sizes == sorted(sizes)
