import pytest

from ncdef.bundle import (
    RankError,
    cohomology_dims,
    contraction_splitting_type,
    expected_presentation_counts,
    splitting,
    wedge2,
)


def test_splitting_sorted_and_rank():
    s = splitting(-1, 1, 0)
    assert s.degrees == (1, 0, -1)
    assert s.rank == 3
    with pytest.raises(ValueError):
        splitting()


def test_cohomology_line_bundles():
    assert cohomology_dims(splitting(0)) == (1, 0)
    assert cohomology_dims(splitting(3)) == (4, 0)
    assert cohomology_dims(splitting(-1)) == (0, 0)
    assert cohomology_dims(splitting(-3)) == (0, 2)


def test_riemann_roch():
    for degs in [(1, 0, -1), (2, 2), (-3, 5, 0, -1)]:
        s = splitting(*degs)
        h0, h1 = cohomology_dims(s)
        assert h0 - h1 == sum(d + 1 for d in degs)


def test_wedge2_size_and_rank_guard():
    s = splitting(1, 0, -1, -1)
    assert wedge2(s).rank == 6  # C(4,2)
    with pytest.raises(RankError):
        wedge2(splitting(5))


def test_quadratic_at_most_relations():
    for degs in [(1, 0, -1), (2, 1, 1), (1, 1, -1, -1), (3, 0, 0, -2)]:
        g, r, q = expected_presentation_counts(splitting(*degs))
        assert q <= r


@pytest.mark.parametrize(
    "l,expected",
    [(2, (3, 5, 2)), (3, (5, 12, 9)), (4, (6, 17, 14)), (5, (7, 23, 20)), (6, (7, 23, 20))],
)
def test_contraction_counts(l, expected):
    assert expected_presentation_counts(contraction_splitting_type(l)) == expected


def test_contraction_splitting_type_shape():
    for l in range(2, 7):
        s = contraction_splitting_type(l)
        assert s.degrees[0] == 1
        assert s.degrees[-3:] == (-1, -1, -1)
    with pytest.raises(ValueError):
        contraction_splitting_type(7)
