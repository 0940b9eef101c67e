import random
from fractions import Fraction

from ncdef.linalg import RowSpace, nullspace, rank


def test_rowspace_rank_and_membership():
    rs = RowSpace()
    assert rs.add({0: Fraction(1), 1: Fraction(2)})
    assert rs.add({1: Fraction(1)})
    assert not rs.add({0: Fraction(2), 1: Fraction(7)})  # dependent
    assert rs.rank == 2
    assert rs.contains({0: Fraction(5)})
    assert not rs.contains({2: Fraction(1)})


def test_rowspace_zero_vector():
    rs = RowSpace()
    assert not rs.add({})
    assert rs.contains({})
    assert rs.rank == 0


def test_nullspace_simple():
    # x + y = 0 over 2 columns -> one-dimensional nullspace spanned by (1, -1)
    ns = nullspace([[Fraction(1), Fraction(1)]], 2)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + v[1] == 0 and (v[0], v[1]) != (0, 0)


def test_nullspace_orthogonal_to_rows_randomized():
    rng = random.Random(7)
    for _ in range(20):
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)
        ]
        ns = nullspace(rows, n)
        r = rank(rows)
        assert len(ns) == n - r
        for v in ns:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0
        # nullspace vectors are independent
        assert rank(ns) == len(ns)


def test_rank_matches_rowspace():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-2, 2)) for _ in range(n)]
            for _ in range(rng.randint(1, 6))
        ]
        rs = RowSpace()
        for row in rows:
            rs.add({i: c for i, c in enumerate(row) if c})
        assert rank(rows) == rs.rank
