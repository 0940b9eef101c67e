from fractions import Fraction

import pytest

from ncdef.freealg import NcPoly, genset, nc_abelianize
from ncdef.ncgb import quadratic_classify, quotient_report
from ncdef.zoo import (
    SuiteCheck,
    backward_central_expressions,
    claimed_relation_readings,
    cyclic_derivative,
    invariant_table,
    karmazyn_contraction_presentation,
    laufer_presentation,
    laufer_specialization_check,
    length2_central_elements,
    length2_claimed_presentation,
    length2_scheme_presentation,
    length2_universal_suite,
    standard_lambda,
    superpotential_check,
    verify_higher_length,
)


# ------------------------------------------------------------ laufer family


def test_laufer_presentation_shape():
    p = laufer_presentation(2, [0, 0, 0, 0])
    assert p.gens.names == ("a", "b")
    assert p.gens.weights == (5, 2)
    assert p.order == "wdeglex"
    assert len(p.relations) == 2


def test_laufer_presentation_symbolic_parameters():
    p = laufer_presentation(1, ["sym", "sym"])
    assert "l1" in p.gens.names and "l2" in p.gens.names
    assert p.gens.central[p.gens.index("l1")]


def test_standard_lambda():
    assert standard_lambda(1, 0) == [0, 0]
    assert standard_lambda(2, 2) == [0, Fraction(1), 0, 0]


@pytest.mark.parametrize("n,i,dim", [(1, 0, 9), (1, 1, 8), (1, 2, 9)])
def test_laufer_specialization_dims(n, i, dim):
    rep = quotient_report(laufer_presentation(n, standard_lambda(n, i)))
    assert rep.status == "finite" and rep.dim == dim


def test_laufer_quadratic_classification():
    q = quadratic_classify(laufer_presentation(1, [0, 0]))
    assert (q.sym_rank, q.antisym_rank) == (2, 0)


def test_laufer_specialization_check_certifies():
    checks = laufer_specialization_check(1, standard_lambda(1, 0))
    assert all(c.ok for c in checks)
    names = [c.name for c in checks]
    assert len(names) == len(set(names))


# ------------------------------------------------------------ length2 suite


def test_length2_presentations():
    p = length2_claimed_presentation()
    assert p.gens.names == ("t", "a", "b")
    assert len(p.relations) == 3
    scheme = length2_scheme_presentation()
    assert scheme.gens.commutative and not scheme.relations


def test_length2_quadratic_classification():
    q = quadratic_classify(length2_claimed_presentation())
    assert q.sym_rank == 0 and q.antisym_rank == 1


def test_length2_central_elements_are_central():
    from ncdef.ncgb import derive_check

    p = length2_claimed_presentation()
    g = p.gens
    a, b = NcPoly.gen(g, "a"), NcPoly.gen(g, "b")
    claims = [
        x * f - f * x
        for f in length2_central_elements().values()
        for x in (a, b)
    ]
    for res in derive_check(p, claims, trunc=8):
        assert res.status == "certified-zero"


def test_length2_universal_suite_all_green():
    rep = length2_universal_suite()
    for group in (rep.forward, rep.backward, rep.abelianized, rep.s1):
        assert group, "empty check group"
        for c in group:
            assert c.ok, (c.name, c.status)


def test_length2_abelianization_kills_relations():
    p = length2_claimed_presentation()
    for rel in p.relations:
        assert nc_abelianize(rel).is_zero()


# ------------------------------------------------------- karmazyn / lengths


def test_karmazyn_length1_is_point():
    rep = quotient_report(karmazyn_contraction_presentation(1))
    assert rep.status == "finite" and rep.dim == 1


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_claimed_generator_counts_match_splitting_type(l):
    from ncdef.bundle import contraction_splitting_type, cohomology_dims
    from ncdef.zoo import _claimed_genset

    # the two-generator presentations after eliminating redundant parameters
    gens = (
        length2_claimed_presentation().gens if l == 2 else _claimed_genset(l)
    )
    h0, _ = cohomology_dims(contraction_splitting_type(l))
    assert len(gens.names) == h0


@pytest.mark.parametrize("l", [2, 3, 4])
def test_verify_higher_length_small(l):
    rep = verify_higher_length(l)
    for v in rep.forward:
        assert v.reading == "literal"
    assert rep.backward and all(c.ok for c in rep.backward)


def test_verify_higher_length_5_uses_difference_reading():
    rep = verify_higher_length(5)
    assert [v.reading for v in rep.forward] == ["literal", "literal", "difference"]
    assert all(c.ok for c in rep.backward)


def test_verify_higher_length_6_needs_correction():
    rep = verify_higher_length(6)
    assert rep.forward[1].reading == "difference"
    last = rep.forward[2]
    assert last.reading is None  # no stated reading certifies
    assert last.corrected_status == "certified-zero"
    assert 2 in rep.corrected
    assert all(c.ok for c in rep.backward)


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_claimed_readings_and_backward_expressions_nonempty(l):
    slots = claimed_relation_readings(l)
    assert slots and all(readings for readings in slots)
    assert backward_central_expressions(l)


# ------------------------------------------------------------- invariants


@pytest.mark.parametrize("n", [1, 2])
def test_invariant_table_checks(n):
    table = invariant_table(n)
    assert all(table.checks.values()), table.checks
    dims = [r.dim for r in table.rows]
    expected = {1: [9, 8, 9], 2: [15, 12, 14, 15, 15]}[n]
    assert dims == expected


def test_invariant_table_n1_details():
    table = invariant_table(1)
    rows = {r.label: r for r in table.rows}
    a0 = rows["A_0"]
    assert a0.weight_list == [0, 2, 3, 4, 5, 6, 7, 8, 10]
    assert a0.ab_dim == 5 and a0.center_dim == 6
    a1 = rows["A_1"]
    assert a1.dim == 8 and a1.ab_dim == 4


# ---------------------------------------------------------- superpotential


def test_cyclic_derivative_basic():
    g = genset(["a", "b"])
    a, b = NcPoly.gen(g, "a"), NcPoly.gen(g, "b")
    # d/da of aba = 2*ba up to cyclic moves: occurrences rotate to front
    f = a * b * a
    assert cyclic_derivative(f, "a") == b * a + a * b
    assert cyclic_derivative(f, "b") == a * a


def test_superpotential_report_pattern():
    rep = superpotential_check(1, standard_lambda(1, 0))
    assert rep.matches == {"a": True, "b": True, "c": False, "d": False, "w": True}
    assert set(rep.differences) == {"c", "d"}
    assert rep.reduces_to_deformed_family


def test_suitecheck_ok_values():
    assert SuiteCheck("x", "pass").ok
    assert SuiteCheck("x", "certified-zero").ok
    assert not SuiteCheck("x", "inconclusive").ok
