import random
from fractions import Fraction

from ncdef.commpoly import (
    CommPoly,
    GrlexOrder,
    divexact,
    groebner,
    local_report,
    monomials_of_degree,
    normal_form,
    partials,
    quotient_basis,
    substitute,
    varset,
)

XYZW = varset("x", "y", "z", "w")


def _vars():
    return [CommPoly.variable(XYZW, n) for n in XYZW.names]


def _rand_poly(rng, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(4))
        c = Fraction(rng.randint(-4, 4))
        if c:
            terms[e] = terms.get(e, Fraction(0)) + c
    return CommPoly(XYZW, {e: c for e, c in terms.items() if c})


def test_ring_axioms_randomized():
    rng = random.Random(3)
    for _ in range(40):
        f, g, h = (_rand_poly(rng) for _ in range(3))
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == CommPoly.zero(XYZW)


def test_difference_of_squares():
    x, y, _, _ = _vars()
    assert (x + y) * (x - y) == x * x - y * y


def test_pow_matches_repeated_product():
    x, y, _, _ = _vars()
    f = x + y.scale(2)
    assert f ** 0 == CommPoly.const(XYZW, 1)
    assert f ** 3 == f * f * f


def test_divexact_roundtrip_and_failure():
    rng = random.Random(5)
    for _ in range(20):
        f, g = _rand_poly(rng), _rand_poly(rng)
        if g.is_zero():
            continue
        q = divexact(f * g, g)
        assert q == f
    x, y, _, _ = _vars()
    assert divexact(x, x * x + y) is None


def test_substitute_identity_and_composition():
    x, y, z, w = _vars()
    f = x * x + y * z - w
    assert substitute(f, {}) == f
    g = substitute(f, {"x": y, "y": x})
    assert g == y * y + x * z - w


def test_partials_product_rule_spot():
    x, y, _, _ = _vars()
    f = x * x * y
    px, py, pz, pw = partials(f)
    assert px == (x * y).scale(2)
    assert py == x * x
    assert pz.is_zero() and pw.is_zero()


def _f0(n):
    x, y, z, w = _vars()
    return x * x + y ** 3 + z * z * w + y * w ** (2 * n + 1)


def test_jacobian_reductions_hold(n=1):
    """Membership facts used downstream: x, zw generate together with the
    other two partials an ideal containing y*w^(2n+1), y^3, w^(4n+2), y^4."""
    x, y, z, w = _vars()
    gens = partials(_f0(n))
    order = GrlexOrder(XYZW)
    gb = groebner(gens, order)
    for member in (
        x,
        z * w,
        y * w ** (2 * n + 1),
        y ** 3,
        w ** (4 * n + 2),
        y ** 4,
        y * y * z,
        y * z * z - (w ** (4 * n + 1)).scale(Fraction(2 * n + 1, 3)),
    ):
        assert normal_form(member, gb).is_zero()


def test_groebner_normal_form_properties():
    rng = random.Random(9)
    x, y, z, w = _vars()
    gens = [x * x - y, y * z - w]
    gb = groebner(gens, GrlexOrder(XYZW))
    for _ in range(15):
        f = _rand_poly(rng)
        nf = normal_form(f, gb)
        assert normal_form(nf, gb) == nf  # idempotent
        assert normal_form(f - nf, gb).is_zero()  # difference in ideal
        g = _rand_poly(rng)
        # normal form is linear
        assert normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb)


def test_quotient_basis_finite_and_infinite():
    x, y, z, w = _vars()
    gb = groebner([x, y, z * z, w * w * w], GrlexOrder(XYZW))
    qb = quotient_basis(gb, 10)
    assert qb.finite and len(qb.monomials) == 6  # z^i w^j, i<2, j<3
    gb2 = groebner([x], GrlexOrder(XYZW))
    assert not quotient_basis(gb2, 6).finite


def test_jacobian_quotient_dimensions():
    # engine-computed dimensions of k[x,y,z,w]/J_0
    for n, expect in ((1, 11), (2, 17)):
        gb = groebner(partials(_f0(n)), GrlexOrder(XYZW))
        qb = quotient_basis(gb, 30)
        assert qb.finite
        assert len(qb.monomials) == expect


def test_monomials_of_degree_count():
    assert len(monomials_of_degree(XYZW, 3)) == 20  # C(3+3,3)


def test_local_report_artinian_pair():
    x, y, _, _ = _vars()
    v2 = varset("x", "y")
    a = CommPoly.variable(v2, "x")
    b = CommPoly.variable(v2, "y")
    rep = local_report([a * a - b ** 3], GrlexOrder(v2), 12)
    assert rep.status == "not-finite"
    rep2 = local_report([a * a - b ** 3, a * b], GrlexOrder(v2), 12)
    assert rep2.status == "finite"
    assert rep2.dim == 5  # 1, x, y, y^2, y^3 (x^2 = y^3, xy = 0)
