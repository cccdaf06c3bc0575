import pytest
from hypothesis import given, settings, strategies as st

from cyclocodes import golden
from cyclocodes.gf import field_create, is_irreducible
from cyclocodes.polyring import (
    NotInBaseField,
    Poly,
    class_polynomials,
    cyclotomic_cosets,
    factor_xn_minus_1,
    poly_gcd,
    poly_product,
    product_over_roots,
    splitting_field,
    verify_master_factorization,
)

GF2, GF3, GF4 = field_create(2), field_create(3), field_create(2, 2)


def P(text, ctx=GF2):
    return Poly.parse(text, ctx)


def test_basic_arithmetic():
    assert P("x + 1") * P("x + 1") == P("x^2 + 1")
    assert P("x^3 + x + 1") * P("x^3 + x^2 + 1") * P("x + 1") == P("x^7 + 1")
    assert poly_gcd(P("x^7 + 1"), P("x^3 + x + 1")) == P("x^3 + x + 1")


def test_divmod_and_errors():
    q, r = divmod(P("x^7 + 1"), P("x^3 + x + 1"))
    assert r.is_zero() and q * P("x^3 + x + 1") == P("x^7 + 1")
    with pytest.raises(ZeroDivisionError):
        divmod(P("x"), Poly(GF2, ()))
    with pytest.raises(ValueError):
        P("x") + P("x", GF3)


def test_parse_and_print():
    f = P("x^6 + wx^4 + w^2x + 1", GF4)
    assert str(f) == "x^6 + wx^4 + w^2x + 1"
    assert P("x^{12} + 2x + 2", GF3) == P("x^12 + 2x + 2", GF3)
    assert str(Poly(GF2, ())) == "0"
    with pytest.raises(ValueError):
        P("x^^2")


def test_cosets():
    assert cyclotomic_cosets(2, 7) == [(0,), (1, 2, 4), (3, 5, 6)]
    units = cyclotomic_cosets(2, 119, "units")
    assert len(units) == 4 and {len(c) for c in units} == {24}
    units = cyclotomic_cosets(3, 143, "units")
    assert len(units) == 8 and {len(c) for c in units} == {15}
    with pytest.raises(ValueError):
        cyclotomic_cosets(3, 33)


def test_product_over_roots():
    sf = splitting_field(119, 2)
    assert sf.product_over_roots([17, 34, 68]) == P("x^3 + x + 1")
    assert sf.product_over_roots([0]) == P("x + 1")
    # a single non-rational root stays in the extension or raises
    with pytest.raises(NotInBaseField):
        sf.product_over_roots([1], require_base=True)
    ext = product_over_roots(sf.ext, sf.theta, [1], base=sf)
    assert ext.ctx is sf.ext


def test_u0_matches_displayed_polynomial():
    shown = Poly.parse(golden.load("class_polynomials")["7,17,2"]["U"]["X0"], GF2)
    assert shown.degree == 48 and shown.weight() == 25
    ours = class_polynomials(7, 17, 2, "U")
    assert shown in (ours["X0"], ours["X1"])


@pytest.mark.parametrize("n1,n2,q,kind", [
    (7, 17, 2, "U"), (7, 17, 2, "D"), (7, 17, 2, "V"),
    (11, 13, 3, "U"), (11, 13, 3, "D"), (11, 13, 3, "V"),
    (5, 7, 4, "U"), (5, 7, 4, "D"), (5, 7, 4, "V"),
])
def test_master_factorization(n1, n2, q, kind):
    assert verify_master_factorization(n1, n2, q, kind)
    polys = class_polynomials(n1, n2, q, kind)
    half = (n1 - 1) * (n2 - 1) // 2
    assert polys["X0"].degree == polys["X1"].degree == half
    assert polys["d0_n1"].degree == (n1 - 1) // 2
    assert polys["d1_n2"].degree == (n2 - 1) // 2


def test_class_products_agree():
    prods = {k: (lambda p: p["X0"] * p["X1"])(class_polynomials(7, 17, 2, k)) for k in "UDV"}
    assert prods["U"] == prods["D"] == prods["V"]


def test_inadmissible_class_polynomials():
    with pytest.raises(NotInBaseField):
        class_polynomials(5, 11, 2, "D")


@pytest.mark.parametrize("n1,n2,q,count", [(7, 17, 2, 9), (11, 13, 3, 15), (5, 7, 4, 9)])
def test_factorization(n1, n2, q, count):
    fs = factor_xn_minus_1(n1, n2, q)
    assert len(fs) == count
    ctx = fs[0].ctx
    assert poly_product(fs, ctx) == Poly.x_n_minus_1(ctx, n1 * n2)
    if ctx.m == 1:
        assert all(is_irreducible(f.coeffs, q) for f in fs)
    assert P("x^2 + wx + 1", GF4) in factor_xn_minus_1(5, 7, 4) or \
        P("x^2 + w^2x + 1", GF4) in factor_xn_minus_1(5, 7, 4)


polys = st.lists(st.integers(0, 3), max_size=8).map(lambda c: Poly.from_ints(GF4, c))


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if not b.is_zero():
        qt, r = divmod(a, b)
        assert qt * b + r == a
        assert r.is_zero() or r.degree < b.degree


@settings(max_examples=100, deadline=None)
@given(polys)
def test_parse_roundtrip(a):
    assert Poly.parse(str(a), GF4) == a if not a.is_zero() else True
