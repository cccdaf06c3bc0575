from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cyclocodes.gf import (
    FieldError,
    arith,
    _field_create,
    field_create,
    is_irreducible,
    multiplicative_order,
    nth_root_of_unity,
    prime_power,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 5), (7, 1)]


def test_prime_field_gf2():
    F = field_create(2, 1)
    assert F.modulus == (0, 1)
    assert F.generator == 1
    assert (F.one + F.one) == 0


def test_gf4_modulus_and_generator():
    F = field_create(2, 2)
    assert F.modulus == (1, 1, 1)
    w = F.alpha
    assert w * w == w + 1
    assert multiplicative_order(w) == 3


def test_gf3_inverse():
    F = field_create(3)
    assert arith(F.elem(2), None, "inv") == 2


def test_order_in_prime_field():
    assert multiplicative_order(field_create(7).elem(2)) == 3
    assert multiplicative_order(field_create(7).one) == 1


def test_large_binary_field():
    F = field_create(2, 24)
    assert multiplicative_order(F.alpha) == 2**24 - 1
    theta = nth_root_of_unity(F, 119)
    assert theta**119 == 1
    assert theta**7 != 1 and theta**17 != 1
    assert multiplicative_order(theta) == 119


def test_nth_root_small_cases():
    F = field_create(2, 2)
    assert nth_root_of_unity(F, 1) == 1
    assert nth_root_of_unity(F, 3) == F.alpha
    with pytest.raises(FieldError):
        nth_root_of_unity(F, 5)


def test_deterministic():
    a, b = field_create(3, 5), field_create(3, 5)
    assert a is b
    c = _field_create.__wrapped__(3, 5)
    assert c is not a
    assert (c.modulus, c.generator) == (a.modulus, a.generator)


def test_modulus_is_smallest_irreducible():
    for p, m in FIELDS:
        F = field_create(p, m)
        assert is_irreducible(F.modulus, p)
        # c_0 compared first, so it varies slowest
        lows = (list(v) for v in product(range(p), repeat=m))
        first = next(low for low in lows if is_irreducible(low + [1], p))
        assert tuple(first) + (1,) == F.modulus


def test_irreducibility_matches_root_count_for_small_degrees():
    # degree 2 and 3: irreducible iff no root
    for p in (2, 3, 5):
        for m in (2, 3):
            for code in range(p**m):
                f = [(code // p**i) % p for i in range(m)] + [1]
                has_root = any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))
                assert is_irreducible(f, p) == (not has_root)


def test_errors():
    with pytest.raises(FieldError):
        field_create(4, 1)
    with pytest.raises(FieldError):
        field_create(2, 0)
    F, G = field_create(2, 2), field_create(3)
    with pytest.raises(FieldError):
        F.alpha + G.one
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero
    with pytest.raises(FieldError):
        arith(F.one, F.one, "mod")


def test_prime_power():
    assert prime_power(4) == (2, 2)
    assert prime_power(27) == (3, 3)
    with pytest.raises(ValueError):
        prime_power(6)


def test_json_coefficients():
    F = field_create(2, 2)
    assert F.alpha.to_json() == [0, 1]
    assert (F.alpha ** 2).to_json() == [1, 1]


@st.composite
def triples(draw):
    p, m = draw(st.sampled_from(FIELDS))
    F = field_create(p, m)
    el = st.integers(0, F.order - 1).map(F.elem)
    return F, draw(el), draw(el), draw(el)


@settings(max_examples=300, deadline=None)
@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert a ** F.group_order == 1
        assert (b / a) * a == b
