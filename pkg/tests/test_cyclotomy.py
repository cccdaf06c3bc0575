from math import gcd

import pytest
from sympy import primerange

from cyclocodes import cyclotomy as cy
from cyclocodes.cyclotomy import (
    CyclotomyError,
    MembershipRule,
    admissibility,
    build_system,
    congruence_predicates,
    decompose,
    direct_membership,
    group_law_check,
    inconsistency_scan,
    is_difference_set,
    minus_one_form,
    primitive_root,
    proposition_scan,
    quadratic_class,
)

SMALL_PAIRS = [(a, b) for a in primerange(3, 24) for b in primerange(a + 1, 24)]


@pytest.mark.parametrize("p,g", [(3, 2), (7, 3), (17, 3), (41, 6)])
def test_primitive_root(p, g):
    assert primitive_root(p) == g


def test_primitive_root_rejects():
    for bad in (2, 9, 1):
        with pytest.raises(CyclotomyError):
            primitive_root(bad)


def test_system_7_17():
    s = build_system(7, 17)
    assert (s.d, s.e, s.g, s.nu) == (2, 48, 3, 52)
    assert s.U[0][:10] == (1, 2, 3, 4, 5, 6, 8, 9, 10, 12)
    assert s.D[0][:7] == (1, 2, 4, 8, 9, 13, 15)
    assert s.V[0][:7] == (1, 2, 4, 8, 9, 11, 15)
    assert decompose(s, 1) == (0, 0)
    assert decompose(s, 3) == (1, 0)
    assert decompose(s, 52) == (0, 1)


def test_system_rejects():
    with pytest.raises(CyclotomyError):
        build_system(7, 7)
    with pytest.raises(CyclotomyError):
        build_system(7, 15)
    with pytest.raises(CyclotomyError):
        decompose(build_system(7, 17), 14)


@pytest.mark.parametrize("n1,n2", SMALL_PAIRS)
def test_partitions(n1, n2):
    s = build_system(n1, n2)
    units = {x for x in range(1, s.n) if gcd(x, s.n) == 1}
    assert s.d % 2 == 0 and s.e % 2 == 0
    for kind in "UDV":
        X0, X1 = s.classes(kind)
        assert len(X0) == len(X1) == s.half
        assert set(X0) | set(X1) == units and not set(X0) & set(X1)
        c = s.swap_unit(kind)
        assert sorted(c * x % s.n for x in X0) == list(X1)
        assert group_law_check(s, kind)


@pytest.mark.parametrize("n1,n2", [(3, 5), (5, 7), (7, 17)])
def test_decompose_bijection(n1, n2):
    s = build_system(n1, n2)
    for si in range(s.e):
        for i in range(s.d):
            x = pow(s.g, si, s.n) * pow(s.nu, i, s.n) % s.n
            assert decompose(s, x) == (si, i)


def test_quadratic_class():
    assert quadratic_class(7, 2) == 0
    assert quadratic_class(7, 3) == 1
    assert quadratic_class(13, 1) == 0
    with pytest.raises(CyclotomyError):
        quadratic_class(7, 14)


def test_admissibility_examples():
    assert admissibility(build_system(7, 17), 2, "U")
    assert admissibility(build_system(11, 13), 3, "D")
    assert admissibility(build_system(5, 7), 4, "V")
    assert not admissibility(build_system(5, 11), 2, "D")


def test_congruence_examples():
    assert congruence_predicates(7, 17, 2)["2-in-V0-QR"]
    assert congruence_predicates(11, 13, 3)["3-in-U0-QR"]
    assert not congruence_predicates(5, 11, 2)["2-in-V0-QR"]
    # 5 = -3 and 11 = 3 (mod 8): 2 lies in U_0 although it is no residue
    s = build_system(5, 11)
    assert congruence_predicates(5, 11, 2)["2-in-U0"]
    assert direct_membership(s, 2, "U", with_qr=False)
    assert not direct_membership(s, 2, "U", with_qr=True)


@pytest.mark.parametrize("n1,n2", SMALL_PAIRS)
def test_minus_one(n1, n2):
    s = build_system(n1, n2)
    branch, t = minus_one_form(s)
    si, i = decompose(s, s.n - 1)
    if branch == "A":
        assert (si, i) == (s.e // 2, 0)
    else:
        assert i == s.d // 2 and si == t


def test_minus_one_small():
    assert minus_one_form(build_system(7, 17))[0] == "B"
    assert minus_one_form(build_system(3, 5))[0] == "B"


def test_difference_sets():
    assert is_difference_set(7, {1, 2, 4}) == (True, 1)
    assert is_difference_set(7, {1, 2, 3}) == (False, None)
    s = build_system(3, 5)
    assert is_difference_set(15, set(s.U[0]) | {0, 5, 10}) == (True, 3)


@pytest.mark.parametrize("n1,n2", [(7, 17), (5, 7), (11, 13), (3, 5)])
def test_inconsistency_scan(n1, n2):
    rep = inconsistency_scan(build_system(n1, n2))
    assert rep.ok
    assert not rep.u1_both_qnr


def test_g_is_both_nonresidue_7_17():
    s = build_system(7, 17)
    assert quadratic_class(7, 3) == quadratic_class(17, 3) == 1
    assert 3 in s.D[1] and 3 in s.V[1]


def test_scan_small():
    res = proposition_scan(30)
    assert res.ok, res.mismatches
    assert res.pairs == 36


def test_scan_catches_a_wrong_rule(monkeypatch):
    wrong = MembershipRule(2, "D", False, lambda a, b: b % 8 in (1, 3), "wrong")
    monkeypatch.setitem(cy.MEMBERSHIP_RULES, "2-in-D0", wrong)
    res = proposition_scan(30)
    assert not res.ok
    assert any("2-in-D0" in m for m in res.mismatches)


def test_json():
    data = build_system(5, 7).to_json()
    assert data["n1"] == 5 and len(data["U0"]) == 12
