import json

import numpy as np
import pytest

from cyclocodes.codes import bch_bound, census_half_dim, code_from_generator, family_code
from cyclocodes.gf import field_create
from cyclocodes.polyring import Poly
from cyclocodes.weight import (
    BudgetExceeded,
    WeightReport,
    min_weight,
    min_weight_bz,
    min_weight_exhaustive,
    systematic_form,
    verify_odd_like_inequality,
    verify_square_root_bounds,
    weight_distribution,
)

GF2 = field_create(2)


def hamming():
    return code_from_generator(7, 2, Poly.parse("x^3 + x + 1", GF2))


def test_hamming():
    rep = min_weight_exhaustive(hamming())
    assert rep.min_weight == 3 and rep.exact
    assert list(weight_distribution(hamming())) == [1, 0, 0, 7, 7, 0, 0, 1]
    assert min_weight_bz(hamming()).min_weight == 3


def test_repetition():
    g = Poly.x_n_minus_1(GF2, 15) // Poly.parse("x + 1", GF2)
    c = code_from_generator(15, 2, g)
    assert c.k == 1
    assert min_weight_exhaustive(c).min_weight == 15
    assert min_weight_bz(c).min_weight == 15


def test_budget():
    c = family_code("U", 7, 17, 2, (0, 0, 0))
    with pytest.raises(BudgetExceeded):
        min_weight_exhaustive(c)
    with pytest.raises(BudgetExceeded):
        weight_distribution(c, budget=1000)


def test_distribution_sums_to_size():
    G = np.array([[1, 2, 3, 0, 1], [0, 1, 1, 2, 3]])
    dist = weight_distribution(G, q=4)
    assert dist.sum() == 16


def test_systematic_form():
    G = hamming().generator_matrix()
    S, piv = systematic_form(G, 2)
    assert piv == [0, 1, 2, 3]
    assert np.array_equal(S[:, :4], np.eye(4, dtype=np.uint8))


@pytest.mark.parametrize("n1,n2,q", [(7, 17, 2), (5, 7, 4)])
def test_census_agrees_with_reference_sample(n1, n2, q):
    from cyclocodes import golden
    ref = golden.load("census_tables")[f"{n1},{n2},{q}"]
    for c in list(census_half_dim(n1, n2, q))[:6]:
        rep = min_weight_bz(c)
        assert rep.exact and rep.min_weight == ref[str(c.label)]
        assert rep.verify(c)
        assert bch_bound(c).bound <= rep.min_weight


def test_bz_matches_exhaustive_on_small_codes():
    rng = np.random.default_rng(1)
    for q in (2, 3, 4):
        for _ in range(4):
            n, k = 24, int(rng.integers(2, 9))
            G = rng.integers(0, q, size=(k, n))
            ex = min_weight_exhaustive(G, q=q)
            bz = min_weight_bz(G, q=q)
            assert bz.exact and bz.min_weight == ex.min_weight
            bz = min_weight_bz(G, q=q, odd_like=True)
            assert bz.min_odd_like_weight == ex.min_odd_like_weight


def test_generic_chain_on_degenerate_matrix():
    # a repeated column pattern gives a non-full-rank second information set
    G = np.array([[1, 0, 1, 0, 1, 0], [0, 1, 0, 1, 0, 1]])
    assert min_weight_bz(G, q=2).min_weight == 3


def test_stop_at_and_budget():
    c = family_code("U", 7, 17, 2, (0, 0, 0))
    rep = min_weight_bz(c, stop_at=20)
    assert rep.min_weight <= 20 and rep.verify(c)
    rep = min_weight_bz(c, max_combinations=10)
    assert not rep.exact and rep.method == "upper_only"
    assert rep.lower_bound <= 12


def test_threads_do_not_change_the_answer():
    c = family_code("D", 7, 17, 2, (0, 0, 0))
    a = min_weight_bz(c)
    b = min_weight_bz(c, threads=4)
    assert (a.min_weight, a.certificate, a.combinations) == (b.min_weight, b.certificate, b.combinations)


def test_dense_backend_path():
    c = family_code("V", 5, 7, 4, (1, 0, 0))
    assert min_weight_bz(c, dense=True).min_weight == min_weight_bz(c).min_weight == 4


def test_checkpoint_resume(tmp_path):
    c = family_code("D", 7, 17, 2, (1, 1, 1))
    fresh = min_weight_bz(c, odd_like=True)
    ck = tmp_path / "ck.json"
    part = min_weight_bz(c, odd_like=True, checkpoint=str(ck), max_combinations=1)
    assert not part.odd_exact
    saved = json.loads(ck.read_text())
    assert saved["version"] == 1 and saved["state"]["block"] >= 1
    done = min_weight_bz(c, odd_like=True, checkpoint=str(ck))
    assert (done.min_weight, done.min_odd_like_weight, done.combinations) == \
        (fresh.min_weight, fresh.min_odd_like_weight, fresh.combinations)
    # a checkpoint from another code is ignored
    other = family_code("D", 7, 17, 2, (0, 0, 0))
    assert min_weight_bz(other, checkpoint=str(ck)).min_weight == 12


def test_report_json_roundtrip():
    rep = min_weight_bz(hamming())
    again = WeightReport.from_json(json.loads(rep.dumps()))
    assert again.dumps() == rep.dumps()


def test_min_weight_dispatch():
    assert min_weight(hamming()).method == "exhaustive"
    assert min_weight(family_code("U", 5, 7, 4, (0, 0, 0))).method == "bz"


def test_square_root_bounds():
    c = family_code("V", 5, 7, 4, (0, 0, 0))
    rep = min_weight_bz(c, odd_like=True)
    res = verify_square_root_bounds(rep, 5, 7)
    assert res.ok and not res.enhanced_checked
    assert rep.min_odd_like_weight >= rep.min_weight
    with pytest.raises(ValueError):
        verify_square_root_bounds(min_weight_bz(c), 5, 7)


def test_enhanced_bound_gate():
    rep = WeightReport("", 7 * 23, 81, 2, 11, True, 11, None, "bz", 13, True, 13)
    res = verify_square_root_bounds(rep, 7, 23)
    assert res.enhanced_checked and res.enhanced_margin == 13 * 13 - 13 + 1 - 161
    rep.min_odd_like_weight = 12
    assert not verify_square_root_bounds(rep, 7, 23).ok


def test_odd_like_inequality_small():
    res = verify_odd_like_inequality(5, 7, 4)
    assert res.ok, res.detail


def test_square_root_target():
    from cyclocodes.weight import square_root_target
    assert square_root_target(7, 17) == 11
    assert square_root_target(11, 13) == 12
    assert square_root_target(7, 23) == 14  # 13^2 - 13 + 1 = 157 < 161


def test_bound_from_certified_lower_bound():
    c = family_code("D", 7, 17, 2, (1, 0, 0))
    rep = min_weight_bz(c, odd_like=True, lower_target=11)
    assert not rep.odd_exact and rep.odd_lower_bound >= 11
    res = verify_square_root_bounds(rep, 7, 17)
    assert res.ok and "lower bound" in res.detail
    rep.odd_lower_bound = 9
    assert not verify_square_root_bounds(rep, 7, 17).ok
