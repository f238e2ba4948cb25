import pytest

from treecast.errors import (
    BadParamError,
    IsCaterpillarError,
    NotACaterpillarError,
    UnsupportedRangeError,
)
from treecast.families import Caterpillar, DoubleSpider, PerfectKAry, Spider, generate
from treecast.formulas import (
    alpha_b_binary,
    alpha_b_kary,
    alpha_b_spider,
    closed_form_value,
    pbmc_binary,
    pbmc_caterpillar,
    pbmc_double_spider,
    pbmc_kary,
    pbmc_spider,
    spec_diameter,
    spider_alpha_cut,
    spider_alpha_profile,
)
from treecast.oracle import max_independent_set


# every frozen value below was reproduced by an exhaustive search or a
# verified optimal construction before being written down here

BINARY_ALPHA = {1: 2, 2: 6, 3: 12, 4: 27, 5: 52}
BINARY_PBMC = {4: 13, 5: 26, 6: 51, 7: 101, 8: 202, 9: 403, 10: 805, 11: 1610}
KARY3_PBMC = {3: 12, 4: 37, 5: 110, 6: 327, 7: 982, 8: 2945}


def test_binary_alpha_small_values():
    for h, want in BINARY_ALPHA.items():
        assert alpha_b_binary(h) == want


def test_binary_alpha_recurrence():
    # each step of four heights multiplies the repeating layer pattern by 16
    for h in range(6, 41):
        assert alpha_b_binary(h) == 12 * 2 ** (h - 3) + alpha_b_binary(h - 4)


def test_binary_alpha_domain():
    with pytest.raises(BadParamError):
        alpha_b_binary(0)


def test_kary_alpha_equals_max_independent_set():
    for k in (3, 4, 5):
        for h in (1, 2, 3):
            t = generate(PerfectKAry(k, h)).tree
            assert alpha_b_kary(k, h) == max_independent_set(t)


def test_kary_alpha_values():
    assert alpha_b_kary(3, 1) == 3
    assert alpha_b_kary(3, 2) == 10
    assert alpha_b_kary(3, 3) == 30
    assert alpha_b_kary(4, 2) == 17


def test_kary_alpha_domain():
    with pytest.raises(BadParamError):
        alpha_b_kary(2, 3)  # binary has its own pattern
    with pytest.raises(BadParamError):
        alpha_b_kary(3, 0)


def test_spider_alpha_values():
    assert alpha_b_spider((1, 1, 5)) == 10
    assert alpha_b_spider((2, 3, 4)) == 13
    assert alpha_b_spider((1, 1, 1)) == 3
    assert alpha_b_spider((2, 2, 2)) == 9


def test_spider_alpha_profile_consistency():
    legs = (2, 3, 4)
    profile = spider_alpha_profile(legs)
    cut = spider_alpha_cut(legs)
    assert alpha_b_spider(legs) == max(profile) == profile[cut]
    assert cut == min(i for i, w in enumerate(profile) if w == max(profile))


def test_binary_pbmc_values():
    for h, want in BINARY_PBMC.items():
        assert pbmc_binary(h) == want


def test_binary_pbmc_domain():
    with pytest.raises(UnsupportedRangeError):
        pbmc_binary(3)
    with pytest.raises(BadParamError):
        pbmc_binary(0)


def test_kary_pbmc_values():
    for h, want in KARY3_PBMC.items():
        assert pbmc_kary(3, h) == want
    assert pbmc_kary(4, 3) == 20
    assert pbmc_kary(4, 7) == 5137
    assert pbmc_kary(4, 8) == 20546


def test_kary_pbmc_domain():
    with pytest.raises(BadParamError):
        pbmc_kary(2, 4)
    with pytest.raises(UnsupportedRangeError):
        pbmc_kary(3, 2)


def test_spider_pbmc():
    assert pbmc_spider((2, 2, 2)) == 4
    assert pbmc_spider((2, 2, 3)) == 5
    assert pbmc_spider((3, 3, 3)) == 7
    assert pbmc_spider((2, 2, 2, 2)) == 5
    with pytest.raises(IsCaterpillarError):
        pbmc_spider((1, 2, 2))  # at most two legs longer than one edge


def test_double_spider_pbmc():
    assert pbmc_double_spider((1, 2, 2), (3, 3, 3), 5) == 13
    assert pbmc_double_spider((2, 2, 2), (3, 3, 3), 4) == 12
    assert pbmc_double_spider((2, 2), (2, 2), 1) == 6
    assert pbmc_double_spider((2, 2), (2, 2), 4) == 8
    assert pbmc_double_spider((1, 1, 3), (2, 2), 2) == 7
    assert pbmc_double_spider((2, 2), (3, 3), 5) == 11


def test_double_spider_pbmc_is_order_invariant():
    pairs = [((1, 2, 2), (3, 3, 3), 5), ((1, 1, 3), (2, 2), 2), ((2, 2), (3, 3), 5)]
    for la, lb, d in pairs:
        assert pbmc_double_spider(la, lb, d) == pbmc_double_spider(lb, la, d)


def test_double_spider_pbmc_caterpillar_rejected():
    with pytest.raises(IsCaterpillarError):
        pbmc_double_spider((1, 2), (1, 2), 3)


def test_caterpillar_pbmc_is_diameter():
    for spine, pend in [(1, (3,)), (3, (1, 0, 2)), (5, (0, 1, 0, 1, 0))]:
        lt = generate(Caterpillar(spine, pend))
        assert pbmc_caterpillar(lt.tree) == lt.tree.diameter()
    with pytest.raises(NotACaterpillarError):
        pbmc_caterpillar(generate(Spider((2, 2, 2))).tree)


@pytest.mark.parametrize(
    "spec",
    [
        PerfectKAry(2, 4),
        PerfectKAry(3, 3),
        PerfectKAry(5, 2),
        Spider((1, 1, 5)),
        Spider((2, 3, 4)),
        Caterpillar(4, (2, 0, 1, 1)),
        DoubleSpider((1, 2, 2), (3, 3, 3), 5),
        DoubleSpider((2, 2), (2, 2), 1),
    ],
)
def test_spec_diameter_matches_generated_tree(spec):
    assert spec_diameter(spec) == generate(spec).tree.diameter()


def test_closed_form_dispatch():
    v, rule = closed_form_value(PerfectKAry(2, 5), "alpha_b")
    assert v == 52 and isinstance(rule, str) and rule
    v, _ = closed_form_value(Spider((2, 3, 4)), "alpha_b")
    assert v == 13
    v, _ = closed_form_value(DoubleSpider((1, 2, 2), (3, 3, 3), 5), "pb_mc")
    assert v == 13
    # caterpillar-shaped instances route to the diameter rule
    v, rule = closed_form_value(DoubleSpider((1, 2), (1, 2), 3), "pb_mc")
    assert v == 7 and "diameter" in rule
    v, _ = closed_form_value(Spider((1, 2, 2)), "pb_mc")
    assert v == 4
    v, _ = closed_form_value(Caterpillar(3, (1, 0, 2)), "pb_mc")
    assert v == generate(Caterpillar(3, (1, 0, 2))).tree.diameter()


def test_closed_form_unsupported_combinations():
    with pytest.raises(UnsupportedRangeError):
        closed_form_value(Caterpillar(3, (1, 0, 2)), "alpha_b")
    with pytest.raises(UnsupportedRangeError):
        closed_form_value(DoubleSpider((2, 2), (2, 2), 3), "alpha_b")
    with pytest.raises(UnsupportedRangeError):
        closed_form_value(PerfectKAry(2, 3), "pb_mc")
    with pytest.raises(BadParamError):
        closed_form_value(PerfectKAry(2, 3), "domination")
