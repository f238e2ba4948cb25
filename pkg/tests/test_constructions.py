import pytest

from treecast.constructions import (
    build_alpha,
    build_alpha_binary,
    build_alpha_kary,
    build_alpha_spider,
    build_certificate,
    build_cover,
    build_cover_caterpillar,
    build_cover_double_spider,
    build_packing,
    build_packing_caterpillar,
    build_packing_double_spider,
)
from treecast.errors import UnsupportedRangeError
from treecast.families import (
    Caterpillar,
    DoubleSpider,
    PerfectKAry,
    Spider,
    gen_caterpillar,
    generate,
)
from treecast.formulas import alpha_b_binary, alpha_b_kary, alpha_b_spider, closed_form_value
from treecast.model import (
    broadcast_to_dict,
    certificate_problems,
    check_certificate,
    is_independent,
    is_multicover,
    is_packing,
    is_valid,
    weight,
)
from treecast.oracle import alpha_b_exact, max_independent_set
from util import leg_multisets


@pytest.mark.parametrize("h", range(1, 11))
def test_alpha_binary_construction(h):
    lt, b, value = build_alpha_binary(h)
    assert is_valid(lt.tree, b) and is_independent(lt.tree, b)
    assert weight(b) == value == alpha_b_binary(h)


@pytest.mark.parametrize("h", [1, 2, 3])
def test_alpha_binary_matches_oracle(h):
    lt, b, value = build_alpha_binary(h)
    assert value == alpha_b_exact(lt.tree).value


@pytest.mark.parametrize("k", [3, 4, 5])
@pytest.mark.parametrize("h", [1, 2, 3, 4])
def test_alpha_kary_construction(k, h):
    lt, b, value = build_alpha_kary(k, h)
    assert is_valid(lt.tree, b) and is_independent(lt.tree, b)
    assert weight(b) == value == alpha_b_kary(k, h)
    if lt.tree.n <= 400:
        assert value == max_independent_set(lt.tree)


def test_alpha_spider_constructions():
    for legs in leg_multisets(12):
        lt, b, value = build_alpha_spider(legs)
        assert is_valid(lt.tree, b) and is_independent(lt.tree, b)
        assert weight(b) == value == alpha_b_spider(legs)


@pytest.mark.parametrize(
    "spec",
    [PerfectKAry(2, h) for h in range(4, 10)]
    + [PerfectKAry(3, h) for h in range(3, 7)]
    + [PerfectKAry(4, 3), PerfectKAry(4, 4)],
)
def test_perfect_tree_certificates(spec):
    lt, cert, rule = build_certificate(spec)
    assert certificate_problems(lt.tree, cert) == []
    assert cert.value == closed_form_value(spec, "pb_mc")[0]


def test_spider_certificates():
    for legs in leg_multisets(14, min_leg=2):
        spec = Spider(legs)
        lt, cert, _ = build_certificate(spec)
        assert check_certificate(lt.tree, cert)
        assert cert.value == sum(x - 1 for x in legs) + 1


def test_double_spider_reference_packing(ds_ref20):
    lt, b, value = build_packing_double_spider(ds_ref20.spec, lt=ds_ref20)
    assert value == 13
    assert broadcast_to_dict(b)["powers"] == {"5": 7, "13": 2, "16": 2, "19": 2}
    _, s, v2 = build_cover_double_spider(ds_ref20.spec, lt=ds_ref20)
    assert v2 == 13
    assert sorted(s.vertices) == [0, 2, 4, 7, 8, 9, 10, 11, 12, 14, 15, 17, 18]


def test_double_spider_reference_packing_second():
    spec = DoubleSpider((2, 2, 2), (3, 3, 3), 4)
    lt, b, value = build_packing_double_spider(spec)
    assert value == 12
    assert broadcast_to_dict(b)["powers"] == {
        "2": 1, "4": 1, "6": 2, "8": 1, "13": 2, "16": 2, "19": 3,
    }
    _, s, v2 = build_cover_double_spider(spec)
    assert sorted(s.vertices) == [0, 1, 3, 5, 8, 10, 11, 12, 14, 15, 17, 18]
    assert v2 == 12


@pytest.mark.parametrize(
    "spec",
    [
        DoubleSpider((2, 2), (2, 2), 1),
        DoubleSpider((2, 2), (2, 2), 4),
        DoubleSpider((1, 1, 3), (2, 2), 2),
        DoubleSpider((2, 2), (3, 3), 5),
        DoubleSpider((3, 3, 3), (1, 2, 2), 5),  # swapped-side encoding
        DoubleSpider((2, 3), (2, 4), 3),
    ],
)
def test_double_spider_certificates(spec):
    lt, cert, _ = build_certificate(spec)
    assert certificate_problems(lt.tree, cert) == []
    assert cert.value == closed_form_value(spec, "pb_mc")[0]


def test_caterpillar_builders():
    for spine, pend in [(1, (1,)), (2, (2, 1)), (4, (2, 0, 1, 1)), (6, (1, 0, 0, 2, 0, 1))]:
        t = gen_caterpillar(spine, pend).tree
        b, v1 = build_packing_caterpillar(t)
        s, v2 = build_cover_caterpillar(t)
        assert v1 == v2 == t.diameter()
        assert is_valid(t, b) and is_packing(t, b) and weight(b) == v1
        assert is_multicover(t, s) and len(s.vertices) == v2
        # the packing broadcasts from an endpoint the cover leaves out
        assert not (set(s.vertices) & {v for v, p in enumerate(b.powers) if p > 0})


def test_dispatchers_route_caterpillar_shapes():
    # spiders and double spiders that happen to be caterpillars go through
    # the diameter rule instead of their family pattern
    for spec in (Spider((1, 2, 2)), DoubleSpider((1, 2), (1, 2), 3), PerfectKAry(2, 2)):
        lt, bp, v1, rule1 = build_packing(spec)
        lt2, sc, v2, rule2 = build_cover(spec, lt)
        assert v1 == v2 == lt.tree.diameter()
        assert "caterpillar" in rule1 and "caterpillar" in rule2
        assert is_packing(lt.tree, bp) and is_multicover(lt.tree, sc)


def test_certificate_dispatch_full_round(ds_ref20):
    lt, cert, rule = build_certificate(ds_ref20.spec)
    assert check_certificate(lt.tree, cert)
    assert cert.value == 13 and rule == "closed-form"


def test_alpha_dispatch():
    lt, b, value, rule = build_alpha(PerfectKAry(2, 4))
    assert value == 27 and weight(b) == 27
    lt, b, value, rule = build_alpha(Spider((2, 3, 4)))
    assert value == 13


def test_unsupported_ranges_propagate():
    with pytest.raises(UnsupportedRangeError):
        build_certificate(PerfectKAry(2, 3))  # below the pattern's first height
    with pytest.raises(UnsupportedRangeError):
        build_alpha(Caterpillar(3, (1, 1, 1)))
