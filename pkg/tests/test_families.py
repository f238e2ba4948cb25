import pytest

from treecast.errors import BadParamError, ParseError
from treecast.families import (
    Caterpillar,
    DoubleSpider,
    PerfectKAry,
    Spider,
    ds_side_params,
    gen_caterpillar,
    gen_double_spider,
    gen_perfect_kary,
    gen_spider,
    generate,
    kary_n,
    parse_spec,
    spec_is_caterpillar,
    spec_to_dict,
)
from treecast.tree import is_caterpillar


def test_kary_labeling():
    lt = gen_perfect_kary(3, 2)
    t = lt.tree
    assert t.n == kary_n(3, 2) == 13
    assert sorted(t.neighbors(0)) == [1, 2, 3]
    # child block of vertex i starts at 3i+1
    assert set(t.neighbors(1)) == {0, 4, 5, 6}
    assert t.leaves() == tuple(range(4, 13))
    assert t.diameter() == 4


def test_binary_depths():
    t = gen_perfect_kary(2, 3).tree
    assert t.n == 15
    assert t.eccentricity(0) == 3
    assert t.eccentricity(7) == 6  # first leaf
    assert t.dist(7, 14) == 6


def test_spider_labeling(spider223):
    t, meta = spider223.tree, spider223.meta
    assert spider223.spec.legs == (2, 2, 3)
    assert t.n == 8
    assert t.degree(0) == 3
    for ids, length in zip(meta["leg_vertices"], spider223.spec.legs):
        assert len(ids) == length
        assert t.dist(0, ids[-1]) == length
    assert meta["leaf"] == (2, 4, 7)
    assert meta["leg_internals"] == (1, 3, 5, 6)


def test_spider_sorts_legs():
    assert gen_spider((3, 1, 2)).spec.legs == (1, 2, 3)


def test_caterpillar_labeling(cat_mixed):
    t, meta = cat_mixed.tree, cat_mixed.meta
    assert meta["spine"] == (0, 1, 2, 3)
    assert t.n == 8
    # pendants hang off their spine vertex in declaration order
    assert meta["pendants_of"][0] == (4, 5)
    assert meta["pendants_of"][1] == ()
    assert t.degree(0) == 3


def test_double_spider_reference_layout(ds_ref20):
    t, meta = ds_ref20.tree, ds_ref20.meta
    assert t.n == 20
    assert meta["swapped"] is False
    assert (meta["t1"], meta["m1"], meta["t2"], meta["m2"]) == (3, 2, 7, 3)
    assert meta["branch1"] == 0 and meta["branch2"] == 10
    assert meta["cpath"] == (6, 7, 8, 9)
    assert meta["l1"] == 5 and meta["l2"] == 19
    assert t.dist(meta["branch1"], meta["branch2"]) == 5


def test_double_spider_swap_is_metadata_only():
    a = gen_double_spider((1, 2, 2), (3, 3, 3), 5)
    b = gen_double_spider((3, 3, 3), (1, 2, 2), 5)
    assert b.meta["swapped"] is True
    assert a.meta["swapped"] is False
    # same canonical parameters either way
    for key in ("t1", "m1", "t2", "m2"):
        assert a.meta[key] == b.meta[key]
    # b's side 1 is its second branch, so the canonical path reverses
    assert b.meta["branch1"] == b.meta["v2"]
    assert b.meta["cpath"] == tuple(reversed(b.meta["path"]))
    assert ds_side_params((1, 2, 2)) == (3, 2)


def test_generate_dispatch(binary2):
    assert generate(PerfectKAry(2, 2)).tree.edges() == binary2.tree.edges()
    assert generate(Spider((2, 2, 3))).tree.n == 8
    assert generate(Caterpillar(2, (1, 1))).tree.n == 4
    assert generate(DoubleSpider((1, 1), (1, 1), 2)).tree.n == 7


@pytest.mark.parametrize(
    "spec",
    [
        PerfectKAry(2, 1),
        PerfectKAry(2, 2),
        PerfectKAry(2, 3),
        PerfectKAry(3, 1),
        PerfectKAry(3, 2),
        Spider((1, 1, 5)),
        Spider((1, 2, 2)),
        Spider((2, 2, 2)),
        Caterpillar(3, (1, 0, 2)),
        DoubleSpider((1, 2), (1, 2), 3),
        DoubleSpider((2, 2), (1, 2), 1),
        DoubleSpider((2, 2), (2, 3), 4),
    ],
)
def test_spec_caterpillar_flag_matches_tree(spec):
    assert spec_is_caterpillar(spec) == is_caterpillar(generate(spec).tree)


@pytest.mark.parametrize(
    "bad",
    [
        lambda: PerfectKAry(1, 3),
        lambda: PerfectKAry(2, 0),
        lambda: Spider((1, 2)),
        lambda: Spider((0, 1, 2)),
        lambda: Caterpillar(0, ()),
        lambda: Caterpillar(2, (1,)),
        lambda: Caterpillar(1, (0,)),  # single vertex
        lambda: DoubleSpider((1,), (1, 1), 2),
        lambda: DoubleSpider((1, 1), (1, 1), 0),
    ],
)
def test_bad_params_rejected(bad):
    with pytest.raises(BadParamError):
        bad()


def test_spec_json_round_trip():
    for spec in (
        PerfectKAry(4, 2),
        Spider((1, 2, 2)),
        Caterpillar(3, (0, 2, 1)),
        DoubleSpider((1, 2), (2, 2), 3),
    ):
        assert parse_spec(spec_to_dict(spec)) == spec


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"family": "wheel", "n": 5},
        {"family": "kary", "k": 2},
        {"family": "kary", "k": "2", "h": 3},
        {"family": "spider", "legs": 3},
        {"family": "spider", "legs": [1, 2, True]},
        {"family": "caterpillar", "spine": 2, "pendants": [1]},
        {"family": "double_spider", "legs_a": [1, 2], "legs_b": [1, 2]},
    ],
)
def test_parse_spec_rejects(data):
    with pytest.raises((ParseError, BadParamError)):
        parse_spec(data)


def test_generators_are_deterministic():
    e1 = gen_double_spider((2, 3), (1, 4), 3).tree.edges()
    e2 = gen_double_spider((2, 3), (1, 4), 3).tree.edges()
    assert e1 == e2
