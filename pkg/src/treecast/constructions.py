"""Explicit optimal broadcasts, packings and covers on the supported families.

Every builder returns the generated labelled tree, the assignment, and the
weight it claims; the claimed weight always equals the matching closed form
(the tests and the CLI verify both feasibility and the value).

Level/id arithmetic leans on the fixed labellings from families.py. "First
child" means the child with the smallest id; picking one child per parent is
how the patterns place a broadcaster on 1/k of a level.
"""

from __future__ import annotations

from .errors import NotACaterpillarError, UnsupportedRangeError
from .families import (
    Caterpillar,
    DoubleSpider,
    FamilySpec,
    LabeledTree,
    PerfectKAry,
    Spider,
    gen_double_spider,
    gen_perfect_kary,
    gen_spider,
    generate,
    kary_children,
    kary_first_children,
    kary_level,
    spec_is_caterpillar,
)
from .formulas import (
    alpha_b_binary,
    alpha_b_kary,
    alpha_b_spider,
    pbmc_binary,
    pbmc_double_spider,
    pbmc_kary,
    pbmc_spider,
    spider_alpha_cut,
)
from .model import Broadcast, Certificate, TokenSet
from .tree import Tree, is_caterpillar


def _as_lt(lt: LabeledTree | None, maker) -> LabeledTree:
    return lt if lt is not None else maker()


# -- independent broadcasts ------------------------------------------------------


def build_alpha_binary(h: int, lt: LabeledTree | None = None) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal independent broadcast on the perfect binary tree.

    Power 3 on the first child of every depth-(d-1) vertex for d = h, h-4,
    h-8, ... while d >= 6, then a terminal pattern at the leftover depth
    d in 2..5 (same placement, plus the root at power 3 when d = 4 and power
    4 when d = 5). Height 1 is special: one leaf at power 2.
    """
    value = alpha_b_binary(h)  # validates h
    lt = _as_lt(lt, lambda: gen_perfect_kary(2, h))
    n = lt.tree.n
    powers = [0] * n
    if h == 1:
        powers[1] = 2
    else:
        d = h
        while d >= 6:
            for v in kary_first_children(2, d):
                powers[v] = 3
            d -= 4
        for v in kary_first_children(2, d):
            powers[v] = 3
        if d == 4:
            powers[0] = 3
        elif d == 5:
            powers[0] = 4
    return lt, Broadcast(tuple(powers)), value


def build_alpha_kary(
    k: int, h: int, lt: LabeledTree | None = None
) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal independent broadcast on the perfect k-ary tree, k >= 3:
    power 1 everywhere on every second level counted from the leaves."""
    value = alpha_b_kary(k, h)
    lt = _as_lt(lt, lambda: gen_perfect_kary(k, h))
    powers = [0] * lt.tree.n
    for d in range(h, -1, -2):
        for v in kary_level(k, d):
            powers[v] = 1
    return lt, Broadcast(tuple(powers)), value


def build_alpha_spider(legs, lt: LabeledTree | None = None) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal independent broadcast on a spider.

    With legs sorted ascending and i the best cut index, leaves of legs
    longer than leg i broadcast with power legs[i] + legs[j] - 1 and the leaf
    of leg i itself with power legs[i] + legs[i+1] - 1; shorter legs stay
    silent. Each power is one less than the distance to the nearest other
    broadcaster, which is what makes the set independent."""
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    value = alpha_b_spider(spec)
    lt = _as_lt(lt, lambda: gen_spider(spec))
    legs_sorted = lt.spec.legs
    leaf = lt.meta["leaf"]
    i = spider_alpha_cut(legs_sorted)
    powers = [0] * lt.tree.n
    powers[leaf[i]] = legs_sorted[i] + legs_sorted[i + 1] - 1
    for j in range(i + 1, len(legs_sorted)):
        powers[leaf[j]] = legs_sorted[i] + legs_sorted[j] - 1
    return lt, Broadcast(tuple(powers)), value


# -- packings ---------------------------------------------------------------------


def build_packing_binary(
    h: int, lt: LabeledTree | None = None
) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal packing on the perfect binary tree, h >= 4; t = h mod 3.

    Per depth-(h-2) vertex, its four grandchild leaves get powers (2,0,1,0):
    weight 3 per group, pairwise slacks tight. Above, the first child of
    every vertex at depths h-4, h-7, ... broadcasts with power 1, stopping at
    depth (5,3,4)[t]; the root gets power (3,1,2)[t]."""
    value = pbmc_binary(h)  # validates range
    lt = _as_lt(lt, lambda: gen_perfect_kary(2, h))
    powers = [0] * lt.tree.n
    for v in kary_level(2, h - 2):
        c1, c2 = 2 * v + 1, 2 * v + 2
        powers[2 * c1 + 1] = 2
        powers[2 * c2 + 1] = 1
    d = h - 4
    stop = (5, 3, 4)[h % 3]
    while d >= stop:
        for v in kary_first_children(2, d):
            powers[v] = 1
        d -= 3
    powers[0] = (3, 1, 2)[h % 3]
    return lt, Broadcast(tuple(powers)), value


def build_cover_binary(h: int, lt: LabeledTree | None = None) -> tuple[LabeledTree, TokenSet, int]:
    """Optimal layered cover on the perfect binary tree, h >= 4; t = h mod 3:
    every vertex at depth h-1, every vertex at depths h-2, h-5, ... down to
    t+1, then the root (t = 0, 1) or both depth-1 vertices (t = 2)."""
    value = pbmc_binary(h)
    lt = _as_lt(lt, lambda: gen_perfect_kary(2, h))
    t = h % 3
    tokens = set(kary_level(2, h - 1))
    d = h - 2
    while d >= t + 1:
        tokens.update(kary_level(2, d))
        d -= 3
    if t == 2:
        tokens.update(kary_level(2, 1))
    else:
        tokens.add(0)
    return lt, TokenSet(frozenset(tokens)), value


def build_packing_kary(
    k: int, h: int, lt: LabeledTree | None = None
) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal packing on the perfect k-ary tree, k >= 3, h >= 3; t = h mod 3.

    Per depth-(h-2) vertex: the first leaf under its first child gets power
    2, the first leaf under each other child power 1 (weight k+1 per group).
    The first child of every vertex at depths h-4, h-7, ... broadcasts with
    power 1 down to depth (2,3,4)[t]; the root gets power (0,1,2)[t]."""
    value = pbmc_kary(k, h)
    lt = _as_lt(lt, lambda: gen_perfect_kary(k, h))
    powers = [0] * lt.tree.n
    for v in kary_level(k, h - 2):
        for idx, c in enumerate(kary_children(k, v)):
            powers[k * c + 1] = 2 if idx == 0 else 1
    d = h - 4
    stop = (2, 3, 4)[h % 3]
    while d >= stop:
        for v in kary_first_children(k, d):
            powers[v] = 1
        d -= 3
    root_p = (0, 1, 2)[h % 3]
    if root_p:
        powers[0] = root_p
    return lt, Broadcast(tuple(powers)), value


def build_cover_kary(
    k: int, h: int, lt: LabeledTree | None = None
) -> tuple[LabeledTree, TokenSet, int]:
    """Optimal layered cover on the perfect k-ary tree, k >= 3, h >= 3;
    t = h mod 3: every vertex at depth h-1, every vertex at depths h-2, h-5,
    ... down to t+1, plus nothing (t=0), the root (t=1), or the root and its
    first child (t=2)."""
    value = pbmc_kary(k, h)
    lt = _as_lt(lt, lambda: gen_perfect_kary(k, h))
    t = h % 3
    tokens = set(kary_level(k, h - 1))
    d = h - 2
    while d >= t + 1:
        tokens.update(kary_level(k, d))
        d -= 3
    if t == 1:
        tokens.add(0)
    elif t == 2:
        tokens.add(0)
        tokens.add(1)
    return lt, TokenSet(frozenset(tokens)), value


def build_packing_spider(legs, lt: LabeledTree | None = None) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal packing on a non-caterpillar spider: the shortest leg's leaf
    broadcasts its full leg length, every other leaf one less than its leg
    length (slack to the branch vertex keeps the balls disjoint)."""
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    value = pbmc_spider(spec)  # raises IsCaterpillarError when it applies
    lt = _as_lt(lt, lambda: gen_spider(spec))
    leaf = lt.meta["leaf"]
    legs_sorted = lt.spec.legs
    powers = [0] * lt.tree.n
    powers[leaf[0]] = legs_sorted[0]
    for i in range(1, len(legs_sorted)):
        if legs_sorted[i] - 1 > 0:
            powers[leaf[i]] = legs_sorted[i] - 1
    return lt, Broadcast(tuple(powers)), value


def build_cover_spider(legs, lt: LabeledTree | None = None) -> tuple[LabeledTree, TokenSet, int]:
    """Optimal layered cover on a non-caterpillar spider: every internal
    vertex (the branch plus all non-leaf leg vertices)."""
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    value = pbmc_spider(spec)
    lt = _as_lt(lt, lambda: gen_spider(spec))
    tokens = {lt.meta["branch"], *lt.meta["leg_internals"]}
    return lt, TokenSet(frozenset(tokens)), value


def build_packing_caterpillar(t: Tree) -> tuple[Broadcast, int]:
    """Optimal packing on any caterpillar: one endpoint of the canonical
    diametral path broadcasting the full diameter."""
    if not is_caterpillar(t):
        raise NotACaterpillarError("tree is not a caterpillar")
    path = t.diametral_path()
    powers = [0] * t.n
    powers[path[0]] = len(path) - 1
    return Broadcast(tuple(powers)), len(path) - 1


def build_cover_caterpillar(t: Tree) -> tuple[TokenSet, int]:
    """Optimal layered cover on any caterpillar: the canonical diametral path
    minus the endpoint the packing broadcasts from."""
    if not is_caterpillar(t):
        raise NotACaterpillarError("tree is not a caterpillar")
    path = t.diametral_path()
    return TokenSet(frozenset(path[1:])), len(path) - 1


def build_packing_double_spider(
    legs_a, legs_b=None, d: int | None = None, lt: LabeledTree | None = None
) -> tuple[LabeledTree, Broadcast, int]:
    """Optimal packing on a non-caterpillar double spider.

    Sides are oriented so g = t1 - m1 <= t2 - m2 (t = sum(leg-1)+1, m = max
    leg). Short-gap case 2g <= d - 1: the side-1 longest leaf broadcasts
    across both branches with power m1 + d, and every side-2 leaf gets its
    leg length minus 1. Long-gap case 2g >= d: each side's longest leaf gets
    its full leg length, every other leaf its leg length minus 1, and the
    path midpoint gets floor((d-2)/2) when that is positive."""
    spec = (
        legs_a
        if isinstance(legs_a, DoubleSpider)
        else DoubleSpider(tuple(legs_a), tuple(legs_b), int(d))
    )
    value = pbmc_double_spider(spec)  # raises IsCaterpillarError when it applies
    lt = _as_lt(lt, lambda: gen_double_spider(spec.legs_a, spec.legs_b, spec.d))
    meta = lt.meta
    g = meta["t1"] - meta["m1"]
    dd = lt.spec.d
    powers = [0] * lt.tree.n
    if 2 * g <= dd - 1:
        powers[meta["l1"]] = meta["m1"] + dd
        for leg in meta["legs2_vertices"]:
            if len(leg) - 1 > 0:
                powers[leg[-1]] = len(leg) - 1
    else:
        for side in (1, 2):
            legs_v = meta[f"legs{side}_vertices"]
            long_leaf = meta[f"l{side}"]
            powers[long_leaf] = meta[f"m{side}"]
            for leg in legs_v:
                if leg[-1] != long_leaf and len(leg) - 1 > 0:
                    powers[leg[-1]] = len(leg) - 1
        mid_power = (dd - 2) // 2
        if mid_power >= 1:
            powers[meta["cpath"][dd // 2 - 1]] = mid_power
    return lt, Broadcast(tuple(powers)), value


def build_cover_double_spider(
    legs_a, legs_b=None, d: int | None = None, lt: LabeledTree | None = None
) -> tuple[LabeledTree, TokenSet, int]:
    """Optimal layered cover on a non-caterpillar double spider.

    Both branch vertices, every leg internal vertex, and a pattern on the
    connecting path p_1..p_(d-1) (numbered from branch 1, sides oriented as
    in the packing): every second path vertex p_2, p_4, ... up to p_(2g) and
    from there every path vertex p_(2g+1)..p_(d-1); when 2g >= d the even
    picks simply run out at p_(d-2) or p_(d-3)."""
    spec = (
        legs_a
        if isinstance(legs_a, DoubleSpider)
        else DoubleSpider(tuple(legs_a), tuple(legs_b), int(d))
    )
    value = pbmc_double_spider(spec)
    lt = _as_lt(lt, lambda: gen_double_spider(spec.legs_a, spec.legs_b, spec.d))
    meta = lt.meta
    g = meta["t1"] - meta["m1"]
    dd = lt.spec.d
    cpath = meta["cpath"]
    tokens = {meta["branch1"], meta["branch2"], *meta["leg_internals"]}
    if 2 * g >= dd:
        hi = 2 * ((dd - 2) // 2)
        tokens.update(cpath[i - 1] for i in range(2, hi + 1, 2))
    elif 2 * g == dd - 1:
        tokens.update(cpath[i - 1] for i in range(2, 2 * g + 1, 2))
    else:
        tokens.update(cpath[i - 1] for i in range(2, 2 * g + 1, 2))
        tokens.update(cpath[i - 1] for i in range(2 * g + 1, dd))
    return lt, TokenSet(frozenset(tokens)), value


# -- dispatch ---------------------------------------------------------------------


def build_alpha(spec: FamilySpec, lt: LabeledTree | None = None):
    """(lt, Broadcast, value, rule) for the best independent broadcast."""
    if isinstance(spec, PerfectKAry):
        if spec.k == 2:
            out = build_alpha_binary(spec.h, lt)
        else:
            out = build_alpha_kary(spec.k, spec.h, lt)
        return (*out, "closed-form")
    if isinstance(spec, Spider):
        return (*build_alpha_spider(spec, lt), "closed-form")
    raise UnsupportedRangeError(
        f"no independent-broadcast construction for {type(spec).__name__}"
    )


def build_packing(spec: FamilySpec, lt: LabeledTree | None = None):
    """(lt, Broadcast, value, rule) for an optimal packing, caterpillars routed."""
    if spec_is_caterpillar(spec):
        lt = _as_lt(lt, lambda: generate(spec))
        b, value = build_packing_caterpillar(lt.tree)
        return lt, b, value, "caterpillar-diameter"
    if isinstance(spec, PerfectKAry):
        if spec.k == 2:
            return (*build_packing_binary(spec.h, lt), "closed-form")
        return (*build_packing_kary(spec.k, spec.h, lt), "closed-form")
    if isinstance(spec, Spider):
        return (*build_packing_spider(spec, lt), "closed-form")
    if isinstance(spec, DoubleSpider):
        return (*build_packing_double_spider(spec, lt=lt), "closed-form")
    if isinstance(spec, Caterpillar):
        lt = _as_lt(lt, lambda: generate(spec))
        b, value = build_packing_caterpillar(lt.tree)
        return lt, b, value, "caterpillar-diameter"
    raise UnsupportedRangeError(f"no packing construction for {type(spec).__name__}")


def build_cover(spec: FamilySpec, lt: LabeledTree | None = None):
    """(lt, TokenSet, value, rule) for an optimal layered cover, caterpillars routed."""
    if spec_is_caterpillar(spec):
        lt = _as_lt(lt, lambda: generate(spec))
        s, value = build_cover_caterpillar(lt.tree)
        return lt, s, value, "caterpillar-diameter"
    if isinstance(spec, PerfectKAry):
        if spec.k == 2:
            return (*build_cover_binary(spec.h, lt), "closed-form")
        return (*build_cover_kary(spec.k, spec.h, lt), "closed-form")
    if isinstance(spec, Spider):
        return (*build_cover_spider(spec, lt), "closed-form")
    if isinstance(spec, DoubleSpider):
        return (*build_cover_double_spider(spec, lt=lt), "closed-form")
    if isinstance(spec, Caterpillar):
        lt = _as_lt(lt, lambda: generate(spec))
        s, value = build_cover_caterpillar(lt.tree)
        return lt, s, value, "caterpillar-diameter"
    raise UnsupportedRangeError(f"no cover construction for {type(spec).__name__}")


def build_certificate(spec: FamilySpec, lt: LabeledTree | None = None):
    """(lt, Certificate, rule): matched packing + cover proving the optimum."""
    lt_p, packing, v1, rule = build_packing(spec, lt)
    _, cover, v2, _ = build_cover(spec, lt_p)
    if v1 != v2:  # cannot happen; guards future edits
        raise AssertionError(f"packing value {v1} != cover value {v2} for {spec!r}")
    return lt_p, Certificate(packing=packing, cover=cover, value=v1), rule
