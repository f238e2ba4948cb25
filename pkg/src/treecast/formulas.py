"""Closed-form optimal values on the supported families.

Two quantities per instance:

* alpha_b: maximum weight of an independent broadcast (no broadcaster hears
  another broadcaster).
* pb_mc: the shared optimum of the max-weight packing (no vertex hears two
  broadcasters) and the min-size layered cover; on every family here the two
  coincide, which is what the certificate constructions exhibit.

Raising conventions: BadParamError for parameters outside the family domain,
UnsupportedRangeError for legal instances no closed form covers (callers may
fall back to the oracle), IsCaterpillarError when a spider or double-spider
rule is asked about an instance that is really a caterpillar (route to the
caterpillar rule instead).
"""

from __future__ import annotations

from .errors import (
    BadParamError,
    IsCaterpillarError,
    NotACaterpillarError,
    UnsupportedRangeError,
)
from .families import (
    Caterpillar,
    DoubleSpider,
    FamilySpec,
    PerfectKAry,
    Spider,
    ds_side_params,
    generate,
    spec_is_caterpillar,
)
from .tree import Tree, is_caterpillar

# -- independent broadcasts ------------------------------------------------------


def alpha_b_binary(h: int) -> int:
    """Perfect binary tree of height h.

    h = 1 is the 3-vertex path with optimum 2. For h >= 2 the optimum obeys
    alpha(h) = 12 * 2^(h-3) + alpha(h-4): each step strips four bottom levels
    and pays 3 * 2^(h-1) / 2... concretely 3 per chosen leaf on half of the
    2^h leaves. Summing the geometric series by the residue r of h (r = 1..4
    with h = 4m + r) gives

        alpha(h) = 3 * 2^(r-1) * (16^(m+1) - 1) / 15 + (1, 0, 0, 3)[r]

    where the additive term settles the base instance of each residue class.
    """
    if h < 1:
        raise BadParamError(f"height must be >= 1, got h={h}")
    if h == 1:
        return 2
    m, r = divmod(h - 1, 4)
    r += 1  # r in 1..4, h = 4m + r
    tail = {1: 1, 2: 0, 3: 0, 4: 3}[r]
    return 3 * 2 ** (r - 1) * (16 ** (m + 1) - 1) // 15 + tail


def alpha_b_kary(k: int, h: int) -> int:
    """Perfect k-ary tree, k >= 3: the optimum is the number of vertices on
    every second level counted from the bottom (equivalently the maximum
    independent set size), all broadcasting with power 1."""
    if k < 3:
        raise BadParamError(f"this closed form needs k >= 3, got k={k} (use the binary rule)")
    if h < 1:
        raise BadParamError(f"height must be >= 1, got h={h}")
    m, odd = divmod(h, 2)
    base = ((k * k) ** (m + 1) - 1) // (k * k - 1)
    return k * base if odd else base


def spider_alpha_profile(legs: tuple[int, ...]) -> list[int]:
    """Candidate weights W(i) for each cut index i = 0..k-2 over sorted legs.

    Cutting at i means: legs shorter than leg i stay silent, the leaf of leg
    i gets power legs[i] + legs[i+1] - 1, and every longer leg j > i gets
    power legs[i] + legs[j] - 1 at its leaf."""
    k = len(legs)
    out = []
    for i in range(k - 1):
        w = legs[i] + legs[i + 1] - 1
        w += sum(legs[i] + legs[j] - 1 for j in range(i + 1, k))
        out.append(w)
    return out


def spider_alpha_cut(legs: tuple[int, ...]) -> int:
    """Smallest maximising cut index for the spider rule."""
    prof = spider_alpha_profile(legs)
    best = max(prof)
    return prof.index(best)


def alpha_b_spider(legs) -> int:
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    return max(spider_alpha_profile(spec.legs))


# -- packing / layered cover -----------------------------------------------------


def pbmc_binary(h: int) -> int:
    """Perfect binary tree of height h >= 4; residue t = h mod 3:

        pbmc(h) = 2^(t+1) * (8^m - 1) / 7 + 2^(h-1) + (1, 1, 2)[t],  m = h div 3.

    The 2^(h-1) term is the two-levels-down leaf pattern (weight 3 per group
    of four leaves); the geometric series pays for the power-1 broadcasters
    repeating every third level above it; the tail settles the top."""
    if h < 1:
        raise BadParamError(f"height must be >= 1, got h={h}")
    if h < 4:
        raise UnsupportedRangeError(
            f"no closed packing/cover form for binary height h={h} (needs h >= 4)"
        )
    m, t = divmod(h, 3)
    return 2 ** (t + 1) * (8**m - 1) // 7 + 2 ** (h - 1) + (1, 1, 2)[t]


def pbmc_kary(k: int, h: int) -> int:
    """Perfect k-ary tree, k >= 3, h >= 3; residue t = h mod 3:

        pbmc(k, h) = k^(t+1) * (k^(3(m-1)) - 1) / (k^3 - 1)
                     + (k+1) * k^(h-2) + (0, 1, 2)[t],  m = h div 3.
    """
    if k < 3:
        raise BadParamError(f"this closed form needs k >= 3, got k={k} (use the binary rule)")
    if h < 1:
        raise BadParamError(f"height must be >= 1, got h={h}")
    if h < 3:
        raise UnsupportedRangeError(
            f"no closed packing/cover form for k-ary height h={h} (needs h >= 3)"
        )
    m, t = h // 3, h % 3
    kc = k**3
    return k ** (t + 1) * (kc ** (m - 1) - 1) // (kc - 1) + (k + 1) * k ** (h - 2) + (0, 1, 2)[t]


def pbmc_spider(legs) -> int:
    """Spider with at least three legs of length >= 2: sum(leg - 1) + 1.

    Spiders with fewer long legs are caterpillars; their optimum is the
    diameter (the caterpillar rule), not this formula."""
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    if spec_is_caterpillar(spec):
        raise IsCaterpillarError(
            f"spider {spec.legs} is a caterpillar; its packing/cover optimum is the diameter"
        )
    return sum(x - 1 for x in spec.legs) + 1


def pbmc_double_spider(legs_a, legs_b=None, d: int | None = None) -> int:
    """Double spider: branches A, B joined by a path with d edges.

    With t = sum(leg - 1) + 1 and m = max leg per side, sides ordered so that
    g = t1 - m1 <= t2 - m2:

        2g <= d - 1:  m1 + d + t2 - 1
        2g >= d:      t1 + t2 + max(0, (d - 2) div 2)
    """
    spec = (
        legs_a
        if isinstance(legs_a, DoubleSpider)
        else DoubleSpider(tuple(legs_a), tuple(legs_b), int(d))
    )
    if spec_is_caterpillar(spec):
        raise IsCaterpillarError(
            "double spider with single long legs is a caterpillar; "
            "its packing/cover optimum is the diameter"
        )
    ta, ma = ds_side_params(spec.legs_a)
    tb, mb = ds_side_params(spec.legs_b)
    (t1, m1), (t2, m2) = sorted([(ta, ma), (tb, mb)], key=lambda p: p[0] - p[1])
    g = t1 - m1
    if 2 * g <= spec.d - 1:
        return m1 + spec.d + t2 - 1
    return t1 + t2 + max(0, (spec.d - 2) // 2)


def pbmc_caterpillar(t: Tree) -> int:
    """Any caterpillar: a single diametral broadcaster is an optimal packing
    and the diametral path minus one endpoint an optimal cover, so the shared
    optimum is the diameter."""
    if not is_caterpillar(t):
        raise NotACaterpillarError("tree is not a caterpillar; no closed rule applies")
    return t.diameter()


# -- dispatch --------------------------------------------------------------------


def spec_diameter(spec: FamilySpec) -> int:
    """Diameter from parameters (generating the tree only for caterpillars)."""
    if isinstance(spec, PerfectKAry):
        return 2 * spec.h
    if isinstance(spec, Spider):
        return spec.legs[-1] + spec.legs[-2]
    if isinstance(spec, DoubleSpider):
        same_a = spec.legs_a[-1] + (spec.legs_a[-2] if len(spec.legs_a) > 1 else 0)
        same_b = spec.legs_b[-1] + (spec.legs_b[-2] if len(spec.legs_b) > 1 else 0)
        across = spec.legs_a[-1] + spec.d + spec.legs_b[-1]
        return max(same_a, same_b, across)
    if isinstance(spec, Caterpillar):
        return generate(spec).tree.diameter()
    raise BadParamError(f"unknown family spec: {spec!r}")


def closed_form_value(spec: FamilySpec, parameter: str) -> tuple[int, str]:
    """(value, rule) for a family instance, routing caterpillar cases.

    parameter is "alpha_b" or "pb_mc". Raises UnsupportedRangeError when no
    rule covers the instance (the CLI then offers the oracle)."""
    if parameter == "alpha_b":
        if isinstance(spec, PerfectKAry):
            if spec.k == 2:
                return alpha_b_binary(spec.h), "closed-form"
            return alpha_b_kary(spec.k, spec.h), "closed-form"
        if isinstance(spec, Spider):
            return alpha_b_spider(spec), "closed-form"
        raise UnsupportedRangeError(
            f"no independent-broadcast closed form for {type(spec).__name__}"
        )
    if parameter == "pb_mc":
        if spec_is_caterpillar(spec):
            return spec_diameter(spec), "caterpillar-diameter"
        if isinstance(spec, PerfectKAry):
            if spec.k == 2:
                return pbmc_binary(spec.h), "closed-form"
            return pbmc_kary(spec.k, spec.h), "closed-form"
        if isinstance(spec, Spider):
            return pbmc_spider(spec), "closed-form"
        if isinstance(spec, DoubleSpider):
            return pbmc_double_spider(spec), "closed-form"
        if isinstance(spec, Caterpillar):  # non-caterpillar Caterpillar cannot happen
            return spec_diameter(spec), "caterpillar-diameter"
        raise UnsupportedRangeError(f"no packing/cover closed form for {type(spec).__name__}")
    raise BadParamError(f"unknown parameter {parameter!r} (use 'alpha_b' or 'pb_mc')")
