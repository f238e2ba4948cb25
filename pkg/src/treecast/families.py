"""Generators for the tree families the closed forms cover.

Four parametric families, each with a fixed deterministic labelling so tests
and certificates can name vertices:

* PerfectKAry(k, h): every internal vertex has exactly k children and every
  leaf sits at depth h. Level order: root 0, children of i are k*i+1..k*i+k.
* Spider(legs): one branch vertex of degree >= 3 and paths (legs) hanging off
  it. Branch is 0; legs are sorted by length and numbered consecutively
  outward, so each leg's leaf is its last id.
* Caterpillar(spine, pendants): a path 0..spine-1 with pendants[i] extra
  leaves on spine vertex i, numbered after the spine in spine order.
* DoubleSpider(legs_a, legs_b, d): two branch vertices joined by a path with
  d edges, each carrying >= 2 legs. Ids: branch A = 0, side-A leg vertices
  outward, then the d-1 path internals from A to B, then branch B, then
  side-B leg vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import BadParamError, ParseError
from .tree import Tree, is_caterpillar


# -- specs -------------------------------------------------------------------


@dataclass(frozen=True)
class PerfectKAry:
    k: int
    h: int

    def __post_init__(self):
        if self.k < 2:
            raise BadParamError(f"perfect k-ary tree needs k >= 2, got k={self.k}")
        if self.h < 1:
            raise BadParamError(f"perfect k-ary tree needs height h >= 1, got h={self.h}")


@dataclass(frozen=True)
class Spider:
    legs: tuple[int, ...]

    def __post_init__(self):
        legs = tuple(sorted(int(x) for x in self.legs))
        if len(legs) < 3:
            raise BadParamError(f"spider needs at least 3 legs, got {len(legs)}")
        if legs[0] < 1:
            raise BadParamError(f"spider leg lengths must be >= 1, got {legs}")
        object.__setattr__(self, "legs", legs)


@dataclass(frozen=True)
class Caterpillar:
    spine: int
    pendants: tuple[int, ...]

    def __post_init__(self):
        pend = tuple(int(x) for x in self.pendants)
        if self.spine < 1:
            raise BadParamError(f"caterpillar spine must have >= 1 vertex, got {self.spine}")
        if len(pend) != self.spine:
            raise BadParamError(
                f"need one pendant count per spine vertex: spine={self.spine}, got {len(pend)}"
            )
        if any(p < 0 for p in pend):
            raise BadParamError(f"pendant counts must be >= 0, got {pend}")
        if self.spine + sum(pend) < 2:
            raise BadParamError("caterpillar needs at least 2 vertices")
        object.__setattr__(self, "pendants", pend)


@dataclass(frozen=True)
class DoubleSpider:
    legs_a: tuple[int, ...]
    legs_b: tuple[int, ...]
    d: int

    def __post_init__(self):
        for name in ("legs_a", "legs_b"):
            legs = tuple(sorted(int(x) for x in getattr(self, name)))
            if len(legs) < 2:
                raise BadParamError(f"double spider needs >= 2 legs per branch, got {name}={legs}")
            if legs and legs[0] < 1:
                raise BadParamError(f"leg lengths must be >= 1, got {name}={legs}")
            object.__setattr__(self, name, legs)
        if self.d < 1:
            raise BadParamError(f"branch distance must be >= 1, got d={self.d}")


FamilySpec = Union[PerfectKAry, Spider, Caterpillar, DoubleSpider]


@dataclass
class LabeledTree:
    """A generated tree plus the family spec and labelling metadata it came from."""

    tree: Tree
    spec: FamilySpec
    meta: dict = field(default_factory=dict)


# -- perfect k-ary helpers ----------------------------------------------------


def kary_n(k: int, h: int) -> int:
    return (k ** (h + 1) - 1) // (k - 1)


def kary_level_start(k: int, d: int) -> int:
    return (k**d - 1) // (k - 1)


def kary_level(k: int, d: int) -> range:
    return range(kary_level_start(k, d), kary_level_start(k, d + 1))


def kary_children(k: int, v: int) -> range:
    return range(k * v + 1, k * v + k + 1)


def kary_parent(k: int, v: int) -> int:
    return (v - 1) // k


def kary_first_children(k: int, d: int) -> list[int]:
    """Vertices at depth d >= 1 that are the first child of their parent."""
    return [v for v in kary_level(k, d) if (v - 1) % k == 0]


# -- generators ---------------------------------------------------------------


def gen_perfect_kary(k: int, h: int) -> LabeledTree:
    spec = PerfectKAry(int(k), int(h))
    n = kary_n(spec.k, spec.h)
    edges = [(kary_parent(spec.k, v), v) for v in range(1, n)]
    return LabeledTree(Tree(n, edges), spec, {"k": spec.k, "h": spec.h})


def _grow_leg(edges: list, start: int, cursor: int, length: int) -> tuple[tuple[int, ...], int]:
    ids = []
    prev = start
    for _ in range(length):
        edges.append((prev, cursor))
        ids.append(cursor)
        prev = cursor
        cursor += 1
    return tuple(ids), cursor


def gen_spider(legs) -> LabeledTree:
    spec = legs if isinstance(legs, Spider) else Spider(tuple(legs))
    edges: list[tuple[int, int]] = []
    cursor = 1
    leg_vertices = []
    for L in spec.legs:
        ids, cursor = _grow_leg(edges, 0, cursor, L)
        leg_vertices.append(ids)
    meta = {
        "branch": 0,
        "legs": spec.legs,
        "leg_vertices": tuple(leg_vertices),
        "leaf": tuple(ids[-1] for ids in leg_vertices),
        "leg_internals": tuple(v for ids in leg_vertices for v in ids[:-1]),
    }
    return LabeledTree(Tree(cursor, edges), spec, meta)


def gen_caterpillar(spine: int, pendants) -> LabeledTree:
    spec = Caterpillar(int(spine), tuple(pendants))
    edges = [(i, i + 1) for i in range(spec.spine - 1)]
    cursor = spec.spine
    pendants_of = []
    for i, cnt in enumerate(spec.pendants):
        ids = []
        for _ in range(cnt):
            edges.append((i, cursor))
            ids.append(cursor)
            cursor += 1
        pendants_of.append(tuple(ids))
    meta = {"spine": tuple(range(spec.spine)), "pendants_of": tuple(pendants_of)}
    return LabeledTree(Tree(cursor, edges), spec, meta)


def gen_double_spider(legs_a, legs_b, d: int) -> LabeledTree:
    spec = (
        legs_a
        if isinstance(legs_a, DoubleSpider)
        else DoubleSpider(tuple(legs_a), tuple(legs_b), int(d))
    )
    edges: list[tuple[int, int]] = []
    cursor = 1
    legs_a_vertices = []
    for L in spec.legs_a:
        ids, cursor = _grow_leg(edges, 0, cursor, L)
        legs_a_vertices.append(ids)
    path = []
    prev = 0
    for _ in range(spec.d - 1):
        edges.append((prev, cursor))
        path.append(cursor)
        prev = cursor
        cursor += 1
    v2 = cursor
    edges.append((prev, v2))
    cursor += 1
    legs_b_vertices = []
    for L in spec.legs_b:
        ids, cursor = _grow_leg(edges, v2, cursor, L)
        legs_b_vertices.append(ids)
    meta = {
        "v1": 0,
        "v2": v2,
        "path": tuple(path),
        "legs_a_vertices": tuple(legs_a_vertices),
        "legs_b_vertices": tuple(legs_b_vertices),
    }
    meta.update(_ds_canonical(spec, meta))
    return LabeledTree(Tree(cursor, edges), spec, meta)


def ds_side_params(legs: tuple[int, ...]) -> tuple[int, int]:
    """(t, m) for one branch: t = sum(leg - 1) + 1, m = longest leg."""
    return sum(x - 1 for x in legs) + 1, max(legs)


def _ds_canonical(spec: DoubleSpider, meta: dict) -> dict:
    """Orient the two branches so that t1 - m1 <= t2 - m2.

    The swap is metadata only (which branch plays side 1); ids do not move.
    The canonical path runs from branch 1 to branch 2, so it reverses when
    the sides swap.
    """
    ta, ma = ds_side_params(spec.legs_a)
    tb, mb = ds_side_params(spec.legs_b)
    swapped = (ta - ma) > (tb - mb)
    if swapped:
        t1, m1, t2, m2 = tb, mb, ta, ma
        b1, b2 = meta["v2"], meta["v1"]
        legs1, legs2 = meta["legs_b_vertices"], meta["legs_a_vertices"]
        cpath = tuple(reversed(meta["path"]))
    else:
        t1, m1, t2, m2 = ta, ma, tb, mb
        b1, b2 = meta["v1"], meta["v2"]
        legs1, legs2 = meta["legs_a_vertices"], meta["legs_b_vertices"]
        cpath = meta["path"]
    return {
        "swapped": swapped,
        "t1": t1,
        "m1": m1,
        "t2": t2,
        "m2": m2,
        "branch1": b1,
        "branch2": b2,
        "legs1_vertices": legs1,
        "legs2_vertices": legs2,
        "cpath": cpath,
        # leaf of the longest leg on each side (last leg: legs are sorted)
        "l1": legs1[-1][-1],
        "l2": legs2[-1][-1],
        "leg_internals": tuple(
            v for ids in (meta["legs_a_vertices"] + meta["legs_b_vertices"]) for v in ids[:-1]
        ),
    }


def generate(spec: FamilySpec) -> LabeledTree:
    if isinstance(spec, PerfectKAry):
        return gen_perfect_kary(spec.k, spec.h)
    if isinstance(spec, Spider):
        return gen_spider(spec)
    if isinstance(spec, Caterpillar):
        return gen_caterpillar(spec.spine, spec.pendants)
    if isinstance(spec, DoubleSpider):
        return gen_double_spider(spec.legs_a, spec.legs_b, spec.d)
    raise BadParamError(f"unknown family spec: {spec!r}")


# -- caterpillar tests at the family-spec level --------------------------------


def spec_is_caterpillar(spec: FamilySpec) -> bool:
    """Whether the family instance is a caterpillar, decided from parameters.

    Agrees with tree-level is_caterpillar on the generated tree.
    """
    if isinstance(spec, Caterpillar):
        return True
    if isinstance(spec, PerfectKAry):
        # star, or the binary tree of height 2 whose three internals are a path
        return spec.h == 1 or (spec.k == 2 and spec.h == 2)
    if isinstance(spec, Spider):
        return sum(1 for x in spec.legs if x >= 2) <= 2
    if isinstance(spec, DoubleSpider):
        return (
            sum(1 for x in spec.legs_a if x >= 2) <= 1
            and sum(1 for x in spec.legs_b if x >= 2) <= 1
        )
    raise BadParamError(f"unknown family spec: {spec!r}")


# -- json ----------------------------------------------------------------------


def spec_to_dict(spec: FamilySpec) -> dict:
    if isinstance(spec, PerfectKAry):
        return {"family": "kary", "k": spec.k, "h": spec.h}
    if isinstance(spec, Spider):
        return {"family": "spider", "legs": list(spec.legs)}
    if isinstance(spec, Caterpillar):
        return {"family": "caterpillar", "spine": spec.spine, "pendants": list(spec.pendants)}
    if isinstance(spec, DoubleSpider):
        return {
            "family": "double_spider",
            "legs_a": list(spec.legs_a),
            "legs_b": list(spec.legs_b),
            "d": spec.d,
        }
    raise BadParamError(f"unknown family spec: {spec!r}")


def _require(data: dict, key: str, kind) -> object:
    if key not in data:
        raise ParseError(f"family spec missing {key!r}: {data!r}")
    val = data[key]
    if kind is int:
        if isinstance(val, bool) or not isinstance(val, int):
            raise ParseError(f"{key!r} must be an integer, got {val!r}")
    elif kind is list:
        if not isinstance(val, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in val
        ):
            raise ParseError(f"{key!r} must be a list of integers, got {val!r}")
    return val


def parse_spec(data: dict) -> FamilySpec:
    if not isinstance(data, dict):
        raise ParseError(f"family spec must be a JSON object, got {data!r}")
    fam = data.get("family")
    try:
        if fam == "kary":
            return PerfectKAry(_require(data, "k", int), _require(data, "h", int))
        if fam == "spider":
            return Spider(tuple(_require(data, "legs", list)))
        if fam == "caterpillar":
            return Caterpillar(
                _require(data, "spine", int), tuple(_require(data, "pendants", list))
            )
        if fam == "double_spider":
            return DoubleSpider(
                tuple(_require(data, "legs_a", list)),
                tuple(_require(data, "legs_b", list)),
                _require(data, "d", int),
            )
    except BadParamError:
        raise
    raise ParseError(f"unknown family {fam!r}")


__all__ = [
    "PerfectKAry",
    "Spider",
    "Caterpillar",
    "DoubleSpider",
    "FamilySpec",
    "LabeledTree",
    "generate",
    "gen_perfect_kary",
    "gen_spider",
    "gen_caterpillar",
    "gen_double_spider",
    "spec_is_caterpillar",
    "spec_to_dict",
    "parse_spec",
    "is_caterpillar",
    "kary_n",
    "kary_level",
    "kary_level_start",
    "kary_children",
    "kary_parent",
    "kary_first_children",
    "ds_side_params",
]
