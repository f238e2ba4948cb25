"""Command-line interface.

Subcommands: gen, compute, construct, verify, oracle, crosscheck. Exit codes:
0 success, 2 bad parameters or malformed input, 3 a verification or
cross-check failed, 4 instance too large for an exhaustive search.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement, product

from .constructions import build_alpha, build_certificate
from .dot import tree_to_dot
from .errors import (
    BadParamError,
    InvalidBroadcastError,
    IsCaterpillarError,
    NotACaterpillarError,
    NotATreeError,
    ParseError,
    TooLargeError,
    TreecastError,
    UnsupportedRangeError,
    VertexOutOfRangeError,
)
from .families import (
    Caterpillar,
    DoubleSpider,
    FamilySpec,
    PerfectKAry,
    Spider,
    generate,
    kary_n,
    parse_spec,
    spec_to_dict,
)
from .formulas import closed_form_value
from .model import (
    broadcast_to_dict,
    certificate_from_dict,
    certificate_problems,
    certificate_to_dict,
    is_independent,
    is_valid,
    weight,
)
from .oracle import alpha_b_exact, alpha_b_tiny, max_independent_set, mc_exact, pb_exact
from .tree import is_caterpillar, random_tree, read_edge_list, write_edge_list

_PARAM_CHOICES = ("alpha_b", "pb_mc")


def _load_spec(arg: str) -> FamilySpec:
    """SPEC is inline JSON, or @path / path to a JSON file."""
    text = arg
    if arg.startswith("@"):
        text = _read(arg[1:])
    elif not arg.lstrip().startswith("{"):
        text = _read(arg)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"family spec is not valid JSON: {exc}") from exc
    return parse_spec(data)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _spec_n(spec: FamilySpec) -> int:
    if isinstance(spec, PerfectKAry):
        return kary_n(spec.k, spec.h)
    if isinstance(spec, Spider):
        return 1 + sum(spec.legs)
    if isinstance(spec, Caterpillar):
        return spec.spine + sum(spec.pendants)
    if isinstance(spec, DoubleSpider):
        return 1 + sum(spec.legs_a) + spec.d + sum(spec.legs_b)
    raise BadParamError(f"unknown family spec: {spec!r}")


def _describe(spec: FamilySpec) -> str:
    if isinstance(spec, PerfectKAry):
        return f"kary(k={spec.k},h={spec.h})"
    if isinstance(spec, Spider):
        return f"spider{spec.legs}"
    if isinstance(spec, Caterpillar):
        return f"caterpillar(spine={spec.spine},pendants={spec.pendants})"
    if isinstance(spec, DoubleSpider):
        return f"double_spider({spec.legs_a},{spec.legs_b},d={spec.d})"
    return repr(spec)


def _emit(args, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for key, val in record.items():
            print(f"{key}: {val}")


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = _load_spec(args.spec)
    lt = generate(spec)
    if args.out:
        write_edge_list(lt.tree, args.out)
        print(f"wrote {args.out} ({_describe(spec)}, n={lt.tree.n})")
    else:
        from .tree import format_edge_list

        sys.stdout.write(format_edge_list(lt.tree))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(tree_to_dot(lt.tree))
    return 0


def cmd_compute(args) -> int:
    spec = _load_spec(args.spec)
    record = {"family": _describe(spec), "parameter": args.param, "n": _spec_n(spec)}
    try:
        value, rule = closed_form_value(spec, args.param)
    except UnsupportedRangeError as exc:
        lt = generate(spec)
        n = lt.tree.n
        if n > args.oracle_limit:
            raise TooLargeError(
                f"{exc}; the oracle fallback handles n <= {args.oracle_limit}, got n={n} "
                "(raise --oracle-limit to force it)"
            ) from exc
        if args.param == "alpha_b":
            value = alpha_b_exact(lt.tree, limit=args.oracle_limit).value
        else:
            p = pb_exact(lt.tree, limit=args.oracle_limit)
            m = mc_exact(lt.tree, limit=args.oracle_limit)
            if p.value != m.value:
                print(
                    f"packing/cover duality gap on {_describe(spec)}: "
                    f"packing {p.value} != cover {m.value}",
                    file=sys.stderr,
                )
                return 3
            value = p.value
        rule = "oracle"
    record["value"] = value
    record["method"] = rule
    _emit(args, record)
    return 0


def cmd_construct(args) -> int:
    spec = _load_spec(args.spec)
    record = {"family": _describe(spec), "parameter": args.param}
    if args.param == "alpha_b":
        lt, b, value, rule = build_alpha(spec)
        dot_broadcast, dot_tokens = b, None
        if not is_valid(lt.tree, b) or not is_independent(lt.tree, b) or weight(b) != value:
            print("constructed broadcast failed verification", file=sys.stderr)
            return 3
        payload = {"broadcast": broadcast_to_dict(b)}
    else:
        lt, cert, rule = build_certificate(spec)
        dot_broadcast, dot_tokens = cert.packing, cert.cover
        problems = certificate_problems(lt.tree, cert)
        if problems:
            for p in problems:
                print(f"constructed certificate failed verification: {p}", file=sys.stderr)
            return 3
        value = cert.value
        payload = {"certificate": certificate_to_dict(cert)}
    check, _ = closed_form_value(spec, args.param)
    if check != value:
        print(f"construction value {value} != closed form {check}", file=sys.stderr)
        return 3
    record.update(n=lt.tree.n, value=value, method=rule, verified=True)
    if args.out:
        doc = {"family": spec_to_dict(spec), "parameter": args.param, "value": value, **payload}
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        record["out"] = args.out
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(tree_to_dot(lt.tree, dot_broadcast, dot_tokens))
    _emit(args, record)
    return 0


def cmd_verify(args) -> int:
    t = read_edge_list(args.tree)
    try:
        data = json.loads(_read(args.cert))
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate file is not valid JSON: {exc}") from exc
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]
    cert = certificate_from_dict(data, t.n)
    problems = certificate_problems(t, cert)
    if problems:
        for p in problems:
            print(f"FAIL: {p}")
        return 3
    print(f"certificate ok: packing and cover both realise value {cert.value}, proving optimality")
    return 0


def cmd_oracle(args) -> int:
    t = read_edge_list(args.tree)
    record: dict = {"n": t.n, "parameter": args.param, "limit": args.limit}
    if args.param == "alpha_b":
        r = alpha_b_exact(t, limit=args.limit)
        record["witness"] = broadcast_to_dict(r.broadcast)["powers"]
    elif args.param == "pb":
        r = pb_exact(t, limit=args.limit)
        record["witness"] = broadcast_to_dict(r.broadcast)["powers"]
    elif args.param == "mc":
        r = mc_exact(t, limit=args.limit)
        record["witness"] = sorted(r.tokens.vertices)
    else:  # mis
        record["value"] = max_independent_set(t)
        _emit(args, record)
        return 0
    record["value"] = r.value
    record["explored"] = r.explored
    _emit(args, record)
    return 0


# -- crosscheck ---------------------------------------------------------------


def _crosscheck_instance(payload: dict) -> dict:
    param = payload["param"]
    limit = payload["oracle_limit"]
    if "spec" in payload:
        spec = parse_spec(payload["spec"])
        lt = generate(spec)
        t = lt.tree
        label = _describe(spec)
    else:
        rng = random.Random(payload["seed"])
        t = random_tree(payload["n"], rng)
        spec = None
        lt = None
        label = f"random(n={t.n},seed={payload['seed']})"
    row = {"instance": label, "n": t.n, "formula": None, "construction": None, "oracle": None}
    notes: list[str] = []

    if spec is not None:
        try:
            row["formula"] = closed_form_value(spec, param)[0]
        except UnsupportedRangeError:
            pass
        try:
            if param == "alpha_b":
                _, b, value, _ = build_alpha(spec, lt)
                if not (is_valid(t, b) and is_independent(t, b) and weight(b) == value):
                    notes.append("construction infeasible")
                row["construction"] = value
            else:
                _, cert, _ = build_certificate(spec, lt)
                problems = certificate_problems(t, cert)
                if problems:
                    notes.append("; ".join(problems))
                row["construction"] = cert.value
        except UnsupportedRangeError:
            pass

    if t.n <= limit:
        if param == "alpha_b":
            r = alpha_b_exact(t, limit=limit)
            row["oracle"] = r.value
            if t.n <= 8:
                r2 = alpha_b_tiny(t)
                if r2.value != r.value:
                    notes.append(f"subset scan {r.value} != power enumeration {r2.value}")
        else:
            p = pb_exact(t, limit=limit)
            m = mc_exact(t, limit=limit)
            if p.value != m.value:
                notes.append(f"duality gap: packing {p.value} != cover {m.value}")
            row["oracle"] = p.value
            if spec is None and is_caterpillar(t) and p.value != t.diameter():
                notes.append(f"caterpillar optimum {p.value} != diameter {t.diameter()}")

    vals = {k: v for k, v in row.items() if k in ("formula", "construction", "oracle") and v is not None}
    if len(set(vals.values())) > 1:
        notes.append("values disagree: " + ", ".join(f"{k}={v}" for k, v in vals.items()))
    row["status"] = "ok" if not notes else "MISMATCH: " + "; ".join(notes)
    return row


def _crosscheck_payloads(args) -> list[dict]:
    fam = args.family
    payloads: list[dict] = []

    def add(spec: FamilySpec) -> None:
        payloads.append(
            {"spec": spec_to_dict(spec), "param": args.param, "oracle_limit": args.oracle_limit}
        )

    if fam == "binary":
        for h in range(args.hmin, args.hmax + 1):
            add(PerfectKAry(2, h))
    elif fam == "kary":
        for k in range(args.kmin, args.kmax + 1):
            for h in range(args.hmin, args.hmax + 1):
                add(PerfectKAry(k, h))
    elif fam == "spider":
        for k in range(3, args.max_legs + 1):
            for legs in combinations_with_replacement(range(1, args.max_leg + 1), k):
                add(Spider(legs))
    elif fam == "caterpillar":
        for spine in range(1, args.max_n + 1):
            for pend in product(range(0, args.max_pendants + 1), repeat=spine):
                if not 2 <= spine + sum(pend) <= args.max_n:
                    continue
                if pend > tuple(reversed(pend)):
                    continue  # mirror image already listed
                add(Caterpillar(spine, pend))
    elif fam == "double_spider":
        rng = random.Random(args.seed)
        made = 0
        while made < args.count:
            la = tuple(sorted(rng.randint(1, 4) for _ in range(rng.randint(2, 3))))
            lb = tuple(sorted(rng.randint(1, 4) for _ in range(rng.randint(2, 3))))
            d = rng.randint(1, 5)
            spec = DoubleSpider(la, lb, d)
            if _spec_n(spec) > args.max_n:
                continue
            add(spec)
            made += 1
    elif fam == "random":
        if args.param != "pb_mc":
            raise BadParamError("random trees have no closed form; use --param pb_mc")
        rng = random.Random(args.seed)
        for _ in range(args.count):
            n = rng.randint(4, args.max_n)
            payloads.append(
                {
                    "n": n,
                    "seed": rng.randrange(1 << 30),
                    "param": args.param,
                    "oracle_limit": args.oracle_limit,
                }
            )
    else:
        raise BadParamError(f"unknown crosscheck family {fam!r}")
    return payloads


def cmd_crosscheck(args) -> int:
    payloads = _crosscheck_payloads(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_crosscheck_instance, payloads, chunksize=8))
    else:
        rows = [_crosscheck_instance(p) for p in payloads]
    bad = [r for r in rows if r["status"] != "ok"]
    if args.format == "json":
        print(json.dumps({"rows": rows, "checked": len(rows), "mismatches": len(bad)}, indent=2))
    else:
        cols = ("instance", "n", "formula", "construction", "oracle", "status")
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols} if rows else {}
        print("  ".join(c.ljust(widths[c]) for c in cols))
        for r in rows:
            print("  ".join(str(r[c] if r[c] is not None else "-").ljust(widths[c]) for c in cols))
        print(
            f"checked {len(rows)} instances: "
            + ("all agree" if not bad else f"{len(bad)} MISMATCH(ES)")
        )
    return 3 if bad else 0


# -- parser --------------------------------------------------------------------


def _add_format(sp) -> None:
    sp.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="treecast",
        description="Optimal independent/packing broadcasts and layered covers on trees.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family instance as an edge list")
    g.add_argument("spec", help="family JSON, @file, or path to a JSON file")
    g.add_argument("-o", "--out", help="output edge-list path (default stdout)")
    g.add_argument("--dot", help="also write a Graphviz DOT rendering")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("compute", help="closed-form value (oracle fallback if small)")
    c.add_argument("spec")
    c.add_argument("param", choices=_PARAM_CHOICES)
    c.add_argument("--oracle-limit", type=int, default=16)
    _add_format(c)
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("construct", help="build and verify an optimal witness")
    b.add_argument("spec")
    b.add_argument("param", choices=_PARAM_CHOICES)
    b.add_argument("-o", "--out", help="write the witness JSON here")
    b.add_argument("--dot", help="also write a Graphviz DOT rendering")
    _add_format(b)
    b.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a packing/cover certificate against a tree")
    v.add_argument("tree", help="edge-list file")
    v.add_argument("cert", help="certificate JSON file")
    _add_format(v)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive optimum on a small tree")
    o.add_argument("tree", help="edge-list file")
    o.add_argument("param", choices=("alpha_b", "pb", "mc", "mis"))
    o.add_argument("--limit", type=int, default=16)
    _add_format(o)
    o.set_defaults(func=cmd_oracle)

    x = sub.add_parser("crosscheck", help="formula vs construction vs oracle sweeps")
    x.add_argument("family", choices=("binary", "kary", "spider", "caterpillar", "double_spider", "random"))
    x.add_argument("--param", choices=_PARAM_CHOICES, required=True)
    x.add_argument("--hmin", type=int, default=1)
    x.add_argument("--hmax", type=int, default=6)
    x.add_argument("--kmin", type=int, default=3)
    x.add_argument("--kmax", type=int, default=4)
    x.add_argument("--max-legs", type=int, default=4)
    x.add_argument("--max-leg", type=int, default=3)
    x.add_argument("--max-n", type=int, default=12)
    x.add_argument("--max-pendants", type=int, default=2)
    x.add_argument("--count", type=int, default=25)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--oracle-limit", type=int, default=15)
    x.add_argument("--jobs", type=int, default=1)
    _add_format(x)
    x.set_defaults(func=cmd_crosscheck)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (
        ParseError,
        BadParamError,
        NotATreeError,
        VertexOutOfRangeError,
        InvalidBroadcastError,
        NotACaterpillarError,
        IsCaterpillarError,
        UnsupportedRangeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TreecastError as exc:  # anything else from this package
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
