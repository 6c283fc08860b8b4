"""Command-line entry point.

Exit codes: 0 pass/decided, 1 counterexample (verify) or unexpected witness
(hunt --expect-none), 2 usage or configuration error, 3 internal
inconsistency (decider routes disagree), 4 verify stopped by --max-instances.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import deciders as dec
from . import harness
from . import modules as mod
from .ring import Ring, ZeroInSet, bounded_torsion_witness, localize_ring, mult_set

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_EXHAUSTED = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


def _emit(obj: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def parse_mults(spec: Optional[str]) -> list[int]:
    if not spec:
        return []
    try:
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"--mults expects comma-separated integers, got {spec!r}") from None


def read_relations(path: str) -> tuple[list[list[int]], Optional[int]]:
    """Plain-text presentation: one relation per line, space-separated integers.

    Lines starting with ``#`` are comments; ``# generators: K`` fixes the
    generator count (needed when there are no relations).
    """
    rows, gens = [], None
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read relations file {path!r}: {exc.strerror}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip().lower()
            if body.startswith("generators:"):
                gens = int(body.split(":", 1)[1])
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: expected integers, got {line!r}") from None
    if rows and len({len(r) for r in rows}) != 1:
        raise ConfigError(f"{path}: relation rows have different lengths")
    if rows and gens is not None and gens != len(rows[0]):
        raise ConfigError(f"{path}: rows have {len(rows[0])} entries but generators: {gens}")
    if not rows and gens is None:
        raise ConfigError(f"{path}: no relations and no '# generators: K' line")
    return rows, gens if gens is not None else len(rows[0])


def parse_module(spec: str, ring: Ring) -> mod.FpModule:
    kind, _, body = spec.partition(":")
    if kind == "inv":
        try:
            factors = [int(x) for x in body.split(",") if x.strip()]
        except ValueError:
            raise ConfigError(f"bad invariant factor list {body!r}") from None
        try:
            return mod.from_invariants(ring, factors)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    if kind == "rel":
        rows, k = read_relations(body)
        return mod.from_presentation(ring, rows, k).canonical()
    raise ConfigError(f"module spec must be 'inv:d1,d2,...' or 'rel:FILE', got {spec!r}")


def _ring_and_set(args):
    try:
        ring = Ring(args.n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    try:
        s = mult_set(ring, parse_mults(getattr(args, "mults", None)))
    except ZeroInSet as exc:
        raise ConfigError(str(exc)) from None
    return ring, s


def cmd_ring_info(args) -> int:
    ring, s = _ring_and_set(args)
    loc = localize_ring(ring, s)
    s0 = bounded_torsion_witness(ring, s)
    obj = {"schema": 1, "kind": "ring", "n": ring.n, "mult_set": list(s.generators),
           "s_elements": sorted(s.elements), "localization": loc.target.n,
           "idempotent": loc.idempotent, "bounded_torsion_witness": s0}
    text = "\n".join([
        f"ring:                    {ring}",
        f"S:                       {{{', '.join(map(str, sorted(s.elements)))}}}",
        f"localization R_S:        {loc.target}  (r -> r mod {loc.target.n})",
        f"bounded-torsion witness: {s0}",
    ])
    _emit(obj, text, args.format)
    return EXIT_OK


def cmd_module_decompose(args) -> int:
    ring, _ = _ring_and_set(args)
    rows, k = read_relations(args.relations)
    m = mod.from_presentation(ring, rows, k)
    obj = {"schema": 1, "kind": "module", **m.to_dict()}
    _emit(obj, f"{m}  (invariant factors {list(m.factors)}, order {m.order})", args.format)
    return EXIT_OK


def cmd_decide(args) -> int:
    ring, s = _ring_and_set(args)
    m = parse_module(args.module, ring)
    prop = args.property
    if args.route and prop != "s-injective":
        raise ConfigError("--route only applies to s-injective")
    if prop == "injective":
        v = dec.is_injective(m)
    elif prop == "s-injective":
        v = dec.is_s_injective(m, s, args.route)
    elif prop == "flat":
        v = dec.is_flat(m)
    else:
        v = dec.is_s_flat(m, s)
    obj = {"schema": 1, "kind": "verdict", "property": prop, "ring": ring.n,
           "mult_set": list(s.generators), "module": m.to_dict(), **v.to_dict()}
    cert = v.certificate
    lines = [f"{prop}({m}) over {ring}" + (f", S={s}" if prop.startswith("s-") else "")
             + f": {str(v.value).lower()}  [route {v.route}]"]
    if not v.value and "ideal" in cert:
        lines.append(f"  failing ideal: ({cert['ideal']})")
        if "hom" in cert:
            lines.append(f"  non-extendable hom on generators: {cert['hom']}")
        if "ext" in cert:
            lines.append(f"  Ext^1 = {cert['ext']}, class {cert['class']}")
        if "tor" in cert:
            lines.append(f"  Tor_1 = {cert['tor']}, element {cert['element']}")
    if "routes" in cert:
        lines.append("  routes: " + ", ".join(f"{k}={str(x).lower()}" for k, x in cert["routes"].items()))
    _emit(obj, "\n".join(lines), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    ring, s = _ring_and_set(args)
    props = harness.PROP_IDS if args.prop.upper() == "ALL" else [args.prop.upper()]
    for p in props:
        if p not in harness.CHECKS:
            raise ConfigError(f"unknown proposition {p!r}; known: {', '.join(harness.PROP_IDS)}")
    if args.max_factors < 0 or args.budget < 0:
        raise ConfigError("--max-factors and --budget must be non-negative")
    code = EXIT_OK
    reports = []
    for p in props:
        r = harness.verify(p, ring, s, args.max_factors, args.budget, args.seed, args.max_instances)
        reports.append(r)
        if r.verdict == harness.COUNTEREXAMPLE:
            code = EXIT_FOUND
        elif r.verdict == harness.EXHAUSTED and code == EXIT_OK:
            code = EXIT_EXHAUSTED
    if args.format == "json":
        body = [r.to_dict(args.timing) for r in reports]
        print(json.dumps(body[0] if len(body) == 1 else {"schema": 1, "kind": "reports", "reports": body},
                         sort_keys=True))
    else:
        for r in reports:
            line = f"{r.prop_id:<20} {r.verdict:<16} {r.instances_checked:>6} instances  {ring}, S={s}"
            if args.timing:
                line += f"  {r.elapsed:.2f}s"
            print(line)
            if r.counterexample:
                print(f"  counterexample #{r.counterexample['index']}: "
                      f"{json.dumps(r.counterexample['detail'], sort_keys=True)}")
    return code


def cmd_hunt(args) -> int:
    ring, s = _ring_and_set(args)
    try:
        clauses = harness.parse_predicate(args.want)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    res = harness.hunt(ring, s, clauses, args.max_factors, args.budget)
    if res.witness is not None:
        text = f"witness: {res.witness}  (invariant factors {list(res.witness.factors)}, {res.checked} checked)"
    elif res.exhausted_budget:
        text = f"budget exhausted after {res.checked} modules; no witness"
    else:
        text = f"exhausted: no module with <= {args.max_factors} factors satisfies {args.want} ({res.checked} checked)"
    _emit(res.to_dict(), text, args.format)
    if res.witness is not None and args.expect_none:
        return EXIT_FOUND
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slab", description="S-injective and S-flat modules over Z/n")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, mults=True):
        sp.add_argument("--n", type=int, required=True, help="ring modulus")
        if mults:
            sp.add_argument("--mults", default="", help="generators of S, comma-separated")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    ring_p = sub.add_parser("ring").add_subparsers(dest="action", required=True)
    info = ring_p.add_parser("info", help="S, R_S and the bounded-torsion witness")
    common(info)
    info.set_defaults(func=cmd_ring_info)

    mod_p = sub.add_parser("module").add_subparsers(dest="action", required=True)
    dcmp = mod_p.add_parser("decompose", help="invariant factors of a presentation")
    common(dcmp, mults=False)
    dcmp.add_argument("--relations", required=True, metavar="FILE")
    dcmp.set_defaults(func=cmd_module_decompose)

    decide = sub.add_parser("decide", help="decide a property with a certificate")
    decide.add_argument("property", choices=("injective", "s-injective", "flat", "s-flat"))
    common(decide)
    decide.add_argument("--module", required=True, metavar="SPEC", help="inv:d1,d2,... or rel:FILE")
    decide.add_argument("--route", choices=dec.ROUTES)
    decide.set_defaults(func=cmd_decide)

    ver = sub.add_parser("verify", help="check a proposition over a module family")
    ver.add_argument("--prop", required=True, help="proposition id or ALL")
    common(ver)
    ver.add_argument("--max-factors", type=int, default=3)
    ver.add_argument("--budget", type=int, default=200, help="random sequences sampled")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--max-instances", type=int, default=None)
    ver.add_argument("--timing", action="store_true", help="include elapsed time (not reproducible)")
    ver.set_defaults(func=cmd_verify)

    hnt = sub.add_parser("hunt", help="first module satisfying a predicate")
    hnt.add_argument("--want", required=True, help='e.g. "s-injective,!injective"')
    common(hnt)
    hnt.add_argument("--max-factors", type=int, default=3)
    hnt.add_argument("--budget", type=int, default=None, help="maximum modules examined")
    hnt.add_argument("--expect-none", action="store_true", help="exit 1 if a witness is found")
    hnt.set_defaults(func=cmd_hunt)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"slab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except dec.RouteDisagreement as exc:
        print(f"slab: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
