"""Command-line front end with deterministic text and JSON reports."""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from . import __version__
from .catalogs import (
    Catalog,
    CatalogEntry,
    FactorizationQuery,
    build_small_catalog,
    classify_up_to_iso,
    factor_through_class,
)
from .coreflections import (
    GeneratorSpec,
    radical,
    socle,
    verify_radical_property,
)
from .errors import BudgetExceeded, CctError, OrderBudgetExceeded, ParseError, UndefinedName
from .groups import FiniteGroup, Subgroup, is_normal
from .homs import enumerate_homs, isomorphism
from .specfile import parse_spec_file, resolve_name

COMMANDS = ("socle", "radical", "homs", "iso", "classify", "hierarchy",
            "factor", "verify", "catalog")

_BUILTIN_GENS = ("z2", "z3", "z4", "s3")


def _subgroup_json(sub: Subgroup) -> dict:
    elements = list(sub.sorted_members())
    return {
        "order": sub.order,
        "elements": elements,
        "labels": [sub.parent.label(e) for e in elements],
    }


def _resolve_group(env: dict, name: str) -> FiniteGroup:
    obj = resolve_name(env, name)
    if isinstance(obj, GeneratorSpec):
        if len(obj.factors) == 1:
            return obj.factors[0]
        raise ValueError(f"{name!r} is a multi-factor generator spec, not a group")
    return obj


def _resolve_gen(env: dict, name: str) -> GeneratorSpec:
    obj = resolve_name(env, name)
    return GeneratorSpec.of(obj)


def _targets(env: dict, args) -> Catalog:
    """Groups named in the spec file, or the built-in catalog."""
    groups = [(name, obj) for name, obj in env.items() if isinstance(obj, FiniteGroup)]
    if groups:
        return Catalog([CatalogEntry(name, grp, "spec-file") for name, grp in groups])
    return build_small_catalog(args.max_order)


def _genspecs(env: dict) -> list[tuple[str, GeneratorSpec]]:
    """Generator specs named in the spec file, or the built-in defaults."""
    specs = [(name, obj) for name, obj in env.items() if isinstance(obj, GeneratorSpec)]
    if specs:
        return specs
    return [(name, _resolve_gen({}, name)) for name in _BUILTIN_GENS]


# ---------------------------------------------------------------------------
# command handlers: return (result_dict, text_lines, exit_code)


def _cmd_socle(env, args):
    gen = _resolve_gen(env, args.gen)
    target = _resolve_group(env, args.target)
    sub = socle(gen, target)
    generated = sub.order == target.order
    result = {"subgroup": _subgroup_json(sub), "is_generated": generated}
    lines = [
        f"socle of {args.target} (order {target.order}) under {args.gen}: "
        f"order {sub.order}",
        f"elements: {list(sub.sorted_members())}",
        f"is_generated: {generated}",
    ]
    return result, lines, 0


def _cmd_radical(env, args):
    gen = _resolve_gen(env, args.gen)
    target = _resolve_group(env, args.target)
    chain = radical(gen, target)
    constructible = chain.final.order == target.order
    result = {
        "stages": [_subgroup_json(s) for s in chain.stages],
        "stage_orders": list(chain.stage_orders()),
        "chain_length": chain.length,
        "is_constructible": constructible,
    }
    lines = [
        f"radical of {args.target} (order {target.order}) under {args.gen}: "
        f"order {chain.final.order}",
        f"chain of lengths {list(chain.stage_orders())}",
        f"is_constructible: {constructible}",
    ]
    return result, lines, 0


def _cmd_homs(env, args):
    domain = _resolve_group(env, args.gen)
    codomain = _resolve_group(env, args.target)
    homs = enumerate_homs(domain, codomain)
    result = {
        "count": len(homs),
        "domain_generators": list(domain.generators),
        "homs": [{"gen_images": list(h.gen_images)} for h in homs],
    }
    lines = [f"{len(homs)} homomorphisms {args.gen} -> {args.target}"]
    lines += [f"  gen images {list(h.gen_images)}" for h in homs]
    return result, lines, 0


def _cmd_iso(env, args):
    left = _resolve_group(env, args.gen)
    right = _resolve_group(env, args.target)
    witness = isomorphism(left, right)
    result = {
        "isomorphic": witness is not None,
        "witness_gen_images": list(witness.gen_images) if witness else None,
    }
    lines = [f"{args.gen} ~ {args.target}: {witness is not None}"]
    return result, lines, 0


def _cmd_classify(env, args):
    catalog = _targets(env, args)
    classes = classify_up_to_iso(catalog)
    result = {
        "class_count": len(classes),
        "classes": [[e.name for e in cls] for cls in classes],
    }
    lines = [f"{len(catalog)} groups fall into {len(classes)} isomorphism classes"]
    lines += ["  " + ", ".join(e.name for e in cls) for cls in classes]
    return result, lines, 0


def _cmd_hierarchy(env, args):
    gen = _resolve_gen(env, args.gen)
    target = _resolve_group(env, args.target)
    chain = radical(gen, target)
    soc, rad = chain.stages[0], chain.final
    result = {
        "socle": _subgroup_json(soc),
        "radical": _subgroup_json(rad),
        "socle_in_radical": soc.members <= rad.members,
        "is_generated": soc.order == target.order,
        "is_constructible": rad.order == target.order,
        "chain_length": chain.length,
    }
    lines = [
        f"hierarchy for {args.gen} acting on {args.target} (order {target.order}):",
        f"  socle order {soc.order}, radical order {rad.order}, "
        f"chain length {chain.length}",
        f"  generated={result['is_generated']} constructible={result['is_constructible']}",
    ]
    return result, lines, 0


def _cmd_factor(env, args):
    domain = _resolve_group(env, args.gen)
    codomain = _resolve_group(env, args.target)
    homs = enumerate_homs(domain, codomain)
    if not 0 <= args.hom < len(homs):
        raise ValueError(f"--hom {args.hom} out of range (found {len(homs)} homs)")
    hom = homs[args.hom]
    sub = factor_through_class(FactorizationQuery(hom, args.class_predicate))
    result = {
        "found": sub is not None,
        "class_predicate": args.class_predicate,
        "hom_gen_images": list(hom.gen_images),
        "subgroup": _subgroup_json(sub) if sub is not None else None,
    }
    if sub is None:
        lines = [f"no {args.class_predicate} subgroup of {args.target} contains the image"]
    else:
        lines = [f"hom #{args.hom} factors through a {args.class_predicate} subgroup "
                 f"of order {sub.order}"]
    return result, lines, 0


def _cmd_catalog(env, args):
    catalog = build_small_catalog(args.max_order)
    result = {
        "entries": [
            {"name": e.name, "order": e.group.order, "recipe": e.recipe}
            for e in catalog
        ],
    }
    lines = [f"# built-in catalog, max order {args.max_order}"]
    lines += [f"group {e.name} = {e.recipe}" for e in catalog]
    return result, lines, 0


def _cmd_verify(env, args):
    gens = _genspecs(env)
    catalog = _targets(env, args)
    rng = random.Random(args.seed)
    failures: list[dict] = []
    checks = 0

    def fail(check: str, gen_name: str, target_name: str, witness: str):
        failures.append({"check": check, "gen": gen_name, "target": target_name,
                         "witness": witness})

    chains = {}
    for gen_name, gen in gens:
        for entry in catalog:
            chain = radical(gen, entry.group)
            chains[(gen_name, entry.name)] = chain
            soc, rad = chain.stages[0], chain.final
            checks += 1
            if not soc.members <= rad.members:
                fail("socle-in-radical", gen_name, entry.name,
                     f"socle order {soc.order} not inside radical order {rad.order}")
            checks += 1
            if not (is_normal(entry.group, soc) and is_normal(entry.group, rad)):
                fail("normality", gen_name, entry.name, "stage not normal")
            checks += 1
            orders = chain.stage_orders()
            if any(b < 2 * a for a, b in zip(orders, orders[1:])):
                fail("chain-doubling", gen_name, entry.name, f"stage orders {orders}")
            checks += 1
            if chain.length - 1 > math.log2(max(entry.group.order, 1)):
                fail("chain-length", gen_name, entry.name, f"{chain.length} stages")
            checks += 1
            chk = verify_radical_property(gen, entry.group)
            if not chk.ok:
                fail("quotient-triviality", gen_name, entry.name,
                     f"hom with images {chk.offender.gen_images}")
            checks += 1
            if socle(gen, soc.as_group()).order != soc.order:
                fail("socle-idempotence", gen_name, entry.name,
                     f"socle order {soc.order}")
            checks += 1
            if radical(gen, rad.as_group()).final.order != rad.order:
                fail("radical-idempotence", gen_name, entry.name,
                     f"radical order {rad.order}")

    small = [e for e in catalog if e.group.order <= 12]
    pairs = [(a, b) for a in small for b in small]
    rng.shuffle(pairs)
    for src, dst in pairs[:args.sample]:
        homs = enumerate_homs(src.group, dst.group)
        for gen_name, gen in gens:
            s_src = chains[(gen_name, src.name)].stages[0]
            s_dst = chains[(gen_name, dst.name)].stages[0]
            t_src = chains[(gen_name, src.name)].final
            t_dst = chains[(gen_name, dst.name)].final
            checks += 1
            for hom in homs:
                if not {hom.full_map[x] for x in s_src.members} <= s_dst.members:
                    fail("socle-functoriality", gen_name,
                         f"{src.name}->{dst.name}", f"gen images {hom.gen_images}")
                    break
                if not {hom.full_map[x] for x in t_src.members} <= t_dst.members:
                    fail("radical-functoriality", gen_name,
                         f"{src.name}->{dst.name}", f"gen images {hom.gen_images}")
                    break

    result = {"checks": checks, "failures": failures, "passed": not failures}
    lines = [f"{checks} checks on {len(catalog)} groups x {len(gens)} generators: "
             + ("all passed" if not failures else f"{len(failures)} FAILURES")]
    for f in failures:
        lines.append(f"  FAILURE {f['check']} gen={f['gen']} target={f['target']}: {f['witness']}")
    return result, lines, 1 if failures else 0


_HANDLERS = {
    "socle": _cmd_socle,
    "radical": _cmd_radical,
    "homs": _cmd_homs,
    "iso": _cmd_iso,
    "classify": _cmd_classify,
    "hierarchy": _cmd_hierarchy,
    "factor": _cmd_factor,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}

_NEEDS_GEN = {"socle", "radical", "homs", "iso", "hierarchy", "factor"}
_NEEDS_TARGET = {"socle", "radical", "homs", "iso", "hierarchy", "factor"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cct",
        description="Socles, radicals and cellular generators for finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"cct {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"{name} command")
        p.add_argument("--spec", default=None, help="group-spec file defining names")
        p.add_argument("--gen", default=None, help="generator name (group or genspec)")
        p.add_argument("--target", default=None, help="target group name")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-order", dest="max_order", type=int,
                       default=12 if name == "verify" else 8,
                       help="bound for built-in catalogs")
        p.add_argument("--budget", type=int, default=None,
                       help="default coset budget for presentations")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled invariant checks")
        if name == "factor":
            p.add_argument("--class", dest="class_predicate", default="2-group",
                           help="named class predicate (e.g. 2-group, abelian)")
            p.add_argument("--hom", type=int, default=0,
                           help="index into the enumerated homomorphism list")
        if name == "verify":
            p.add_argument("--sample", type=int, default=25,
                           help="sampled target pairs for functoriality checks")
    return parser


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    start = time.perf_counter()
    try:
        env = parse_spec_file(args.spec, args.budget) if args.spec else {}
        if args.command in _NEEDS_GEN and not args.gen:
            raise ValueError(f"--gen is required for {args.command}")
        if args.command in _NEEDS_TARGET and not args.target:
            raise ValueError(f"--target is required for {args.command}")
        result, lines, code = _HANDLERS[args.command](env, args)
    except (ParseError, UndefinedName) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (BudgetExceeded, OrderBudgetExceeded) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except CctError as exc:
        print(f"error: {exc}", file=err)
        return 2
    elapsed = time.perf_counter() - start

    if args.format == "json":
        report = {
            "tool": "cct",
            "version": __version__,
            "command": args.command,
            "inputs": _inputs_echo(env, args),
            "result": result,
            "timing": {"seconds": round(elapsed, 6)},
        }
        print(json.dumps(report, indent=2, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return code


def _inputs_echo(env: dict, args) -> dict:
    orders = {}
    gen_factor_orders = None
    for attr in ("gen", "target"):
        name = getattr(args, attr, None)
        if name:
            try:
                obj = resolve_name(env, name)
            except UndefinedName:
                continue
            if isinstance(obj, GeneratorSpec):
                gen_factor_orders = [f.order for f in obj.factors]
                if len(obj.factors) == 1:
                    orders[name] = obj.factors[0].order
            else:
                orders[name] = obj.order
    return {
        "gen": args.gen,
        "target": args.target,
        "spec": args.spec,
        "seed": args.seed,
        "max_order": args.max_order,
        "budget": args.budget,
        "orders": orders,
        "gen_factor_orders": gen_factor_orders,
    }


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
