"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad monoid file, not a submonoid, ...),
2 usage error, 3 internal invariant violation.  Errors are also written to
stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from .classify import classify_submonoid
from .corpus import example_corpus
from .errors import DomainError, InvalidMonoid, InvariantViolation, NotASubmonoid, RoutesDisagree
from .formats import condition_report, load_monoid, parse_subset, relation_to_json
from .generated import generated, minimal_relation_oracle
from .monoid import enumerate_submonoids, is_dedekind_finite, require_submonoid
from .relations import RelationKind, is_compatible, zero_class
from .syntactic import (
    condition_c,
    condition_p,
    condition_r,
    syntactic_congruence,
    syntactic_preorder,
    syntactic_reflexive,
)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _submonoid(A, spec):
    try:
        M = parse_subset(A, spec)
    except KeyError as exc:
        raise NotASubmonoid(str(exc.args[0])) from None
    return require_submonoid(A, M)


def cmd_validate(args):
    A = load_monoid(args.file)
    if args.json:
        print(_dump({"valid": True, "order": A.size, "identity": A.names[A.identity],
                     "dedekindFinite": bool(is_dedekind_finite(A))}))
    else:
        print(f"valid monoid of order {A.size} (identity {A.names[A.identity]})")


def cmd_submonoids(args):
    A = load_monoid(args.file)
    subs = [A.show_set(M) for M in enumerate_submonoids(A)]
    if args.json:
        print(_dump({"submonoids": subs}))
    else:
        for s in subs:
            print("{" + ",".join(s) + "}")


def cmd_classify(args):
    A = load_monoid(args.file)
    M = _submonoid(A, args.submonoid)
    report = classify_submonoid(A, M, monoid_id=args.file)
    if args.json:
        print(_dump(report.as_dict()))
        return
    print(f"M = {{{','.join(A.show_set(M))}}}")
    for label, value in [("clot", report.is_clot), ("positive cone", report.is_positive_cone),
                         ("normal", report.is_normal), ("kernel (F)", report.is_kernel_f),
                         ("right normal", report.is_right_normal),
                         ("ambient Dedekind finite", report.is_dedekind_finite_ambient)]:
        print(f"  {label:<24} {'yes' if value else 'no'}")
    for w in report.witnesses:
        print(f"  witness {w.kind}: ({', '.join(w.elements)})")


_SYNTACTIC = {
    "cong": (syntactic_congruence, "C", condition_c),
    "preord": (syntactic_preorder, "P", condition_p),
    "refl": (None, "R", condition_r),
}


def cmd_syntactic(args):
    A = load_monoid(args.file)
    M = _submonoid(A, args.submonoid)
    build, cond_name, cond = _SYNTACTIC[args.kind]
    if build is None:
        R = syntactic_reflexive(A, M).relation
    else:
        R = build(A, M)
    out = {
        "kind": args.kind,
        "submonoid": A.show_set(M),
        "pairs": relation_to_json(R),
        "zeroClass": A.show_set(zero_class(R)),
        "compatible": is_compatible(R).holds,
        "report": condition_report(A, cond_name, cond(A, M)),
    }
    _print_relation(out, args.json)


def cmd_generate(args):
    A = load_monoid(args.file)
    M = _submonoid(A, args.submonoid)
    kind = RelationKind.parse(args.kind)
    R = minimal_relation_oracle(A, M, kind) if args.oracle else generated(A, M, kind)
    out = {
        "kind": kind.value,
        "submonoid": A.show_set(M),
        "pairs": relation_to_json(R),
        "zeroClass": A.show_set(zero_class(R)),
        "oracle": bool(args.oracle),
    }
    _print_relation(out, args.json)


def _print_relation(out, as_json):
    if as_json:
        print(_dump(out))
        return
    for a, b in out["pairs"]:
        print(f"{a} {b}")
    print("zero-class: {" + ",".join(out["zeroClass"]) + "}")
    if "report" in out:
        rep = out["report"]
        tail = "" if rep["holds"] else f" witness ({', '.join(rep['witness'])})"
        print(f"condition {rep['condition']}: {'holds' if rep['holds'] else 'fails'}{tail}")


def cmd_census(args):
    if args.all:
        if args.order is None:
            raise SystemExit(_usage("census --all requires --order N"))
        monoids = list(census_mod.all_monoids(args.order))
    elif args.file:
        monoids = [load_monoid(args.file)]
    else:
        raise SystemExit(_usage("census needs FILE or --all --order N"))
    results = census_mod.run_census(monoids, args.jsonl)
    totals = sum((c.counts for c in results), census_mod.Counter())
    summary = {"monoids": len(results), "totals": dict(sorted(totals.items()))}
    if args.all:
        summary["strictInclusions"] = census_mod.strict_inclusion_witnesses(args.order)
    if args.json:
        print(_dump(summary))
        return
    print(f"{'key':<18}{'order':>6}{'subs':>6}{'clots':>7}{'cones':>7}{'normal':>8}{'rnormal':>9}")
    for c in results:
        k = c.counts
        print(f"{census_mod.monoid_key(c.monoid):<18}{c.monoid.size:>6}{k['submonoids']:>6}{k['clots']:>7}"
              f"{k['cones']:>7}{k['normal']:>8}{k['rightNormal']:>9}")
    print(f"total: {summary['totals']}")
    if args.all:
        for label, w in summary["strictInclusions"].items():
            if label != "maxOrder":
                print(f"{label}: {w if w else 'none up to order ' + str(args.order)}")


def cmd_examples(args):
    results = example_corpus(bound=args.bound)
    if args.json:
        print(_dump({"examples": [r.as_dict() for r in results],
                     "passed": all(r.passed for r in results)}))
    else:
        for r in results:
            print(f"{r.key}  {'PASS' if r.passed else 'FAIL'}  {r.title}")
            for name, ok in r.checks.items():
                if not ok:
                    print(f"     failed: {name}")
    if not all(r.passed for r in results):
        failing = [r.key for r in results if not r.passed]
        _error("CorpusMismatch", f"failing examples: {', '.join(failing)}")
        return 3
    return 0


def _usage(message):
    _error("UsageError", message)
    return 2


def _error(kind, message, **extra):
    print(json.dumps({"error": kind, "message": message, **extra}, sort_keys=True), file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normalmono", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a monoid file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("submonoids", help="list all submonoids")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_submonoids)

    p = sub.add_parser("classify", help="clot / positive cone / normal classification")
    p.add_argument("file")
    p.add_argument("--submonoid", required=True, help="comma-separated element names")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("syntactic", help="syntactic relation of a submonoid")
    p.add_argument("file")
    p.add_argument("--submonoid", required=True)
    p.add_argument("--kind", choices=["cong", "preord", "refl"], default="cong")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_syntactic)

    p = sub.add_parser("generate", help="smallest internal relation whose zero-class contains M")
    p.add_argument("file")
    p.add_argument("--submonoid", required=True)
    p.add_argument("--kind", choices=["refl", "preord", "eq"], default="refl")
    p.add_argument("--oracle", action="store_true", help="use the exhaustive intersection oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", help="classify every submonoid of one or all small monoids")
    p.add_argument("file", nargs="?")
    p.add_argument("--all", action="store_true", help="all monoids up to isomorphism")
    p.add_argument("--order", type=int, help="with --all: every order from 1 to N")
    p.add_argument("--jsonl", help="append per-monoid detail lines to this file (resumable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("examples", help="rerun the worked example corpus")
    p.add_argument("--bound", type=int, help="override the search bound of the bounded scans")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except InvalidMonoid as exc:
        _error(type(exc).__name__, str(exc), violations=[str(v) for v in exc.violations])
        return 1
    except (DomainError, OSError, KeyError) as exc:
        _error(type(exc).__name__, str(exc))
        return 1
    except RoutesDisagree as exc:
        _error("RoutesDisagree", str(exc), evidence=json.loads(json.dumps(exc.evidence, default=str)))
        return 3
    except InvariantViolation as exc:
        _error(type(exc).__name__, str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
