"""Command-line interface.

Subcommands: classify | dual | decompose | facets | oracle | sweep.
Specs are given as --n/--m block sizes plus --pairs "q:r,q:r,...".
Output is UTF-8 text, or canonical JSON with --json (sweep mode emits
one JSON object per spec, JSON lines).

Exit codes: 0 success / no mismatch, 1 invalid input, 2 mismatch found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import complexes, ideals, products, sweep
from .homology import HOMOLOGY_VERTEX_CAP
from .ideals import MixedProdError, VariableUniverse
from .sweep import SweepConfig


def _default_cap_vertices():
    return int(os.environ.get("MIXEDPROD_CAP_VERTICES", HOMOLOGY_VERTEX_CAP))


def parse_pairs(text):
    pairs = []
    for chunk in text.split(","):
        q, _, r = chunk.partition(":")
        try:
            pairs.append((int(q), int(r)))
        except ValueError:
            raise ideals.InvalidInput(f"cannot parse summand {chunk!r}; expected q:r")
    return pairs


def _spec_from_args(args):
    universe = VariableUniverse(args.n, args.m)
    return products.normalize(universe, parse_pairs(args.pairs))


def _names(universe, vs):
    return [universe.var_name(i) for i in sorted(vs)]


def _jsonable(obj, universe):
    if isinstance(obj, frozenset):
        return _names(universe, obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x, universe) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v, universe) for k, v in obj.items()}
    return obj


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return payload


def cmd_classify(args):
    spec = _spec_from_args(args)
    universe = spec.universe
    oracle = {}
    if args.oracle != "none":
        record = sweep.check_spec(spec, args.oracle, cap_vertices=args.cap_vertices,
                                  cap_facets=args.cap_facets)
        oracle = record["oracle"]
        mismatched = bool(record["mismatches"])
    else:
        mismatched = False
    report = products.classify(spec, oracle or None)
    payload = {
        "spec": sweep.spec_as_dict(spec),
        "profile": sweep.profile_as_dict(report.profile),
        "verdicts": {
            "unmixed": report.unmixed.holds,
            "cohen_macaulay": report.cohen_macaulay.holds,
            "sequentially_cm": report.sequentially_cm.holds,
        },
        "witnesses": {
            "unmixed": _jsonable(report.unmixed.witness, universe),
            "cohen_macaulay": _jsonable(report.cohen_macaulay.witness, universe),
            "sequentially_cm": _jsonable(report.sequentially_cm.witness, universe),
        },
        "oracle": oracle or None,
        "timing": round(time.monotonic() - args.t0, 3) if args.timing else None,
    }
    if args.json:
        _emit(payload, True)
    else:
        p = report.profile
        print(f"spec: n={universe.n} m={universe.m} "
              + " + ".join(f"I{q}J{r}" for q, r in spec.summands))
        print(f"profile: s'={p.s_prime} q_bar={list(p.q_bar)} r_bar={list(p.r_bar)} "
              f"sigma={list(p.sigma)} height={p.height} dim={p.dim_ring}")
        for name, verdict in [("unmixed", report.unmixed),
                              ("cohen_macaulay", report.cohen_macaulay),
                              ("sequentially_cm", report.sequentially_cm)]:
            line = f"{name}: {str(verdict.holds).lower()}"
            if verdict.witness is not None:
                line += f"  (witness: {verdict.witness})"
            print(line)
        for name, ok in sorted(oracle.items()):
            print(f"oracle {name}: {str(ok).lower()}")
    return 2 if mismatched else 0


def cmd_dual(args):
    spec = _spec_from_args(args)
    dual = products.closed_form_dual(spec)
    payload = {"spec": sweep.spec_as_dict(spec), "dual": sweep.spec_as_dict(dual)}
    if args.expand:
        gens = products.expand_generators(dual).sorted_generators()
        payload["generators"] = [_names(spec.universe, g) for g in gens]
    if args.json:
        _emit(payload, True)
    else:
        print("dual: " + " + ".join(f"I{q}J{r}" for q, r in dual.summands))
        if args.expand:
            print("generators: " + ", ".join("*".join(g) for g in payload["generators"]))
    return 0


def cmd_decompose(args):
    spec = _spec_from_args(args)
    universe = spec.universe
    decomp = products.closed_form_primary_decomposition(spec)
    h = products.qr_profile(spec).height
    payload = {
        "spec": sweep.spec_as_dict(spec),
        "height": h,
        "px": [_names(universe, c) for c in decomp.px],
        "pxy": [_names(universe, c) for c in decomp.pxy],
        "py": [_names(universe, c) for c in decomp.py],
    }
    if args.json:
        _emit(payload, True)
    else:
        for label in ("px", "pxy", "py"):
            comps = payload[label]
            print(f"{label} ({len(comps)} components): "
                  + "; ".join("(" + ",".join(c) + ")" for c in comps))
        print(f"height: {h}")
    return 0


def cmd_facets(args):
    spec = _spec_from_args(args)
    universe = spec.universe
    blocks = products.facet_partition(spec, args.cap_vertices)
    payload = {
        "spec": sweep.spec_as_dict(spec),
        "blocks": [[_names(universe, f) for f in b] for b in blocks],
    }
    if args.json:
        _emit(payload, True)
    else:
        for k, b in enumerate(payload["blocks"], 1):
            print(f"block {k} ({len(b)} facets): "
                  + " ".join("{" + ",".join(f) + "}" for f in b))
    return 0


def cmd_oracle(args):
    spec = _spec_from_args(args)
    record = sweep.check_spec(spec, "full", cap_vertices=args.cap_vertices,
                              cap_facets=args.cap_facets)
    if args.json:
        _emit(record, True)
    else:
        for name, ok in sorted(record["oracle"].items()):
            print(f"{name}: {str(ok).lower()}")
        if record["mismatches"]:
            print(f"MISMATCHES: {len(record['mismatches'])}")
        else:
            print("all oracles agree with the closed forms")
    return 2 if record["mismatches"] else 0


def cmd_sweep(args):
    config = SweepConfig(max_n=args.max_n, max_m=args.max_m, max_s=args.max_s,
                         oracle_level=args.oracle, workers=args.workers,
                         perturb=args.perturb, cap_vertices=args.cap_vertices,
                         cap_facets=args.cap_facets)
    out = open(args.out, "w") if args.out else None
    sink = None
    if out is not None or args.json:
        stream = out if out is not None else sys.stdout

        def sink(record):
            stream.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")

    result = sweep.run_sweep(config, record_sink=sink)
    if out is not None:
        out.close()
    summary = (f"checked {result.configs_checked} specs, "
               f"{len(result.mismatches)} mismatches, "
               f"{len(result.skipped)} skipped, {result.elapsed:.1f}s")
    print(summary, file=sys.stderr if args.json else sys.stdout)
    if not args.json:
        for mm in result.mismatches:
            print(f"MISMATCH {mm['check']}: spec={mm['spec']} "
                  f"closed={mm['closed_form']} oracle={mm['oracle']} witness={mm['witness']}")
    return 2 if result.mismatches else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mixedprod",
        description="Mixed product ideals: classification, duality, decomposition, oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p):
        p.add_argument("--n", type=int, required=True, help="number of x-variables")
        p.add_argument("--m", type=int, required=True, help="number of y-variables")
        p.add_argument("--pairs", required=True, help="summands as q:r,q:r,...")
        p.add_argument("--json", action="store_true")
        p.add_argument("--cap-vertices", type=int, default=_default_cap_vertices(),
                       dest="cap_vertices")
        p.add_argument("--cap-facets", type=int, default=complexes.SHELLING_FACET_CAP,
                       dest="cap_facets")

    p = sub.add_parser("classify", help="closed-form verdicts, optionally cross-checked")
    spec_args(p)
    p.add_argument("--oracle", choices=sweep.ORACLE_LEVELS, default="none")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dual", help="closed-form Alexander dual")
    spec_args(p)
    p.add_argument("--expand", action="store_true", help="also print the dual's generators")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("decompose", help="closed-form primary decomposition")
    spec_args(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("facets", help="facet partition of the Stanley-Reisner complex")
    spec_args(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("oracle", help="run every oracle cross-check on one spec")
    spec_args(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="exhaustive closed-form vs oracle verification")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--max-m", type=int, default=4, dest="max_m")
    p.add_argument("--max-s", type=int, default=3, dest="max_s")
    p.add_argument("--oracle", choices=sweep.ORACLE_LEVELS, default="fast")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--perturb", action="store_true",
                   help="flip one closed-form condition (harness self-test)")
    p.add_argument("--json", action="store_true", help="JSON-lines records on stdout")
    p.add_argument("--out", help="write JSON-lines records to this file")
    p.add_argument("--cap-vertices", type=int, default=_default_cap_vertices(),
                   dest="cap_vertices")
    p.add_argument("--cap-facets", type=int, default=complexes.SHELLING_FACET_CAP,
                   dest="cap_facets")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.t0 = time.monotonic()
    try:
        return args.func(args)
    except MixedProdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
