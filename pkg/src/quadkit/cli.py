"""Command-line interface: classify, verify-identities, prove, generate,
render-svg.

Exit codes: 0 success (and no FAILED certificate), 1 input error, 2 at least
one certificate FAILED.  All JSON output is key-sorted; rationals are printed
as "p/q" strings, never floats, so same seed + same command means
byte-identical output for the deterministic commands.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import conditions
from .certificates import CLAIMS, FAILED, run_certificates
from .conditions import (CONDITION_NAMES, IDENTITY_NAMES, eval_condition,
                         verify_identity)
from .geometry import (GeometryError, cayley_menger, classify_hull,
                       config_from_obj, config_svg, config_to_obj, gen_cyclic,
                       gen_folded, gen_reflected, gen_tilted_kite,
                       sextuple_from_obj, sextuple_to_obj)


class CliError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are input errors (exit 1)
        raise CliError(message)


def _read_input(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON input: {exc}") from exc


def _load_config_or_sextuple(obj):
    if isinstance(obj, dict) and all(k in obj for k in "ABCD"):
        cfg = config_from_obj(obj)
        if not cfg.distinct():
            raise CliError("coincident points in configuration")
        return cfg, cfg.sextuple()
    if isinstance(obj, dict) and all(
            k in obj for k in ("qa", "qb", "qc", "qd", "qe", "qf")):
        return None, sextuple_from_obj(obj)
    raise CliError("input must contain vertices A..D or squared "
                   "distances qa..qf")


def _condition_rows(d) -> list[dict]:
    rows = []
    for name in CONDITION_NAMES:
        value = eval_condition(name, d)
        rows.append({"condition": name, "value": str(value),
                     "sign": value.sign()})
    return rows


def _verdicts(rows: list[dict], planar: bool) -> list[str]:
    sign = {r["condition"]: r["sign"] for r in rows}
    if not planar:
        return ["not planar (CM != 0): planar verdicts not applicable"]
    out = []
    if sign["P"] == 0:
        out.append("cyclic (concyclic or collinear), convex")
    if sign["R"] == 0 and sign["P"] > 0:
        out.append("supplementary angles CDA + CBA = pi, non-cyclic")
    if sign["R_T"] == 0:
        out.append("tilted kite (equal angles BAD and BCD)")
    if sign["Q_T"] == 0 and sign["P"] != 0:
        out.append("cyclic with diagonals a and c (ACBD-type order)")
    if sign["P_T"] == 0 and sign["P"] != 0:
        out.append("cyclic with diagonals b and d (ACDB-type order)")
    if not out:
        out.append("no special condition vanishes")
    return out


def cmd_classify(args) -> int:
    conditions.run_self_check()
    obj = _read_input(args.input)
    cfg, d = _load_config_or_sextuple(obj)
    cm = cayley_menger(d)
    rows = _condition_rows(d)
    report = {
        "cm": str(cm),
        "conditions": rows,
        "verdicts": _verdicts(rows, planar=(cm == 0)),
    }
    if cfg is not None:
        hull = classify_hull(cfg)
        report["hull"] = {"kind": hull.kind, "boundary": hull.boundary,
                          "interior": hull.interior, "triple": hull.triple,
                          "text": str(hull)}
        report["input"] = config_to_obj(cfg)
    else:
        report["input"] = sextuple_to_obj(d)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        if cfg is not None:
            print(f"hull: {report['hull']['text']}")
        print(f"CM = {report['cm']}")
        sgn = {1: "> 0", 0: "= 0", -1: "< 0"}
        for r in rows:
            print(f"  {r['condition']:<4} {sgn[r['sign']]:<4} "
                  f"(value {r['value']})")
        for v in report["verdicts"]:
            print(f"verdict: {v}")
    return 0


def cmd_verify_identities(args) -> int:
    conditions.run_self_check()
    results = {name: verify_identity(name) for name in IDENTITY_NAMES}
    n_ok = sum(results.values())
    if args.format == "json":
        print(json.dumps({"identities": results,
                          "passed": n_ok, "total": len(results)},
                         sort_keys=True))
    else:
        for name, ok in results.items():
            print(f"{name:<6} {'PASS' if ok else 'FAIL'}")
        print(f"{n_ok}/{len(results)} identities expand to zero")
    return 0 if n_ok == len(results) else 2


def cmd_prove(args) -> int:
    conditions.run_self_check()
    claims = args.claims
    if not claims or claims == ["all"]:
        claims = None
    else:
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            raise CliError(f"unknown claim(s): {', '.join(unknown)}; "
                           f"known: {', '.join(CLAIMS)}")
    certs = run_certificates(claims, seed=args.seed, timeout=args.timeout,
                             jobs=args.jobs, samples=args.samples)
    if args.format == "json":
        print(json.dumps([c.to_obj() for c in certs], sort_keys=True))
    else:
        width = max(len(c.claim) for c in certs)
        for c in certs:
            print(f"{c.claim:<{width}}  {c.status:<10} {c.elapsed_ms:>7} ms")
            for note in c.notes:
                print(f"{'':<{width}}  note: {note}")
        n_failed = sum(1 for c in certs if c.status == FAILED)
        print(f"{len(certs)} certificates, {n_failed} failed")
    return 2 if any(c.status == FAILED for c in certs) else 0


_FAMILIES = ("cyclic", "tilted_kite", "folded", "reflected")


def cmd_generate(args) -> int:
    conditions.run_self_check()
    if args.count < 1:
        raise CliError("--count must be >= 1")
    import random
    rng = random.Random(args.seed)
    for i in range(args.count):
        if args.family == "cyclic":
            cfg = gen_cyclic(rng, args.order)
        elif args.family == "tilted_kite":
            cfg = gen_tilted_kite(rng, convex=not args.concave)
        elif args.family == "folded":
            cfg = gen_folded(rng)
        else:
            cfg = gen_reflected(rng)
        d = cfg.sextuple()
        hull = classify_hull(cfg)
        signs = {name: eval_condition(name, d).sign()
                 for name in CONDITION_NAMES}
        rows = [{"condition": k, "sign": v} for k, v in signs.items()]
        record = {
            "family": args.family,
            "index": i,
            "config": config_to_obj(cfg),
            "squared_distances": sextuple_to_obj(d),
            "hull": {"kind": hull.kind, "boundary": hull.boundary,
                     "interior": hull.interior, "triple": hull.triple},
            "condition_signs": rows,
            "verdicts": _verdicts(
                [{"condition": k, "sign": v} for k, v in signs.items()],
                planar=True),
        }
        print(json.dumps(record, sort_keys=True))
    return 0


def cmd_render_svg(args) -> int:
    obj = _read_input(args.input)
    cfg, _ = _load_config_or_sextuple(obj)
    if cfg is None:
        raise CliError("render-svg needs vertex coordinates, not a sextuple")
    print(config_svg(cfg))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="quadkit",
        description="Exact toolkit for cyclic quadrilaterals, tilted kites "
                    "and their polynomial conditions")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="hull + condition signs + verdicts")
    c.add_argument("input", help="config JSON path, or - for stdin")
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.set_defaults(fn=cmd_classify)

    v = sub.add_parser("verify-identities",
                       help="expand the eleven polynomial identities")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.set_defaults(fn=cmd_verify_identities)

    pr = sub.add_parser("prove", help="run machine certificates")
    pr.add_argument("claims", nargs="*",
                    help=f"claim names (default: all). Known: {', '.join(CLAIMS)}")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--timeout", type=float, default=600.0,
                    help="budget per Groebner run, seconds (default 600)")
    pr.add_argument("--jobs", type=int, default=1,
                    help="run certificates in N parallel processes")
    pr.add_argument("--samples", type=int, default=None,
                    help="override sampling-tier sizes")
    pr.add_argument("--format", choices=("json", "text"), default="text")
    pr.set_defaults(fn=cmd_prove)

    g = sub.add_parser("generate", help="emit configuration families as JSONL")
    g.add_argument("family", choices=_FAMILIES)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--order", default="ABCD",
                   help="cyclic order for the cyclic family")
    g.add_argument("--concave", action="store_true",
                   help="tilted_kite family: request concave instances")
    g.add_argument("--format", choices=("json",), default="json")
    g.set_defaults(fn=cmd_generate)

    r = sub.add_parser("render-svg", help="draw a configuration as SVG")
    r.add_argument("input", help="config JSON path, or - for stdin")
    r.set_defaults(fn=cmd_render_svg)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
