"""Command line entry point.

Exit codes: 0 success, 1 a checked property failed, 2 bad input.
"""

import argparse
import json
import sys
import time

from .decide import pointwise_localization
from .documents import (SCHEMA, analysis_report, dumps, ideal_to_json, load_document,
                        module_from_json, parse_ring, render_analysis)
from .errors import FlatcheckError, InputError
from .ideals import nilradical
from .rings import decode_element, encode_element, ring_descriptor
from .seqring import example1_certificate
from .suites import SUITES, SuiteConfig, run_suite


def _emit(doc, fmt, text):
    print(dumps(doc) if fmt == "json" else text(doc))


def cmd_analyze(args):
    start = time.perf_counter()
    ring = parse_ring(args.ring) if args.ring else None
    module = module_from_json(load_document(args.module, "module"), ring)
    report = analysis_report(module, args.max_exterior)
    if args.timing:
        report["elapsed_seconds"] = time.perf_counter() - start
    _emit(report, args.format, render_analysis)
    return 0


def _render_suite(doc):
    lines = [f"suite {doc['suite']}: {doc['status']} ({doc['instances']} instances"
             + (f", {doc['skipped']} skipped" if doc["skipped"] else "") + ")"]
    if doc["failure"] is not None:
        lines.append("first failing instance: " + json.dumps(doc["failure"], sort_keys=True))
    return "\n".join(lines)


def cmd_check(args):
    doc = load_document(args.config, "config") if args.config else {}
    cfg = SuiteConfig.from_json(doc, args.suite)
    result = run_suite(cfg, corrupt_oracle=args.inject_fault)
    _emit(result.to_json(), args.format, _render_suite)
    return 0 if result.passed else 1


def _render_certificate(doc):
    refs = doc["refutations"]
    too_small = sum(r["reason"] == "TooSmall" for r in refs)
    return "\n".join([
        f"base: {json.dumps(doc['base'])} ({doc['adaptation']})",
        f"flat witnesses verified: {len(doc['flat_samples'])}",
        f"idempotent candidates refuted: {len(refs)} "
        f"({len(refs) - too_small} not in I, {too_small} too small)",
        f"status: {doc['status']}",
    ])


def cmd_example1(args):
    base = parse_ring(args.base)
    if not base.is_finite:
        raise InputError(f"{base} is not a finite ring", "base")
    if args.samples < 1:
        raise InputError("samples must be >= 1", "samples")
    cert = example1_certificate(base, args.samples, args.seed)
    _emit(cert.to_json(), args.format, _render_certificate)
    return 0 if cert.valid else 1


def _render_pointwise(doc):
    inv = ", ".join(f"x_{json.dumps(e['s'])} = {json.dumps(e['x'])}" for e in doc["inverses"])
    return "\n".join([
        f"ring: {json.dumps(doc['ring'])}",
        f"S: {json.dumps(doc['subset'])}",
        f"kernel of eta: {json.dumps(doc['kernel'])}",
        f"result: {json.dumps(doc['result'])} ({doc['result_size']} elements)",
        f"inverses: {inv}",
        f"defining relations hold: {doc['relations_hold']}",
        f"kernel inside nilradical: {doc['kernel_in_nilradical']}",
    ])


def cmd_pointwise(args):
    ring = parse_ring(args.ring)
    if not ring.is_finite:
        raise InputError("pointwise localization needs a finite ring", "ring")
    subset_doc = load_document(args.subset, "subset")
    if not isinstance(subset_doc, list):
        raise InputError("subset must be a JSON list of elements", "subset")
    subset = [decode_element(ring, s, "subset") for s in subset_doc]
    loc = pointwise_localization(ring, subset)
    res = loc.result
    relations = all(
        loc.eta(s) == res.mul(res.mul(loc.eta(s), loc.eta(s)), loc.inverses[s])
        and loc.inverses[s] == res.mul(loc.eta(s), res.mul(loc.inverses[s], loc.inverses[s]))
        for s in loc.subset)
    in_nil = loc.kernel <= nilradical(ring)
    doc = {
        "schema": SCHEMA,
        "ring": ring_descriptor(ring),
        "subset": [encode_element(ring, s) for s in loc.subset],
        "result": ring_descriptor(res),
        "result_size": res.size,
        "kernel": ideal_to_json(loc.kernel),
        "eta": [[encode_element(ring, x), encode_element(res, loc.eta(x))] for x in ring.elements],
        "inverses": [{"s": encode_element(ring, s), "x": encode_element(res, loc.inverses[s])}
                     for s in loc.subset],
        "relations_hold": relations,
        "kernel_in_nilradical": in_nil,
    }
    _emit(doc, args.format, _render_pointwise)
    return 0 if relations and in_nil else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="flatcheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full flatness/projectivity report for one module")
    p.add_argument("--ring", help="ring descriptor: JSON file, inline JSON or e.g. zmod6")
    p.add_argument("--module", required=True, help="module document: JSON file or inline JSON")
    p.add_argument("--max-exterior", type=int, default=None, help="highest invariant factor to report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="add elapsed time to the report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="run a property suite over the ring family")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--config", help="suite configuration: JSON file or inline JSON")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--inject-fault", action="store_true",
                   help="test mode: th4 runs with an oracle that calls every module flat")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("example1", help="certificate for the flat, non-projective R/I")
    p.add_argument("--base", required=True, help="finite base ring: JSON or e.g. zmod2")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_example1)

    p = sub.add_parser("pointwise", help="pointwise localization of a finite ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--subset", required=True, help="JSON list of ring elements")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_pointwise)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"flatcheck: error: {exc}", file=sys.stderr)
        return 2
    except FlatcheckError as exc:
        print(f"flatcheck: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
