"""Command-line front end.

Three subcommands: `compute` evaluates the invariants of one group,
`enumerate` lists all groups below a rotation-order bound, and `verify`
runs the closed-form/brute-force comparison sweep.  Output is plain
text or JSON (`--json`); JSON is deterministic (stable key order and
invariant ordering) and round-trips through the reader in this module.

Exit codes: 0 success, 1 invalid parameters or arguments, 2 a
verification mismatch, 3 unsupported family.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engine import (
    DISC,
    LENS,
    NOT_COMPUTED,
    PROJECTIVE,
    SPHERE,
    THREE_SPHERE,
    EngineReport,
    SeifertData,
    BaseSignature,
    LocalInvariant,
    TopologyReport,
    evaluate,
    flip_orientation,
    normalize,
)
from .groups import (
    FamilySpec,
    FAMILY_ORDER,
    UnsupportedFamilyError,
    enumerate_specs,
    get_family,
    validate,
)
from . import verify as verify_mod

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_UNSUPPORTED = 3

_BASE_KIND_NAMES = {SPHERE: "Sphere", DISC: "Disc", PROJECTIVE: "ProjectivePlane"}
_BASE_KIND_FROM_NAME = {v: k for k, v in _BASE_KIND_NAMES.items()}
_TOP_KIND_NAMES = {THREE_SPHERE: "ThreeSphere", LENS: "LensSpace",
                   NOT_COMPUTED: "NotComputed"}
_TOP_KIND_FROM_NAME = {v: k for k, v in _TOP_KIND_NAMES.items()}


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------

def _sorted_invariants(seifert: SeifertData):
    return sorted(seifert.invariants,
                  key=lambda v: (v.location, v.den, v.normalized_num, v.num))


def report_to_dict(report: EngineReport, verification=None) -> dict:
    seifert = report.seifert
    doc = {
        "family": report.spec.family,
        "params": report.spec.params(),
        "base": {
            "kind": _BASE_KIND_NAMES[seifert.base.kind],
            "cones": sorted(seifert.base.cones),
            "corners": sorted(seifert.base.corners),
            "xi": seifert.xi,
        },
        "euler": {"num": seifert.euler.numerator,
                  "den": seifert.euler.denominator},
        "invariants": [
            {"num": v.num, "den": v.den, "normalizedNum": v.normalized_num,
             "index": v.index, "location": v.location}
            for v in _sorted_invariants(seifert)
        ],
        "underlying": {
            "kind": _TOP_KIND_NAMES[report.topology.underlying],
            "p": report.topology.p,
            "q": report.topology.q,
            "reason": report.topology.reason,
        },
        "singularComponents": sorted(report.topology.singular_components),
        "provenance": report.provenance,
    }
    if verification is not None:
        doc["verification"] = verification
    return doc


def report_from_dict(doc: dict) -> EngineReport:
    """Inverse of report_to_dict (used for the round-trip guarantee)."""
    params = {k: int(v) for k, v in doc["params"].items()}
    spec = FamilySpec(doc["family"], **params)
    base = BaseSignature(_BASE_KIND_FROM_NAME[doc["base"]["kind"]],
                         tuple(doc["base"]["cones"]),
                         tuple(doc["base"]["corners"]))
    invariants = tuple(LocalInvariant(v["num"], v["den"], v["location"])
                       for v in doc["invariants"])
    seifert = SeifertData(base, invariants,
                          Fraction(doc["euler"]["num"], doc["euler"]["den"]),
                          doc["base"]["xi"])
    topology = TopologyReport(_TOP_KIND_FROM_NAME[doc["underlying"]["kind"]],
                              doc["underlying"]["p"], doc["underlying"]["q"],
                              doc["underlying"]["reason"],
                              tuple(doc["singularComponents"]))
    return EngineReport(spec, seifert, topology, doc["provenance"])


def report_json(report: EngineReport, verification=None) -> str:
    return json.dumps(report_to_dict(report, verification),
                      indent=2, sort_keys=True)


def _print_text_report(report: EngineReport, notes, out):
    seifert = report.seifert
    spec = report.spec
    fam = get_family(spec.family)
    print(f"family {spec}   {fam.label}", file=out)
    print(f"  rotation group order: {fam.phi_order(spec)}", file=out)
    for note in notes:
        print(f"  note: {note}", file=out)
    print(f"  base orbifold: {seifert.base}", file=out)
    invs = ", ".join(
        f"{v} ({v.location}, index {v.index})"
        for v in _sorted_invariants(seifert))
    print(f"  local invariants: {invs if invs else 'none'}", file=out)
    if seifert.xi is not None:
        print(f"  boundary invariant xi: {seifert.xi}", file=out)
    print(f"  euler number: {seifert.euler}", file=out)
    print(f"  underlying space: {report.topology}", file=out)
    comps = ", ".join(str(c) for c in report.topology.singular_components)
    print(f"  singular components: {comps if comps else 'none'}", file=out)
    print(f"  provenance: {report.provenance}", file=out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="orbiseif",
        description="Seifert invariants of spherical 3-orbifold quotients")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="invariants of one group")
    comp.add_argument("--family", required=True)
    comp.add_argument("-m", type=int)
    comp.add_argument("-n", type=int)
    comp.add_argument("-r", type=int)
    comp.add_argument("-s", type=int)
    comp.add_argument("--json", action="store_true")
    comp.add_argument("--text", action="store_true")
    comp.add_argument("--normalized", action="store_true",
                      help="normalize the local invariants into [0, den)")
    comp.add_argument("--mirror", action="store_true",
                      help="report the data of the mirror fibration")
    comp.add_argument("--verify", action="store_true",
                      help="also run the brute-force recomputation")

    enum = sub.add_parser("enumerate", help="groups below an order bound")
    enum.add_argument("--max-order", type=int, required=True)
    enum.add_argument("--families", default=None,
                      help="comma list of ids or aliases (all, abelian, "
                           "dihedral, table4)")
    enum.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="closed form against brute force")
    ver.add_argument("--max-order", type=int, required=True)
    ver.add_argument("--families", default="all")
    ver.add_argument("--workers", type=int, default=None,
                     help="worker processes (ORBISEIF_WORKERS overrides "
                          "the default of 1)")
    ver.add_argument("--json", action="store_true")
    return parser


def _cmd_compute(args, out) -> int:
    try:
        fam = get_family(args.family)
    except UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if not fam.fibered:
        print(f"error: family {args.family} preserves no fibration; "
              "its quotients carry no induced Seifert data here",
              file=sys.stderr)
        return EXIT_UNSUPPORTED

    spec = FamilySpec(args.family, m=args.m, n=args.n, r=args.r, s=args.s)
    violations, notes = validate(spec)
    if violations:
        for v in violations:
            print(f"invalid: {v}", file=sys.stderr)
        return EXIT_INVALID

    report = evaluate(spec)
    if args.mirror:
        seifert = flip_orientation(report.seifert)
        report = EngineReport(report.spec, seifert, report.topology,
                              report.provenance + ", mirror orientation")
    if args.normalized:
        report = EngineReport(report.spec, normalize(report.seifert),
                              report.topology, report.provenance)

    verification = None
    exit_code = EXIT_OK
    if args.verify:
        result = verify_mod.compare_spec(spec)
        verification = {"ok": result.ok, "differences": result.differences}
        if not result.ok:
            exit_code = EXIT_MISMATCH

    if args.json:
        print(report_json(report, verification), file=out)
    else:
        _print_text_report(report, notes, out)
        if verification is not None:
            status = "agrees" if verification["ok"] else "DISAGREES"
            print(f"  oracle: {status}", file=out)
            for diff in verification["differences"]:
                print(f"    {diff}", file=out)
    return exit_code


def _cmd_enumerate(args, out) -> int:
    if args.max_order < 1:
        print("error: --max-order must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        families = (verify_mod.resolve_families(args.families.split(","))
                    if args.families else FAMILY_ORDER)
    except UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    rows = enumerate_specs(args.max_order, families)
    if args.json:
        doc = [{"family": row.spec.family, "params": row.spec.params(),
                "phiOrder": row.phi_order, "fibered": row.fibered}
               for row in rows]
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
        return EXIT_OK
    print(f"{'family':>8} {'parameters':<28} {'|Phi(G)|':>9}  fibered", file=out)
    for row in rows:
        params = ",".join(f"{k}={v}" for k, v in row.spec.params().items())
        print(f"{row.spec.family:>8} {params:<28} {row.phi_order:>9}  "
              f"{'yes' if row.fibered else 'no'}", file=out)
    print(f"total: {len(rows)} groups", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.max_order < 1:
        print("error: --max-order must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        families = verify_mod.resolve_families(args.families.split(","))
    except UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    families = [f for f in families if get_family(f).fibered]
    if not families:
        print("error: no fibered family selected", file=sys.stderr)
        return EXIT_INVALID
    workers = args.workers if args.workers else verify_mod.default_workers()
    specs = verify_mod.sweep_specs(args.max_order, families)
    results = verify_mod.run_sweep(specs, workers=workers)
    mismatches = [res for res in results if not res.ok]
    if args.json:
        doc = {"checked": len(results),
               "mismatches": [{"spec": str(res.spec),
                               "differences": res.differences}
                              for res in mismatches]}
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        for res in mismatches:
            print(f"MISMATCH {res.spec}", file=out)
            for diff in res.differences:
                print(f"  {diff}", file=out)
        print(f"checked {len(results)} groups with rotation order <= "
              f"{args.max_order}: "
              f"{'all agree' if not mismatches else f'{len(mismatches)} mismatches'}",
              file=out)
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    out = sys.stdout
    try:
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        return _cmd_verify(args, out)
    except BrokenPipeError:
        # output truncated by the consumer (e.g. piped through head)
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
