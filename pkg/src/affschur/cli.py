"""Command-line surface: dmap, verify, dims, enum.

Exit codes: 0 success, 1 a verification check failed, 2 malformed input
(bad JSON, schema violation, unparseable scalar), 3 domain violation
(segment length beyond the window, size mismatch, non-dominant tuple),
4 resource bound breach.

Output is deterministic: the default stdout rendering is a fixed human
summary, --json switches stdout to canonical JSON (sorted keys, compact
separators), and --out writes the same canonical JSON to a file.  The
same configuration always produces byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

import jsonschema

from .combinatorics import Multisegment, compositions, multisegments_over, partitions
from .drinfeld import DominantTuple, g_projection, pa, pa_inverse
from .errors import DomainError, ResourceLimitError
from .scalar import QV, RationalScalars, scalar_text
from .schur_functor import pseudo_hw_report, schur_image
from .suites import SUITE_NAMES, default_grid, run_suite, weights_to_json

__all__ = ["main"]


class InputError(Exception):
    """Malformed input: bad JSON, schema violation, or a scalar that
    does not parse in the selected field."""


def load_schema(name: str) -> dict:
    path = resources.files("affschur.schemas").joinpath(name)
    return json.loads(path.read_text())


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %s: %s" % (path, exc)) from exc


def _validate(payload, schema_name: str):
    try:
        jsonschema.validate(payload, load_schema(schema_name))
    except jsonschema.ValidationError as exc:
        raise InputError(
            "input does not match %s: %s" % (schema_name, exc.message)
        ) from exc


def _scalar_context(args):
    if args.v_rational is None:
        return QV
    try:
        value = Fraction(args.v_rational)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(
            "--v-rational expects p/q, got %r" % (args.v_rational,)
        ) from exc
    try:
        return RationalScalars(value)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_multisegment(obj, K) -> Multisegment:
    try:
        return Multisegment.from_json(obj, K)
    except (ValueError, ArithmeticError) as exc:
        raise InputError("bad multisegment: %s" % (exc,)) from exc


def _parse_tuple(obj, K) -> DominantTuple:
    if len(obj["roots"]) != obj["n"]:
        raise DomainError("root list count disagrees with n")
    try:
        return DominantTuple.from_json(obj, K)
    except DomainError:
        raise
    except (ValueError, ArithmeticError) as exc:
        raise InputError("bad tuple: %s" % (exc,)) from exc


def _parse_window(text: str):
    if text is None:
        return None
    lo, sep, hi = text.partition(":")
    if not sep:
        raise InputError("--window expects LO:HI, got %r" % (text,))
    try:
        bounds = (int(lo), int(hi))
    except ValueError as exc:
        raise InputError("--window expects integers, got %r" % (text,)) from exc
    if bounds[0] > bounds[1]:
        raise InputError("--window bounds out of order: %r" % (text,))
    return bounds


def _load_grid(args, K):
    if args.grid is None:
        return None
    payload = _read_json(args.grid)
    _validate(payload, "grid.schema.json")
    try:
        return [K.parse(text) for text in payload["centers"]]
    except (ValueError, ArithmeticError) as exc:
        raise InputError("bad grid center: %s" % (exc,)) from exc


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(payload, args, human_lines):
    text = _canonical(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for line in human_lines:
            print(line)


def cmd_dmap(args) -> int:
    K = _scalar_context(args)
    payload = _read_json(args.input)
    _validate(payload, "dmap_input.schema.json")
    n, r = args.n, args.r
    if "multisegment" in payload:
        s = _parse_multisegment(payload["multisegment"], K)
        Q = pa(n, r, s, K)
        round_trip = pa_inverse(n, r, Q) == s
        direction = "map"
    else:
        Q = _parse_tuple(payload["tuple"], K)
        s = pa_inverse(n, r, Q)
        round_trip = pa(n, r, s, K) == Q
        direction = "inverse"
    out = {
        "direction": direction,
        "n": n,
        "r": r,
        "multisegment": s.to_json(),
        "tuple": Q.to_json(),
        "round_trip": round_trip,
    }
    human = [
        "direction: %s" % direction,
        "multisegment: %s" % json.dumps(s.to_json(), sort_keys=True),
        "tuple roots: %s" % json.dumps(Q.to_json()["roots"]),
        "round trip: %s" % ("ok" if round_trip else "FAILED"),
    ]
    _emit(out, args, human)
    return 0 if round_trip else 1


def cmd_dims(args) -> int:
    K = _scalar_context(args)
    payload = _read_json(args.input)
    _validate(payload, "dims_input.schema.json")
    s = _parse_multisegment(payload["multisegment"], K)
    if s.r != args.r:
        raise DomainError(
            "multisegment size %d, expected %d" % (s.r, args.r)
        )
    n = args.n
    W = schur_image(n, s, K)
    out = {
        "n": n,
        "r": args.r,
        "multisegment": s.to_json(),
        "dimension": W.dimension,
        "weights": weights_to_json(W.weight_report()),
    }
    human = [
        "dimension: %d" % W.dimension,
        "weights: %s" % json.dumps(out["weights"]),
    ]
    ok = True
    if W.dimension > 0:
        report = pseudo_hw_report(W, s, args.tmax)
        out["hw_weight"] = list(report.weight)
        out["hw_dim"] = report.hw_dim
        out["central_series"] = [scalar_text(c) for c in report.series]
        out["expected_product"] = [scalar_text(c) for c in report.expected]
        out["match"] = report.match
        ok = report.match and report.hw_dim == 1
        human.append(
            "hw weight %s, hw dim %d" % (out["hw_weight"], report.hw_dim)
        )
        human.append(
            "central character vs product: %s"
            % ("match" if report.match else "MISMATCH")
        )
    if args.N is not None and args.N > n:
        projected = g_projection(args.N, n, schur_image(args.N, s, K))
        match = projected.weight_report() == W.weight_report()
        out["g_comparison"] = {
            "N": args.N,
            "match": match,
            "projected_weights": weights_to_json(projected.weight_report()),
        }
        ok = ok and match
        human.append(
            "projection from window %d: %s"
            % (args.N, "match" if match else "MISMATCH")
        )
    _emit(out, args, human)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    K = _scalar_context(args)
    window = _parse_window(args.window)
    grid = _load_grid(args, K)
    config = {
        "suite": args.suite,
        "n": args.n,
        "r": args.r,
        "N": args.N,
        "tmax": args.tmax,
        "window": list(window) if window else None,
        "seed": args.seed,
        "v": args.v_rational,
        "grid": [scalar_text(c) for c in grid] if grid else None,
    }
    results = run_suite(
        args.suite, K, args.n, args.r,
        N=args.N, window=window, tmax=args.tmax, grid=grid,
    )
    passed = all(rep["passed"] for rep in results)
    out = {"config": config, "passed": passed, "results": results}
    human = []
    for rep in results:
        human.append(
            "suite %s: %s" % (rep["suite"], "pass" if rep["passed"] else "FAIL")
        )
        for check in rep["checks"]:
            human.append(
                "  %-28s %6d checked  %s"
                % (check["name"], check["checked"],
                   "pass" if check["pass"] else "FAIL")
            )
    human.append("overall: %s" % ("pass" if passed else "FAIL"))
    _emit(out, args, human)
    return 0 if passed else 1


def cmd_enum(args) -> int:
    K = _scalar_context(args)
    grid = _load_grid(args, K)
    if grid is None:
        grid = default_grid(K)
    n, r = args.n, args.r
    comps = sorted(compositions(n, r), reverse=True)
    doms = partitions(r)
    segs = [s.to_json() for s in multisegments_over(r, grid, n)]
    out = {
        "n": n,
        "r": r,
        "grid": [scalar_text(c) for c in grid],
        "compositions": [list(c) for c in comps],
        "dominant": [list(p) for p in doms],
        "multisegments": segs,
        "counts": {
            "compositions": len(comps),
            "dominant": len(doms),
            "multisegments": len(segs),
        },
    }
    human = [
        "compositions: %d" % len(comps),
        "dominant shapes: %d" % len(doms),
        "multisegments over grid (%d centers): %d" % (len(grid), len(segs)),
    ]
    _emit(out, args, human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affschur",
        description=(
            "Exact computations for affine Hecke algebras and window "
            "modules: the segment/polynomial bijection, dimension and "
            "weight reports, and exhaustive verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=False):
        if with_input:
            p.add_argument(
                "input",
                help="path to a JSON input file, or - for stdin",
            )
        p.add_argument("--n", type=int, default=2, help="window size")
        p.add_argument("--r", type=int, default=2, help="tensor degree")
        p.add_argument(
            "--N", type=int, default=None,
            help="larger window for projection comparisons",
        )
        p.add_argument(
            "--tmax", type=int, default=2,
            help="truncation order for central characters",
        )
        p.add_argument(
            "--window", default=None,
            help="index window LO:HI for operator relation suites",
        )
        p.add_argument(
            "--grid", default=None,
            help="JSON file with a center grid {\"centers\": [...]}",
        )
        p.add_argument(
            "--seed", type=int, default=0,
            help="seed recorded in the run configuration",
        )
        p.add_argument(
            "--v-rational", default=None, metavar="P/Q",
            help="work over the rationals with v specialized to p/q",
        )
        p.add_argument(
            "--out", default=None, help="write canonical JSON to this file"
        )
        p.add_argument(
            "--json", action="store_true",
            help="print canonical JSON on stdout instead of a summary",
        )

    p_dmap = sub.add_parser(
        "dmap", help="map a multisegment to its dominant tuple, or back"
    )
    common(p_dmap, with_input=True)
    p_dmap.set_defaults(func=cmd_dmap)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    common(p_verify)
    p_verify.add_argument(
        "--suite", required=True, choices=SUITE_NAMES,
        help="which suite to run",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_dims = sub.add_parser(
        "dims", help="dimension and weight report for a window module"
    )
    common(p_dims, with_input=True)
    p_dims.set_defaults(func=cmd_dims)

    p_enum = sub.add_parser(
        "enum", help="enumerate weights, shapes, and multisegments"
    )
    common(p_enum)
    p_enum.set_defaults(func=cmd_enum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("input error: %s" % (exc,), file=sys.stderr)
        return 2
    except DomainError as exc:
        print("domain error: %s" % (exc,), file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print("resource limit: %s" % (exc,), file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
