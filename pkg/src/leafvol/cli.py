"""Command-line entry point. JSON payload on stdout, diagnostics on stderr.

Exit codes: 0 ok, 2 parse, 3 resource cap, 4 domain precondition,
5 semantic validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import catalog
from .errors import LeafvolError, ParseError
from .exactnum import format_rational
from .hilbert import (
    DEFAULT_VALIDATION_DEPTH,
    HilbertSeries,
    HironakaData,
    cm_pole_check,
    from_hironaka,
    from_molien,
    from_rational_function,
)
from .molien import enumerate_group, parse_group_document
from .polyrat import RationalFunction
from .spectrum import (
    b_series_identity,
    harmonic_multiplicities,
    heat_target,
    heat_trace,
    heat_truncation,
    scaled_heat_trace,
    weyl_table,
)
from .volume import ratio_from_hironaka, volume_ratio


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def _hilbert_from_document(doc: dict, cap: Optional[int] = None) -> tuple[HilbertSeries, dict]:
    """Dispatch on top-level keys: generators / hsop_degrees / numerator."""
    if "generators" in doc:
        gens, doc_cap = parse_group_document(doc)
        G = enumerate_group(gens, cap if cap is not None else doc_cap)
        return from_molien(G), {"kind": "group", "order": G.order, "dim": G.dim}
    if "hsop_degrees" in doc:
        data = HironakaData.from_json(doc)
        return from_hironaka(data), {"kind": "hironaka", "hironaka": data}
    if "numerator" in doc:
        f = RationalFunction.from_json(doc)
        return from_rational_function(f, doc.get("ambient_dim")), {"kind": "raw"}
    raise ParseError("input must contain 'generators', 'hsop_degrees' or 'numerator'")


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_molien(args) -> int:
    doc = _load(args.file)
    if "generators" not in doc:
        raise ParseError("molien needs a group document with 'generators'")
    gens, doc_cap = parse_group_document(doc)
    G = enumerate_group(gens, args.cap if args.cap is not None else doc_cap)
    H = from_molien(G, max(args.series_depth, DEFAULT_VALIDATION_DEPTH))
    _emit(
        {
            "order": G.order,
            "dim": G.dim,
            "hilbert_series": H.to_json(),
            "coefficients": [format_rational(c) for c in H.coefficients(args.series_depth)],
        }
    )
    return 0


def cmd_analyze(args) -> int:
    doc = _load(args.file)
    H, info = _hilbert_from_document(doc)
    report = volume_ratio(H)
    payload = {
        "source": H.source,
        "hilbert_series": H.to_json(),
        "volume": report.to_json(),
        "cm_check": report.cm_report.to_json(),
    }
    if info["kind"] == "hironaka":
        m, ratio = ratio_from_hironaka(info["hironaka"])
        payload["hironaka_ratio"] = {"m": m, "ratio": format_rational(ratio)}
    if info["kind"] == "group":
        payload["group_order"] = info["order"]
    if report.warning:
        print("warning: Hilbert series violates the Cohen-Macaulay pole constraints", file=sys.stderr)
    _emit(payload)
    return 0


def _ambient_n(args, doc: dict, info: dict) -> int:
    if args.n is not None:
        return args.n
    for key in ("n", "ambient_n"):
        if key in doc:
            return int(doc[key])
    if info["kind"] == "group":
        return info["dim"] - 1
    if "ambient_dim" in doc:
        return int(doc["ambient_dim"]) - 1
    raise ParseError("sphere dimension unknown: pass --n")


def cmd_spectrum(args) -> int:
    doc = _load(args.file)
    H, info = _hilbert_from_document(doc)
    n = _ambient_n(args, doc, info)
    report = volume_ratio(H)
    spec = harmonic_multiplicities(H, n, args.k_max)
    rows = weyl_table(spec, report, args.k_max)
    heat_K = max(args.k_max, heat_truncation(n, args.heat_s))
    heat_spec = spec if heat_K == args.k_max else harmonic_multiplicities(H, n, heat_K)
    ht = heat_trace(heat_spec, args.heat_s)
    _emit(
        {
            "n": n,
            "m": report.m,
            "weyl_constant": format_rational(report.weyl_constant),
            "rows": [r.to_json() for r in rows],
            "heat_trace": {
                "s": ht.s,
                "value": ht.value,
                "scaled": scaled_heat_trace(ht, report.m),
                "target": heat_target(report),
                "truncation_bound": ht.truncation_bound,
                "K": heat_K,
            },
            "b_series_identity": b_series_identity(H, n, args.k_max, spec),
        }
    )
    return 0


def _run_entry(name: str) -> dict:
    entry = catalog.get_entry(name)
    H = entry.hilbert_series()
    report = volume_ratio(H)
    checks = catalog.verify_entry(entry)
    return {
        "name": entry.name,
        "description": entry.description,
        "ambient_n": entry.ambient_n,
        "expected": {"m": entry.expected_m, "ratio": format_rational(entry.expected_ratio)},
        "computed": report.to_json(),
        "cm_check": cm_pole_check(H).to_json(),
        "checks": checks,
        "match": (report.m, report.ratio) == (entry.expected_m, entry.expected_ratio),
        "passed": all(checks.values()),
    }


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit({"entries": catalog.list_entries()})
        return 0
    if args.action == "run":
        if not args.name:
            raise ParseError("catalog run needs an entry name")
        _emit(_run_entry(args.name))
        return 0
    if not args.all:
        raise ParseError("catalog verify needs --all")
    results = [_run_entry(name) for name in catalog.list_entries()]
    failed = [r["name"] for r in results if not r["passed"]]
    if failed:
        for r in results:
            if not r["passed"]:
                bad = [k for k, v in r["checks"].items() if not v]
                print(f"FAIL {r['name']}: {', '.join(bad)}", file=sys.stderr)
        return 5
    _emit({"entries": [{"name": r["name"], "passed": r["passed"]} for r in results], "passed": True})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leafvol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("molien", help="Molien series of a finite matrix group")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--series-depth", type=int, default=16)
    p.set_defaults(func=cmd_molien)

    p = sub.add_parser("analyze", help="leaf-space dimension and volume ratio")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", help="basic spectrum, Weyl table and heat trace")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None, help="dimension of the sphere S^n")
    p.add_argument("--k-max", type=int, default=1000)
    p.add_argument("--heat-s", type=float, default=1e-3)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("catalog", help="built-in fixtures")
    p.add_argument("action", choices=["list", "run", "verify"])
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except LeafvolError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
