"""Command-line entry points.

Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input
(unknown flags, missing or corrupt fixture files, malformed class
literals).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import blowup, linsys, models
from .classexpr import parse_class_expr
from .enumeration import enumerate_sids
from .isotropy import phi as phi_of
from .lattice import genus_of, two_divisibility
from .reporting import Report, _plain
from .tables import FixtureError, load_fixture, verify_table1, verify_table2

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="enriques-lab",
        description="exact verification of curve-section lattices, blow-up "
                    "towers and projective models of Enriques-Fano threefolds",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--fixtures", metavar="DIR", default=None,
                        help="directory overriding the packaged fixture files")
    sub = parser.add_subparsers(dest="command", required=True)

    sid = sub.add_parser("sid", help="lattice arithmetic of isotropic decompositions")
    sid_sub = sid.add_subparsers(dest="sid_command", required=True)
    sid_sub.add_parser("verify-table1", help="recompute the component table")
    sid_sub.add_parser("verify-table2", help="recompute the known-threefold table")
    enum = sid_sub.add_parser("enumerate", help="enumerate decompositions by genus and phi")
    enum.add_argument("--genus", type=int, required=True)
    enum.add_argument("--phi", type=int, required=True)
    phi_cmd = sid_sub.add_parser("phi", help="phi of a class literal")
    phi_cmd.add_argument("--class", dest="class_expr", required=True, metavar="EXPR",
                         help="e.g. \"2(E1+E12)\" or \"12E1+E2\"")

    blow = sub.add_parser("blowup", help="triple products on blow-up towers of P^3")
    blow_sub = blow.add_subparsers(dest="blowup_command", required=True)
    run = blow_sub.add_parser("run", help="evaluate a model file")
    run.add_argument("model", help="model file path or fixture name")
    run.add_argument("--triple", nargs=3, metavar=("D1", "D2", "D3"),
                     help="three class names; prints their product")
    run.add_argument("--div2", metavar="D", help="class to test modulo the trivial set")
    run.add_argument("--trivial", default="", metavar="A,B,...",
                     help="comma-separated class names spanning the trivial set")
    run.add_argument("--n", type=int, default=2, help="divisibility modulus (default 2)")

    lin = sub.add_parser("linsys", help="linear systems with vanishing conditions")
    lin_sub = lin.add_subparsers(dest="linsys_command", required=True)
    dim = lin_sub.add_parser("dim", help="projective dimension of a system")
    dim.add_argument("spec", help="spec file path or fixture name")
    dim.add_argument("--kernel", action="store_true", help="print a kernel basis")

    model = sub.add_parser("model", help="projective model verification")
    model_sub = model.add_subparsers(dest="model_command", required=True)
    verify = model_sub.add_parser("verify", help="run a model's check matrix")
    verify.add_argument("name", choices=("pef13",))

    return parser


def _load_data(name_or_path: str, fixtures_dir):
    path = Path(name_or_path)
    if path.is_file():
        try:
            return json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise FixtureError(f"{path}: {exc}") from exc
    base = Path(name_or_path).name
    return load_fixture(base, fixtures_dir)


def _emit_report(report: Report, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _emit_value(payload: dict, fmt: str, text: str) -> int:
    if fmt == "json":
        print(json.dumps(_plain(payload), sort_keys=True, indent=1))
    else:
        print(text)
    return EXIT_PASS


def run_sid(args) -> int:
    if args.sid_command == "verify-table1":
        return _emit_report(verify_table1(args.fixtures), args.format)
    if args.sid_command == "verify-table2":
        return _emit_report(verify_table2(args.fixtures), args.format)
    if args.sid_command == "enumerate":
        sids = enumerate_sids(args.genus, args.phi)
        payload = {
            "genus": args.genus,
            "phi": args.phi,
            "count": len(sids),
            "sids": [{"a0": s.a0, "a": list(s.a), "eps": s.eps, "label": str(s)}
                     for s in sids],
        }
        return _emit_value(payload, args.format, "\n".join(str(s) for s in sids))
    if args.sid_command == "phi":
        expr = parse_class_expr(args.class_expr)
        pic = expr.to_pic()
        value = phi_of(pic)
        payload = {
            "class": args.class_expr,
            "phi": value,
            "square": pic.square(),
            "genus": genus_of(pic),
            "two_divisibility": two_divisibility(pic).value,
        }
        return _emit_value(payload, args.format, str(value))
    raise AssertionError


def run_blowup(args) -> int:
    data = _load_data(args.model, args.fixtures)
    model, classes = blowup.load_model(data)

    def resolve(name):
        if name in classes:
            return classes[name]
        if name in model.generators:
            return model.generator_class(name)
        raise FixtureError(f"unknown class {name!r} in model {data.get('label', '?')!r}")

    if args.triple:
        a, b, c = (resolve(x) for x in args.triple)
        value = blowup.triple_product(model, a, b, c)
        return _emit_value({"triple": args.triple, "value": value}, args.format, str(value))
    if args.div2:
        trivial = [resolve(x) for x in args.trivial.split(",") if x]
        ok = blowup.divisible_mod_trivial(model, resolve(args.div2), trivial, args.n)
        payload = {"class": args.div2, "n": args.n, "divisible": ok}
        return _emit_value(payload, args.format, str(ok).lower())
    report = Report(f"blowup/{data.get('label', args.model)}")
    report.extend_plain("blowup", blowup.run_model_checks(data), anchor="blowup:model-file")
    return _emit_report(report, args.format)


def run_linsys(args) -> int:
    data = _load_data(args.spec, args.fixtures)
    spec = linsys.load_spec(data)
    space = linsys.solve_system(spec)
    payload = {
        "degree": spec.degree,
        "conditions": len(spec.conditions),
        "projective_dimension": space.projective_dimension,
        "kernel_size": len(space.kernel),
    }
    lines = [f"projective dimension: {space.projective_dimension}",
             f"kernel size: {len(space.kernel)}"]
    if args.kernel:
        basis = [str(p) for p in space.polynomials()]
        payload["kernel_basis"] = basis
        lines.extend(basis)
    code = _emit_value(payload, args.format, "\n".join(lines))
    expected = data.get("expected_dimension")
    if expected is not None and space.projective_dimension != expected:
        return EXIT_FAIL
    return code


def run_model(args) -> int:
    report = Report(f"model/{args.name}")
    report.extend_plain("model", models.verify_pef13(), anchor="model:pef13")
    return _emit_report(report, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sid":
            return run_sid(args)
        if args.command == "blowup":
            return run_blowup(args)
        if args.command == "linsys":
            return run_linsys(args)
        if args.command == "model":
            return run_model(args)
    except FixtureError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    raise AssertionError


if __name__ == "__main__":
    sys.exit(main())
