"""Command line interface.

Exit codes: 0 success, 1 axiom violation, 2 verification failure (or a
usage error, argparse convention), 3 parse/IO error, 4 local-derivation
sampling did not stabilize.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .algebra import AlgebraSpec, half_graph, validate
from .derivations import CaseLabel, classify_case, derivation_space
from .generate import GenRequest, UsageError, generate
from .localder import DEFAULT_SEED, local_equals_der
from .reports import build_report, report_to_json
from .serialize import ParseError, dumps, format_rational, load_spec, space_to_json, spec_to_json
from .suite import run_suite

EXIT_OK = 0
EXIT_AXIOM = 1
EXIT_VERIFY = 2
EXIT_PARSE = 3
EXIT_INCONCLUSIVE = 4


def _load_valid(path: str) -> AlgebraSpec:
    """Parse and axiom-check, raising SystemExit with the right code."""
    try:
        spec = load_spec(path)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    problems = validate(spec)
    if problems:
        for p in problems:
            print(f"axiom violation: {p}", file=sys.stderr)
        raise SystemExit(EXIT_AXIOM)
    return spec


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        spec = load_spec(args.spec)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    problems = validate(spec)
    if problems:
        for p in problems:
            print(f"axiom violation: {p}")
        return EXIT_AXIOM
    g = half_graph(spec)
    print(f"valid: dimension {spec.dimension}, {len(g.edges)} half edge(s)")
    return EXIT_OK


def cmd_derive(args: argparse.Namespace) -> int:
    spec = _load_valid(args.spec)
    space = derivation_space(spec)
    if args.json:
        _emit(dumps(space_to_json(space)), None)
        return EXIT_OK
    n = spec.dimension
    print(f"derivation space dimension: {space.dim}")
    for k, v in enumerate(space.vectors, 1):
        print(f"basis matrix {k}:")
        for r in range(n):
            print("  " + " ".join(format_rational(e) for e in v[r * n : (r + 1) * n]))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    spec = _load_valid(args.spec)
    label, sigma = classify_case(spec)
    g = half_graph(spec)
    if args.json:
        _emit(
            dumps(
                {
                    "case": label.value,
                    "signature": list(g.signature()),
                    "permutation": list(sigma),
                }
            ),
            None,
        )
        return EXIT_OK
    print(f"case: {label.value}")
    print(f"degree signature: {list(g.signature())}")
    print(f"canonical relabeling: {list(sigma)}")
    return EXIT_OK


def cmd_localcheck(args: argparse.Namespace) -> int:
    spec = _load_valid(args.spec)
    check = local_equals_der(spec, seed=args.seed)
    payload = {
        "locder_dim": check.local.space.dim,
        "der_dim": check.der.dim,
        "samples_used": check.local.samples_used,
        "stabilized": check.local.stabilized,
        "equals_der": check.equals,
        "seed": check.local.seed,
    }
    if args.json:
        _emit(dumps(payload), None)
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    if not check.stabilized:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if check.equals else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _load_valid(args.spec)
    report = build_report(spec, seed=args.seed)
    if args.json:
        _emit(dumps(report_to_json(report)), None)
    else:
        checks = report_to_json(report)["checks"]
        print(f"case: {report.case.value}  derivation dim: {report.der.dim}")
        for name, value in checks.items():
            shown = "skipped" if value is None else value
            print(f"{name}: {shown}")
        if report.note:
            print(f"note: {report.note}")
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_gen(args: argparse.Namespace) -> int:
    req = GenRequest(CaseLabel(args.case), args.mode, args.seed)
    spec = generate(req)
    _emit(dumps(spec_to_json(spec)), args.out)
    return EXIT_OK


def cmd_suite(args: argparse.Namespace) -> int:
    cases = None
    if args.cases:
        cases = [CaseLabel(c.strip()) for c in args.cases.split(",") if c.strip()]
    dims = _parse_dims(args.dims) if args.dims else None
    result = run_suite(trials=args.trials, seed=args.seed, cases=cases, dims=dims)
    print(f"volterra suite: trials={args.trials} seed={args.seed}")
    print(result.summary())
    return EXIT_OK if result.ok else EXIT_VERIFY


def _parse_dims(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x.strip()]


def _default_seed() -> int:
    env = os.environ.get("VOLTERRA_SEED")
    return int(env) if env else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="volterra",
        description="Exact derivation and local-derivation checks for genetic Volterra algebras.",
    )
    parser.add_argument("--version", action="version", version=f"volterra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a spec file against the structure-constant axioms")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("derive", help="compute the derivation space")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("classify", help="case label of a 4-dim instance")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("localcheck", help="compare local derivations with derivations")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_localcheck)

    p = sub.add_parser("verify", help="full verification report")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a case-targeted instance")
    p.add_argument("--case", required=True, choices=[c.value for c in CaseLabel if c is not CaseLabel.GENERIC])
    p.add_argument("--mode", default="generic", choices=["generic", "coincident"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("suite", help="run the verification batteries")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--cases", help="comma-separated case labels, default all")
    p.add_argument("--dims", help="extra random-spec dimensions, e.g. 2..6 or 2,3,5")
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))
        return EXIT_VERIFY  # unreachable; parser.error raises SystemExit(2)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
