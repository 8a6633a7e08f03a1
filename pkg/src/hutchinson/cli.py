"""Command-line front end.

Exit codes: 0 certified real-rooted, 10 inconclusive (or a certificate that
fails verification), 11 the oracle found non-real zeros, 2 invalid input,
3 search budget exhausted, 1 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .criteria import certify, find_alpha
from .errors import HypothesisViolation, InvalidInput, WitnessSearchExhausted
from .explorer import SAMPLERS, SweepConfig, sweep
from .lemma import (IntervalSpec, beta_bound, condition_b, lemma_statement_a, reduced_discriminant,
                    threshold_check)
from .poly import Polynomial, alternate, as_rational, format_rational, from_quotients, normalize, quotients
from .special import Q_INFINITY, threshold_ladder
from .sturm import all_negative_and_simple, count_real_roots, is_hyperbolic
from .witness import DEFAULT_BUDGET, SignAlternationCertificate, build_witness, verify_certificate

EXIT_CERTIFIED = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_INCONCLUSIVE = 10
EXIT_NOT_HYPERBOLIC = 11


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc


def _load_poly(path: str) -> Polynomial:
    return Polynomial.from_json(_read_text(path))


def _rational_list(text: str) -> list[Fraction]:
    return [as_rational(t) for t in text.split(",") if t.strip()]


def _emit(doc: dict, path=None) -> None:
    text = json.dumps(doc, indent=2)
    if path:
        Path(path).write_text(text + "\n")
    print(text)


def _envelope(command: str, config: dict) -> dict:
    return {"tool": "hutchinson", "version": __version__, "command": command, "config": config}


def cmd_certify(args) -> int:
    p = _load_poly(args.input)
    report = certify(p, alpha=args.alpha)
    doc = _envelope("certify", {"alpha": args.alpha, "oracle": args.oracle})
    doc["polynomial"] = p.to_json()
    doc["criteria"] = report.to_json()
    code = EXIT_CERTIFIED if report.certified else EXIT_INCONCLUSIVE
    if args.oracle:
        hyperbolic = is_hyperbolic(p)
        doc["oracle"] = {"is_hyperbolic": hyperbolic, "real_roots_distinct": count_real_roots(p)}
        if report.certified and not hyperbolic:
            print("internal error: a sufficient criterion disagrees with the oracle", file=sys.stderr)
            code = EXIT_INTERNAL
        elif not report.certified:
            code = EXIT_CERTIFIED if hyperbolic else EXIT_NOT_HYPERBOLIC
    doc["exit_code"] = code
    _emit(doc, args.report)
    return code


def cmd_witness(args) -> int:
    p = _load_poly(args.input)
    t = normalize(p)
    Q = alternate(t)
    if args.verify:
        try:
            cert = SignAlternationCertificate.from_json(json.loads(_read_text(args.verify)))
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"malformed certificate JSON: {exc}") from exc
        result = verify_certificate(Q, cert, args.mode or cert.mode)
        doc = _envelope("witness --verify", {"mode": args.mode or cert.mode})
        doc["verified"] = result.ok
        doc["failed_index"] = result.failed_index
        doc["reason"] = result.reason
        _emit(doc)
        return EXIT_CERTIFIED if result.ok else EXIT_INCONCLUSIVE
    if p.degree < 4:
        raise HypothesisViolation("Theorem 1 requires n >= 4")
    q = quotients(t)
    alpha = args.alpha
    if alpha is None:
        alpha = find_alpha(q).alpha
        if alpha is None:
            raise HypothesisViolation("no alpha in [1+sqrt(5), 4) puts every quotient in its interval")
    cert = build_witness(Q, q, alpha, budget=args.budget)
    doc = cert.to_json()
    text = json.dumps(doc, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)
    return EXIT_CERTIFIED


def cmd_oracle(args) -> int:
    p = _load_poly(args.input)
    hyperbolic = is_hyperbolic(p)
    doc = _envelope("oracle", {})
    doc.update({
        "degree": p.degree,
        "real_roots_distinct": count_real_roots(p),
        "is_hyperbolic": hyperbolic,
        "all_negative_and_simple": all_negative_and_simple(p),
    })
    _emit(doc)
    return EXIT_CERTIFIED if hyperbolic else EXIT_NOT_HYPERBOLIC


def cmd_gen(args) -> int:
    p = from_quotients(_rational_list(args.q), args.a0, args.a1)
    text = json.dumps(p.to_json())
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)
    return EXIT_CERTIFIED


def cmd_theta(args) -> int:
    ladder = threshold_ladder(args.degree, args.tol, workers=args.workers)
    doc = _envelope("theta", {"degrees": args.degree, "tolerance": format_rational(args.tol)})
    doc["thresholds"] = {str(d): {"value": format_rational(v), "approx": f"{float(v):.8f}"}
                         for d, v in ladder.items()}
    doc["reference"] = {
        "q_infinity": str(Q_INFINITY),
        "note": "q_infinity is the threshold of the full partial theta function; "
                "section thresholds approach it as degree grows",
    }
    _emit(doc)
    return EXIT_CERTIFIED


def cmd_lemma(args) -> int:
    spec = IntervalSpec(args.alpha, args.beta)
    doc = _envelope("lemma", {"alpha": format_rational(spec.alpha), "beta": format_rational(spec.beta),
                              "resolution": args.resolution})
    doc["threshold_check"] = threshold_check(spec.alpha)
    doc["beta_bound"] = format_rational(beta_bound(spec.alpha)) if 0 < spec.alpha < 4 else None
    doc["discriminant"] = format_rational(reduced_discriminant(spec))
    doc["condition_b"] = condition_b(spec)
    if args.resolution:
        doc["statement_a"] = lemma_statement_a(spec, args.resolution, workers=args.workers)
    _emit(doc)
    return EXIT_CERTIFIED


def cmd_sweep(args) -> int:
    config = SweepConfig(
        alpha_grid=_rational_list(args.alpha_grid),
        beta_grid=_rational_list(args.beta_grid),
        degrees=[int(d) for d in args.degrees.split(",")],
        samples_per_cell=args.samples,
        sampler=args.sampler,
        seed=args.seed,
        workers=args.workers,
    )
    report = sweep(config)
    text = report.to_csv()
    if args.out:
        Path(args.out).write_text(text)
        meta = _envelope("sweep", config.to_json())
        Path(str(args.out) + ".meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return EXIT_CERTIFIED


def _rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hutchinson", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="run the quotient criteria on a polynomial JSON file")
    p.add_argument("input", help="polynomial JSON path, or - for stdin")
    p.add_argument("--alpha", type=_rational_arg)
    p.add_argument("--oracle", action="store_true", help="also decide real-rootedness with Sturm sequences")
    p.add_argument("--report", help="write the report JSON here as well")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("witness", help="build or verify a sign-alternation certificate")
    p.add_argument("input", help="polynomial JSON path, or - for stdin")
    p.add_argument("--alpha", type=_rational_arg)
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--verify", metavar="CERT", help="verify an existing certificate instead of building one")
    p.add_argument("--mode", choices=("strict", "signs-only"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", help="exact real-root count of a polynomial")
    p.add_argument("input")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="polynomial JSON from a comma-separated quotient list")
    p.add_argument("--q", required=True)
    p.add_argument("--a0", type=_rational_arg, default=Fraction(1))
    p.add_argument("--a1", type=_rational_arg, default=Fraction(1))
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("theta", help="hyperbolicity thresholds of partial-theta sections")
    p.add_argument("--degree", type=int, nargs="+", required=True)
    p.add_argument("--tol", type=_rational_arg, default=Fraction(1, 10000))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("lemma", help="evaluate the quartic lemma for a segment [alpha, beta]")
    p.add_argument("--alpha", type=_rational_arg, required=True)
    p.add_argument("--beta", type=_rational_arg, required=True)
    p.add_argument("--resolution", type=int, default=0, help="also brute-force statement (a) on this grid")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("sweep", help="empirical sweep over (alpha, beta) cells, CSV output")
    p.add_argument("--alpha-grid", required=True)
    p.add_argument("--beta-grid", required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--sampler", choices=SAMPLERS, default="uniform_random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else 0
    try:
        return args.func(args)
    except WitnessSearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
