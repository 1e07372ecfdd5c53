"""Command-line front end for the switched ARX analyses.

Every subcommand reads JSON files, runs one analysis, and prints a report
as JSON (the contract format) or as an indented text rendering of the same
data.  Exit codes encode the verdict: 0 affirmative, 1 negative or
inconclusive, 2 malformed input.  All randomness flows from --seed, which
the SARX_SEED environment variable overrides.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .identifiability import (
    ParamError,
    PolyParametrization,
    genericity_witness,
    injectivity_probe,
    procedure1,
)
from .lss import Lss, LssError, associated_lss, find_isomorphisms, simulate_lss
from .minimality import check_strong_minimality, sarx_minimality_sufficient
from .rationals import format_rational
from .sarx import HybridWord, SarxError, SarxModel, simulate_sarx

_INPUT_ERRORS = (SarxError, LssError, ParamError, OSError, json.JSONDecodeError)


def _render_text(value, indent=0, out=None):
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                out.append("%s%s:" % (pad, k))
                _render_text(v, indent + 1, out)
            else:
                out.append("%s%s: %s" % (pad, k, v))
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                out.append("%s-" % pad)
                _render_text(v, indent + 1, out)
            else:
                out.append("%s- %s" % (pad, v))
    else:
        out.append("%s%s" % (pad, value))
    return out


def _emit(report, fmt):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(report, out=[])))


def cmd_check_min(args):
    model = SarxModel.load(args.model)
    verdict = check_strong_minimality(
        model, method=args.method, include_diagonal_pairs=args.diagonal_pairs
    )
    _emit(verdict.to_json_dict(), args.format)
    return 0 if verdict.strong_minimal else 1


def cmd_check_sufficient(args):
    model = SarxModel.load(args.model)
    status, reason = sarx_minimality_sufficient(model)
    _emit({"status": status, "reason": reason}, args.format)
    return 0 if status == "minimal-certified" else 1


def cmd_simulate(args):
    model = SarxModel.load(args.model)
    word = HybridWord.load(args.word)
    trace = simulate_sarx(model, word)
    report = {
        "outputs": [[format_rational(y) for y in step] for step in trace]
    }
    if args.compare_lss:
        lss_trace = simulate_lss(associated_lss(model), word)
        report["lss_agrees"] = lss_trace == trace
        if not report["lss_agrees"]:
            _emit(report, args.format)
            return 1
    _emit(report, args.format)
    return 0


def cmd_to_lss(args):
    model = SarxModel.load(args.model)
    _emit(associated_lss(model).to_json_dict(), args.format)
    return 0


def cmd_iso(args):
    a = Lss.load(args.a)
    b = Lss.load(args.b)
    solution = find_isomorphisms(a, b, seed=args.seed)
    _emit(solution.to_json_dict(), args.format)
    return 0 if solution.kind != "none" else 1


def cmd_param_analyze(args):
    par = PolyParametrization.load(args.param)
    if not par.is_siso():
        raise ParamError("region analysis requires a SISO parametrization")
    region = procedure1(par, include_diagonal=args.diagonal_pairs)
    _emit(region.to_json_dict(), args.format)
    return 0 if not region.is_empty() else 1


def cmd_param_generic(args):
    par = PolyParametrization.load(args.param)
    theta, attempts = genericity_witness(par, samples=args.samples, seed=args.seed)
    report = {
        "witness": [format_rational(x) for x in theta] if theta else None,
        "attempts": attempts,
    }
    _emit(report, args.format)
    return 0 if theta is not None else 1


def cmd_param_injective(args):
    par = PolyParametrization.load(args.param)
    evidence = injectivity_probe(par, trials=args.trials, seed=args.seed)
    _emit(evidence.to_json_dict(), args.format)
    return 0 if evidence.kind == "injective-affine" else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    parser = argparse.ArgumentParser(
        prog="sarxid",
        description="Exact minimality and identifiability analysis of switched ARX models.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_parser(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = add_parser("check-min", "decide strong minimality")
    p.add_argument("model")
    p.add_argument("--method", choices=("exact-rank", "theorem2", "both"), default="exact-rank")
    p.add_argument("--diagonal-pairs", action="store_true")
    p.set_defaults(func=cmd_check_min)

    p = add_parser("check-sufficient", "one-sided minimality certificate")
    p.add_argument("model")
    p.set_defaults(func=cmd_check_sufficient)

    p = add_parser("simulate", "exact output trace for a hybrid word")
    p.add_argument("model")
    p.add_argument("word")
    p.add_argument("--compare-lss", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = add_parser("to-lss", "emit the switched state-space realization")
    p.add_argument("model")
    p.set_defaults(func=cmd_to_lss)

    p = add_parser("iso", "classify intertwining maps between two systems")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = add_parser("param-analyze", "identifiable sub-parametrization region")
    p.add_argument("param")
    p.add_argument("--diagonal-pairs", action="store_true")
    p.set_defaults(func=cmd_param_analyze)

    p = add_parser("param-generic", "sample a strongly minimal witness")
    p.add_argument("param")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_param_generic)

    p = add_parser("param-injective", "probe injectivity of a parametrization")
    p.add_argument("param")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_param_injective)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    env_seed = os.environ.get("SARX_SEED")
    if env_seed is not None:
        try:
            args.seed = int(env_seed)
        except ValueError:
            print("invalid SARX_SEED %r" % env_seed, file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
