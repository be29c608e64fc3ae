"""Command-line front end.

Subcommands construct, verify, twist, baxterize, and serialize R-matrices.
Exit codes: 0 when every requested check passed, 1 when a check failed
(reports are still emitted), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from yangbaxter import serialize
from yangbaxter.algebra import mat_algebra
from yangbaxter.bd import BDTriple, assemble_bd_R, classical_limit, cremmer_gervais, validate_bd
from yangbaxter.checks import (find_hecke_constant, is_hecke, is_unitary, is_ybe,
                               is_ybe_sampled, is_cybe)
from yangbaxter.errors import YangBaxterError
from yangbaxter.scalars import format_scalar, format_scalar_latex, parse_scalar
from yangbaxter.solutions import drinfeld_jimbo, twist
from yangbaxter.spectral import baxterize, spectral_ybe
from yangbaxter.tensors import Tensor2
from yangbaxter.triples import permutation_element

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2


def _label_latex(label: str) -> str:
    m = re.match(r"^m:(\d+),(\d+)$", label)
    if m:
        return f"e^{{{m.group(1)}}}_{{{m.group(2)}}}"
    m = re.match(r"^d:(\d+)$", label)
    if m:
        return f"\\eta_{{{m.group(1)}}}"
    return r"\mathrm{" + label.replace(":", "\\!:\\!") + "}"


def _emit_tensor(t: Tensor2, fmt: str, out) -> None:
    alg = t.algebra
    if fmt == "json":
        json.dump(serialize.tensor2_to_json(t), out, indent=2)
        out.write("\n")
    elif fmt == "plain":
        for (i, j), c in sorted(t.terms.items()):
            out.write(f"{alg.basis[i]} (x) {alg.basis[j]}  {format_scalar(c)}\n")
    elif fmt == "latex":
        parts = []
        for (i, j), c in sorted(t.terms.items()):
            coeff = format_scalar_latex(c)
            if "+" in coeff or coeff.count("-") > (1 if coeff.startswith("-") else 0):
                coeff = r"\left(" + coeff + r"\right)"
            elif coeff == "1":
                coeff = ""
            parts.append(f"{coeff}\\, {_label_latex(alg.basis[i])} \\otimes "
                         f"{_label_latex(alg.basis[j])}")
        out.write(" + ".join(parts) + "\n")
    else:
        raise ValueError(f"unknown format {fmt}")


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit_reports(reports, out) -> bool:
    all_passed = True
    for rep in reports:
        json.dump(serialize.report_to_json(rep), out)
        out.write("\n")
        if not rep.passed:
            all_passed = False
    return all_passed


def _cmd_dj(args, out) -> int:
    _emit_tensor(drinfeld_jimbo(args.n), args.format, out)
    return EXIT_OK


def _cmd_cg(args, out) -> int:
    lam = parse_scalar(args.lam)
    _emit_tensor(cremmer_gervais(args.n, lam), args.format, out)
    return EXIT_OK


def _cmd_bd(args, out) -> int:
    spec = _load_json(args.spec)
    bd = serialize.bd_from_json(spec)
    report = validate_bd(bd)
    if not report.passed:
        print("invalid BD triple: " + ", ".join(report.failures), file=sys.stderr)
        return EXIT_INVALID
    signs = serialize.bd_signs_from_json(spec)
    b = serialize.bd_twist_b_from_json(spec)
    result = assemble_bd_R(bd, signs=signs, b=b,
                           check_big_ybe=True if args.big else None)
    if args.big:
        _emit_tensor(result.r_big, args.format, out)
    _emit_tensor(result.r_proj, args.format, out)
    if args.verify:
        ok = _emit_reports(result.reports.values(), out)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    t = serialize.tensor2_from_json(_load_json(args.input))
    reports = []
    if args.sample:
        rng = random.Random(args.seed)
        for _ in range(args.sample):
            q0 = Fraction(rng.randint(2, 50), rng.randint(51, 97))
            if not is_ybe_sampled(t, q0):
                print(f"sampled YBE residual nonzero at q={q0}", file=sys.stderr)
                return EXIT_CHECK_FAILED
    if args.ybe:
        reports.append(is_ybe(t))
    if args.hecke:
        if args.sigma == "auto":
            sigma = permutation_element(t.algebra)
        else:
            sigma = serialize.tensor2_from_json(_load_json(args.sigma), t.algebra)
        if args.c is not None:
            reports.append(is_hecke(t, sigma, parse_scalar(args.c)))
        else:
            c = find_hecke_constant(t, sigma)
            if c is None:
                reports.append(is_hecke(t, sigma, parse_scalar("0")))
            else:
                out.write(json.dumps({"hecke_constant": format_scalar(c)}) + "\n")
                reports.append(is_hecke(t, sigma, c))
    if args.unitary:
        reports.append(is_unitary(t))
    if args.cybe_limit:
        r = classical_limit(t)
        reports.append(is_cybe(r))
    ok = _emit_reports(reports, out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_baxterize(args, out) -> int:
    t = serialize.tensor2_from_json(_load_json(args.input))
    rf = baxterize(t)
    json.dump(serialize.spectral_to_json(rf), out, indent=2)
    out.write("\n")
    if args.check:
        rep = spectral_ybe(rf)
        json.dump(serialize.report_to_json(rep), out)
        out.write("\n")
        return EXIT_OK if rep.passed else EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_twist(args, out) -> int:
    t = serialize.tensor2_from_json(_load_json(args.input))
    f = serialize.tensor2_from_json(_load_json(args.f), t.algebra)
    q = None
    if args.q:
        q = serialize.tensor2_from_json(_load_json(args.q), t.algebra)
    twisted = twist(t, f, q)
    _emit_tensor(twisted, args.format, out)
    return EXIT_OK


def _cmd_limit(args, out) -> int:
    t = serialize.tensor2_from_json(_load_json(args.input))
    r = classical_limit(t)
    _emit_tensor(r, args.format, out)
    rep = is_cybe(r)
    json.dump(serialize.report_to_json(rep), out)
    out.write("\n")
    return EXIT_OK if rep.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yangbaxter",
        description="Construct and verify exact Yang-Baxter R-matrices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "plain", "latex"],
                        default="json", help="output format for tensors")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sampling pre-checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=type(parser))

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("dj", help="Drinfeld-Jimbo R-matrix over Mat_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_dj)

    p = add_parser("cg", help="Cremmer-Gervais R-matrix over Mat_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="scalar (grammar string), e.g. '(q^1)/(q^1 + -1*q^-1)'")
    p.set_defaults(func=_cmd_cg)

    p = add_parser("bd", help="quantize a Belavin-Drinfeld triple spec")
    p.add_argument("--spec", required=True, help="BD spec JSON file")
    p.add_argument("--big", action="store_true",
                   help="emit R_big and run the big-algebra checks")
    p.add_argument("--verify", action="store_true", help="emit check reports")
    p.set_defaults(func=_cmd_bd)

    p = add_parser("verify", help="run checkers on a tensor JSON")
    p.add_argument("--input", required=True, help="tensor JSON file or - for stdin")
    p.add_argument("--ybe", action="store_true")
    p.add_argument("--hecke", action="store_true")
    p.add_argument("--sigma", default="auto",
                   help="'auto' or a tensor JSON file with the permutation element")
    p.add_argument("--c", default=None, help="Hecke constant (grammar string)")
    p.add_argument("--unitary", action="store_true")
    p.add_argument("--cybe-limit", action="store_true", dest="cybe_limit")
    p.add_argument("--sample", type=int, default=0,
                   help="number of rational sample points for the YBE pre-filter")
    p.set_defaults(func=_cmd_verify)

    p = add_parser("baxterize", help="spectral-parameter family from a Hecke R")
    p.add_argument("--input", required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=_cmd_baxterize)

    p = add_parser("twist", help="conjugate by a diagonal twist")
    p.add_argument("--input", required=True)
    p.add_argument("--f", required=True, help="twist tensor JSON")
    p.add_argument("--q", default=None,
                   help="canonical element JSON for the compatibility check")
    p.set_defaults(func=_cmd_twist)

    p = add_parser("limit", help="classical limit and its cYBE report")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_limit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (YangBaxterError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
