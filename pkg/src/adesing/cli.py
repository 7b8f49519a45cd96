"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 verification mismatch,
64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from adesing import braid, grobner, weyl
from adesing.corpus import bundled_corpus_path, corpus_run
from adesing.errors import AdesingError
from adesing.newton import newton_diagram_2d, newton_number_2d
from adesing.poly import PolynomialSyntaxError, parse_polynomial
from adesing.reports import Report, rational_str, render_json
from adesing.singularity import (
    Germ,
    classify_ade,
    modality_quasihomogeneous,
    monodromy_eigenvalue_angles,
    mu_const_linear_check,
    signature_from_spectrum,
    spectrum_length,
    spectrum_quasihomogeneous,
    suspend_spectrum,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64

DEFAULT_SEED = 1
DEFAULT_BUDGET = weyl.DEFAULT_BUDGET


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n\n{self.format_help()}")


def _names(args) -> list[str] | None:
    return [v.strip() for v in args.vars.split(",")] if args.vars else None


def _germ(args) -> Germ:
    return Germ.parse(args.polynomial, _names(args))


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, payload: dict, text: str) -> None:
        self.stream.write(render_json(payload) if self.as_json else text.rstrip("\n") + "\n")


# ---------------------------------------------------------------- verbs


def cmd_classify(args, out: Output) -> int:
    g = _germ(args)
    r = classify_ade(g)
    payload = {
        "germ": str(g),
        "type": str(r.rstype),
        "mu": r.mu,
        "h": r.coxeter_number,
        "exponents": list(r.exponents),
        "weights": [rational_str(v) for v in r.weights],
        "spectrum": r.spectrum.strings(),
    }
    text = "\n".join(
        [
            f"germ: {g}",
            f"type: {r.rstype}",
            f"mu: {r.mu}",
            f"h: {r.coxeter_number}",
            f"exponents: {' '.join(map(str, r.exponents))}",
            f"weights: {' '.join(rational_str(v) for v in r.weights)}",
            f"spectrum: {' '.join(r.spectrum.strings())}",
        ]
    )
    out.emit(payload, text)
    return EXIT_OK


def cmd_spectrum(args, out: Output) -> int:
    g = _germ(args)
    s = suspend_spectrum(spectrum_quasihomogeneous(g), args.suspend)
    angles, order = monodromy_eigenvalue_angles(s)
    payload = {
        "germ": str(g),
        "nvars": s.nvars,
        "spectrum": s.strings(),
        "length": rational_str(spectrum_length(s)),
        "symmetric": s.is_symmetric(),
        "monodromy_angles": [rational_str(a) for a in angles],
        "monodromy_order": order,
    }
    text = "\n".join(
        [
            f"germ: {g}",
            f"variables: {s.nvars}",
            f"spectrum: {' '.join(s.strings())}",
            f"length: {rational_str(spectrum_length(s))}",
            f"monodromy angles: {' '.join(rational_str(a) for a in angles)}",
            f"monodromy order: {order}",
        ]
    )
    out.emit(payload, text)
    return EXIT_OK


def cmd_milnor(args, out: Output) -> int:
    g = _germ(args)
    payload = {"germ": str(g), "mu": g.mu}
    try:
        payload["global_dimension"] = grobner.global_milnor_number(g.poly)
    except AdesingError:
        payload["global_dimension"] = None
    basis = [grobner_monomial(m, g.names) for m in g.local_basis]
    payload["basis"] = basis
    out.emit(payload, f"germ: {g}\nmu: {g.mu}\nbasis: {' '.join(basis)}")
    return EXIT_OK


def grobner_monomial(m, names) -> str:
    from adesing.poly import Polynomial

    return Polynomial.monomial(m).to_string(names)


def cmd_modality(args, out: Output) -> int:
    g = _germ(args)
    mod = modality_quasihomogeneous(g)
    out.emit({"germ": str(g), "modality": mod}, f"germ: {g}\nmodality: {mod}")
    return EXIT_OK


def cmd_signature(args, out: Output) -> int:
    g = _germ(args)
    s = suspend_spectrum(spectrum_quasihomogeneous(g), args.suspend)
    plus, zero, minus = signature_from_spectrum(s)
    payload = {"germ": str(g), "nvars": s.nvars, "mu_plus": plus, "mu_zero": zero, "mu_minus": minus}
    text = f"germ: {g}\nvariables: {s.nvars}\nmu+ = {plus}, mu0 = {zero}, mu- = {minus}"
    if zero:
        text += "\n(integral spectral values: the intersection form is degenerate)"
    out.emit(payload, text)
    return EXIT_OK


def cmd_newton(args, out: Output) -> int:
    f = parse_polynomial(args.polynomial, _names(args))
    d = newton_diagram_2d(f)
    payload = {"vertices": [list(v) for v in d.vertices], "convenient": d.convenient, "newton_number": None}
    text = f"vertices: {' '.join(f'({a},{b})' for a, b in d.vertices)}\nconvenient: {'yes' if d.convenient else 'no'}"
    if d.convenient:
        payload["newton_number"] = newton_number_2d(d)
        text += f"\nnewton number: {payload['newton_number']}"
    out.emit(payload, text)
    return EXIT_OK


def _matrix_text(m) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join("  " + " ".join(str(x).rjust(width) for x in row) for row in m)


def cmd_weyl_info(args, out: Output) -> int:
    rs = weyl.build_root_system(args.type)
    data = weyl.exponents_and_coxeter_number(rs)
    c = weyl.coxeter_element(rs)
    payload = {
        "type": str(rs.rstype),
        "rank": rs.rank,
        "roots": len(rs.roots),
        "positive_roots": len(rs.positive_roots),
        "exponents": list(data.exponents),
        "coxeter_number": data.coxeter_number,
        "group_order": weyl.weyl_group_order(rs),
        "cartan": [list(r) for r in rs.cartan],
        "coxeter_element": [list(r) for r in c.mat],
        "coxeter_trace": weyl.trace(c),
        "coxeter_order": weyl.element_order(c),
    }
    text = "\n".join(
        [
            f"type: {rs.rstype}",
            f"rank: {rs.rank}",
            f"roots: {len(rs.roots)} ({len(rs.positive_roots)} positive)",
            f"exponents: {' '.join(map(str, data.exponents))}",
            f"coxeter number: {data.coxeter_number}",
            f"group order: {payload['group_order']}",
            "cartan matrix:",
            _matrix_text(rs.cartan),
            "coxeter element:",
            _matrix_text(c.mat),
            f"coxeter trace: {payload['coxeter_trace']}, order: {payload['coxeter_order']}",
        ]
    )
    out.emit(payload, text)
    return EXIT_OK


def cmd_hurwitz_orbit(args, out: Output) -> int:
    rs = weyl.build_root_system(args.type)
    orbit = braid.hurwitz_orbit(braid.simple_factorization(rs), rs, args.budget)
    payload = {"type": str(rs.rstype), "size": len(orbit)}
    text = f"type: {rs.rstype}\norbit size: {len(orbit)}"
    if args.list:
        payload["orbit"] = [[list(r) for r in fz.roots] for fz in orbit]
        text += "\n" + "\n".join(" ".join(str(list(r)) for r in fz.roots) for fz in orbit)
    out.emit(payload, text)
    return EXIT_OK


def _definiteness_report() -> Report:
    mismatches = []
    for t in weyl.supported_types(8):
        d = weyl.definiteness(weyl.negated(weyl.cartan_matrix(t)))
        if d is not weyl.Definiteness.NEGATIVE:
            mismatches.append(f"-Cartan({t}) is {d.value}")
    affine = weyl.definiteness(weyl.negated(weyl.affine_e8_cartan()))
    if affine is not weyl.Definiteness.SEMIDEFINITE:
        mismatches.append(f"negated affine E8 form is {affine.value}")
    for t in ("A1", "A2", "A3", "A4", "A5", "D4", "D5"):
        rs = weyl.build_root_system(t)
        n = len(weyl.enumerate_group(rs))
        if n != weyl.weyl_group_order(rs):
            mismatches.append(f"|W({t})| enumerated {n} != {weyl.weyl_group_order(rs)}")
    return Report("definiteness", "ADE up to rank 8", {}, {"types": len(weyl.supported_types(8))}, mismatches, not mismatches)


MU_CONST_EXAMPLE = "x^5 + x^2*y^2 + y^5"


def _all_reports(args) -> list[Report]:
    reports = []
    for t in ("A2", "A3", "D4"):
        reports.append(braid.verify_deligne_transitivity(weyl.build_root_system(t), args.budget))
    for t in ("A2", "A3"):
        reports.append(braid.verify_trace_criterion(weyl.build_root_system(t), "exhaustive", budget=args.budget))
    reports.append(
        braid.verify_trace_criterion(
            weyl.build_root_system("D4"), "sample", args.samples or 10_000, args.seed, args.budget
        )
    )
    for t in weyl.supported_types(8):
        reports.append(braid.verify_monodromy_trace(weyl.build_root_system(t)))
    reports.append(_definiteness_report())
    g = Germ.parse(MU_CONST_EXAMPLE)
    reports.append(mu_const_linear_check(g, [Fraction(1), Fraction(-1), Fraction(1, 2)]))
    return reports


def cmd_verify(args, out: Output) -> int:
    check = args.check
    reports: list[Report] = []
    if check in ("deligne", "trace", "monodromy") and not args.type:
        raise UsageError(f"verify {check} needs a root system type, e.g. A3")
    if check == "deligne":
        rs = weyl.build_root_system(args.type)
        reports.append(braid.verify_deligne_transitivity(rs, args.budget))
    elif check == "trace":
        rs = weyl.build_root_system(args.type)
        mode = "exhaustive" if rs.rank <= 3 and not args.samples else "sample"
        reports.append(
            braid.verify_trace_criterion(rs, mode, args.samples or 10_000, args.seed, args.budget)
        )
    elif check == "monodromy":
        reports.append(braid.verify_monodromy_trace(weyl.build_root_system(args.type)))
    elif check == "mu-const":
        if not args.type:
            raise UsageError("verify mu-const needs a polynomial")
        g = Germ.parse(args.type, _names(args))
        samples = [Fraction(t) for t in (args.t or ["1", "-1", "1/2"])]
        reports.append(mu_const_linear_check(g, samples))
    elif check == "definiteness":
        reports.append(_definiteness_report())
    elif check == "all":
        reports.extend(_all_reports(args))
    ok = all(r.passed for r in reports)
    payload = {"reports": [r.to_dict() for r in reports], "pass": ok}
    out.emit(payload, "\n".join(r.to_text() for r in reports))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_corpus(args, out: Output) -> int:
    path = bundled_corpus_path() if args.path == "bundled" else args.path
    try:
        report = corpus_run(path)
    except OSError as exc:
        raise AdesingError(f"cannot read corpus: {exc}") from exc
    out.emit(report.to_dict(), report.to_text())
    if not report.passed:
        return EXIT_MISMATCH
    return EXIT_ERROR if report.had_errors else EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks (default 1)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="BFS node budget (default 10^6)")

    parser = _Parser(prog="adesing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def poly_verb(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("polynomial")
        p.add_argument("--vars", help="comma-separated variable names (default: inferred)")
        p.set_defaults(func=func)
        return p

    poly_verb("classify", cmd_classify, "A-D-E type of a simple germ")
    poly_verb("spectrum", cmd_spectrum, "spectrum of a quasihomogeneous germ").add_argument(
        "--suspend", type=int, default=0, help="add this many squares of fresh variables"
    )
    poly_verb("milnor", cmd_milnor, "Milnor number and local algebra basis")
    poly_verb("modality", cmd_modality, "modality of a quasihomogeneous germ")
    poly_verb("signature", cmd_signature, "signature read off the spectrum").add_argument(
        "--suspend", type=int, default=0, help="add this many squares of fresh variables"
    )
    poly_verb("newton", cmd_newton, "Newton diagram and Newton number (2 variables)")

    p = sub.add_parser("weyl-info", parents=[common], help="root system data for a type such as E8")
    p.add_argument("type")
    p.set_defaults(func=cmd_weyl_info)

    p = sub.add_parser("hurwitz-orbit", parents=[common], help="Hurwitz orbit of the simple-root factorization")
    p.add_argument("type")
    p.add_argument("--list", action="store_true", help="print the orbit elements")
    p.set_defaults(func=cmd_hurwitz_orbit)

    p = sub.add_parser("verify", parents=[common], help="run a verification harness")
    p.add_argument("check", choices=["deligne", "trace", "monodromy", "mu-const", "definiteness", "all"])
    p.add_argument("type", nargs="?", help="root system type (or polynomial for mu-const)")
    p.add_argument("--samples", type=int, default=0, help="sampled tuples in S for the trace check")
    p.add_argument("--t", action="append", help="deformation parameter for mu-const (repeatable)")
    p.add_argument("--vars", help="variable names for mu-const")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="classify and check every germ of a corpus file")
    p.add_argument("path", help="corpus file, or 'bundled' for the normal forms")
    p.set_defaults(func=cmd_corpus)
    return parser


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.verb is None:
            raise UsageError(parser.format_help())
        out = Output(args.json, stdout)
        return args.func(args, out)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (AdesingError, PolynomialSyntaxError, ValueError) as exc:
        if getattr(args, "json", False):
            stdout.write(render_json({"error": str(exc)}))
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
