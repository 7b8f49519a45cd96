"""Germ corpora: ``<name> ; <polynomial>`` per line, ``#`` comments.

A corpus run classifies every germ and attaches the invariant checks
(spectrum symmetry, Milnor number cross-check, exponent bridge to the Weyl
side, Newton number where the diagram is convenient, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from adesing import weyl
from adesing.braid import verify_monodromy_trace
from adesing.errors import AdesingError, NotSimple
from adesing.newton import newton_diagram_2d, newton_number_2d
from adesing.poly import PolynomialSyntaxError
from adesing.reports import rational_str
from adesing.singularity import (
    Germ,
    class_in_local_algebra,
    classify_ade,
    in_simple_interval,
    milnor_formula,
    modality_quasihomogeneous,
    monodromy_eigenvalue_angles,
    signature_from_spectrum,
    spectrum_length,
    spectrum_quasihomogeneous,
    strip_suspension,
    three_variable_spectrum,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    line: int


@dataclass
class CorpusError:
    line: int
    message: str

    def to_dict(self) -> dict:
        return {"line": self.line, "error": self.message}


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("adesing") / "data" / "normal_forms.txt"))


def parse_corpus(text: str) -> tuple[list[CorpusEntry], list[CorpusError]]:
    entries, errors = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            errors.append(CorpusError(lineno, "expected '<name> ; <polynomial>'"))
            continue
        name, poly = (part.strip() for part in line.split(";", 1))
        if not name or not poly:
            errors.append(CorpusError(lineno, "empty name or polynomial"))
            continue
        entries.append(CorpusEntry(name, poly, lineno))
    return entries, errors


@dataclass
class GermReport:
    name: str
    polynomial: str
    line: int
    status: str = "classified"
    mu: int | None = None
    weights: list | None = None
    spectrum: list | None = None
    type: str | None = None
    h: int | None = None
    exponents: list | None = None
    error: str | None = None
    checks: list = field(default_factory=list)

    def check(self, check_id: str, ok: bool) -> None:
        self.checks.append({"id": check_id, "pass": bool(ok)})

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "polynomial": self.polynomial,
            "line": self.line,
            "status": self.status,
            "mu": self.mu,
            "weights": self.weights,
            "spectrum": self.spectrum,
            "type": self.type,
            "h": self.h,
            "exponents": self.exponents,
            "error": self.error,
            "checks": self.checks,
        }


def _expected_type(name: str) -> weyl.RootSystemType | None:
    try:
        return weyl.RootSystemType.parse(name)
    except ValueError:
        return None


def analyze_entry(entry: CorpusEntry) -> GermReport:
    rep = GermReport(entry.name, entry.text, entry.line)
    try:
        g = Germ.parse(entry.text)
    except PolynomialSyntaxError as exc:
        rep.status, rep.error = "error", f"line {entry.line}: {exc}"
        return rep
    except (AdesingError, ValueError) as exc:
        rep.status, rep.error = "error", f"line {entry.line}: {exc}"
        return rep
    rep.polynomial = str(g)
    rep.mu = g.mu
    if g.weights is not None:
        rep.weights = [rational_str(v) for v in g.weights]
        spec = spectrum_quasihomogeneous(g)
        rep.spectrum = spec.strings()
        rep.check("spectrum-size", len(spec) == g.mu)
        rep.check("spectrum-symmetry", spec.is_symmetric())
        rep.check("milnor-formula", milnor_formula(g.weights) == g.mu)
        rep.check("class-zero", class_in_local_algebra(g).is_zero())
    if g.nvars == 2:
        diagram = newton_diagram_2d(g.poly)
        if diagram.convenient:
            rep.check("newton-number", newton_number_2d(diagram) == g.mu)
    try:
        result = classify_ade(g)
    except NotSimple as exc:
        rep.status, rep.error = "not-simple", str(exc)
        core, _ = strip_suspension(g)
        if core.weights is not None:
            rep.check("spectrum-length-at-least-one", spectrum_length(spectrum_quasihomogeneous(core)) >= 1)
            rep.check("modality-positive", modality_quasihomogeneous(core) >= 1)
        return rep
    except AdesingError as exc:
        rep.status, rep.error = "unclassified", str(exc)
        return rep

    rep.type = str(result.rstype)
    rep.h = result.coxeter_number
    rep.exponents = list(result.exponents)
    core, _ = strip_suspension(g)
    s3 = three_variable_spectrum(core)
    rep.check("spectrum-length", spectrum_length(s3) < 1)
    rep.check("spectrum-interval", in_simple_interval(s3))
    rep.check("modality-zero", modality_quasihomogeneous(core) == 0)
    rep.check("signature-negative-definite", signature_from_spectrum(s3) == (0, 0, g.mu))

    rs = weyl.build_root_system(result.rstype)
    data = weyl.exponents_and_coxeter_number(rs)
    h = math.lcm(*(v.denominator for v in s3.values))
    bridge = sorted(v * data.coxeter_number for v in s3.values) == [Fraction(m) for m in data.exponents]
    rep.check("exponent-bridge", bridge and h == data.coxeter_number)
    angles, order = monodromy_eigenvalue_angles(s3)
    coxeter_angles = tuple(sorted(Fraction(m, data.coxeter_number) for m in data.exponents))
    rep.check("monodromy-angles", angles == coxeter_angles and order == data.coxeter_number)
    rep.check("coxeter-trace", verify_monodromy_trace(rs).passed)
    expected = _expected_type(entry.name)
    if expected is not None:
        rep.check("expected-type", expected == result.rstype)
    return rep


@dataclass
class CorpusReport:
    germs: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.germs)

    @property
    def had_errors(self) -> bool:
        return bool(self.errors) or any(g.status == "error" for g in self.germs)

    def to_dict(self) -> dict:
        return {
            "germs": [g.to_dict() for g in self.germs],
            "errors": [e.to_dict() for e in self.errors],
            "pass": self.passed,
        }

    def to_text(self) -> str:
        header = f"{'name':<8} {'type':<5} {'mu':>3} {'h':>3}  {'checks':<8} exponents / status"
        lines = [header, "-" * len(header)]
        for g in self.germs:
            n_ok = sum(c["pass"] for c in g.checks)
            checks = f"{n_ok}/{len(g.checks)}"
            tail = " ".join(map(str, g.exponents)) if g.exponents else f"{g.status}: {g.error}"
            lines.append(
                f"{g.name:<8} {g.type or '-':<5} {g.mu if g.mu is not None else '-':>3} "
                f"{g.h if g.h is not None else '-':>3}  {checks:<8} {tail}"
            )
            for c in g.checks:
                if not c["pass"]:
                    lines.append(f"    FAILED {c['id']}")
        for e in self.errors:
            lines.append(f"line {e.line}: {e.message}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def corpus_run(path: str | Path) -> CorpusReport:
    entries, errors = parse_corpus(Path(path).read_text(encoding="utf-8"))
    return run_entries(entries, errors)


def run_entries(entries: list[CorpusEntry], errors: list[CorpusError] | None = None) -> CorpusReport:
    report = CorpusReport(errors=list(errors or []))
    for entry in entries:
        report.germs.append(analyze_entry(entry))
    return report
