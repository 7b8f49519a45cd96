"""Germs of functions at the origin: spectrum, modality, signature, the
A-D-E classifier and the linear mu-constant deformation check."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from adesing import grobner, weyl
from adesing.errors import (
    AdesingError,
    ClassificationFailure,
    CorankTooLarge,
    NoWeightSystem,
    NotSimple,
)
from adesing.newton import newton_diagram_2d
from adesing.poly import (
    Polynomial,
    Weights,
    default_names,
    find_quasihomogeneous_weights,
    hessian_corank,
    parse_polynomial,
    weighted_degree,
)
from adesing.reports import Report, rational_str


class Germ:
    """A polynomial germ with an isolated critical point at the origin.

    Construction validates that there is no constant or linear part and
    that the local algebra is finite.
    """

    def __init__(self, poly: Polynomial, names: Sequence[str] | None = None):
        if poly.is_zero():
            raise ValueError("the zero polynomial is not an isolated singularity")
        if any(sum(m) <= 1 for m in poly.monomials()):
            raise ValueError("germ has a constant or linear part")
        self.poly = poly
        self.nvars = poly.nvars
        self.names = tuple(names) if names is not None else default_names(poly.nvars)
        # raises NonIsolatedSingularity
        self.local_basis

    @classmethod
    def parse(cls, text: str, names: Sequence[str] | None = None) -> Germ:
        from adesing.poly import infer_variables

        names = list(names) if names is not None else infer_variables(text)
        return cls(parse_polynomial(text, names), names)

    def __repr__(self) -> str:
        return f"Germ({self.poly.to_string(self.names)!r})"

    def __str__(self) -> str:
        return self.poly.to_string(self.names)

    @functools.cached_property
    def local_gb(self) -> grobner.GroebnerBasis:
        return grobner.local_algebra(self.poly)

    @functools.cached_property
    def local_basis(self) -> grobner.QuotientBasis:
        return grobner.quotient_monomial_basis(self.local_gb)

    @property
    def mu(self) -> int:
        return len(self.local_basis)

    @functools.cached_property
    def weights(self) -> Weights | None:
        return find_quasihomogeneous_weights(self.poly)

    def require_weights(self) -> Weights:
        if self.weights is None:
            raise NoWeightSystem()
        return self.weights


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(Fraction(v) for v in self.values)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def is_symmetric(self) -> bool:
        centre2 = self.nvars - 2
        return sorted(centre2 - v for v in self.values) == list(self.values)

    def strings(self) -> list[str]:
        return [rational_str(v) for v in self.values]


def milnor_formula(w: Weights) -> Fraction:
    """prod(1/nu_i - 1)."""
    return math.prod((1 / v - 1 for v in w.nu), start=Fraction(1))


def spectrum_quasihomogeneous(g: Germ) -> Spectrum:
    """{<k + 1, nu> - 1} over a monomial basis of the local algebra."""
    w = g.require_weights()
    vals = [weighted_degree(tuple(a + 1 for a in k), w) - 1 for k in g.local_basis]
    return Spectrum(tuple(vals), g.nvars)


def suspend_spectrum(s: Spectrum, times: int) -> Spectrum:
    if times < 0:
        raise ValueError("suspension count must be non-negative")
    shift = Fraction(times, 2)
    return Spectrum(tuple(v + shift for v in s.values), s.nvars + times)


def spectrum_length(s: Spectrum) -> Fraction:
    if not s.values:
        raise ValueError("empty spectrum")
    return s.values[-1] - s.values[0]


def in_simple_interval(s: Spectrum) -> bool:
    """All values in the open interval (n/2 - 3/2, n/2 - 1/2)."""
    lo = Fraction(s.nvars - 3, 2)
    hi = Fraction(s.nvars - 1, 2)
    return all(lo < v < hi for v in s.values)


def is_simple(g: Germ) -> bool:
    return spectrum_length(spectrum_quasihomogeneous(g)) < 1


def signature_from_spectrum(s: Spectrum) -> tuple[int, int, int]:
    """(mu_plus, mu_zero, mu_minus).

    mu_zero counts integral spectral values; a nonzero count means the
    intersection form is degenerate and the other two entries carry no
    signature information.
    """
    plus = zero = minus = 0
    for v in s.values:
        if v.denominator == 1:
            zero += 1
        elif math.floor(v) % 2:
            plus += 1
        else:
            minus += 1
    return plus, zero, minus


def monodromy_eigenvalue_angles(s: Spectrum) -> tuple[tuple, int]:
    """Fractional parts of the spectrum and the order of the monodromy."""
    angles = tuple(sorted(v - math.floor(v) for v in s.values))
    order = math.lcm(*(a.denominator for a in angles)) if angles else 1
    return angles, order


def modality_quasihomogeneous(g: Germ) -> int:
    """Number of upper and diagonal monomials of the local algebra basis."""
    w = g.require_weights()
    return sum(1 for k in g.local_basis if weighted_degree(k, w) >= 1)


# ---------------------------------------------------------------- classification


@dataclass(frozen=True)
class ClassificationResult:
    rstype: weyl.RootSystemType
    mu: int
    coxeter_number: int
    exponents: tuple
    weights: Weights
    spectrum: Spectrum
    core_variables: tuple = ()

    @property
    def letter(self) -> str:
        return self.rstype.letter

    @property
    def rank(self) -> int:
        return self.rstype.rank


def suspension_variables(f: Polynomial) -> list[int]:
    """Variables occurring only in a single pure square term c*z^2."""
    out = []
    for i in range(f.nvars):
        with_i = [m for m in f.monomials() if m[i]]
        if len(with_i) == 1 and with_i[0][i] == 2 and sum(with_i[0]) == 2:
            out.append(i)
    return out


def strip_suspension(g: Germ) -> tuple[Germ, tuple]:
    """Remove pure-square variables, keeping at least one variable."""
    strip = suspension_variables(g.poly)
    if len(strip) == g.nvars:
        strip = strip[1:]
    keep = tuple(i for i in range(g.nvars) if i not in strip)
    rest = Polynomial([(m, c) for m, c in g.poly.items() if not any(m[i] for i in strip)], g.nvars)
    core = rest.restrict(keep)
    return Germ(core, [g.names[i] for i in keep]), keep


def three_variable_spectrum(core: Germ) -> Spectrum:
    return suspend_spectrum(spectrum_quasihomogeneous(core), 3 - core.nvars)


def classify_ade(g: Germ) -> ClassificationResult:
    if hessian_corank(g.poly) > 2:
        raise CorankTooLarge(f"corank {hessian_corank(g.poly)} > 2: not a simple singularity")
    core, keep = strip_suspension(g)
    if core.nvars > 2:
        raise CorankTooLarge("germ is not split into at most two variables plus squares")
    if core.weights is None:
        raise NoWeightSystem()
    spec = spectrum_quasihomogeneous(core)
    length = spectrum_length(spec)
    if length >= 1:
        raise NotSimple(f"spectrum length {length} >= 1: not a simple singularity")
    s3 = three_variable_spectrum(core)
    if not all(0 < v < 1 for v in s3.values):
        raise ClassificationFailure(f"suspended spectrum leaves (0, 1): {s3.strings()}")
    h = math.lcm(*(v.denominator for v in s3.values))
    exps = tuple(sorted(int(v * h) for v in s3.values))
    matches = [
        t
        for t, data in weyl.exponent_table(core.mu).items()
        if data.coxeter_number == h and data.exponents == exps
    ]
    if len(matches) != 1:
        raise ClassificationFailure(f"no unique ADE type with h={h}, exponents={exps}")
    weights = g.weights if g.weights is not None else core.weights
    full_spec = spectrum_quasihomogeneous(g) if g.weights is not None else spec
    return ClassificationResult(matches[0], g.mu, h, exps, weights, full_spec, keep)


# ---------------------------------------------------------------- mu = const


@dataclass(frozen=True)
class DeformationSample:
    t: Fraction
    diagram_preserved: bool | None
    local_dimension: int | None
    global_dimension: int | None
    passed: bool
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "t": rational_str(self.t),
            "diagram_preserved": self.diagram_preserved,
            "local_dimension": self.local_dimension,
            "global_dimension": self.global_dimension,
            "pass": self.passed,
            "error": self.error,
        }


def class_in_local_algebra(g: Germ) -> Polynomial:
    return grobner.normal_form(g.poly, g.local_gb)


def mu_const_linear_check(g: Germ, samples: Iterable) -> Report:
    """Check that f + t[f] keeps the Newton diagram and the Milnor number.

    Passes vacuously when [f] = 0.
    """
    samples = [Fraction(t) for t in samples]
    cls = class_in_local_algebra(g)
    params = {"germ": str(g), "class": cls.to_string(g.names), "samples": [rational_str(t) for t in samples]}
    if cls.is_zero():
        rep = Report("mu-const", "linear-deformation", params, {"samples": len(samples), "passed": len(samples)})
        rep.notes.append("class of f is zero: vacuous pass")
        return rep
    base_diagram = newton_diagram_2d(g.poly) if g.nvars == 2 else None
    results = []
    for t in samples:
        ft = g.poly + cls * t
        diag_ok = None
        if base_diagram is not None:
            diag_ok = newton_diagram_2d(ft) == base_diagram
        try:
            local = grobner.milnor_number(ft)
        except AdesingError as exc:
            results.append(DeformationSample(t, diag_ok, None, None, False, str(exc)))
            continue
        try:
            glob = grobner.global_milnor_number(ft)
        except AdesingError:
            glob = None
        ok = local == g.mu and diag_ok is not False
        results.append(DeformationSample(t, diag_ok, local, glob, ok))
    mismatches = [f"t={rational_str(r.t)}: {r.to_dict()}" for r in results if not r.passed]
    rep = Report(
        "mu-const",
        "linear-deformation",
        params,
        {"samples": len(results), "passed": sum(r.passed for r in results), "mu": g.mu},
        mismatches,
        not mismatches,
    )
    rep.details = [r.to_dict() for r in results]
    for r in results:
        rep.notes.append(
            f"t={rational_str(r.t)}: diagram={'same' if r.diagram_preserved else r.diagram_preserved}, "
            f"local={r.local_dimension}, global={r.global_dimension}, {'pass' if r.passed else 'FAIL'}"
            + (f" ({r.error})" if r.error else "")
        )
    return rep
