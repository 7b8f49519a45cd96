"""Buchberger completion, normal forms and standard-monomial bases.

Everything works in a graded order (optionally weighted) with
lexicographic tie-break. Local algebras at the origin are obtained by
adding a power of the maximal ideal, which makes the ideal primary to the
origin without needing a local standard-basis algorithm.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from adesing.errors import NonIsolatedSingularity, NotZeroDimensional
from adesing.poly import Monomial, Polynomial, jacobian_generators

# local-dimension search gives up when the origin is not isolated
MAX_TRUNCATION = 40


@dataclass(frozen=True)
class TermOrder:
    """Graded order by ``<weights, k>``, ties broken lexicographically."""

    weights: tuple | None = None

    def key(self, m: Monomial) -> tuple:
        if self.weights is None:
            return (sum(m), m)
        return (sum(Fraction(w) * e for w, e in zip(self.weights, m)), m)


GRLEX = TermOrder()


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: TermOrder = GRLEX
    reduced: bool = True
    nvars: int = field(default=0)

    def leading_monomials(self) -> list[Monomial]:
        return [leading_monomial(g, self.order) for g in self.generators]

    def to_strings(self, names=None) -> list[str]:
        return [g.to_string(names) for g in self.generators]


@dataclass(frozen=True)
class QuotientBasis:
    monomials: tuple

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m) -> bool:
        return tuple(m) in self.monomials


def leading_monomial(p: Polynomial, order: TermOrder = GRLEX) -> Monomial:
    return max(p.monomials(), key=order.key)


# ---------------------------------------------------------------- dict kernels
# Internal polynomials are {monomial: Fraction}; converted at the API boundary.


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(p: dict, key) -> Monomial:
    return max(p, key=key)


def _sub_multiple(p: dict, q: dict, shift: Monomial, coeff: Fraction) -> None:
    """p -= coeff * z^shift * q, in place."""
    for m, c in q.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        v = p.get(mm, 0) - coeff * c
        if v:
            p[mm] = v
        else:
            p.pop(mm, None)


def _reduce(p: dict, basis: list[dict], leads: list[Monomial], key) -> dict:
    """Full reduction of ``p``; returns the remainder."""
    p = dict(p)
    rem: dict = {}
    while p:
        m = _lead(p, key)
        c = p[m]
        for g, lm in zip(basis, leads):
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _sub_multiple(p, g, shift, c / g[lm])
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(p: dict, key) -> dict:
    lc = p[_lead(p, key)]
    return {m: c / lc for m, c in p.items()}


def _spoly(f: dict, g: dict, lf: Monomial, lg: Monomial) -> dict:
    lcm = _lcm(lf, lg)
    out: dict = {}
    _sub_multiple(out, f, tuple(a - b for a, b in zip(lcm, lf)), -1 / f[lf])
    _sub_multiple(out, g, tuple(a - b for a, b in zip(lcm, lg)), 1 / g[lg])
    return out


def _buchberger_dicts(gens: list[dict], key) -> list[dict]:
    basis = [_monic(g, key) for g in gens if g]
    leads = [_lead(g, key) for g in basis]
    heap: list = []
    live: set = set()

    def push(i: int, j: int) -> None:
        live.add((i, j))
        heapq.heappush(heap, (key(_lcm(leads[i], leads[j])), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    while heap:
        # normal strategy; ties resolved by pair indices for determinism
        _, i, j = heapq.heappop(heap)
        live.discard((i, j))
        li, lj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        if len(basis[i]) == 1 and len(basis[j]) == 1:
            continue  # S-polynomial of two monomials vanishes
        lcm = _lcm(li, lj)
        # chain criterion
        if any(
            k != i
            and k != j
            and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in live
            and (min(j, k), max(j, k)) not in live
            for k in range(len(basis))
        ):
            continue
        r = _reduce(_spoly(basis[i], basis[j], li, lj), basis, leads, key)
        if r:
            r = _monic(r, key)
            basis.append(r)
            leads.append(_lead(r, key))
            n = len(basis) - 1
            for k in range(n):
                push(k, n)
    return _interreduce(basis, key)


def _interreduce(basis: list[dict], key) -> list[dict]:
    leads = [_lead(g, key) for g in basis]
    keep = []
    for i, li in enumerate(leads):
        dominated = any(
            _divides(lj, li) and (lj != li or j < i) for j, lj in enumerate(leads) if j != i
        )
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        olead = [_lead(o, key) for o in others]
        lm = _lead(g, key)
        tail = {m: c for m, c in g.items() if m != lm}
        red = _reduce(tail, others, olead, key)
        red[lm] = g[lm]
        out.append(_monic(red, key))
    out.sort(key=lambda g: key(_lead(g, key)))
    return out


# ---------------------------------------------------------------- public API


def buchberger(gens: Sequence[Polynomial], order: TermOrder = GRLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    nvars = gens[0].nvars
    nonzero = [g.terms for g in gens if not g.is_zero()]
    if not nonzero:
        return GroebnerBasis((), order, True, nvars)
    out = _buchberger_dicts(nonzero, order.key)
    return GroebnerBasis(tuple(Polynomial(g, nvars) for g in out), order, True, nvars)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    basis = [g.terms for g in gb.generators]
    leads = gb.leading_monomials()
    return Polynomial(_reduce(p.terms, basis, leads, gb.order.key), p.nvars)


def ideal_contains(gb: GroebnerBasis, p: Polynomial) -> bool:
    return normal_form(p, gb).is_zero()


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    return _axis_bounds(gb) is not None


def _axis_bounds(gb: GroebnerBasis) -> list[int] | None:
    n = gb.nvars
    bounds = []
    leads = gb.leading_monomials()
    for i in range(n):
        pure = [m[i] for m in leads if all(e == 0 for j, e in enumerate(m) if j != i) and m[i] > 0]
        if not pure and not any(sum(m) == 0 for m in leads):
            return None
        bounds.append(min(pure) if pure else 0)
    return bounds


def quotient_monomial_basis(gb: GroebnerBasis) -> QuotientBasis:
    """Standard monomials (not divisible by any leading monomial)."""
    bounds = _axis_bounds(gb)
    if bounds is None:
        raise NotZeroDimensional("ideal is not zero-dimensional: the staircase is infinite")
    leads = gb.leading_monomials()
    if any(sum(m) == 0 for m in leads):
        return QuotientBasis(())
    mons = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(l, m) for l in leads)
    ]
    mons.sort(key=gb.order.key)
    return QuotientBasis(tuple(mons))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    out = []
    for c in itertools.combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in c:
            m[i] += 1
        out.append(tuple(m))
    return out


def _truncated(gens: Sequence[Polynomial], n: int, level: int) -> GroebnerBasis:
    power = [Polynomial.monomial(m) for m in monomials_of_degree(n, level)]
    return buchberger(list(gens) + power)


def local_quotient(gens: Sequence[Polynomial], nvars: int | None = None) -> GroebnerBasis:
    """Groebner basis of ``I + m^N`` with ``N`` large enough that the quotient
    equals the localisation of ``C[z]/I`` at the origin.

    ``I`` is generated by ``gens``; the origin must be an isolated point of
    its zero set (otherwise :class:`NonIsolatedSingularity`).
    """
    gens = [g for g in gens if not g.is_zero()]
    n = nvars if nvars is not None else gens[0].nvars
    if not gens:
        raise NonIsolatedSingularity()
    gb = buchberger(gens)
    if is_zero_dimensional(gb):
        # local length <= global dimension, and m^mu kills a local algebra of length mu
        level = max(len(quotient_monomial_basis(gb)), 1)
        if all(ideal_contains(gb, Polynomial.monomial(m)) for m in monomials_of_degree(n, level)):
            return gb  # origin is the only zero: global quotient is already local
        return _truncated(gens, n, level)
    prev = None
    for level in range(1, MAX_TRUNCATION + 1):
        gb = _truncated(gens, n, level)
        d = len(quotient_monomial_basis(gb))
        if d == prev:
            return gb
        prev = d
    raise NonIsolatedSingularity()


def jacobian_basis(f: Polynomial) -> GroebnerBasis:
    return buchberger(jacobian_generators(f))


def global_milnor_number(f: Polynomial) -> int:
    """Dimension of C[z]/(df): counts all critical points in C^n."""
    gb = jacobian_basis(f)
    if not is_zero_dimensional(gb):
        raise NonIsolatedSingularity()
    return len(quotient_monomial_basis(gb))


def local_algebra(f: Polynomial) -> GroebnerBasis:
    """Basis presenting the local algebra of ``f`` at the origin."""
    return local_quotient(jacobian_generators(f), f.nvars)


def milnor_number(f: Polynomial) -> int:
    return len(quotient_monomial_basis(local_algebra(f)))


def class_in_local_algebra(f: Polynomial) -> Polynomial:
    """Normal form of ``f`` modulo its gradient ideal in the local algebra."""
    return normal_form(f, local_algebra(f))
