"""Exact multivariate polynomials over Q, a small expression parser,
weighted degrees and quasihomogeneity detection."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from adesing import linalg

Monomial = tuple  # tuple[int, ...] of non-negative exponents

DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v")


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse_polynomial`; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


def default_names(n: int) -> tuple[str, ...]:
    if n <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:n]
    return tuple(f"x{i + 1}" for i in range(n))


class Polynomial:
    """Immutable polynomial with rational coefficients in ``nvars`` variables.

    Terms are kept sorted by descending graded-lex order, zero coefficients
    are never stored.
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), nvars: int = 0):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has length {len(mono)}, expected {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms = tuple(
            sorted(((m, c) for m, c in acc.items() if c != 0), key=lambda t: grlex_key(t[0]), reverse=True)
        )
        self.nvars = nvars
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls({mono: 1}, nvars)

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> Polynomial:
        return cls({tuple(mono): coeff}, len(mono))

    # accessors

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self._terms]

    def coefficient(self, mono: Monomial) -> Fraction:
        return dict(self._terms).get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m, _ in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(m) for m, _ in self._terms), default=-1)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(itertools.chain(self._terms, other._terms), self.nvars)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(((m, -c) for m, c in self._terms), self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(((m, c * other) for m, c in self._terms), self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_monomial(self, mono: Monomial, coeff=1) -> Polynomial:
        """Multiply by ``coeff * z^mono``."""
        return Polynomial(
            ((tuple(a + b for a, b in zip(m, mono)), c * coeff) for m, c in self._terms), self.nvars
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self._terms))
        return self._hash

    # calculus and embeddings

    def derivative(self, i: int) -> Polynomial:
        out = []
        for m, c in self._terms:
            if m[i]:
                dm = m[:i] + (m[i] - 1,) + m[i + 1:]
                out.append((dm, c * m[i]))
        return Polynomial(out, self.nvars)

    def extend(self, extra: int) -> Polynomial:
        """Same polynomial viewed in ``nvars + extra`` variables."""
        return Polynomial(((m + (0,) * extra, c) for m, c in self._terms), self.nvars + extra)

    def restrict(self, keep: Sequence[int]) -> Polynomial:
        """Drop the variables not in ``keep``; they must not occur."""
        keep = list(keep)
        drop = [i for i in range(self.nvars) if i not in keep]
        out = []
        for m, c in self._terms:
            if any(m[i] for i in drop):
                raise ValueError("cannot restrict: dropped variable occurs")
            out.append((tuple(m[i] for i in keep), c))
        return Polynomial(out, len(keep))

    def variables_used(self) -> set[int]:
        return {i for m, _ in self._terms for i, e in enumerate(m) if e}

    # printing

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self._terms):
            factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, nvars={self.nvars})"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            if sym not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {sym!r}", start)
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = list(names)
        self.n = len(self.names)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in "+-" and self.peek()[0] != "end":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def _nat(self) -> int:
        tok = self.peek()
        if tok[0] == "-":
            raise PolynomialSyntaxError("negative exponent", tok[2])
        return int(self.take("num")[1])

    def factor(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            c = Fraction(int(value))
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.peek()
                den = int(self.take("num")[1])
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                c = c / den
            return Polynomial.constant(c, self.n)
        if kind == "ident":
            self.take()
            if value not in self.names:
                raise PolynomialSyntaxError(f"unknown variable {value!r}", pos)
            p = Polynomial.variable(self.names.index(value), self.n)
            if self.peek()[0] == "^":
                self.take()
                p = p ** self._nat()
            return p
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                p = p ** self._nat()
            return p
        what = "end of input" if kind == "end" else repr(value)
        raise PolynomialSyntaxError(f"unexpected {what}", pos)


def infer_variables(text: str) -> list[str]:
    """Variable names occurring in ``text``: x, y, z, w, u, v first, then the rest sorted."""
    found = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    ordered = [n for n in DEFAULT_NAMES if n in found]
    ordered += sorted(found - set(DEFAULT_NAMES))
    return ordered


def parse_polynomial(text: str, names: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`.

    Grammar: sums and differences of products of rational coefficients,
    variables with optional non-negative ``^`` exponents, and parenthesised
    sub-expressions. Multiplication must be written with ``*``.
    """
    if names is None:
        names = infer_variables(text)
    parser = _Parser(text, names)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
    return result


# ---------------------------------------------------------------- weights


@dataclass(frozen=True)
class Weights:
    nu: tuple

    def __post_init__(self):
        nu = tuple(Fraction(v) for v in self.nu)
        if any(not 0 < v < 1 for v in nu):
            raise ValueError(f"weights must lie in (0, 1): {nu}")
        object.__setattr__(self, "nu", nu)

    def __len__(self) -> int:
        return len(self.nu)

    def __iter__(self):
        return iter(self.nu)

    def total(self) -> Fraction:
        return sum(self.nu, Fraction(0))


def weighted_degree(m: Monomial, w: Weights | Sequence) -> Fraction:
    nu = w.nu if isinstance(w, Weights) else tuple(w)
    if len(m) != len(nu):
        raise ValueError(f"length mismatch: monomial {len(m)}, weights {len(nu)}")
    return sum((Fraction(k) * v for k, v in zip(m, nu)), Fraction(0))


def find_quasihomogeneous_weights(f: Polynomial) -> Weights | None:
    """Weights making every monomial of ``f`` of weighted degree 1, or None.

    When the weights are not pinned down by ``f``, the vertex of
    ``{<k, nu> = 1, 0 < nu <= 1/2}`` with the smallest total weight is
    returned, ties broken lexicographically.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no weight system")
    rows = f.monomials()
    n = f.nvars
    sol = linalg.solve_affine(rows, [1] * len(rows))
    if sol is None:
        return None
    particular, kernel = sol
    if not kernel:
        try:
            return Weights(tuple(particular))
        except ValueError:
            return None
    half = Fraction(1, 2)
    candidates = []
    for fixed in itertools.product((None, 0, half), repeat=n):
        extra_rows = []
        extra_rhs = []
        for i, v in enumerate(fixed):
            if v is not None:
                extra_rows.append(tuple(1 if j == i else 0 for j in range(n)))
                extra_rhs.append(v)
        res = linalg.solve_affine(list(rows) + extra_rows, [1] * len(rows) + extra_rhs)
        if res is None or res[1]:
            continue
        nu = tuple(res[0])
        if all(0 < v <= half for v in nu):
            candidates.append(nu)
    if not candidates:
        return None
    best = min(candidates, key=lambda nu: (sum(nu), nu))
    return Weights(best)


def is_quasihomogeneous(f: Polynomial, w: Weights) -> bool:
    return all(weighted_degree(m, w) == 1 for m in f.monomials())


# ---------------------------------------------------------------- jets


def _check_no_low_terms(f: Polynomial) -> None:
    if any(sum(m) <= 1 for m in f.monomials()):
        raise ValueError("polynomial has a constant or linear part")


def hessian_matrix(f: Polynomial) -> list[list[Fraction]]:
    """Matrix of second partial derivatives at the origin."""
    n = f.nvars
    h = [[Fraction(0)] * n for _ in range(n)]
    for m, c in f.items():
        if sum(m) != 2:
            continue
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        i, j = idx
        if i == j:
            h[i][i] = 2 * c
        else:
            h[i][j] = h[j][i] = c
    return h


def hessian_corank(f: Polynomial) -> int:
    _check_no_low_terms(f)
    return f.nvars - linalg.rank(hessian_matrix(f))


def jacobian_generators(f: Polynomial) -> list[Polynomial]:
    return [f.derivative(i) for i in range(f.nvars)]
