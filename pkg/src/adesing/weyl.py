"""Simply-laced root systems and their Weyl groups.

Vectors live in simple-root coordinates and the Cartan matrix is the Gram
matrix of the invariant form, so every computation is over the integers.
"""

from __future__ import annotations

import enum
import functools
import math
import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from adesing import linalg
from adesing.errors import LimitExceeded, Undecided

# conjugacy classes are enumerated exactly up to this group order
EXACT_CONJUGACY_LIMIT = 10_000
DEFAULT_BUDGET = 1_000_000

Vector = tuple


@dataclass(frozen=True, order=True)
class RootSystemType:
    letter: str
    rank: int

    def __post_init__(self):
        ok = {
            "A": self.rank >= 1,
            "D": self.rank >= 4,
            "E": self.rank in (6, 7, 8),
        }.get(self.letter)
        if not ok:
            raise ValueError(f"invalid root system type {self.letter}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> RootSystemType:
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


def dynkin_edges(t: RootSystemType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, 0-based, Bourbaki numbering."""
    n = t.rank
    if t.letter == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.letter == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: chain 1-3-4-...-n with node 2 attached to node 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]


def cartan_matrix(t: RootSystemType) -> tuple:
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in dynkin_edges(t):
        c[i][j] = c[j][i] = -1
    return linalg.as_matrix(c)


def affine_e8_cartan() -> tuple:
    """Cartan matrix of the extended E8 diagram (extra node on node 8)."""
    base = [list(r) + [0] for r in cartan_matrix(RootSystemType("E", 8))]
    base.append([0] * 9)
    base[8][8] = 2
    base[7][8] = base[8][7] = -1
    return linalg.as_matrix(base)


def is_positive(v: Vector) -> bool:
    return all(x >= 0 for x in v) and any(v)


def positive_part(v: Vector) -> Vector:
    """The root among ``v``, ``-v`` with non-negative coordinates."""
    return v if is_positive(v) else tuple(-x for x in v)


@dataclass(frozen=True)
class GroupElement:
    mat: tuple

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(linalg.identity(n))

    @property
    def rank(self) -> int:
        return len(self.mat)

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(linalg.matmul(self.mat, other.mat))

    def __call__(self, v: Vector) -> Vector:
        return linalg.matvec(self.mat, v)

    def power(self, k: int) -> GroupElement:
        result = GroupElement.identity(self.rank)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def inverse(self, cartan: Sequence[Sequence]) -> GroupElement:
        # w^T B w = B  =>  w^{-1} = B^{-1} w^T B
        binv = _inverse(cartan)
        m = linalg.matmul(linalg.matmul(binv, linalg.transpose(self.mat)), cartan)
        return GroupElement(tuple(tuple(int(x) for x in row) for row in m))

    def is_identity(self) -> bool:
        return self.mat == linalg.identity(self.rank)

    def flat(self) -> tuple:
        return tuple(x for row in self.mat for x in row)


def _inverse(a: Sequence[Sequence]) -> tuple:
    n = len(a)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x, _ = linalg.solve_affine(a, e)
        cols.append(x)
    return linalg.transpose(cols)


@dataclass(frozen=True, eq=False)
class RootSystem:
    rstype: RootSystemType
    cartan: tuple
    roots: tuple

    @property
    def rank(self) -> int:
        return self.rstype.rank

    @property
    def simple_roots(self) -> tuple:
        return linalg.identity(self.rank)

    @functools.cached_property
    def positive_roots(self) -> tuple:
        return tuple(r for r in self.roots if is_positive(r))

    @functools.cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    def form(self, u: Vector, v: Vector):
        return sum(u[i] * self.cartan[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if self.cartan[i][j])

    def is_root(self, v: Vector) -> bool:
        return tuple(v) in self.root_set

    def height(self, v: Vector) -> int:
        return sum(v)

    def simple_reflections(self) -> list[GroupElement]:
        return [reflection(self, e) for e in self.simple_roots]


def _simple_reflect(cartan, v: Vector, i: int) -> Vector:
    c = sum(cartan[i][j] * v[j] for j in range(len(v)))
    return v[:i] + (v[i] - c,) + v[i + 1:]


@functools.lru_cache(maxsize=None)
def build_root_system(t: RootSystemType | str) -> RootSystem:
    """Close the simple roots under the simple reflections."""
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    cartan = cartan_matrix(t)
    n = t.rank
    seen = set(linalg.identity(n))
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = _simple_reflect(cartan, v, i)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    roots = tuple(sorted(seen, key=lambda r: (-sum(r) if sum(r) < 0 else sum(r), sum(r) < 0, r)))
    return RootSystem(t, cartan, roots)


def reflection(rs: RootSystem, alpha: Vector) -> GroupElement:
    """x -> x - B(x, alpha) alpha."""
    alpha = tuple(alpha)
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {rs.rstype}")
    n = rs.rank
    ca = linalg.matvec(rs.cartan, alpha)
    return GroupElement(
        tuple(tuple((1 if i == j else 0) - alpha[i] * ca[j] for j in range(n)) for i in range(n))
    )


def product(elements: Iterable[GroupElement], n: int) -> GroupElement:
    result = GroupElement.identity(n)
    for g in elements:
        result = result @ g
    return result


def coxeter_element(rs: RootSystem) -> GroupElement:
    """s_1 s_2 ... s_mu in index order."""
    return product(rs.simple_reflections(), rs.rank)


@dataclass(frozen=True)
class ExponentData:
    exponents: tuple
    coxeter_number: int


def exponents_and_coxeter_number(rs: RootSystem) -> ExponentData:
    """Exponents as the partition dual to the heights of the positive roots."""
    heights = Counter(rs.height(r) for r in rs.positive_roots)
    top = max(heights)
    exps = []
    for m in range(1, top + 1):
        exps += [m] * (heights.get(m, 0) - heights.get(m + 1, 0))
    exps.sort()
    return ExponentData(tuple(exps), exps[-1] + 1)


def element_order(w: GroupElement, cap: int = 10_000) -> int:
    if cap < 1:
        raise ValueError("cap must be positive")
    current = w
    for k in range(1, cap + 1):
        if current.is_identity():
            return k
        current = current @ w
    raise LimitExceeded(f"element order exceeds {cap}")


def reflection_length(w: GroupElement) -> int:
    """rank(w - 1): the number of eigenvalues different from 1."""
    n = w.rank
    return linalg.rank([[w.mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)])


def trace(w: GroupElement) -> int:
    return linalg.trace(w.mat)


def characteristic_polynomial(w: GroupElement) -> tuple:
    return tuple(int(c) for c in linalg.charpoly(w.mat))


def enumerate_group(rs: RootSystem, limit: int = DEFAULT_BUDGET) -> list[GroupElement]:
    """All elements of W, BFS from the identity; sorted by flattened matrix."""
    return _closure(rs.simple_reflections(), rs.rank, limit)


def _closure(gens: Sequence[GroupElement], n: int, limit: int) -> list[GroupElement]:
    start = GroupElement.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g @ s
            if h not in seen:
                seen.add(h)
                if len(seen) > limit:
                    raise LimitExceeded(f"group closure exceeds {limit} elements")
                queue.append(h)
    return sorted(seen, key=GroupElement.flat)


def subgroup_order(gens: Sequence[GroupElement], n: int, limit: int = DEFAULT_BUDGET) -> int:
    return len(_closure(gens, n, limit))


def weyl_group_order(rs: RootSystem) -> int:
    return math.prod(m + 1 for m in exponents_and_coxeter_number(rs).exponents)


@functools.lru_cache(maxsize=None)
def coxeter_conjugacy_class(rs: RootSystem) -> frozenset:
    """Orbit of the Coxeter element under conjugation by simple reflections.

    The simple reflections generate W, so this orbit is the whole class.
    """
    if weyl_group_order(rs) > EXACT_CONJUGACY_LIMIT:
        raise LimitExceeded(f"|W({rs.rstype})| exceeds {EXACT_CONJUGACY_LIMIT}")
    gens = rs.simple_reflections()
    c = coxeter_element(rs)
    seen = {c}
    queue = deque([c])
    while queue:
        u = queue.popleft()
        for s in gens:
            v = s @ u @ s
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


@functools.lru_cache(maxsize=None)
def _coxeter_invariants(rs: RootSystem) -> tuple:
    c = coxeter_element(rs)
    return exponents_and_coxeter_number(rs).coxeter_number, characteristic_polynomial(c)


def is_coxeter_element(rs: RootSystem, w: GroupElement, budget: int = DEFAULT_BUDGET) -> bool:
    """Decide whether ``w`` is conjugate to the standard Coxeter element.

    Small groups are decided by listing the conjugacy class. Large groups
    search conjugates of ``w`` by simple reflections for the standard
    Coxeter element and raise :class:`Undecided` when the budget runs out.
    """
    return _is_coxeter_cached(rs, w, budget)


@functools.lru_cache(maxsize=200_000)
def _is_coxeter_cached(rs: RootSystem, w: GroupElement, budget: int) -> bool:
    h, chi = _coxeter_invariants(rs)
    if reflection_length(w) != rs.rank:
        return False
    if characteristic_polynomial(w) != chi:
        return False
    try:
        if element_order(w, h) != h:
            return False
    except LimitExceeded:
        return False
    if weyl_group_order(rs) <= EXACT_CONJUGACY_LIMIT:
        return w in coxeter_conjugacy_class(rs)
    return conjugating_word(rs, w, coxeter_element(rs), budget) is not None or _undecided(budget)


def _undecided(budget: int) -> bool:
    raise Undecided(f"conjugacy search exhausted {budget} nodes")


def conjugating_word(rs: RootSystem, w: GroupElement, target: GroupElement, budget: int) -> tuple | None:
    """Word (s_i1, ..., s_ik) with g w g^-1 = target, g = s_ik ... s_i1.

    Returns None if the full class of ``w`` was searched without success,
    raises :class:`Undecided` if the budget is exhausted first. The returned
    word is re-verified by direct multiplication.
    """
    gens = rs.simple_reflections()
    parent = {w: None}
    queue = deque([w])
    found = w == target
    while queue and not found:
        u = queue.popleft()
        for i, s in enumerate(gens):
            v = s @ u @ s
            if v not in parent:
                parent[v] = (u, i)
                if v == target:
                    found = True
                    break
                if len(parent) > budget:
                    raise Undecided(f"conjugacy search exhausted {budget} nodes")
                queue.append(v)
    if not found:
        return None
    word = []
    node = target
    while parent[node] is not None:
        node, i = parent[node]
        word.append(i)
    word.reverse()
    g = GroupElement.identity(rs.rank)
    for i in word:
        g = gens[i] @ g
    assert g @ w @ g.inverse(rs.cartan) == target
    return tuple(word)


class Definiteness(str, enum.Enum):
    POSITIVE = "positive-definite"
    NEGATIVE = "negative-definite"
    SEMIDEFINITE = "semidefinite"
    INDEFINITE = "indefinite"


def inertia(form: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, zero, negative) eigenvalue counts of a symmetric matrix.

    Uses Descartes' rule on the characteristic polynomial, which is exact
    because all roots are real.
    """
    coeffs = linalg.charpoly(form)
    n = len(form)
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    pos = changes(coeffs)
    neg = changes([c * (-1) ** (n - k) for k, c in enumerate(coeffs)])
    return pos, zero, neg


def definiteness(form: Sequence[Sequence]) -> Definiteness:
    """Classify a symmetric rational matrix.

    Leading principal minors settle the nonsingular-minor case (Sylvester);
    otherwise the inertia is read off the characteristic polynomial.
    """
    if not linalg.is_symmetric(form):
        raise ValueError("matrix is not symmetric")
    minors = linalg.leading_minors(form)
    if all(m != 0 for m in minors):
        if all(m > 0 for m in minors):
            return Definiteness.POSITIVE
        if all((m > 0) == (k % 2 == 0) for k, m in enumerate(minors, start=1)):
            return Definiteness.NEGATIVE
        return Definiteness.INDEFINITE
    pos, zero, neg = inertia(form)
    if pos and neg:
        return Definiteness.INDEFINITE
    if zero == 0:
        return Definiteness.POSITIVE if pos else Definiteness.NEGATIVE
    return Definiteness.SEMIDEFINITE


def negated(form: Sequence[Sequence]) -> tuple:
    return tuple(tuple(-x for x in row) for row in form)


def supported_types(max_rank: int = 8) -> list[RootSystemType]:
    out = [RootSystemType("A", k) for k in range(1, max_rank + 1)]
    out += [RootSystemType("D", k) for k in range(4, max_rank + 1)]
    out += [RootSystemType("E", k) for k in (6, 7, 8) if k <= max_rank]
    return out


def exponent_table(rank: int) -> dict[RootSystemType, ExponentData]:
    """Exponent data of every ADE type of the given rank."""
    return {t: exponents_and_coxeter_number(build_root_system(t)) for t in supported_types(max(rank, 1)) if t.rank == rank}
