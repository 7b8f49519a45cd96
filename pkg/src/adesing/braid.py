"""Picard-Lefschetz transvections, braid moves on distinguished tuples and
the Hurwitz action on reflection factorizations, with the verification
harnesses built on them."""

from __future__ import annotations

import functools
import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from adesing import linalg
from adesing.errors import LimitExceeded, Undecided
from adesing.reports import Report
from adesing.weyl import (
    DEFAULT_BUDGET,
    GroupElement,
    RootSystem,
    coxeter_element,
    is_coxeter_element,
    positive_part,
    reflection,
    reflection_length,
    subgroup_order,
    trace,
    weyl_group_order,
)

Vector = tuple


# ---------------------------------------------------------------- cycles


@dataclass(frozen=True)
class CycleLattice:
    rank: int
    form: tuple

    def __post_init__(self):
        if not linalg.is_symmetric(self.form) or len(self.form) != self.rank:
            raise ValueError("intersection form must be a symmetric rank x rank matrix")

    @classmethod
    def from_root_system(cls, rs: RootSystem) -> CycleLattice:
        """Lattice with intersection form -Cartan."""
        return cls(rs.rank, tuple(tuple(-x for x in row) for row in rs.cartan))

    def dot(self, u: Vector, v: Vector) -> int:
        return sum(u[i] * self.form[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))


def picard_lefschetz(sigma: Vector, delta: Vector, lattice: CycleLattice) -> Vector:
    """sigma -> sigma + (sigma . delta) delta for a (-2)-cycle delta."""
    if lattice.dot(delta, delta) != -2:
        raise ValueError(f"vanishing cycle {delta} does not have self-intersection -2")
    k = lattice.dot(sigma, delta)
    return tuple(s + k * d for s, d in zip(sigma, delta))


def transvection_matrix(delta: Vector, lattice: CycleLattice) -> tuple:
    n = lattice.rank
    cols = [picard_lefschetz(e, delta, lattice) for e in linalg.identity(n)]
    return linalg.transpose(cols)


@dataclass(frozen=True)
class DistinguishedTuple:
    cycles: tuple

    def validate(self, lattice: CycleLattice) -> None:
        if len(self.cycles) != lattice.rank:
            raise ValueError("tuple length differs from the lattice rank")
        for c in self.cycles:
            if lattice.dot(c, c) != -2:
                raise ValueError(f"cycle {c} does not have self-intersection -2")
        if abs(linalg.det(self.cycles)) != 1:
            raise ValueError("cycles do not form a basis of the lattice")


def _check_index(i: int, mu: int) -> None:
    if not 1 <= i <= mu - 1:
        raise IndexError(f"braid generator index {i} outside 1..{mu - 1}")


def braid_move_tuple(
    i: int, t: DistinguishedTuple, lattice: CycleLattice, inverse: bool = False
) -> DistinguishedTuple:
    """Generator ``b_i`` (1-based) acting on a distinguished tuple.

    Positions i, i+1 become (D_{i+1}, h_{i+1}(D_i)) where h is the
    Picard-Lefschetz transvection; the inverse move sends (P, Q) to
    (h_P(Q), P).
    """
    cycles = list(t.cycles)
    _check_index(i, len(cycles))
    a, b = cycles[i - 1], cycles[i]
    if inverse:
        cycles[i - 1], cycles[i] = picard_lefschetz(b, a, lattice), a
    else:
        cycles[i - 1], cycles[i] = b, picard_lefschetz(a, b, lattice)
    return DistinguishedTuple(tuple(cycles))


def monodromy_matrix(t: DistinguishedTuple, lattice: CycleLattice) -> tuple:
    """Ordered product h_1 h_2 ... h_mu of the transvections."""
    result = linalg.identity(lattice.rank)
    for c in t.cycles:
        result = linalg.matmul(result, transvection_matrix(c, lattice))
    return result


# ---------------------------------------------------------------- factorizations


@dataclass(frozen=True, order=True)
class Factorization:
    roots: tuple

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(tuple(r) for r in self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def sort_key(self) -> tuple:
        return tuple(x for r in self.roots for x in r)


def simple_factorization(rs: RootSystem) -> Factorization:
    return Factorization(linalg.identity(rs.rank))


def reflection_product(rs: RootSystem, fz: Factorization) -> GroupElement:
    result = GroupElement.identity(rs.rank)
    for r in fz.roots:
        result = result @ reflection(rs, r)
    return result


def hurwitz_move(i: int, fz: Factorization, rs: RootSystem, inverse: bool = False) -> Factorization:
    """(.., s_i, s_{i+1}, ..) -> (.., s_{i+1}, s_{i+1} s_i s_{i+1}, ..) on roots.

    Roots are normalized to the positive one of each +/- pair.
    """
    roots = list(fz.roots)
    _check_index(i, len(roots))
    a, b = roots[i - 1], roots[i]
    if inverse:
        roots[i - 1], roots[i] = positive_part(reflection(rs, a)(b)), a
    else:
        roots[i - 1], roots[i] = b, positive_part(reflection(rs, b)(a))
    return Factorization(tuple(roots))


@dataclass(frozen=True)
class SMembership:
    generates: bool
    spans_lattice: bool
    independent: bool

    @property
    def in_s(self) -> bool:
        return self.generates and self.spans_lattice and self.independent

    def __bool__(self) -> bool:
        return self.in_s


@functools.lru_cache(maxsize=100_000)
def _generates(rs: RootSystem, roots: frozenset, budget: int) -> bool:
    # The reflections generate W exactly when their roots sweep out the
    # whole root system: W' = <s_b> is the Weyl group of the orbit W'.{b}.
    gens = [reflection(rs, r) for r in sorted(roots)]
    seen = set(roots) | {tuple(-x for x in r) for r in roots}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for s in gens:
            u = s(v)
            if u not in seen:
                seen.add(u)
                if len(seen) > budget:
                    raise Undecided(f"root orbit exceeds the budget {budget}")
                queue.append(u)
    return len(seen) == len(rs.roots)


def generates_by_closure(rs: RootSystem, fz: Factorization, budget: int = DEFAULT_BUDGET) -> bool:
    """Slow reference: compare the order of the generated subgroup with |W|."""
    order = weyl_group_order(rs)
    if order > budget:
        raise Undecided(f"|W| = {order} exceeds the closure budget {budget}")
    gens = [reflection(rs, r) for r in fz.roots]
    try:
        return subgroup_order(gens, rs.rank, order) == order
    except LimitExceeded:
        return False


def is_in_S(rs: RootSystem, fz: Factorization, budget: int = DEFAULT_BUDGET) -> SMembership:
    """Membership in the set of reflection tuples that generate W and whose
    roots form a Z-basis of the root lattice."""
    if len(fz) != rs.rank:
        return SMembership(False, False, False)
    d = linalg.det(fz.roots)
    independent = d != 0
    spans = abs(d) == 1
    gen = _generates(rs, frozenset(fz.roots), budget)
    return SMembership(gen, spans, independent)


def enumerate_coxeter_factorizations(
    rs: RootSystem, max_rank: int = 4, budget: int = DEFAULT_BUDGET
) -> dict[Factorization, SMembership]:
    """All tuples of mu reflections with product the standard Coxeter element,
    found by backtracking with reflection-length pruning."""
    if rs.rank > max_rank:
        raise LimitExceeded(f"rank {rs.rank} too large for exhaustive factorization search")
    c = coxeter_element(rs)
    refl = {r: reflection(rs, r) for r in rs.positive_roots}
    mu = rs.rank
    found = []

    def extend(prefix: list, remaining: GroupElement) -> None:
        # remaining = (s_1 ... s_k)^{-1} c must have length mu - k
        k = len(prefix)
        if k == mu:
            if remaining.is_identity():
                found.append(Factorization(tuple(prefix)))
            return
        for r, s in refl.items():
            nxt = s @ remaining
            if reflection_length(nxt) == mu - k - 1:
                prefix.append(r)
                extend(prefix, nxt)
                prefix.pop()

    extend([], c)
    found.sort(key=Factorization.sort_key)
    return {fz: is_in_S(rs, fz, budget) for fz in found}


def hurwitz_orbit(fz: Factorization, rs: RootSystem, limit: int = DEFAULT_BUDGET) -> list[Factorization]:
    """BFS closure under all moves and inverse moves, canonically sorted."""
    seen = {fz}
    queue = deque([fz])
    mu = len(fz)
    while queue:
        cur = queue.popleft()
        for i in range(1, mu):
            for inv in (False, True):
                nxt = hurwitz_move(i, cur, rs, inv)
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise LimitExceeded(f"Hurwitz orbit exceeds {limit} elements")
                    queue.append(nxt)
    return sorted(seen, key=Factorization.sort_key)


# ---------------------------------------------------------------- harnesses


def verify_deligne_transitivity(rs: RootSystem, limit: int = DEFAULT_BUDGET) -> Report:
    start = simple_factorization(rs)
    orbit = set(hurwitz_orbit(start, rs, limit))
    facts = enumerate_coxeter_factorizations(rs)
    full = set(facts)
    missing = sorted(full - orbit, key=Factorization.sort_key)
    extra = sorted(orbit - full, key=Factorization.sort_key)
    not_in_s = [fz for fz in orbit if not facts.get(fz, is_in_S(rs, fz))]
    mismatches = [f"not in orbit: {m.roots}" for m in missing]
    mismatches += [f"orbit element not a Coxeter factorization: {m.roots}" for m in extra]
    mismatches += [f"orbit element outside S: {m.roots}" for m in not_in_s]
    return Report(
        "deligne-transitivity",
        str(rs.rstype),
        {"start": "simple roots"},
        {"orbit": len(orbit), "factorizations": len(full)},
        mismatches,
        not mismatches,
    )


def _all_tuples(rs: RootSystem):
    return itertools.product(rs.positive_roots, repeat=rs.rank)


def verify_trace_criterion(
    rs: RootSystem,
    mode: str = "exhaustive",
    count: int = 10_000,
    seed: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """Check trace(s_1 ... s_mu) == -1 iff the product is a Coxeter element,
    over tuples in S.

    ``mode="sample"`` draws uniform tuples of positive roots with a seeded
    generator until ``count`` tuples in S have been checked.
    """
    if mode == "exhaustive":
        if rs.rank > 3:
            raise LimitExceeded("exhaustive trace check is limited to rank <= 3")
        source = _all_tuples(rs)
        params = {"mode": "exhaustive"}
    elif mode == "sample":
        rng = random.Random(seed)
        pos = rs.positive_roots

        def draws():
            while True:
                yield tuple(rng.choice(pos) for _ in range(rs.rank))

        source = draws()
        params = {"mode": "sample", "count": count, "seed": seed}
    else:
        raise ValueError(f"unknown mode {mode!r}")

    drawn = checked = coxeter = minus_one = 0
    mismatches = []
    for roots in source:
        drawn += 1
        fz = Factorization(roots)
        if not is_in_S(rs, fz, budget):
            continue
        checked += 1
        w = reflection_product(rs, fz)
        is_cox = is_coxeter_element(rs, w, budget)
        tr = trace(w) == -1
        coxeter += is_cox
        minus_one += tr
        if is_cox != tr:
            mismatches.append(f"{roots}: trace {trace(w)}, coxeter {is_cox}")
        if mode == "sample" and checked >= count:
            break
    return Report(
        "trace-criterion",
        str(rs.rstype),
        params,
        {"tuples": drawn, "in_S": checked, "coxeter": coxeter, "trace_minus_one": minus_one},
        mismatches,
        not mismatches,
    )


def verify_monodromy_trace(rs: RootSystem) -> Report:
    lattice = CycleLattice.from_root_system(rs)
    t = DistinguishedTuple(linalg.identity(rs.rank))
    t.validate(lattice)
    m = monodromy_matrix(t, lattice)
    tr = linalg.trace(m)
    matches = m == coxeter_element(rs).mat
    mismatches = []
    if tr != -1:
        mismatches.append(f"trace {tr}")
    if not matches:
        mismatches.append("monodromy matrix differs from the Coxeter element")
    return Report(
        "monodromy-trace",
        str(rs.rstype),
        {},
        {"trace": tr, "equals_coxeter": matches},
        mismatches,
        not mismatches,
    )


# ---------------------------------------------------------------- Dynkin diagrams


def dynkin_diagram(rs: RootSystem, roots: Sequence[Vector]) -> nx.Graph:
    """Nodes are positions 0..len-1; an edge carries weight |B(a_i, a_j)|."""
    g = nx.Graph()
    for i, r in enumerate(roots):
        g.add_node(i, root=tuple(r))
    for i, j in itertools.combinations(range(len(roots)), 2):
        b = rs.form(roots[i], roots[j])
        if b:
            g.add_edge(i, j, weight=abs(b))
    return g


def is_canonical(rs: RootSystem, roots: Sequence[Vector]) -> bool:
    """Gram matrix equals the Cartan matrix up to a simultaneous permutation
    and sign flips of the roots.

    Dynkin diagrams are trees, so every sign pattern on edges is realized by
    flipping roots; only the weighted graph has to match.
    """
    return nx.is_isomorphic(
        dynkin_diagram(rs, roots),
        dynkin_diagram(rs, rs.simple_roots),
        edge_match=lambda a, b: a["weight"] == b["weight"],
    )


def canonical_dynkin_search(rs: RootSystem, fz: Factorization, limit: int = DEFAULT_BUDGET) -> Factorization:
    """First factorization in the Hurwitz orbit of ``fz`` (BFS order) whose
    diagram is the Dynkin diagram of ``rs``."""
    if len(fz) != rs.rank or not is_in_S(rs, fz):
        raise ValueError("factorization is not in S")
    if not is_coxeter_element(rs, reflection_product(rs, fz)):
        raise ValueError("product is not a Coxeter element")
    seen = {fz}
    queue = deque([fz])
    while queue:
        cur = queue.popleft()
        if is_canonical(rs, cur.roots):
            return cur
        for i in range(1, len(cur)):
            for inv in (False, True):
                nxt = hurwitz_move(i, cur, rs, inv)
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise LimitExceeded(f"no canonical diagram within {limit} orbit elements")
                    queue.append(nxt)
    raise LimitExceeded("orbit exhausted without a canonical diagram")
