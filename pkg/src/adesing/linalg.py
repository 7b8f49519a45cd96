"""Small exact linear algebra over the rationals.

Matrices are tuples of row tuples holding ``int`` or ``Fraction`` entries.
Everything here is exact; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def as_matrix(rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a))


def trace(a: Sequence[Sequence]):
    return sum(a[i][i] for i in range(len(a)))


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(len(r) == n for r in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i)
    )


def _echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int], int]:
    """Row-reduce a copy; returns (matrix, pivot columns, row swaps)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    swaps = 0
    if not m:
        return m, pivots, swaps
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            swaps += 1
        inv = 1 / m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots, swaps


def rank(a: Sequence[Sequence]) -> int:
    return len(_echelon(a)[1])


def det(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    m = [[Fraction(x) for x in r] for r in a]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result


def solve_affine(a: Sequence[Sequence], b: Sequence) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Solve ``a x = b``.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    Free variables are set to zero in the particular solution.
    """
    ncols = len(a[0]) if a else 0
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    m, pivots, _ = _echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(m, pivots):
        x[c] = row[-1] / row[c]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, c in zip(m, pivots):
            v[c] = -row[fcol] / row[c]
        kernel.append(v)
    return x, kernel


def charpoly(a: Sequence[Sequence]) -> list[Fraction]:
    """Characteristic polynomial det(xI - a), coefficients from x^n down to x^0.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    am = [[Fraction(x) for x in r] for r in a]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(am[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[-1]
        mk = prod
        amk = [[sum(am[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(amk[i][i] for i in range(n)) / k)
    return coeffs


def leading_minors(a: Sequence[Sequence]) -> list[Fraction]:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]
