from __future__ import annotations

import random
from fractions import Fraction

import sympy

from adesing import linalg


def random_matrix(rng, n, m, lo=-3, hi=3):
    return tuple(tuple(Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3))) for _ in range(m)) for _ in range(n))


def to_sympy(a):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a])


def test_det_rank_charpoly_against_sympy():
    rng = random.Random(0)
    x = sympy.Symbol("x")
    for _ in range(60):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        s = to_sympy(a)
        assert linalg.det(a) == Fraction(str(s.det()))
        assert linalg.rank(a) == s.rank()
        expected = [Fraction(str(c)) for c in s.charpoly(x).all_coeffs()]
        assert linalg.charpoly(a) == expected


def test_rank_of_rectangular_matrices():
    rng = random.Random(1)
    for _ in range(30):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 6), -1, 1)
        assert linalg.rank(a) == to_sympy(a).rank()


def test_solve_affine():
    rng = random.Random(2)
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = random_matrix(rng, n, m, -2, 2)
        b = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        sol = linalg.solve_affine(a, b)
        consistent = to_sympy(a).rank() == to_sympy(tuple(tuple(r) + (v,) for r, v in zip(a, b))).rank()
        assert (sol is not None) == consistent
        if sol is not None:
            p, kernel = sol
            assert list(linalg.matvec(a, p)) == b
            assert len(kernel) == m - linalg.rank(a)
            for k in kernel:
                assert all(v == 0 for v in linalg.matvec(a, k))


def test_leading_minors_and_symmetry():
    a = ((-2, 1), (1, -2))
    assert linalg.leading_minors(a) == [-2, 3]
    assert linalg.is_symmetric(a)
    assert not linalg.is_symmetric(((1, 2), (3, 4)))
    assert linalg.matmul(linalg.identity(2), a) == a
    assert linalg.trace(a) == -4
