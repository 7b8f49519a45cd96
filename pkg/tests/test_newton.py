from __future__ import annotations

from fractions import Fraction

import pytest

from adesing.grobner import milnor_number
from adesing.newton import NotConvenient, area_under, newton_diagram_2d, newton_number_2d
from adesing.poly import parse_polynomial


def D(text):
    return newton_diagram_2d(parse_polynomial(text, ["x", "y"]))


def test_two_point_diagram():
    d = D("x^3 + y^2")
    assert d.vertices == ((0, 2), (3, 0))
    assert d.convenient
    assert d.intercepts == (3, 2)


def test_interior_vertex():
    d = D("x^5 + x^2*y^2 + y^5")
    assert d.vertices == ((0, 5), (2, 2), (5, 0))
    assert area_under(d) == 10


def test_not_convenient():
    d = D("x^2*y + y^3")
    assert d.vertices == ((0, 3), (2, 1))
    assert not d.convenient
    with pytest.raises(NotConvenient):
        newton_number_2d(d)


def test_points_above_the_boundary_are_ignored():
    assert D("x^4 + y^4 + x^3*y^3 + x*y^2").vertices == ((0, 4), (1, 2), (4, 0))
    assert D("x^4 + y^4 + x*y^3").vertices == ((0, 4), (4, 0))  # collinear point is not a vertex
    assert D("x^4 + y^4 + x^2*y^2").vertices == ((0, 4), (4, 0))


def test_vertices_are_convex_and_decreasing():
    d = D("x^7 + x^4*y + x*y^3 + y^6 + x^2*y^2")
    ys = [v[1] for v in d.vertices]
    assert ys == sorted(ys, reverse=True)
    for a, b, c in zip(d.vertices, d.vertices[1:], d.vertices[2:]):
        s1 = Fraction(b[1] - a[1], b[0] - a[0])
        s2 = Fraction(c[1] - b[1], c[0] - b[0])
        assert s1 < s2


@pytest.mark.parametrize(
    "text, expected",
    [("x^3 + y^2", 2), ("x^3 + y^4", 6), ("x^5 + x^2*y^2 + y^5", 11), ("x^3 + y^5", 8), ("x^7 + y^2", 6)],
)
def test_newton_number(text, expected):
    assert newton_number_2d(D(text)) == expected
    assert milnor_number(parse_polynomial(text, ["x", "y"])) == expected


def test_wrong_variable_count():
    with pytest.raises(ValueError):
        newton_diagram_2d(parse_polynomial("x^2 + y^2 + z^2", ["x", "y", "z"]))
    with pytest.raises(ValueError):
        newton_diagram_2d(parse_polynomial("0", ["x", "y"]))
