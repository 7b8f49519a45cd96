"""Newton diagrams of plane curve germs and the Kouchnirenko number."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from adesing.errors import AdesingError
from adesing.poly import Polynomial


class NotConvenient(AdesingError):
    pass


@dataclass(frozen=True)
class NewtonDiagram2D:
    """Vertices of the compact boundary, ascending in the first coordinate."""

    vertices: tuple
    convenient: bool

    @property
    def intercepts(self) -> tuple[int, int]:
        """(a, b): where the diagram meets the first and the second axis."""
        if not self.convenient:
            raise NotConvenient("diagram does not meet both axes")
        return self.vertices[-1][0], self.vertices[0][1]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_diagram_2d(f: Polynomial) -> NewtonDiagram2D:
    if f.nvars != 2:
        raise ValueError(f"Newton diagrams are built for 2 variables, got {f.nvars}")
    if f.is_zero():
        raise ValueError("zero polynomial has no Newton diagram")
    pts = sorted(set(f.monomials()))
    hull: list = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    # the lower hull runs from the leftmost point; the compact boundary stops
    # at the first point of minimal height
    bmin = min(p[1] for p in pts)
    end = next(i for i, p in enumerate(hull) if p[1] == bmin)
    verts = tuple(hull[: end + 1])
    convenient = verts[0][0] == 0 and verts[-1][1] == 0
    return NewtonDiagram2D(verts, convenient)


def area_under(d: NewtonDiagram2D) -> Fraction:
    """Area enclosed by the axes and the diagram (convenient diagrams only)."""
    if not d.convenient:
        raise NotConvenient("area is only defined for convenient diagrams")
    poly = [(0, 0), *reversed(d.vertices)]
    twice = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]))
    return Fraction(abs(twice), 2)


def newton_number_2d(d: NewtonDiagram2D) -> int:
    """2S - a - b + 1."""
    a, b = d.intercepts
    return int(2 * area_under(d)) - a - b + 1
