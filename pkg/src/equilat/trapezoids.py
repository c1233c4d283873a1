"""Heronian triangles and the equable trapezoids they generate.

An equable trapezoid with integer sides splits along the short parallel side
into a perimeter-dominant Heronian triangle plus a parallelogram strip.  Given
such a triangle and a choice f of the side to extend, the strip width is

    c = f * (perimeter - area) / (2 * (area - f)),

and the construction succeeds exactly when c is a positive integer.  Running
every candidate triangle through every choice of f yields the five classical
solutions; the four infinite triangle families never produce an integer c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from equilat import pell, search
from equilat.errors import EquilatError
from equilat.figures import embedding_for
from equilat.geometry import LatticeQuad, canonical_signature

__all__ = [
    "HeronianTriangle",
    "FamilyRow",
    "TrapezoidSolution",
    "DegenerateTrapezoidError",
    "TRAPEZOID_SCAN_BOUND",
    "heron_area",
    "enumerate_perimeter_dominant",
    "family_member",
    "family_members_within",
    "shorter_parallel_side",
    "trapezoid_from",
    "all_equable_trapezoids",
    "lattice_embedding",
]

TRAPEZOID_SCAN_BOUND = 400
"""Completeness bound for the trapezoid hunt: the three sporadic triangles
and the smallest two members of every infinite family sit below it, and the
next family members overshoot it by a wide margin."""


class DegenerateTrapezoidError(EquilatError):
    """Chosen side is at least the triangle area, forcing height <= 2."""


def heron_area(x: int, y: int, z: int) -> int | None:
    """Integer area of the triangle with sides x <= y <= z, or None when the
    triangle is degenerate or the area is not an integer."""
    if not (0 < x <= y <= z):
        raise ValueError("sides must be positive and ordered x <= y <= z")
    prod = (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z)
    if prod <= 0:
        return None
    root = isqrt(prod)
    if root * root != prod or root % 4:
        return None
    return root // 4


@dataclass(frozen=True)
class HeronianTriangle:
    """Integer-sided triangle with integer area."""

    sides: tuple[int, int, int]  # x <= y <= z
    perimeter: int
    area: int

    def __post_init__(self) -> None:
        x, y, z = self.sides
        if not (0 < x <= y <= z) or x + y <= z:
            raise ValueError(f"{self.sides} is not a valid (ordered) triangle")
        if self.perimeter != x + y + z:
            raise ValueError("perimeter does not match the sides")
        if self.area < 1 or heron_area(x, y, z) != self.area:
            raise ValueError("area does not satisfy Heron's formula")

    @classmethod
    def from_sides(cls, x: int, y: int, z: int) -> "HeronianTriangle":
        area = heron_area(x, y, z)
        if area is None:
            raise ValueError(f"({x},{y},{z}) is not Heronian")
        return cls((x, y, z), x + y + z, area)

    @property
    def delta(self) -> int:
        return self.perimeter - self.area


def enumerate_perimeter_dominant(p_max: int) -> list[HeronianTriangle]:
    """Every Heronian triangle with perimeter <= p_max and perimeter > area,
    found by exhaustive scan over ordered side triples; sorted by
    (perimeter, sides)."""
    if p_max < 12:
        raise ValueError("p_max must be at least 12 (the smallest Heronian perimeter)")
    found = []
    for p in range(12, p_max + 1):
        for x in range(1, p // 3 + 1):
            for y in range(x, (p - x) // 2 + 1):
                z = p - x - y
                if z < y or x + y <= z:
                    continue
                area = heron_area(x, y, z)
                if area is not None and p > area:
                    found.append(HeronianTriangle((x, y, z), p, area))
    found.sort(key=lambda t: (t.perimeter, t.sides))
    return found


# Infinite families of perimeter-dominant Heronian triangles: closed forms for
# the sides, perimeter and area, the governing restriction equation, and the
# smallest admissible x.
_ROWS: dict[int, dict] = {
    1: {
        "pell": "x^2+1=2y^2", "x_min": 7,
        "sides": lambda x: (3, 3 * x * x + 1, 3 * x * x + 2),
        "perimeter": lambda x: 6 * x * x + 6,
        "area": lambda x, y: 6 * x * y,
    },
    2: {
        "pell": "x^2-1=2y^2", "x_min": 3,
        "sides": lambda x: (3, 3 * x * x - 2, 3 * x * x - 1),
        "perimeter": lambda x: 6 * x * x,
        "area": lambda x, y: 6 * x * y,
    },
    3: {
        "pell": "x^2+2=3y^2", "x_min": 5,
        "sides": lambda x: (4, 2 * x * x + 1, 2 * x * x + 3),
        "perimeter": lambda x: 4 * x * x + 8,
        "area": lambda x, y: 6 * x * y,
    },
    4: {
        "pell": "x^2-1=3y^2", "x_min": 2,
        "sides": lambda x: (4, 4 * x * x - 3, 4 * x * x - 1),
        "perimeter": lambda x: 8 * x * x,
        "area": lambda x, y: 12 * x * y,
    },
}


@dataclass(frozen=True)
class FamilyRow:
    """Validated (row, parameter) pair for one infinite triangle family."""

    row: int
    param: pell.PellSolution

    def __post_init__(self) -> None:
        if self.row not in _ROWS:
            raise ValueError(f"row must be 1..4, got {self.row}")
        spec = pell.spec_by_name(_ROWS[self.row]["pell"])
        if not spec.satisfies(self.param.n, self.param.i):
            raise ValueError(f"{self.param} does not satisfy {spec.name}")
        if self.param.n < _ROWS[self.row]["x_min"]:
            raise ValueError(f"row {self.row} requires x >= {_ROWS[self.row]['x_min']}")

    def triangle(self) -> "HeronianTriangle":
        return family_member(self.row, self.param)


def family_member(row: int, sol: pell.PellSolution) -> HeronianTriangle:
    """Closed-form triangle of one family row at parameter (x, y) = (n, i).

    The parameter must satisfy the row's restriction equation and its lower
    bound on x; the result is cross-checked against heron_area.
    """
    if row not in _ROWS:
        raise ValueError(f"row must be 1..4, got {row}")
    spec = pell.spec_by_name(_ROWS[row]["pell"])
    x, y = sol.n, sol.i
    if not spec.satisfies(x, y):
        raise ValueError(f"({x},{y}) does not satisfy {spec.name}")
    if x < _ROWS[row]["x_min"]:
        raise ValueError(f"row {row} requires x >= {_ROWS[row]['x_min']}")
    sides = _ROWS[row]["sides"](x)
    triangle = HeronianTriangle(sides, _ROWS[row]["perimeter"](x), _ROWS[row]["area"](x, y))
    if heron_area(*sides) != triangle.area:
        raise ValueError(f"row {row} closed form disagrees with Heron at {sol}")
    return triangle


def family_members_within(row: int, p_max: int) -> list[HeronianTriangle]:
    """All members of one family row with perimeter <= p_max."""
    out = []
    for sol in pell.iter_solutions(pell.spec_by_name(_ROWS[row]["pell"])):
        if sol.n < _ROWS[row]["x_min"]:
            continue
        if _ROWS[row]["perimeter"](sol.n) > p_max:
            break
        out.append(family_member(row, sol))
    return out


@dataclass(frozen=True)
class TrapezoidSolution:
    """Equable trapezoid built from a Heronian triangle.

    quad_sides lists (long parallel side a, leg AB, short parallel side c,
    leg CO) in cyclic vertex order O, A, B, C.
    """

    triangle: HeronianTriangle
    f: int
    c: int
    a: int
    legs: tuple[int, int]
    h: Fraction
    quad_sides: tuple[int, int, int, int]
    figure_tag: str | None = None

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("short parallel side must be positive")
        if self.h <= 2:
            raise ValueError("equable trapezoids need height > 2")
        area = self.h * (self.a + self.c) / 2
        if area != self.a + self.c + self.legs[0] + self.legs[1]:
            raise ValueError("trapezoid is not equable")

    @property
    def perimeter(self) -> int:
        return sum(self.quad_sides)


# Published cyclic side orders of the five solutions, keyed by (sides, f).
_FIGURE_TAGS: dict[tuple[tuple[int, int, int], int], tuple[str, tuple[int, int]]] = {
    ((3, 4, 5), 3): ("right-trapezoid-6-4-3-5", (4, 5)),
    ((3, 4, 5), 4): ("right-trapezoid-10-3-6-5", (3, 5)),
    ((3, 4, 5), 5): ("trapezoid-20-4-15-3", (4, 3)),
    ((5, 5, 6), 6): ("isosceles-trapezoid-8-5-2-5", (5, 5)),
    ((5, 5, 8), 8): ("isosceles-trapezoid-14-5-6-5", (5, 5)),
}


def shorter_parallel_side(t: HeronianTriangle, f: int) -> Fraction:
    """Exact value of the strip width c for side choice f."""
    if f not in t.sides:
        raise ValueError(f"{f} is not a side of {t.sides}")
    if t.area <= f:
        raise DegenerateTrapezoidError(
            f"side {f} >= area {t.area}: height would be at most 2"
        )
    return Fraction(f * (t.perimeter - t.area), 2 * (t.area - f))


def trapezoid_from(t: HeronianTriangle, f: int) -> TrapezoidSolution | None:
    """Equable trapezoid extending side f of the triangle, when one exists.

    Returns None when the strip width is not a positive integer.  Legs are
    reported in the published cyclic order for the five classical solutions
    and ascending otherwise.
    """
    c = shorter_parallel_side(t, f)
    if c.denominator != 1 or c < 1:
        return None
    c = int(c)
    rest = list(t.sides)
    rest.remove(f)
    tag_entry = _FIGURE_TAGS.get((t.sides, f))
    if tag_entry is not None:
        tag, legs = tag_entry
    else:
        tag, legs = None, (min(rest), max(rest))
    return TrapezoidSolution(
        triangle=t,
        f=f,
        c=c,
        a=c + f,
        legs=legs,
        h=Fraction(2 * t.area, f),
        quad_sides=(c + f, legs[0], c, legs[1]),
        figure_tag=tag,
    )


def all_equable_trapezoids(p_max: int = TRAPEZOID_SCAN_BOUND) -> list[TrapezoidSolution]:
    """Every equable trapezoid with integer sides and area, from the scan of
    perimeter-dominant triangles up to p_max united with the closed-form
    family members in the same range."""
    triangles = {t.sides: t for t in enumerate_perimeter_dominant(p_max)}
    for row in _ROWS:
        for t in family_members_within(row, p_max):
            triangles.setdefault(t.sides, t)
    out = []
    for sides in sorted(triangles, key=lambda s: (sum(s), s)):
        t = triangles[sides]
        seen_f = set()
        for f in t.sides:
            if f in seen_f:
                continue
            seen_f.add(f)
            sol = trapezoid_from(t, f)
            if sol is not None:
                out.append(sol)
    return out


def lattice_embedding(ts: TrapezoidSolution) -> LatticeQuad | None:
    """A lattice realization of the trapezoid, found by signature lookup in
    the search catalog; None when the shape has no lattice placement."""
    a, c, f = ts.a, ts.c, ts.f
    leg_ab, leg_co = ts.legs
    # plant the triangle O, A'(f, 0), C with C above; exact rationals
    xc = Fraction(f * f + leg_co**2 - leg_ab**2, 2 * f)
    h_sq = leg_co**2 - xc * xc
    assert h_sq == ts.h * ts.h, "side data inconsistent with the height"
    diag_ob = (xc + c) ** 2 + h_sq  # O -> B
    diag_ac = (xc - a) ** 2 + h_sq  # A -> C
    if diag_ob.denominator != 1 or diag_ac.denominator != 1:
        return None  # squared diagonals not integers: no lattice placement
    sig = canonical_signature(
        (a * a, leg_ab**2, c * c, leg_co**2), (int(diag_ob), int(diag_ac))
    )
    if ts.perimeter > search.P_MAX_MAX:
        return None
    catalog = search.get_catalog(max(42, ts.perimeter))
    if sig not in catalog:
        return None
    return embedding_for(sig) or catalog.classes[sig].representative
