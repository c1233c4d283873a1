"""Exact integer and rational primitives for lattice quadrilaterals.

Everything here is a pure function of immutable values.  All predicates are
decided in exact integer (or exact rational) arithmetic; no floating point
enters any geometric decision.  Python's arbitrary-precision integers make
overflow a non-issue, so coordinates of any magnitude are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Sequence

from equilat.errors import InvalidQuadError

__all__ = [
    "Point",
    "RatPoint",
    "LatticeQuad",
    "QuadClassification",
    "SideData",
    "Signature",
    "Diagonal",
    "DiagonalReport",
    "quad",
    "orient",
    "midpoint",
    "twice_area",
    "side_data",
    "perimeter",
    "is_equable",
    "is_simple",
    "classify",
    "is_cyclic",
    "reflect_point",
    "signature",
    "canonical_signature",
    "interior_diagonals",
    "is_sum_two_nonzero_squares",
    "is_perfect_square",
    "exact_sqrt",
    "POINT_SYMMETRIES",
    "apply_symmetry",
]


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def exact_sqrt(n: int) -> int | None:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True, order=True)
class Point:
    """Lattice point."""

    x: int
    y: int

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def dist_sq(self, other: "Point") -> int:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy


@dataclass(frozen=True)
class RatPoint:
    """Rational point stored as (x_num/den, y_num/den) with a reduced, positive
    shared denominator: gcd(x_num, y_num, den) == 1."""

    x_num: int
    y_num: int
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ValueError("zero denominator")
        g = gcd(gcd(abs(self.x_num), abs(self.y_num)), abs(self.den))
        if self.den < 0:
            g = -g
        if g != 1:
            object.__setattr__(self, "x_num", self.x_num // g)
            object.__setattr__(self, "y_num", self.y_num // g)
            object.__setattr__(self, "den", self.den // g)

    @classmethod
    def from_fractions(cls, x: Fraction, y: Fraction) -> "RatPoint":
        den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        return cls(x.numerator * (den // x.denominator), y.numerator * (den // y.denominator), den)

    @classmethod
    def from_point(cls, p: Point) -> "RatPoint":
        return cls(p.x, p.y, 1)

    @property
    def x(self) -> Fraction:
        return Fraction(self.x_num, self.den)

    @property
    def y(self) -> Fraction:
        return Fraction(self.y_num, self.den)

    def is_lattice(self) -> bool:
        return self.den == 1

    def to_point(self) -> Point:
        if self.den != 1:
            raise ValueError(f"{self} is not a lattice point")
        return Point(self.x_num, self.y_num)


def midpoint(a: Point, b: Point) -> RatPoint:
    return RatPoint.from_fractions(Fraction(a.x + b.x, 2), Fraction(a.y + b.y, 2))


def orient(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle abc; positive for a left (ccw) turn."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _simple_from_origin(x1: int, y1: int, x2: int, y2: int, x3: int, y3: int) -> bool:
    """Simplicity test for the quad (0,0),(x1,y1),(x2,y2),(x3,y3).

    True iff the four vertices are distinct, no three are collinear, and the
    two pairs of opposite edges do not cross.  Shared endpoints of adjacent
    edges are the only allowed contacts; with no three vertices collinear a
    vertex cannot lie in the interior of a non-incident edge, so testing the
    opposite-edge pairs for proper crossings is exhaustive.
    """
    if (x1, y1) == (0, 0) or (x2, y2) == (0, 0) or (x3, y3) == (0, 0):
        return False
    if (x1, y1) == (x2, y2) or (x2, y2) == (x3, y3) or (x1, y1) == (x3, y3):
        return False
    a = x1 * y2 - x2 * y1          # orient(O, v1, v2)
    b = x1 * y3 - x3 * y1          # orient(O, v1, v3)
    c = x2 * y3 - x3 * y2          # orient(O, v2, v3)
    d = a - b + c                  # orient(v1, v2, v3)
    if a == 0 or b == 0 or c == 0 or d == 0:
        return False
    if a * b < 0 and c * d < 0:    # edge O-v1 crosses edge v2-v3
        return False
    if a * d < 0 and b * c < 0:    # edge v1-v2 crosses edge v3-O
        return False
    return True


def is_simple(points: Sequence[Point]) -> bool:
    """True iff the four points, joined in order, bound a simple quadrilateral
    with no three vertices collinear."""
    if len(points) != 4:
        raise ValueError("expected exactly four points")
    p0 = points[0]
    return _simple_from_origin(
        points[1].x - p0.x, points[1].y - p0.y,
        points[2].x - p0.x, points[2].y - p0.y,
        points[3].x - p0.x, points[3].y - p0.y,
    )


@dataclass(frozen=True)
class LatticeQuad:
    """Simple lattice quadrilateral in positive (counterclockwise) order.

    Any vertex order may be passed in; a clockwise list is reversed in place
    (keeping the first vertex first).  Self-intersecting or degenerate input
    is rejected with InvalidQuadError rather than repaired.
    """

    v: tuple[Point, Point, Point, Point]

    def __post_init__(self) -> None:
        pts = tuple(self.v)
        if len(pts) != 4:
            raise InvalidQuadError("a quadrilateral needs exactly four vertices")
        if not is_simple(pts):
            raise InvalidQuadError(f"vertices {pts} do not bound a simple quadrilateral")
        if _shoelace(pts) < 0:
            pts = (pts[0], pts[3], pts[2], pts[1])
        object.__setattr__(self, "v", pts)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.v)

    def __getitem__(self, i: int) -> Point:
        return self.v[i]

    def translated(self, dx: int, dy: int) -> "LatticeQuad":
        return LatticeQuad(tuple(Point(p.x + dx, p.y + dy) for p in self.v))


def quad(*points: Point | tuple[int, int]) -> LatticeQuad:
    """Convenience constructor: quad((0,0), (4,0), (4,4), (0,4))."""
    pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
    return LatticeQuad(pts)


def _shoelace(pts: Sequence[Point]) -> int:
    total = 0
    for i in range(len(pts)):
        p, q_ = pts[i], pts[(i + 1) % len(pts)]
        total += p.x * q_.y - q_.x * p.y
    return total


def twice_area(q: LatticeQuad) -> int:
    """Twice the area of the quadrilateral (shoelace); always positive."""
    return _shoelace(q.v)


@dataclass(frozen=True)
class SideData:
    """Squared side lengths in vertex order, integer lengths when all four are
    perfect squares, and the two squared diagonals (v0v2, v1v3)."""

    sq: tuple[int, int, int, int]
    lengths: tuple[int, int, int, int] | None
    diag_sq: tuple[int, int]


def side_data(q: LatticeQuad) -> SideData:
    v = q.v
    sq = tuple(v[i].dist_sq(v[(i + 1) % 4]) for i in range(4))
    roots = [exact_sqrt(s) for s in sq]
    lengths = tuple(roots) if all(r is not None for r in roots) else None
    return SideData(sq, lengths, (v[0].dist_sq(v[2]), v[1].dist_sq(v[3])))


def perimeter(q: LatticeQuad) -> int | None:
    """Integer perimeter, or None when some side has irrational length."""
    sd = side_data(q)
    return sum(sd.lengths) if sd.lengths is not None else None


def is_equable(q: LatticeQuad) -> bool:
    """True iff area equals perimeter, compared exactly (2K == 2P)."""
    sd = side_data(q)
    if sd.lengths is None:
        return False
    return twice_area(q) == 2 * sum(sd.lengths)


@dataclass(frozen=True)
class QuadClassification:
    convex: bool
    reflex_index: int | None
    is_kite: bool
    is_dart: bool
    is_parallelogram: bool
    is_trapezoid: bool
    is_isosceles_trapezoid: bool
    is_right_trapezoid: bool
    is_cyclic: bool


def _turns(v: Sequence[Point]) -> list[int]:
    return [orient(v[i - 1], v[i], v[(i + 1) % 4]) for i in range(4)]


def classify(q: LatticeQuad) -> QuadClassification:
    """Shape flags from exact squared lengths, cross products and dot products.

    Trapezoid uses the exclusive definition (exactly one parallel pair), so a
    parallelogram is never a trapezoid.  A dart is a concave kite.
    """
    v = q.v
    turns = _turns(v)
    convex = min(turns) > 0
    reflex_index = None if convex else turns.index(min(turns))

    sd = side_data(q)
    s0, s1, s2, s3 = sd.sq
    kite = (s0 == s1 and s2 == s3) or (s1 == s2 and s3 == s0)

    edges = [v[(i + 1) % 4] - v[i] for i in range(4)]
    par02 = edges[0].x * edges[2].y - edges[0].y * edges[2].x == 0
    par13 = edges[1].x * edges[3].y - edges[1].y * edges[3].x == 0
    parallelogram = par02 and par13
    trapezoid = par02 != par13
    isosceles = trapezoid and ((par02 and s1 == s3) or (par13 and s0 == s2))

    right_at = [
        (v[i - 1] - v[i]).x * (v[(i + 1) % 4] - v[i]).x
        + (v[i - 1] - v[i]).y * (v[(i + 1) % 4] - v[i]).y
        == 0
        for i in range(4)
    ]
    right = trapezoid and any(right_at[i] and right_at[(i + 1) % 4] for i in range(4))

    return QuadClassification(
        convex=convex,
        reflex_index=reflex_index,
        is_kite=kite,
        is_dart=kite and not convex,
        is_parallelogram=parallelogram,
        is_trapezoid=trapezoid,
        is_isosceles_trapezoid=isosceles,
        is_right_trapezoid=right,
        is_cyclic=is_cyclic(q),
    )


def is_cyclic(q: LatticeQuad) -> bool:
    """True iff the four vertices are concyclic.

    Decided by the vanishing of the 4x4 determinant with rows
    (x, y, x^2 + y^2, 1), reduced to a 3x3 integer determinant by
    subtracting the first row.
    """
    v = q.v
    rows = []
    x0, y0 = v[0].x, v[0].y
    z0 = x0 * x0 + y0 * y0
    for p in v[1:]:
        z = p.x * p.x + p.y * p.y
        rows.append((p.x - x0, p.y - y0, z - z0))
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    det = a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    return det == 0


def reflect_point(a: Point, axis_from: Point, axis_to: Point) -> RatPoint:
    """Exact reflection of a across the line through the two axis points."""
    if axis_from == axis_to:
        raise ValueError("axis endpoints must be distinct")
    dx = axis_to.x - axis_from.x
    dy = axis_to.y - axis_from.y
    den = dx * dx + dy * dy
    vx = a.x - axis_from.x
    vy = a.y - axis_from.y
    dot = vx * dx + vy * dy
    rx = axis_from.x * den + 2 * dot * dx - den * vx
    ry = axis_from.y * den + 2 * dot * dy - den * vy
    return RatPoint(rx, ry, den)


@dataclass(frozen=True)
class Signature:
    """Congruence signature: the lexicographic minimum, over the eight
    dihedral relabelings of the vertex cycle, of
    (s1^2, s2^2, s3^2, s4^2, d13^2, d24^2).

    Two simple quadrilaterals share a signature iff they are congruent
    (reflections included): four cyclic sides plus both diagonals determine
    the shape up to isometry.
    """

    canonical: tuple[int, int, int, int, int, int]


def canonical_signature(
    sides_sq: Sequence[int], diag_sq: Sequence[int]
) -> tuple[int, int, int, int, int, int]:
    """Dihedral-minimal (sides..., diagonals...) tuple for measurements given
    in cyclic order; usable for shapes that exist only as side/diagonal data."""
    s = tuple(sides_sq)
    d = tuple(diag_sq)
    best = None
    for base in (s, (s[3], s[2], s[1], s[0])):  # reversal keeps the diagonal pair
        for r in range(4):
            cand = base[r:] + base[:r] + (d[r % 2], d[(r + 1) % 2])
            if best is None or cand < best:
                best = cand
    return best


def signature(q: LatticeQuad) -> Signature:
    sd = side_data(q)
    return Signature(canonical_signature(sd.sq, sd.diag_sq))


@dataclass(frozen=True)
class Diagonal:
    ends: tuple[int, int]
    sq: int
    rational: bool
    length: int | None


@dataclass(frozen=True)
class DiagonalReport:
    interior: tuple[Diagonal, ...]
    exterior: tuple[Diagonal, ...]


def _diagonal(q: LatticeQuad, i: int, j: int) -> Diagonal:
    sq = q.v[i].dist_sq(q.v[j])
    root = exact_sqrt(sq)
    return Diagonal((i, j), sq, root is not None, root)


def interior_diagonals(q: LatticeQuad) -> DiagonalReport:
    """Split the two diagonals into interior and exterior.

    A convex quad has both diagonals interior.  A concave quad has exactly
    one reflex vertex; the diagonal through it is interior, the other lies
    outside the polygon.
    """
    turns = _turns(q.v)
    d02 = _diagonal(q, 0, 2)
    d13 = _diagonal(q, 1, 3)
    if min(turns) > 0:
        return DiagonalReport(interior=(d02, d13), exterior=())
    reflex = turns.index(min(turns))
    if reflex in (0, 2):
        return DiagonalReport(interior=(d02,), exterior=(d13,))
    return DiagonalReport(interior=(d13,), exterior=(d02,))


def is_sum_two_nonzero_squares(n: int) -> bool:
    """True iff n = s^2 + t^2 for some integers s, t >= 1."""
    if n < 2:
        return False
    s = 1
    while 2 * s * s <= n:
        if is_perfect_square(n - s * s):
            return True
        s += 1
    return False


# The eight lattice-preserving point symmetries as matrices (a, b, c, d)
# acting by (x, y) -> (a x + b y, c x + d y).
POINT_SYMMETRIES: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (-1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, 1, 0),
    (0, 1, -1, 0),
    (0, -1, -1, 0),
)


def apply_symmetry(p: Point, m: tuple[int, int, int, int]) -> Point:
    a, b, c, d = m
    return Point(a * p.x + b * p.y, c * p.x + d * p.y)
