"""Robust planar primitives: exact sign predicates and double-precision constructions.

Predicates (``orient``, ``incircle``) are evaluated in floating point with a
forward error bound and fall back to exact rational arithmetic when the float
result is too close to zero to be trusted.  Constructions (circumcircles,
intersections, reflections) are plain double precision; callers compare their
results with a relative tolerance against the coordinate scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CollinearBase, CoincidentPoints, DegenerateRay, NotConcurrent

# Relative tolerance used for double-precision geometric comparisons.
EPS_GEO = 1e-9
# Relative tolerance for the concurrency check in compose_three_reflections.
TAU_CONC = 1e-9
# Relative tolerance for round-trip boundary comparisons.
EPS_RT = 1e-9

# Forward error bounds for the floating-point predicate filters (eps = 2^-53).
_EPS_MACH = 2.0 ** -53
_ORIENT_ERRBOUND = (3.0 + 16.0 * _EPS_MACH) * _EPS_MACH
_INCIRCLE_ERRBOUND = (10.0 + 96.0 * _EPS_MACH) * _EPS_MACH

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Line:
    """Implicit line a*x + b*y + c = 0 with a^2 + b^2 = 1.

    The normal (a, b) is normalized to be lexicographically positive
    (a > 0, or a = 0 and b > 0) so equal lines have equal coefficients.
    """

    a: float
    b: float
    c: float

    @staticmethod
    def normalized(a: float, b: float, c: float) -> "Line":
        n = math.hypot(a, b)
        if n == 0.0:
            raise ValueError("degenerate line: zero normal")
        a, b, c = a / n, b / n, c / n
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        return Line(a, b, c)

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        if p == q:
            raise CoincidentPoints(f"line through coincident points {p}")
        dx, dy = q.x - p.x, q.y - p.y
        return Line.normalized(-dy, dx, dy * p.x - dx * p.y)

    @staticmethod
    def from_point_angle(p: Point, theta: float) -> "Line":
        dx, dy = math.cos(theta), math.sin(theta)
        return Line.normalized(-dy, dx, dy * p.x - dx * p.y)

    def eval(self, p: Point) -> float:
        """Signed distance of p from the line (the normal is unit length)."""
        return self.a * p.x + self.b * p.y + self.c

    def angle(self) -> float:
        """Direction angle of the line in [0, pi)."""
        return math.atan2(self.a, -self.b) % math.pi


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def dist2(p: Point, q: Point) -> float:
    dx, dy = p.x - q.x, p.y - q.y
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


def lerp(p: Point, q: Point, t: float) -> Point:
    return Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))


def coord_scale(points) -> float:
    """Coordinate scale of a point collection: max absolute coordinate (>= fallback 1)."""
    m = 0.0
    for p in points:
        m = max(m, abs(p.x), abs(p.y))
    return m if m > 0.0 else 1.0


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the counterclockwise turn p -> q -> r.

    +1 for a left turn, -1 for a right turn, 0 exactly when the points are
    collinear; the zero branch is decided in exact rational arithmetic.
    """
    detl = (q.x - p.x) * (r.y - p.y)
    detr = (q.y - p.y) * (r.x - p.x)
    det = detl - detr
    bound = _ORIENT_ERRBOUND * (abs(detl) + abs(detr))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return _orient_exact(p, q, r)


def _orient_exact(p: Point, q: Point, r: Point) -> int:
    px, py = Fraction(p.x), Fraction(p.y)
    det = (Fraction(q.x) - px) * (Fraction(r.y) - py) \
        - (Fraction(q.y) - py) * (Fraction(r.x) - px)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def incircle(p: Point, q: Point, r: Point, s: Point) -> int:
    """+1 iff s is strictly inside the circle through p, q, r; 0 on it; -1 outside.

    The orientation of (p, q, r) does not matter: the raw determinant sign is
    flipped for clockwise base triangles.  Concircularity (0) is decided in
    exact arithmetic.
    """
    o = orient(p, q, r)
    if o == 0:
        raise CollinearBase(f"incircle base points are collinear: {p}, {q}, {r}")
    return _incircle_raw(p, q, r, s) * o


def _incircle_raw(a: Point, b: Point, c: Point, d: Point) -> int:
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y

    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    cdxady, adxcdy = cdx * ady, adx * cdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    bound = _INCIRCLE_ERRBOUND * permanent
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return _incircle_exact(a, b, c, d)


def _incircle_exact(a: Point, b: Point, c: Point, d: Point) -> int:
    dx, dy = Fraction(d.x), Fraction(d.y)
    adx, ady = Fraction(a.x) - dx, Fraction(a.y) - dy
    bdx, bdy = Fraction(b.x) - dx, Fraction(b.y) - dy
    cdx, cdy = Fraction(c.x) - dx, Fraction(c.y) - dy
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def circumcircle(p: Point, q: Point, r: Point) -> Circle:
    """Circle through three non-collinear points."""
    if orient(p, q, r) == 0:
        raise CollinearBase(f"circumcircle of collinear points: {p}, {q}, {r}")
    bx, by = q.x - p.x, q.y - p.y
    cx, cy = r.x - p.x, r.y - p.y
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(p.x + ux, p.y + uy)
    return Circle(center, math.hypot(ux, uy))


def perp_bisector(p: Point, q: Point) -> Line:
    """Perpendicular bisector of the segment pq (points of equal distance)."""
    if p == q:
        raise CoincidentPoints(f"perpendicular bisector of coincident points {p}")
    nx, ny = q.x - p.x, q.y - p.y
    mx, my = (p.x + q.x) / 2.0, (p.y + q.y) / 2.0
    return Line.normalized(nx, ny, -(nx * mx + ny * my))


def reflect_point(l: Line, p: Point) -> Point:
    d = l.eval(p)
    return Point(p.x - 2.0 * d * l.a, p.y - 2.0 * d * l.b)


def reflect_direction(l: Line, dx: float, dy: float) -> tuple[float, float]:
    """Image of a direction vector under reflection about l."""
    d = l.a * dx + l.b * dy
    return dx - 2.0 * d * l.a, dy - 2.0 * d * l.b


def line_intersection(l1: Line, l2: Line):
    """Intersection point of two lines, or None if they are parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0.0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def compose_three_reflections(l1: Line, l2: Line, l3: Line) -> Line:
    """Line m with reflect(m, .) == reflect(l1, reflect(l2, reflect(l3, .))).

    The three lines must pass through a common point P; the result passes
    through P with direction angle theta1 - theta2 + theta3 (mod pi).
    """
    best = None
    best_det = 0.0
    for la, lb in ((l1, l2), (l1, l3), (l2, l3)):
        det = la.a * lb.b - lb.a * la.b
        if abs(det) > abs(best_det):
            best, best_det = (la, lb), det
    if best is None or best_det == 0.0:
        # All parallel: concurrent only if the three lines coincide.
        common = Point(-l1.c * l1.a, -l1.c * l1.b)
    else:
        common = line_intersection(*best)
    scale = max(1.0, abs(common.x), abs(common.y))
    resid = max(abs(l.eval(common)) for l in (l1, l2, l3))
    if resid > TAU_CONC * scale:
        raise NotConcurrent(f"lines share no common point (residual {resid:.3e})")
    theta = (l1.angle() - l2.angle() + l3.angle()) % math.pi
    return Line.from_point_angle(common, theta)


def viewing_angle(vertex: Point, a: Point, b: Point) -> float:
    """Unsigned angle in [0, pi] between the rays vertex->a and vertex->b."""
    ax, ay = a.x - vertex.x, a.y - vertex.y
    bx, by = b.x - vertex.x, b.y - vertex.y
    if (ax == 0.0 and ay == 0.0) or (bx == 0.0 and by == 0.0):
        raise DegenerateRay(f"viewing angle from {vertex} with a ray of zero length")
    return math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by)


def viewing_angle_ccw(vertex: Point, a: Point, b: Point) -> float:
    """Counterclockwise angle in [0, 2*pi) from ray vertex->a to ray vertex->b."""
    ax, ay = a.x - vertex.x, a.y - vertex.y
    bx, by = b.x - vertex.x, b.y - vertex.y
    if (ax == 0.0 and ay == 0.0) or (bx == 0.0 and by == 0.0):
        raise DegenerateRay(f"viewing angle from {vertex} with a ray of zero length")
    return math.atan2(ax * by - ay * bx, ax * bx + ay * by) % TWO_PI
