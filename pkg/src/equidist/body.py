"""Equidistant bodies of finite focal sets.

A body is the set of points at least as close to the inner focal set as to
the outer one.  It is assembled as a union of convex components, one per
inner point, each obtained by clipping a bounding box against the
perpendicular-bisector half-planes toward every outer point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    EmptySet,
    InvalidConfig,
    PreconditionViolated,
    SiteInOuterSet,
    Unbounded,
)
from .primitives import (
    EPS_GEO,
    Line,
    Point,
    circumcircle,
    coord_scale,
    dist,
    lerp,
    orient,
    perp_bisector,
)

MEMBER_INSIDE = "inside_strict"
MEMBER_BOUNDARY = "on_boundary"
MEMBER_OUTSIDE = "outside"

# Consecutive clip vertices closer than this (relative) are merged.
_DEDUPE_REL = 1e-12


@dataclass(frozen=True)
class Rect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def contains(self, p: Point) -> bool:
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (
            Point(self.xmin, self.ymin),
            Point(self.xmax, self.ymin),
            Point(self.xmax, self.ymax),
            Point(self.xmin, self.ymax),
        )

    def side_dists(self, p: Point) -> tuple[float, float, float, float]:
        """Signed distances to the four sides, positive inside."""
        return (p.y - self.ymin, self.xmax - p.x, self.ymax - p.y, p.x - self.xmin)


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane bounded by ``boundary``; inside is signed() >= 0."""

    boundary: Line
    keep_positive: bool

    def signed(self, p: Point) -> float:
        v = self.boundary.eval(p)
        return v if self.keep_positive else -v

    @staticmethod
    def closer_to(x: Point, y: Point) -> "HalfPlane":
        """The half-plane of points at least as close to x as to y."""
        l = perp_bisector(x, y)
        return HalfPlane(l, l.eval(x) > 0.0)


@dataclass(frozen=True)
class FocalConfig:
    """Inner focal points (the near set) and outer focal points (the far set)."""

    inner: tuple[Point, ...]
    outer: tuple[Point, ...]

    def __post_init__(self):
        if not self.inner or not self.outer:
            raise InvalidConfig("both focal sets must be non-empty")
        seen = {}
        for kind, pts in (("inner", self.inner), ("outer", self.outer)):
            for p in pts:
                if not (math.isfinite(p.x) and math.isfinite(p.y)):
                    raise InvalidConfig(f"non-finite focal point {p}")
                key = (p.x, p.y)
                if key in seen:
                    raise InvalidConfig(f"duplicate focal point {p} ({seen[key]}/{kind})")
                seen[key] = kind

    @staticmethod
    def of(inner, outer) -> "FocalConfig":
        return FocalConfig(tuple(Point(float(x), float(y)) for x, y in inner),
                           tuple(Point(float(x), float(y)) for x, y in outer))

    @property
    def p(self) -> int:
        return len(self.inner)

    @property
    def q(self) -> int:
        return len(self.outer)

    @property
    def points(self) -> tuple[Point, ...]:
        return self.inner + self.outer

    def scale(self) -> float:
        return coord_scale(self.points)


@dataclass(frozen=True)
class ConvexComponent:
    """Clipped half-plane intersection attached to one site.

    ``edge_tags[i]`` labels the edge from ``vertices[i]`` to ``vertices[i+1]``:
    a non-negative value is the index of the outer point whose bisector
    carries the edge, negative values are clip-box sides.
    """

    site: Point
    outer: tuple[Point, ...]
    clip: Rect
    halfplanes: tuple[HalfPlane, ...]
    vertices: tuple[Point, ...]
    edge_tags: tuple[int, ...]
    clipped: bool

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n], self.edge_tags[i]

    def min_signed(self, p: Point) -> float:
        """Smallest signed distance to the defining half-planes and clip sides."""
        m = min(hp.signed(p) for hp in self.halfplanes)
        return min(m, *self.clip.side_dists(p))

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return self.min_signed(p) >= -tol


@dataclass(frozen=True)
class EquidistantBody:
    config: FocalConfig
    components: tuple[ConvexComponent, ...]
    clip: Rect
    radius: float

    def contains_strict(self, p: Point) -> bool:
        return any(c.min_signed(p) > 0.0 for c in self.components)


def distance_to_set(q: Point, pts) -> float:
    """Distance from q to the nearest point of a non-empty finite set."""
    best = math.inf
    for p in pts:
        best = min(best, dist(q, p))
    if best is math.inf:
        raise EmptySet("distance to an empty point set")
    return best


def membership(q: Point, cfg: FocalConfig, tol: float = EPS_GEO) -> str:
    """Distance-oracle membership of q in the body; never consults components."""
    dk = distance_to_set(q, cfg.inner)
    dl = distance_to_set(q, cfg.outer)
    if abs(dk - dl) <= tol * cfg.scale():
        return MEMBER_BOUNDARY
    return MEMBER_INSIDE if dk < dl else MEMBER_OUTSIDE


def convex_hull(pts) -> list[Point]:
    """Strictly convex hull, counterclockwise (collinear mid-points dropped)."""
    uniq = sorted(set((p.x, p.y) for p in pts))
    points = [Point(x, y) for x, y in uniq]
    if len(points) <= 2:
        return points

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(points)
    upper = half(reversed(points))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else points[:1] + points[-1:]


def is_bounded(cfg: FocalConfig) -> bool:
    """True iff every inner point is strictly inside the hull of the outer set."""
    hull = convex_hull(cfg.outer)
    if len(hull) < 3:
        return False
    n = len(hull)
    for x in cfg.inner:
        for i in range(n):
            if orient(hull[i], hull[(i + 1) % n], x) != 1:
                return False
    return True


def _centroid(pts) -> Point:
    n = len(pts)
    return Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)


def bounding_radius(cfg: FocalConfig) -> float:
    """Radius of a disk around the inner centroid that contains the whole body.

    Computed as c / r where, after translating the inner centroid to the
    origin, c bounds (|Y|^2 - |X|^2) / 2 over all focal pairs and r is the
    largest radius such that every inner point keeps that distance to the
    boundary of the outer hull.
    """
    if not is_bounded(cfg):
        raise Unbounded("bounding radius requires the inner set inside the outer hull")
    o = _centroid(cfg.inner)
    c = 0.0
    for y in cfg.outer:
        ny = (y.x - o.x) ** 2 + (y.y - o.y) ** 2
        for x in cfg.inner:
            nx = (x.x - o.x) ** 2 + (x.y - o.y) ** 2
            c = max(c, (ny - nx) / 2.0)
    c = max(c, 1e-15 * cfg.scale() ** 2)

    hull = convex_hull(cfg.outer)
    n = len(hull)
    edge_lines = [Line.through(hull[i], hull[(i + 1) % n]) for i in range(n)]
    r = math.inf
    for x in cfg.inner:
        rx = min(abs(l.eval(x)) for l in edge_lines)
        r = min(r, rx)
    return c / r


def star_center(cfg: FocalConfig):
    """Center of a ball separating inner from outer points, for q = 3.

    Returns the circumcenter of the outer triangle when every inner point is
    strictly closer to it than the circumradius, else None.
    """
    if cfg.q != 3:
        raise PreconditionViolated("star_center is implemented for exactly 3 outer points")
    if orient(*cfg.outer) == 0:
        return None
    circ = circumcircle(*cfg.outer)
    if max(dist(circ.center, x) for x in cfg.inner) < circ.radius:
        return circ.center
    return None


def _clip_tagged(verts, tags, signed_vals, new_tag, scale):
    """One Sutherland-Hodgman clip step keeping signed >= 0, propagating edge tags."""
    out_v, out_t = [], []
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        sa, sb = signed_vals[i], signed_vals[(i + 1) % n]
        if sa >= 0.0:
            out_v.append(a)
            out_t.append(tags[i])
            if sb < 0.0:
                t = sa / (sa - sb)
                out_v.append(lerp(a, b, t))
                out_t.append(new_tag)
        elif sb >= 0.0:
            t = sa / (sa - sb)
            out_v.append(lerp(a, b, t))
            out_t.append(tags[i])
    # Drop zero-length edges: keep each surviving edge's start vertex and tag,
    # so a dropped vertex hands its incoming edge to the next kept vertex.
    tol = _DEDUPE_REL * scale
    m = len(out_v)
    keep_v, keep_t = [], []
    for i in range(m):
        if dist(out_v[i], out_v[(i + 1) % m]) <= tol:
            continue
        keep_v.append(out_v[i])
        keep_t.append(out_t[i])
    return keep_v, keep_t


def convex_component(site: Point, outer, clip: Rect) -> ConvexComponent:
    """Clip-box intersection of the half-planes {site <= y} for every outer y."""
    outer = tuple(outer)
    if not outer:
        raise EmptySet("convex component with an empty outer set")
    if site in outer:
        raise SiteInOuterSet(f"site {site} appears in the outer set")
    if not clip.contains(site):
        raise PreconditionViolated(f"clip box does not contain the site {site}")
    scale = max(coord_scale((site,) + outer),
                abs(clip.xmin), abs(clip.xmax), abs(clip.ymin), abs(clip.ymax))
    verts = list(clip.corners())
    tags = [-1, -2, -3, -4]
    halfplanes = tuple(HalfPlane.closer_to(site, y) for y in outer)
    for j, hp in enumerate(halfplanes):
        if not verts:
            break
        signed_vals = [hp.signed(v) for v in verts]
        verts, tags = _clip_tagged(verts, tags, signed_vals, j, scale)
    clipped = any(t < 0 for t in tags)
    return ConvexComponent(site=site, outer=outer, clip=clip,
                           halfplanes=halfplanes, vertices=tuple(verts),
                           edge_tags=tuple(tags), clipped=clipped)


def body_clip_box(cfg: FocalConfig, clip_scale: float = 2.0) -> Rect:
    """Square clip box guaranteed to contain the body with margin."""
    radius = bounding_radius(cfg)
    o = _centroid(cfg.inner)
    h = clip_scale * radius
    return Rect(o.x - h, o.y - h, o.x + h, o.y + h)


def build_body(cfg: FocalConfig, clip_scale: float = 2.0) -> EquidistantBody:
    """Assemble the body as the union of one convex component per inner point."""
    radius = bounding_radius(cfg)  # raises Unbounded
    clip = body_clip_box(cfg, clip_scale)
    components = tuple(convex_component(x, cfg.outer, clip) for x in cfg.inner)
    return EquidistantBody(config=cfg, components=components, clip=clip, radius=radius)
