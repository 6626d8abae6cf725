"""Weighted graph representation of a body and connectivity of body and interior.

Edge weights are the dimension of the pairwise component intersections,
computed exactly: the bisector half-planes have rational coefficients once
the float coordinates are read as exact rationals, so the intersection
polygon is clipped in Fraction arithmetic and its dimension is decided
without tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .body import ConvexComponent, EquidistantBody, FocalConfig, Rect, build_body, is_bounded
from .errors import MismatchedOuterSet
from .polygon import extract_boundary
from .primitives import Point


@dataclass(frozen=True)
class RepGraph:
    """Graph on the inner focal points; an edge records the intersection dimension."""

    nodes: tuple[Point, ...]
    edges: tuple[tuple[int, int, int], ...]  # (i, j, weight) with i < j


@dataclass(frozen=True)
class PolytopeVerdict:
    is_polytope: bool
    reasons: tuple[str, ...]
    chain_count: int


REASON_UNBOUNDED = "unbounded"
REASON_INTERIOR_DISCONNECTED = "interior_disconnected"
REASON_COMPLEMENT_DISCONNECTED = "complement_disconnected"


def _exact_rows(site: Point, outer) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Half-plane rows A*x + B*y <= C for {site <= y}, exact in the inputs."""
    sx, sy = Fraction(site.x), Fraction(site.y)
    rows = []
    for y in outer:
        yx, yy = Fraction(y.x), Fraction(y.y)
        rows.append((2 * (yx - sx), 2 * (yy - sy), yx * yx + yy * yy - sx * sx - sy * sy))
    return rows


def _box_rows(clip: Rect) -> list[tuple[Fraction, Fraction, Fraction]]:
    one = Fraction(1)
    return [
        (-one, Fraction(0), -Fraction(clip.xmin)),
        (one, Fraction(0), Fraction(clip.xmax)),
        (Fraction(0), -one, -Fraction(clip.ymin)),
        (Fraction(0), one, Fraction(clip.ymax)),
    ]


def _exact_clip(rows, clip: Rect):
    """Sutherland-Hodgman clip of the box by rational half-planes, exactly."""
    verts = [(Fraction(p.x), Fraction(p.y)) for p in clip.corners()]
    for a, b, c in rows:
        if not verts:
            break
        svals = [c - (a * x + b * y) for x, y in verts]
        out = []
        n = len(verts)
        for i in range(n):
            j = (i + 1) % n
            sa, sb = svals[i], svals[j]
            if sa >= 0:
                out.append(verts[i])
                if sb < 0:
                    t = sa / (sa - sb)
                    out.append((verts[i][0] + t * (verts[j][0] - verts[i][0]),
                                verts[i][1] + t * (verts[j][1] - verts[i][1])))
            elif sb >= 0:
                t = sa / (sa - sb)
                out.append((verts[i][0] + t * (verts[j][0] - verts[i][0]),
                            verts[i][1] + t * (verts[j][1] - verts[i][1])))
        verts = out
    return verts


def polygon_dim(verts) -> int:
    """Dimension of an exact (possibly degenerate) convex polygon: -1, 0, 1 or 2."""
    uniq = []
    for v in verts:
        if v not in uniq:
            uniq.append(v)
    if not uniq:
        return -1
    if len(uniq) == 1:
        return 0
    a, b = uniq[0], uniq[1]
    ux, uy = b[0] - a[0], b[1] - a[1]
    for w in uniq[2:]:
        if ux * (w[1] - a[1]) - uy * (w[0] - a[0]) != 0:
            return 2
    return 1


def intersection_dim(a: ConvexComponent, b: ConvexComponent) -> int:
    """Exact dimension of a ∩ b: 2 area, 1 segment, 0 point, -1 empty.

    For disjoint focal sets the segment case cannot arise (a shared boundary
    segment would force an inner point to coincide with an outer one), but
    the classifier decides all four outcomes uniformly.
    """
    if a.outer != b.outer or a.clip != b.clip:
        raise MismatchedOuterSet("components must share the outer set and clip box")
    return polygon_dim(_intersection_exact(a, b))


def _intersection_exact(a: ConvexComponent, b: ConvexComponent):
    rows = _exact_rows(a.site, a.outer) + _exact_rows(b.site, b.outer)
    return _exact_clip(rows, a.clip)


def intersection_polygon(a: ConvexComponent, b: ConvexComponent) -> list[Point]:
    """Vertices of a ∩ b (exact clip, returned in floats; may be degenerate)."""
    if a.outer != b.outer or a.clip != b.clip:
        raise MismatchedOuterSet("components must share the outer set and clip box")
    return [Point(float(x), float(y)) for x, y in _intersection_exact(a, b)]


def build_graph(body: EquidistantBody) -> RepGraph:
    comps = body.components
    edges = []
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            w = intersection_dim(comps[i], comps[j])
            if w >= 0:
                edges.append((i, j, w))
    return RepGraph(nodes=tuple(c.site for c in comps), edges=tuple(edges))


def _components(n: int, pairs) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def graph_components(g: RepGraph, min_weight: int = 0) -> list[list[int]]:
    pairs = [(i, j) for i, j, w in g.edges if w >= min_weight]
    return _components(len(g.nodes), pairs)


def is_connected(g: RepGraph) -> bool:
    """Connectivity of the body: every recorded edge counts."""
    return len(graph_components(g, min_weight=0)) == 1


def is_interior_connected(g: RepGraph) -> bool:
    """Connectivity of the interior: only edges of weight >= 1 count."""
    return len(graph_components(g, min_weight=1)) == 1


def decompose(cfg: FocalConfig, clip_scale: float = 2.0) -> list[FocalConfig]:
    """Split the inner set along the connected components of the graph."""
    body = build_body(cfg, clip_scale)  # raises Unbounded
    groups = graph_components(build_graph(body))
    return [FocalConfig(inner=tuple(cfg.inner[i] for i in grp), outer=cfg.outer)
            for grp in groups]


def check_polytope(cfg: FocalConfig, clip_scale: float = 2.0) -> PolytopeVerdict:
    """Full validity check: bounded, connected interior, connected complement.

    Complement connectedness is decided by the boundary consisting of exactly
    one simple closed chain.  All failed criteria are reported.
    """
    if not is_bounded(cfg):
        return PolytopeVerdict(False, (REASON_UNBOUNDED,), 0)
    body = build_body(cfg, clip_scale)
    reasons = []
    if not is_interior_connected(build_graph(body)):
        reasons.append(REASON_INTERIOR_DISCONNECTED)
    chains = extract_boundary(cfg, clip_scale=clip_scale, body=body)
    if len(chains) != 1:
        reasons.append(REASON_COMPLEMENT_DISCONNECTED)
    return PolytopeVerdict(not reasons, tuple(reasons), len(chains))
