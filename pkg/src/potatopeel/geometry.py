"""Planar primitives: orientation predicate, polygons, hulls, containment.

All scalar predicates are exact: the fast float evaluation is accepted only
when its magnitude clears a Shewchuk-style relative error bound, otherwise
the sign is recomputed with rational arithmetic (floats are dyadic, so
``fractions.Fraction`` gives the true sign).  Containment is closed
throughout: boundary points and boundary-touching segments count as inside.

Bulk/filtering paths live in :mod:`potatopeel._kernels`; the functions here
are the certified reference used for validation and final output checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Point = tuple[float, float]
Segment = tuple[Point, Point]

# (3 + 16*eps)*eps, the orientation filter bound for the 2x2 determinant
_EPS = np.finfo(np.float64).eps / 2.0
_ORIENT_BOUND = (3.0 + 16.0 * _EPS) * _EPS

LEFT = 1
RIGHT = -1
COLLINEAR = 0


class GeometryError(ValueError):
    """Invalid geometric input (non-simple polygon, degenerate data, ...)."""


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn p->q->r: +1 left, -1 right, 0 collinear.

    Exact for all finite double inputs: a float filter handles the easy
    cases and a rational fallback decides the near-degenerate ones.
    """
    detleft = (q[0] - p[0]) * (r[1] - p[1])
    detright = (q[1] - p[1]) * (r[0] - p[0])
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)
    if abs(det) >= _ORIENT_BOUND * detsum:
        return _sign(det)
    return _orientation_exact(p, q, r)


def _sign(x: float) -> int:
    if x > 0.0:
        return LEFT
    if x < 0.0:
        return RIGHT
    return COLLINEAR


def _orientation_exact(p: Point, q: Point, r: Point) -> int:
    px, py = Fraction(p[0]), Fraction(p[1])
    qx, qy = Fraction(q[0]), Fraction(q[1])
    rx, ry = Fraction(r[0]), Fraction(r[1])
    det = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    if det > 0:
        return LEFT
    if det < 0:
        return RIGHT
    return COLLINEAR


def cross(o: Point, a: Point, b: Point) -> float:
    """Float cross product (a-o) x (b-o); use orientation() for the sign."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def triangle_area(a: Point, b: Point, c: Point) -> float:
    return abs(cross(a, b, c)) / 2.0


def shoelace_area(vertices: Sequence[Point] | np.ndarray) -> float:
    """Signed area, positive for counterclockwise order."""
    pts = np.asarray(vertices, dtype=np.float64)
    x = pts[:, 0]
    y = pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment ab (collinearity included)."""
    if orientation(a, b, p) != COLLINEAR:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _param_on_line(a: Point, b: Point, p: Point) -> float:
    """Parameter t with p ~ a + t*(b-a), for p collinear with ab."""
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if abs(dx) >= abs(dy):
        return (p[0] - a[0]) / dx
    return (p[1] - a[1]) / dy


def segment_intersection_params(a: Point, b: Point, c: Point, d: Point) -> list[float]:
    """Parameters along ab where the closed segments ab and cd meet.

    Classification is exact; the returned parameter values are float.
    Collinear overlap yields both overlap endpoints, a touch or a proper
    crossing yields one value, disjoint segments yield none.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)

    if o1 == COLLINEAR and o2 == COLLINEAR:
        # ab and cd on one line; intersect parameter ranges
        if a == b:
            return [0.0] if on_segment(c, d, a) else []
        tc = _param_on_line(a, b, c)
        td = _param_on_line(a, b, d)
        lo, hi = min(tc, td), max(tc, td)
        lo = max(lo, 0.0)
        hi = min(hi, 1.0)
        if lo > hi:
            return []
        return [lo] if lo == hi else [lo, hi]

    params: list[float] = []
    if o1 == COLLINEAR and on_segment(a, b, c):
        params.append(_param_on_line(a, b, c))
    if o2 == COLLINEAR and on_segment(a, b, d):
        params.append(_param_on_line(a, b, d))
    if o3 == COLLINEAR and on_segment(c, d, a):
        params.append(0.0)
    if o4 == COLLINEAR and on_segment(c, d, b):
        params.append(1.0)
    if params:
        return sorted(set(params))

    if (o1 != o2) and (o3 != o4) and o1 != COLLINEAR and o2 != COLLINEAR:
        # proper crossing; parameter from the signed-area ratio
        num = cross(c, d, a)
        den = num - cross(c, d, b)
        t = num / den
        return [min(max(t, 0.0), 1.0)]
    return []


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments cross in a single interior point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the closed segments share at least one point."""
    if segments_properly_cross(a, b, c, d):
        return True
    return (
        on_segment(a, b, c)
        or on_segment(a, b, d)
        or on_segment(c, d, a)
        or on_segment(c, d, b)
    )


def _merge_collinear(pts: list[Point]) -> list[Point]:
    """Drop repeated consecutive points and vertices interior to a straight run."""
    out = [p for i, p in enumerate(pts) if p != pts[i - 1]]
    if len(out) < 3:
        return out
    merged: list[Point] = []
    n = len(out)
    for i, p in enumerate(out):
        if orientation(out[i - 1], p, out[(i + 1) % n]) != COLLINEAR:
            merged.append(p)
    return merged


def _check_simple(pts: list[Point]) -> None:
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                shared = b if j == i + 1 else a
                # neighbors may only meet at the shared vertex
                other = c if shared == d else d
                if on_segment(a, b, other) and other != shared:
                    raise GeometryError(f"edges {i} and {j} overlap")
                if on_segment(c, d, a if shared == b else b) and (a if shared == b else b) != shared:
                    raise GeometryError(f"edges {i} and {j} overlap")
                continue
            if segments_touch(a, b, c, d):
                raise GeometryError(f"non-adjacent edges {i} and {j} intersect")


@dataclass(frozen=True)
class SimplePolygon:
    """Simple polygon with counterclockwise vertices and a cached area.

    Construct through :meth:`from_vertices`, which validates finiteness,
    orientation, and simplicity, and merges collinear vertices.
    """

    vertices: np.ndarray  # (n, 2) float64, CCW
    cached_area: float

    @classmethod
    def from_vertices(
        cls,
        vertices: Iterable[Sequence[float]],
        *,
        fix_orientation: bool = False,
    ) -> "SimplePolygon":
        pts = [(float(x), float(y)) for x, y in vertices]
        for x, y in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise GeometryError("polygon coordinates must be finite")
        pts = _merge_collinear(pts)
        if len(pts) < 3:
            raise GeometryError("polygon needs at least 3 non-collinear vertices")
        if len(set(pts)) != len(pts):
            raise GeometryError("polygon has repeated vertices")
        area = shoelace_area(pts)
        if area < 0:
            if not fix_orientation:
                raise GeometryError("polygon vertices are clockwise")
            pts = pts[::-1]
            area = -area
        if area == 0:
            raise GeometryError("polygon has zero area")
        _check_simple(pts)
        return cls(np.array(pts, dtype=np.float64), float(area))

    def __post_init__(self) -> None:
        self.vertices.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def points(self) -> list[Point]:
        return [tuple(v) for v in self.vertices]

    def diameter_bound(self) -> float:
        """Diagonal of the bounding box; scale for tolerance decisions."""
        lo = self.vertices.min(axis=0)
        hi = self.vertices.max(axis=0)
        return float(np.hypot(*(hi - lo)))

    def is_convex(self) -> bool:
        pts = self.points()
        n = len(pts)
        return all(
            orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == LEFT
            for i in range(n)
        )

    def reflex_vertices(self) -> list[int]:
        pts = self.points()
        n = len(pts)
        return [
            i
            for i in range(n)
            if orientation(pts[i - 1], pts[i], pts[(i + 1) % n]) == RIGHT
        ]


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex vertex chain (CCW) with its area; may be degenerate (area 0)."""

    vertices: np.ndarray  # (k, 2) float64
    area: float

    def __post_init__(self) -> None:
        self.vertices.setflags(write=False)

    @property
    def k(self) -> int:
        return len(self.vertices)

    def points(self) -> list[Point]:
        return [tuple(v) for v in self.vertices]

    def is_degenerate(self) -> bool:
        return self.k < 3

    def to_simple_polygon(self) -> SimplePolygon:
        if self.is_degenerate():
            raise GeometryError("degenerate hull cannot become a polygon")
        return SimplePolygon.from_vertices(self.vertices)

    def contains_point(self, p: Point) -> bool:
        pts = self.points()
        if self.k == 1:
            return pts[0] == p
        if self.k == 2:
            return on_segment(pts[0], pts[1], p)
        return all(
            orientation(pts[i], pts[(i + 1) % self.k], p) != RIGHT
            for i in range(self.k)
        )


def convex_hull(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Counterclockwise convex hull; collinear boundary points are dropped.

    Fewer than three non-collinear input points give a degenerate hull of
    area zero holding the extreme points.
    """
    pts = sorted({(float(p[0]), float(p[1])) for p in points})
    if not pts:
        raise GeometryError("convex hull of empty set")
    if len(pts) == 1:
        return ConvexPolygon(np.array(pts, dtype=np.float64), 0.0)

    def half(seq: list[Point]) -> list[Point]:
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) != LEFT:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        ends = [pts[0], pts[-1]]
        return ConvexPolygon(np.array(ends, dtype=np.float64), 0.0)
    return ConvexPolygon(np.array(hull, dtype=np.float64), shoelace_area(hull))


def polygon_area(polygon: SimplePolygon) -> float:
    return polygon.cached_area


def point_in_polygon(polygon: SimplePolygon, p: Point) -> bool:
    """Closed containment: boundary points are inside."""
    pts = polygon.points()
    n = len(pts)
    px, py = float(p[0]), float(p[1])
    inside = False
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        if on_segment(a, b, (px, py)):
            return True
        if (a[1] <= py) != (b[1] <= py):
            o = orientation(a, b, (px, py))
            if a[1] <= py:  # upward edge; count if p strictly left
                if o == LEFT:
                    inside = not inside
            else:  # downward edge; count if p strictly right
                if o == RIGHT:
                    inside = not inside
    return inside


def segment_in_polygon(polygon: SimplePolygon, seg: Segment) -> bool:
    """True iff the closed segment lies inside the closed polygon.

    Gathers every parameter where the segment meets the boundary, then
    requires the midpoint of each sub-interval to be inside.  Segments with
    an endpoint outside are reported False rather than as an error.
    """
    a, b = (float(seg[0][0]), float(seg[0][1])), (float(seg[1][0]), float(seg[1][1]))
    if a == b:
        return point_in_polygon(polygon, a)
    if not point_in_polygon(polygon, a) or not point_in_polygon(polygon, b):
        return False
    pts = polygon.points()
    n = len(pts)
    params = [0.0, 1.0]
    for i in range(n):
        params.extend(segment_intersection_params(a, b, pts[i], pts[(i + 1) % n]))
    params.sort()
    prev = params[0]
    for t in params[1:]:
        if t - prev > 1e-14:
            mx = a[0] + (b[0] - a[0]) * (prev + t) / 2.0
            my = a[1] + (b[1] - a[1]) * (prev + t) / 2.0
            if not point_in_polygon(polygon, (mx, my)):
                return False
        prev = t
    return True


def polygon_centroid(polygon: SimplePolygon) -> Point:
    """Area centroid."""
    pts = polygon.vertices
    x = pts[:, 0]
    y = pts[:, 1]
    xn = np.roll(x, -1)
    yn = np.roll(y, -1)
    w = x * yn - xn * y
    a = w.sum() / 2.0
    cx = float(((x + xn) * w).sum() / (6.0 * a))
    cy = float(((y + yn) * w).sum() / (6.0 * a))
    return (cx, cy)
