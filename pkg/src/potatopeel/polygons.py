"""Polygon families used by tests, oracles, benchmarks, and the CLI."""
from __future__ import annotations

import math

import numpy as np

from .geometry import SimplePolygon
from .rng import RandomSource


def unit_square() -> SimplePolygon:
    return SimplePolygon.from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])


def l_shape() -> SimplePolygon:
    """L with bounding box 2x2 and a notch in the top-right quadrant; area 3."""
    return SimplePolygon.from_vertices(
        [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
    )


def regular_ngon(k: int, radius: float = 1.0, center: tuple[float, float] = (0.0, 0.0)) -> SimplePolygon:
    if k < 3:
        raise ValueError("need at least 3 vertices")
    cx, cy = center
    verts = [
        (cx + radius * math.cos(2 * math.pi * i / k), cy + radius * math.sin(2 * math.pi * i / k))
        for i in range(k)
    ]
    return SimplePolygon.from_vertices(verts)


def random_convex(n: int, rng: RandomSource) -> SimplePolygon:
    """Random convex polygon with at most n vertices (Valtr's construction)."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    g = rng.generator()
    for _ in range(64):
        xs = np.sort(g.random(n))
        ys = np.sort(g.random(n))
        vx = _chain_deltas(xs, g)
        vy = _chain_deltas(ys, g)
        g.shuffle(vy)
        angles = np.arctan2(vy, vx)
        order = np.argsort(angles)
        pts = np.cumsum(np.column_stack([vx[order], vy[order]]), axis=0)
        pts -= pts.min(axis=0)
        try:
            return SimplePolygon.from_vertices(pts)
        except Exception:
            continue  # collinear collapse below 3 vertices; extremely rare
    raise RuntimeError("failed to build a random convex polygon")


def _chain_deltas(coords: np.ndarray, g: np.random.Generator) -> np.ndarray:
    lo, hi = coords[0], coords[-1]
    inner = coords[1:-1]
    mask = g.random(len(inner)) < 0.5
    up = np.concatenate([[lo], inner[mask], [hi]])
    down = np.concatenate([[lo], inner[~mask], [hi]])
    return np.concatenate([np.diff(up), -np.diff(down)])


def random_star(n: int, rng: RandomSource, spikiness: float = 0.6) -> SimplePolygon:
    """Random star-shaped (hence simple) polygon around the origin."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    g = rng.generator()
    for _ in range(64):
        angles = np.sort(g.random(n)) * 2 * math.pi
        if np.min(np.diff(angles, append=angles[0] + 2 * math.pi)) < 1e-6:
            continue
        radii = 1.0 - spikiness * g.random(n)
        pts = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
        try:
            return SimplePolygon.from_vertices(pts)
        except Exception:
            continue
    raise RuntimeError("failed to build a random star polygon")


def staircase(n_vertices: int) -> SimplePolygon:
    """Axis-aligned staircase with exactly ``n_vertices`` (even, >= 6)."""
    if n_vertices < 6 or n_vertices % 2 != 0:
        raise ValueError("staircase needs an even vertex count >= 6")
    steps = (n_vertices - 2) // 2
    verts: list[tuple[float, float]] = [(0.0, 0.0), (float(steps), 0.0)]
    for i in range(steps):
        x = float(steps - i)
        verts.append((x, float(i + 1)))
        verts.append((x - 1.0, float(i + 1)))
    return SimplePolygon.from_vertices(verts)


def comb(
    teeth: int,
    tooth_width: float = 1.0,
    gap: float = 1.0,
    tooth_height: float = 8.0,
    base_height: float = 1.0,
) -> SimplePolygon:
    """Comb: a base strip with upward teeth separated by gaps."""
    if teeth < 2:
        raise ValueError("comb needs at least 2 teeth")
    if min(tooth_width, gap, tooth_height, base_height) <= 0:
        raise ValueError("comb dimensions must be positive")
    width = teeth * tooth_width + (teeth - 1) * gap
    top = base_height + tooth_height
    verts: list[tuple[float, float]] = [(0.0, 0.0), (width, 0.0)]
    # walk the top edge right-to-left: tooth tops and gap floors alternate
    x = width
    for t in range(teeth):
        verts.append((x, top))
        x -= tooth_width
        verts.append((x, top))
        if t < teeth - 1:
            verts.append((x, base_height))
            x -= gap
            verts.append((x, base_height))
    return SimplePolygon.from_vertices(verts)


def scale_to_unit_area(polygon: SimplePolygon) -> SimplePolygon:
    """Uniformly scaled copy with area one (origin fixed)."""
    s = 1.0 / math.sqrt(polygon.cached_area)
    return SimplePolygon.from_vertices(polygon.vertices * s)
