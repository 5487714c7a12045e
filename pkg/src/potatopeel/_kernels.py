"""Compiled hot paths: bulk containment, pairwise visibility, clique DP.

These kernels trade the exact predicates of :mod:`potatopeel.geometry` for
guarded float arithmetic.  Guards are conservative: any contact that falls
within the error tolerance is treated as blocking, so the kernels may drop
a measure-zero sliver of true visibility edges but never report a segment
as inside when a clear crossing exists.  Final results are re-certified
with the exact predicates by the callers that need a guarantee.

Tolerances: ``eps2`` guards cross products (scales with length squared),
``epsxy`` guards coordinate comparisons (scales with length).
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

_PAR = {"cache": True, "parallel": True}
_SEQ = {"cache": True}


@njit(**_SEQ, inline="always")
def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@njit(**_SEQ, inline="always")
def _pip(poly, x, y):
    """Crossing-number point test; boundary behavior is float-resolved."""
    n = poly.shape[0]
    inside = False
    for i in range(n):
        x1 = poly[i, 0]
        y1 = poly[i, 1]
        j = i + 1
        if j == n:
            j = 0
        x2 = poly[j, 0]
        y2 = poly[j, 1]
        if (y1 <= y) != (y2 <= y):
            xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xint:
                inside = not inside
    return inside


@njit(**_SEQ)
def point_in_polygon_batch(poly, pts):
    m = pts.shape[0]
    out = np.empty(m, dtype=np.bool_)
    for k in range(m):
        out[k] = _pip(poly, pts[k, 0], pts[k, 1])
    return out


@njit(**_SEQ, inline="always")
def _seg_in_poly(poly, ax, ay, bx, by, eps2, epsxy):
    """Conservative containment of segment ab, endpoints assumed inside.

    Returns False on any proper boundary crossing and on any
    (tolerance-ambiguous) vertex graze or edge touch.
    """
    n = poly.shape[0]
    lox = min(ax, bx) - epsxy
    hix = max(ax, bx) + epsxy
    loy = min(ay, by) - epsxy
    hiy = max(ay, by) + epsxy
    for i in range(n):
        cx = poly[i, 0]
        cy = poly[i, 1]
        j = i + 1
        if j == n:
            j = 0
        dx = poly[j, 0]
        dy = poly[j, 1]
        d1 = _cross(ax, ay, bx, by, cx, cy)
        d2 = _cross(ax, ay, bx, by, dx, dy)
        d3 = _cross(cx, cy, dx, dy, ax, ay)
        d4 = _cross(cx, cy, dx, dy, bx, by)
        s1 = 1 if d1 > eps2 else (-1 if d1 < -eps2 else 0)
        s2 = 1 if d2 > eps2 else (-1 if d2 < -eps2 else 0)
        s3 = 1 if d3 > eps2 else (-1 if d3 < -eps2 else 0)
        s4 = 1 if d4 > eps2 else (-1 if d4 < -eps2 else 0)
        if s1 * s2 < 0 and s3 * s4 < 0:
            return False  # proper crossing
        if s1 == 0:
            # vertex c within tolerance of line ab: graze if inside ab's box
            if lox <= cx <= hix and loy <= cy <= hiy:
                return False
        if s2 == 0:
            if lox <= dx <= hix and loy <= dy <= hiy:
                return False
        if s3 == 0:
            # endpoint a within tolerance of edge cd's line
            if (
                min(cx, dx) - epsxy <= ax <= max(cx, dx) + epsxy
                and min(cy, dy) - epsxy <= ay <= max(cy, dy) + epsxy
            ):
                return False
        if s4 == 0:
            if (
                min(cx, dx) - epsxy <= bx <= max(cx, dx) + epsxy
                and min(cy, dy) - epsxy <= by <= max(cy, dy) + epsxy
            ):
                return False
    return True


@njit(**_SEQ)
def segment_in_polygon_batch(poly, seg_a, seg_b, eps2, epsxy):
    m = seg_a.shape[0]
    out = np.empty(m, dtype=np.bool_)
    for k in range(m):
        out[k] = _seg_in_poly(
            poly, seg_a[k, 0], seg_a[k, 1], seg_b[k, 0], seg_b[k, 1], eps2, epsxy
        )
    return out


@njit(**_SEQ)
def pairwise_visibility(poly, pts, cap, eps2, epsxy):
    """All visible pairs among pts (assumed inside), scanned in (i, j) order.

    ``cap < 0`` disables the cap.  With a cap, construction aborts as soon
    as the edge count would exceed it; the partial edge list is returned
    with ``completed`` False.
    """
    r = pts.shape[0]
    total = r * (r - 1) // 2
    limit = total if cap < 0 else min(cap, total)
    edges = np.empty((limit, 2), dtype=np.int32)
    cnt = 0
    for i in range(r):
        for j in range(i + 1, r):
            if _seg_in_poly(poly, pts[i, 0], pts[i, 1], pts[j, 0], pts[j, 1], eps2, epsxy):
                if cap >= 0 and cnt == cap:
                    return edges[:cnt], False
                edges[cnt, 0] = i
                edges[cnt, 1] = j
                cnt += 1
    return edges[:cnt], True


@njit(**_SEQ)
def count_visible_pairs(poly, pa, pb, eps2, epsxy):
    m = pa.shape[0]
    hits = 0
    for k in range(m):
        if _seg_in_poly(poly, pa[k, 0], pa[k, 1], pb[k, 0], pb[k, 1], eps2, epsxy):
            hits += 1
    return hits


@njit(**_SEQ)
def _clique_dp(pts, adj, s, members):
    """Max-area convex chain anchored at s as strictly highest vertex.

    Fills ``members`` with the winning vertex indices (s first) and returns
    (area, member_count).  Points and adjacency describe the local graph;
    "highest" uses lexicographic (y, x) order.  Collinear turns count as
    convex.  The chain construction assumes the graph is a polygon
    visibility graph, where consecutive visibility implies mutual
    visibility (hole-free region).
    """
    k = pts.shape[0]
    sx = pts[s, 0]
    sy = pts[s, 1]
    idx = np.empty(k, dtype=np.int32)
    keyang = np.empty(k, dtype=np.float64)
    keydist = np.empty(k, dtype=np.float64)
    m = 0
    for p in range(k):
        if p == s or adj[s, p] == 0:
            continue
        px = pts[p, 0]
        py = pts[p, 1]
        if (py < sy) or (py == sy and px < sx):
            ddx = px - sx
            ddy = py - sy
            a = math.atan2(ddy, ddx)
            if a > 0.0:  # atan2(0, negative) == pi; wrap to the low end
                a = -math.pi
            idx[m] = p
            keyang[m] = a
            keydist[m] = ddx * ddx + ddy * ddy
            m += 1
    members[0] = s
    if m < 2:
        return 0.0, 1
    # insertion sort by (angle, distance): counterclockwise radial order
    for i in range(1, m):
        ci = idx[i]
        ca = keyang[i]
        cd = keydist[i]
        j = i - 1
        while j >= 0 and (keyang[j] > ca or (keyang[j] == ca and keydist[j] > cd)):
            idx[j + 1] = idx[j]
            keyang[j + 1] = keyang[j]
            keydist[j + 1] = keydist[j]
            j -= 1
        idx[j + 1] = ci
        keyang[j + 1] = ca
        keydist[j + 1] = cd

    opt = np.full((m, m), -1.0)
    pred = np.full((m, m), -1, dtype=np.int32)
    best = 0.0
    bi = -1
    bj = -1
    for j in range(1, m):
        pj = idx[j]
        xj = pts[pj, 0]
        yj = pts[pj, 1]
        for i in range(j):
            pi = idx[i]
            if adj[pi, pj] == 0:
                continue
            xi = pts[pi, 0]
            yi = pts[pi, 1]
            base = abs(_cross(sx, sy, xi, yi, xj, yj)) / 2.0
            bh = 0.0
            ph = -1
            for h in range(i):
                v = opt[h, i]
                if v <= bh:
                    continue
                xh = pts[idx[h], 0]
                yh = pts[idx[h], 1]
                if _cross(xi, yi, xj, yj, xh, yh) <= 0.0:  # left turn at x_i
                    bh = v
                    ph = h
            opt[i, j] = base + bh
            pred[i, j] = ph
            if opt[i, j] > best:
                best = opt[i, j]
                bi = i
                bj = j
    if best <= 0.0 or bi < 0:
        return 0.0, 1
    count = 1
    j = bj
    i = bi
    members[count] = idx[j]
    count += 1
    while i >= 0:
        members[count] = idx[i]
        count += 1
        h = pred[i, j]
        j = i
        i = h
    return best, count


@njit(**_SEQ)
def _local_graph(poly, anchor, uvec, vvec, u_hull, u_anchor, eps2, epsxy, pts, is_anchor):
    """Map per-edge uniforms into the parallelogram, keep points inside poly,
    and build the pairwise visibility matrix.  Returns (count, adj)."""
    m_hull = u_hull.shape[0]
    m_anchor = u_anchor.shape[0]
    k = 0
    for q in range(m_hull):
        x = anchor[0] + u_hull[q, 0] * uvec[0] + u_hull[q, 1] * vvec[0]
        y = anchor[1] + u_hull[q, 0] * uvec[1] + u_hull[q, 1] * vvec[1]
        if _pip(poly, x, y):
            pts[k, 0] = x
            pts[k, 1] = y
            is_anchor[k] = False
            k += 1
    for q in range(m_anchor):
        x = anchor[0] + u_anchor[q, 0] * uvec[0] + u_anchor[q, 1] * vvec[0]
        y = anchor[1] + u_anchor[q, 0] * uvec[1] + u_anchor[q, 1] * vvec[1]
        if _pip(poly, x, y):
            pts[k, 0] = x
            pts[k, 1] = y
            is_anchor[k] = True
            k += 1
    adj = np.zeros((k, k), dtype=np.uint8)
    for i in range(k):
        for j in range(i + 1, k):
            if _seg_in_poly(poly, pts[i, 0], pts[i, 1], pts[j, 0], pts[j, 1], eps2, epsxy):
                adj[i, j] = 1
                adj[j, i] = 1
    return k, adj


@njit(**_PAR)
def edge_sweep(poly, anchors, uvecs, vvecs, u_hull, u_anchor, eps2, epsxy):
    """Per-edge local sampling + graph + anchored DP, parallel over edges.

    Returns (best_area, stats) where stats rows hold (points kept,
    anchors tried, local edge count).
    """
    n_edges = anchors.shape[0]
    m_total = u_hull.shape[1] + u_anchor.shape[1]
    best_area = np.zeros(n_edges, dtype=np.float64)
    stats = np.zeros((n_edges, 3), dtype=np.int64)
    for e in prange(n_edges):
        pts = np.empty((m_total, 2), dtype=np.float64)
        is_anchor = np.empty(m_total, dtype=np.bool_)
        k, adj = _local_graph(
            poly, anchors[e], uvecs[e], vvecs[e], u_hull[e], u_anchor[e],
            eps2, epsxy, pts, is_anchor,
        )
        ecount = 0
        for i in range(k):
            for j in range(i + 1, k):
                ecount += adj[i, j]
        best = 0.0
        tried = 0
        members = np.empty(m_total + 1, dtype=np.int32)
        for s in range(k):
            if not is_anchor[s]:
                continue
            tried += 1
            area, _ = _clique_dp(pts[:k], adj, s, members)
            if area > best:
                best = area
        best_area[e] = best
        stats[e, 0] = k
        stats[e, 1] = tried
        stats[e, 2] = ecount
    return best_area, stats


@njit(**_SEQ)
def edge_extract(poly, anchor, uvec, vvec, u_hull, u_anchor, eps2, epsxy):
    """Re-run one edge of :func:`edge_sweep` and return the winning clique.

    Deterministically reproduces the sweep's arithmetic; returns
    (member coordinates, area).
    """
    m_total = u_hull.shape[0] + u_anchor.shape[0]
    pts = np.empty((m_total, 2), dtype=np.float64)
    is_anchor = np.empty(m_total, dtype=np.bool_)
    k, adj = _local_graph(
        poly, anchor, uvec, vvec, u_hull, u_anchor, eps2, epsxy, pts, is_anchor
    )
    best = 0.0
    members = np.empty(m_total + 1, dtype=np.int32)
    best_members = np.empty(m_total + 1, dtype=np.int32)
    best_count = 0
    for s in range(k):
        if not is_anchor[s]:
            continue
        area, cnt = _clique_dp(pts[:k], adj, s, members)
        if area > best:
            best = area
            best_count = cnt
            best_members[:cnt] = members[:cnt]
    coords = np.empty((best_count, 2), dtype=np.float64)
    for t in range(best_count):
        coords[t, 0] = pts[best_members[t], 0]
        coords[t, 1] = pts[best_members[t], 1]
    return coords, best
