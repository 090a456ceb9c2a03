"""Pure-Python twins of the compiled routing and integration kernels.

Selected when the Cython extension is unavailable or when
ANCHORROUTE_PURE_KERNELS=1. Operation order mirrors _core.pyx exactly so
both backends make bit-identical decisions; keep the two files in sync.
"""

from __future__ import annotations

import math

BACKEND = "pure"

_TWO_PI = 2.0 * math.pi
_INF = math.inf

# Curve integrator status codes (shared with _core.pyx).
CURVE_CONVERGED = 0
CURVE_STATIONARY = 1
CURVE_MAX_STEPS = 2
CURVE_SINGULAR = 3


def coord_dist2(a, b, active):
    """Squared distance between coordinate vectors a, b over active indices."""
    s = 0.0
    for k in range(len(active)):
        i = active[k]
        d = a[i] - b[i]
        s += d * d
    return s


def greedy_scan(coords, cur, nbrs, dest, active, variant, eps_norm):
    """Pick the next hop among nbrs for one greedy variant, or -1.

    coords is the (nodes x anchors) coordinate matrix, dest the full
    destination coordinate vector, active the active anchor indices.
    Neighbors are scanned in ascending order with strict improvement, so
    ties resolve to the smallest node index.

    variant 1: minimize distance to dest; -1 unless strictly closer than cur.
    variant 2: maximize (f(nb)-f(cur)) . (dest-f(cur)); -1 if best <= 0.
    variant 3: like 2 with the first factor normalized.
    """
    m = len(active)
    nn = len(nbrs)
    best = -1
    if variant == 1:
        best_d2 = 0.0
        for k in range(m):
            a = active[k]
            diff = coords[cur, a] - dest[a]
            best_d2 += diff * diff
        for t in range(nn):
            nb = nbrs[t]
            d2 = 0.0
            for k in range(m):
                a = active[k]
                diff = coords[nb, a] - dest[a]
                d2 += diff * diff
            if d2 < best_d2:
                best = nb
                best_d2 = d2
    elif variant == 2:
        best_v = 0.0
        for t in range(nn):
            nb = nbrs[t]
            v = 0.0
            for k in range(m):
                a = active[k]
                u = coords[nb, a] - coords[cur, a]
                w = dest[a] - coords[cur, a]
                v += u * w
            if v > best_v:
                best = nb
                best_v = v
    elif variant == 3:
        best_v = 0.0
        for t in range(nn):
            nb = nbrs[t]
            v = 0.0
            un2 = 0.0
            for k in range(m):
                a = active[k]
                u = coords[nb, a] - coords[cur, a]
                w = dest[a] - coords[cur, a]
                v += u * w
                un2 += u * u
            un = math.sqrt(un2)
            if un <= eps_norm:
                continue
            v = v / un
            if v > best_v:
                best = nb
                best_v = v
    else:
        raise ValueError(f"unknown greedy variant {variant}")
    return int(best)


def fallback_scan(coords, cur, nbrs, dest, active, ivec, jvec, eps_norm):
    """Rotation fallback: neighbor whose projected direction needs the
    smallest clockwise rotation from the projected destination direction.

    ivec/jvec span the estimated tangent plane (aligned with active).
    Neighbors whose projection has norm <= eps_norm are skipped; returns -1
    when none is usable.
    """
    m = len(active)
    xw = 0.0
    yw = 0.0
    for k in range(m):
        a = active[k]
        w = dest[a] - coords[cur, a]
        xw += w * ivec[k]
        yw += w * jvec[k]
    if math.sqrt(xw * xw + yw * yw) <= eps_norm:
        theta_w = 0.0
    else:
        theta_w = math.atan2(yw, xw)
    best = -1
    best_delta = _INF
    for t in range(len(nbrs)):
        nb = nbrs[t]
        xu = 0.0
        yu = 0.0
        for k in range(m):
            a = active[k]
            u = coords[nb, a] - coords[cur, a]
            xu += u * ivec[k]
            yu += u * jvec[k]
        if math.sqrt(xu * xu + yu * yu) <= eps_norm:
            continue
        delta = math.fmod(theta_w - math.atan2(yu, xu), _TWO_PI)
        if delta < 0.0:
            delta += _TWO_PI
        if delta < best_delta:
            best = nb
            best_delta = delta
    return int(best)


def _unit_field(anchors, fd, x, y, eps_norm, eps_sing):
    """Normalized apparent-destination field at (x, y).

    Returns (status, kx, ky); status is 0 when usable, CURVE_SINGULAR at an
    anchor, CURVE_STATIONARY when the raw field norm is <= eps_norm.
    """
    n = anchors.shape[0]
    gx = 0.0
    gy = 0.0
    for i in range(n):
        ddx = x - anchors[i, 0]
        ddy = y - anchors[i, 1]
        di = math.sqrt(ddx * ddx + ddy * ddy)
        if di <= eps_sing:
            return CURVE_SINGULAR, 0.0, 0.0
        wi = fd[i] - di
        gx += wi * (ddx / di)
        gy += wi * (ddy / di)
    gnorm = math.sqrt(gx * gx + gy * gy)
    if gnorm <= eps_norm:
        return CURVE_STATIONARY, 0.0, 0.0
    return 0, gx / gnorm, gy / gnorm


def integrate_field(
    anchors,
    fd,
    x0,
    y0,
    dest_x,
    dest_y,
    h,
    eps_conv,
    eps_norm,
    eps_sing,
    max_steps,
    stride,
    xs,
    ys,
):
    """Fixed-step RK4 integration of the unit apparent-destination field.

    anchors is (n, 2), fd the destination's distances to the anchors.
    Every stride-th accepted point (plus start and final point) is written
    into xs/ys, which the caller sizes to max_steps // stride + 2.

    Returns (status, steps, nsamples, arc_length, max_pinv_norm) where
    max_pinv_norm is the largest 1/sigma_2 of the distance Jacobian over
    the recorded evaluation points. The exact flow strictly decreases the
    coordinate-space distance to the destination, so a step that fails to
    decrease it means the normalized field is circling a rest point; that
    stops integration with CURVE_STATIONARY (or CURVE_CONVERGED when
    already inside the eps_conv ball).
    """
    n = anchors.shape[0]
    x = x0
    y = y0
    xs[0] = x
    ys[0] = y
    nsam = 1
    arc = 0.0
    max_pinv = 0.0
    w_prev = _INF
    steps = 0
    status = CURVE_MAX_STEPS
    while True:
        gx = 0.0
        gy = 0.0
        w2 = 0.0
        a11 = 0.0
        a12 = 0.0
        a22 = 0.0
        singular = False
        for i in range(n):
            ddx = x - anchors[i, 0]
            ddy = y - anchors[i, 1]
            di = math.sqrt(ddx * ddx + ddy * ddy)
            if di <= eps_sing:
                singular = True
                break
            rx = ddx / di
            ry = ddy / di
            wi = fd[i] - di
            gx += wi * rx
            gy += wi * ry
            w2 += wi * wi
            a11 += rx * rx
            a12 += rx * ry
            a22 += ry * ry
        if singular:
            status = CURVE_SINGULAR
            break
        tr = a11 + a22
        disc = (a11 - a22) * (a11 - a22) + 4.0 * a12 * a12
        eigmin = 0.5 * (tr - math.sqrt(disc))
        if eigmin > 0.0:
            pinv = 1.0 / math.sqrt(eigmin)
            if pinv > max_pinv:
                max_pinv = pinv
        else:
            max_pinv = _INF
        ddx = x - dest_x
        ddy = y - dest_y
        d = math.sqrt(ddx * ddx + ddy * ddy)
        if d <= eps_conv:
            status = CURVE_CONVERGED
            break
        wnorm = math.sqrt(w2)
        if wnorm >= w_prev:
            status = CURVE_STATIONARY
            break
        gnorm = math.sqrt(gx * gx + gy * gy)
        if gnorm <= eps_norm:
            status = CURVE_STATIONARY
            break
        if steps >= max_steps:
            status = CURVE_MAX_STEPS
            break
        w_prev = wnorm
        he = h if h < d else d
        k1x = gx / gnorm
        k1y = gy / gnorm
        st, k2x, k2y = _unit_field(
            anchors, fd, x + 0.5 * he * k1x, y + 0.5 * he * k1y, eps_norm, eps_sing
        )
        if st != 0:
            status = st
            break
        st, k3x, k3y = _unit_field(
            anchors, fd, x + 0.5 * he * k2x, y + 0.5 * he * k2y, eps_norm, eps_sing
        )
        if st != 0:
            status = st
            break
        st, k4x, k4y = _unit_field(
            anchors, fd, x + he * k3x, y + he * k3y, eps_norm, eps_sing
        )
        if st != 0:
            status = st
            break
        mx = (he / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        my = (he / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        x += mx
        y += my
        arc += math.sqrt(mx * mx + my * my)
        steps += 1
        if steps % stride == 0:
            xs[nsam] = x
            ys[nsam] = y
            nsam += 1
    if xs[nsam - 1] != x or ys[nsam - 1] != y:
        xs[nsam] = x
        ys[nsam] = y
        nsam += 1
    return status, steps, nsam, arc, max_pinv
