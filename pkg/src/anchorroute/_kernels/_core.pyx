# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled routing and integration kernels.

Semantics twin of pure.py; keep loop and operation order in sync so both
backends make bit-identical decisions.
"""

from libc.math cimport atan2, fmod, sqrt, INFINITY, M_PI

BACKEND = "compiled"

# Curve integrator status codes (match pure.py).
DEF ST_CONVERGED = 0
DEF ST_STATIONARY = 1
DEF ST_MAX_STEPS = 2
DEF ST_SINGULAR = 3

CURVE_CONVERGED = ST_CONVERGED
CURVE_STATIONARY = ST_STATIONARY
CURVE_MAX_STEPS = ST_MAX_STEPS
CURVE_SINGULAR = ST_SINGULAR


cpdef double coord_dist2(double[::1] a, double[::1] b, long long[::1] active):
    """Squared distance between coordinate vectors a, b over active indices."""
    cdef Py_ssize_t k, i
    cdef double s = 0.0, d
    for k in range(active.shape[0]):
        i = active[k]
        d = a[i] - b[i]
        s += d * d
    return s


cpdef long long greedy_scan(double[:, ::1] coords, long long cur,
                            long long[::1] nbrs, double[::1] dest,
                            long long[::1] active, int variant,
                            double eps_norm):
    """Next hop among nbrs for one greedy variant, or -1 (see pure.py)."""
    cdef Py_ssize_t m = active.shape[0]
    cdef Py_ssize_t nn = nbrs.shape[0]
    cdef Py_ssize_t t, k, a
    cdef long long best = -1, nb
    cdef double best_d2, best_v, d2, v, u, w, un2, un, diff
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
            un = sqrt(un2)
            if un <= eps_norm:
                continue
            v = v / un
            if v > best_v:
                best = nb
                best_v = v
    else:
        raise ValueError(f"unknown greedy variant {variant}")
    return best


cpdef long long fallback_scan(double[:, ::1] coords, long long cur,
                              long long[::1] nbrs, double[::1] dest,
                              long long[::1] active, double[::1] ivec,
                              double[::1] jvec, double eps_norm):
    """Clockwise-nearest projected neighbor, or -1 (see pure.py)."""
    cdef Py_ssize_t m = active.shape[0]
    cdef Py_ssize_t t, k, a
    cdef double xw = 0.0, yw = 0.0, xu, yu, w, u, theta_w, delta
    cdef long long best = -1, nb
    cdef double best_delta = INFINITY
    cdef double two_pi = 2.0 * M_PI
    for k in range(m):
        a = active[k]
        w = dest[a] - coords[cur, a]
        xw += w * ivec[k]
        yw += w * jvec[k]
    if sqrt(xw * xw + yw * yw) <= eps_norm:
        theta_w = 0.0
    else:
        theta_w = atan2(yw, xw)
    for t in range(nbrs.shape[0]):
        nb = nbrs[t]
        xu = 0.0
        yu = 0.0
        for k in range(m):
            a = active[k]
            u = coords[nb, a] - coords[cur, a]
            xu += u * ivec[k]
            yu += u * jvec[k]
        if sqrt(xu * xu + yu * yu) <= eps_norm:
            continue
        delta = fmod(theta_w - atan2(yu, xu), two_pi)
        if delta < 0.0:
            delta += two_pi
        if delta < best_delta:
            best = nb
            best_delta = delta
    return best


cdef int _unit_field(double[:, ::1] anchors, double[::1] fd, double x, double y,
                     double eps_norm, double eps_sing,
                     double* kx, double* ky) nogil:
    cdef Py_ssize_t i, n = anchors.shape[0]
    cdef double gx = 0.0, gy = 0.0, ddx, ddy, di, wi, gnorm
    for i in range(n):
        ddx = x - anchors[i, 0]
        ddy = y - anchors[i, 1]
        di = sqrt(ddx * ddx + ddy * ddy)
        if di <= eps_sing:
            return ST_SINGULAR
        wi = fd[i] - di
        gx += wi * (ddx / di)
        gy += wi * (ddy / di)
    gnorm = sqrt(gx * gx + gy * gy)
    if gnorm <= eps_norm:
        return ST_STATIONARY
    kx[0] = gx / gnorm
    ky[0] = gy / gnorm
    return 0


def integrate_field(double[:, ::1] anchors, double[::1] fd,
                    double x0, double y0, double dest_x, double dest_y,
                    double h, double eps_conv, double eps_norm,
                    double eps_sing, long long max_steps, long long stride,
                    double[::1] xs, double[::1] ys):
    """Fixed-step RK4 integration of the unit apparent-destination field.

    Twin of pure.integrate_field; returns
    (status, steps, nsamples, arc_length, max_pinv_norm).
    """
    cdef Py_ssize_t i, n = anchors.shape[0]
    cdef double x = x0, y = y0
    cdef double arc = 0.0, max_pinv = 0.0, w_prev = INFINITY
    cdef long long steps = 0, nsam = 1
    cdef int status = ST_MAX_STEPS, st
    cdef bint singular
    cdef double gx, gy, w2, a11, a12, a22, ddx, ddy, di, rx, ry, wi
    cdef double tr, disc, eigmin, pinv, d, wnorm, gnorm, he
    cdef double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y, mx, my
    xs[0] = x
    ys[0] = y
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
            di = sqrt(ddx * ddx + ddy * ddy)
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
            status = ST_SINGULAR
            break
        tr = a11 + a22
        disc = (a11 - a22) * (a11 - a22) + 4.0 * a12 * a12
        eigmin = 0.5 * (tr - sqrt(disc))
        if eigmin > 0.0:
            pinv = 1.0 / sqrt(eigmin)
            if pinv > max_pinv:
                max_pinv = pinv
        else:
            max_pinv = INFINITY
        ddx = x - dest_x
        ddy = y - dest_y
        d = sqrt(ddx * ddx + ddy * ddy)
        if d <= eps_conv:
            status = ST_CONVERGED
            break
        wnorm = sqrt(w2)
        if wnorm >= w_prev:
            status = ST_STATIONARY
            break
        gnorm = sqrt(gx * gx + gy * gy)
        if gnorm <= eps_norm:
            status = ST_STATIONARY
            break
        if steps >= max_steps:
            status = ST_MAX_STEPS
            break
        w_prev = wnorm
        he = h if h < d else d
        k1x = gx / gnorm
        k1y = gy / gnorm
        st = _unit_field(anchors, fd, x + 0.5 * he * k1x, y + 0.5 * he * k1y,
                         eps_norm, eps_sing, &k2x, &k2y)
        if st != 0:
            status = st
            break
        st = _unit_field(anchors, fd, x + 0.5 * he * k2x, y + 0.5 * he * k2y,
                         eps_norm, eps_sing, &k3x, &k3y)
        if st != 0:
            status = st
            break
        st = _unit_field(anchors, fd, x + he * k3x, y + he * k3y,
                         eps_norm, eps_sing, &k4x, &k4y)
        if st != 0:
            status = st
            break
        mx = (he / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        my = (he / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        x += mx
        y += my
        arc += sqrt(mx * mx + my * my)
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
