"""Hot numeric kernels, written once and optionally compiled with numba.

Every kernel is plain array code that runs identically under numpy and under
``numba.njit``.  The active backend is chosen at import time from the
``HELIXGEO_BACKEND`` environment variable:

* ``numba`` (default): JIT-compile the kernels; falls back to numpy if numba
  is not importable.
* ``numpy``: skip compilation entirely and run the pure-numpy versions.

``benchmarks/bench_kernels.py`` compares the two paths.
"""

import os

import numpy as np

_ENV_VAR = "HELIXGEO_BACKEND"


def _resolve_backend() -> str:
    want = os.environ.get(_ENV_VAR, "numba").strip().lower()
    if want not in ("numba", "numpy"):
        want = "numba"
    if want == "numba":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "numpy"
    return want


BACKEND = _resolve_backend()


# ---------------------------------------------------------------------------
# Frenet pipeline kernels.
#
# Positions/velocities are sampled on a uniform stencil s + j*h around each
# requested parameter value.  Node layout (o4 = 4th-order central stencils):
#   velocity nodes:  j = -4..4   (9)   from positions j = -6..6 (13)
#   curvature nodes: j = -2..2   (5)
#   torsion:         centre only
# The o2 variants use 2nd-order stencils with a 7-point position window.
#
# ``conformal`` selects the upper-half-space metric (dx^2+dy^2+dz^2)/z^2; the
# covariant derivative is then the flat derivative plus the correction
#   -(X3/z) Y - (Y3/z) X + (<X,Y>_e / z) e3.
# ---------------------------------------------------------------------------


def velocity_nodes_o4_py(P, h):
    """First derivative at the 9 inner nodes of a 13-point position stencil."""
    n = P.shape[0]
    T = np.empty((n, 9, 3))
    d = 12.0 * h
    for j in range(9):
        i = j + 2
        for c in range(3):
            T[:, j, c] = (
                -P[:, i + 2, c] + 8.0 * P[:, i + 1, c]
                - 8.0 * P[:, i - 1, c] + P[:, i - 2, c]
            ) / d
    return T


def velocity_nodes_o2_py(P, h):
    """First derivative at the 5 inner nodes of a 7-point position stencil."""
    n = P.shape[0]
    T = np.empty((n, 5, 3))
    d = 2.0 * h
    for j in range(5):
        i = j + 1
        for c in range(3):
            T[:, j, c] = (P[:, i + 1, c] - P[:, i - 1, c]) / d
    return T


def frenet_core_o4_py(P, T, h, conformal):
    """Frame, curvature and torsion at the stencil centre (4th order).

    P, T: (n, 9, 3) positions and velocities at nodes j = -4..4.
    Returns (speed, kappa, tau, T0, N0, B0); vector components are Euclidean
    coordinates of metric-unit vectors.  Near-geodesic samples are left for
    the caller to reject (kappa is returned unclamped).
    """
    n = P.shape[0]
    d = 12.0 * h
    kap = np.empty((n, 5))
    Nx = np.empty((n, 5))
    Ny = np.empty((n, 5))
    Nz = np.empty((n, 5))
    for k in range(5):
        j = k + 2
        dTx = (-T[:, j + 2, 0] + 8.0 * T[:, j + 1, 0]
               - 8.0 * T[:, j - 1, 0] + T[:, j - 2, 0]) / d
        dTy = (-T[:, j + 2, 1] + 8.0 * T[:, j + 1, 1]
               - 8.0 * T[:, j - 1, 1] + T[:, j - 2, 1]) / d
        dTz = (-T[:, j + 2, 2] + 8.0 * T[:, j + 1, 2]
               - 8.0 * T[:, j - 1, 2] + T[:, j - 2, 2]) / d
        tx = T[:, j, 0]
        ty = T[:, j, 1]
        tz = T[:, j, 2]
        if conformal:
            z = P[:, j, 2]
            ax = dTx - 2.0 * (tz / z) * tx
            ay = dTy - 2.0 * (tz / z) * ty
            az = dTz - 2.0 * (tz / z) * tz + (tx * tx + ty * ty + tz * tz) / z
            kk = np.sqrt(ax * ax + ay * ay + az * az) / z
        else:
            ax = dTx
            ay = dTy
            az = dTz
            kk = np.sqrt(ax * ax + ay * ay + az * az)
        kap[:, k] = kk
        safe = np.maximum(kk, 1e-300)
        if conformal:
            safe = safe * P[:, j, 2]
        Nx[:, k] = ax / safe
        Ny[:, k] = ay / safe
        Nz[:, k] = az / safe
    # N components above are Euclidean coords divided by the *Euclidean* norm
    # of A in the flat case and by kappa*z = |A|_e in the conformal case, so
    # N is metric-unit in both metrics.
    tx = T[:, 4, 0]
    ty = T[:, 4, 1]
    tz = T[:, 4, 2]
    nx = Nx[:, 2]
    ny = Ny[:, 2]
    nz = Nz[:, 2]
    k0 = kap[:, 2]
    dNx = (-Nx[:, 4] + 8.0 * Nx[:, 3] - 8.0 * Nx[:, 1] + Nx[:, 0]) / d
    dNy = (-Ny[:, 4] + 8.0 * Ny[:, 3] - 8.0 * Ny[:, 1] + Ny[:, 0]) / d
    dNz = (-Nz[:, 4] + 8.0 * Nz[:, 3] - 8.0 * Nz[:, 1] + Nz[:, 0]) / d
    if conformal:
        z0 = P[:, 4, 2]
        cx = dNx - (tz / z0) * nx - (nz / z0) * tx
        cy = dNy - (tz / z0) * ny - (nz / z0) * ty
        cz = dNz - (tz / z0) * nz - (nz / z0) * tz + (tx * nx + ty * ny + tz * nz) / z0
        bx = (ty * nz - tz * ny) / z0
        by = (tz * nx - tx * nz) / z0
        bz = (tx * ny - ty * nx) / z0
        zz = z0 * z0
        tau = ((cx + k0 * tx) * bx + (cy + k0 * ty) * by + (cz + k0 * tz) * bz) / zz
        speed = np.sqrt(tx * tx + ty * ty + tz * tz) / z0
    else:
        bx = ty * nz - tz * ny
        by = tz * nx - tx * nz
        bz = tx * ny - ty * nx
        tau = (dNx + k0 * tx) * bx + (dNy + k0 * ty) * by + (dNz + k0 * tz) * bz
        speed = np.sqrt(tx * tx + ty * ty + tz * tz)
    T0 = np.empty((n, 3))
    N0 = np.empty((n, 3))
    B0 = np.empty((n, 3))
    T0[:, 0] = tx
    T0[:, 1] = ty
    T0[:, 2] = tz
    N0[:, 0] = nx
    N0[:, 1] = ny
    N0[:, 2] = nz
    B0[:, 0] = bx
    B0[:, 1] = by
    B0[:, 2] = bz
    return speed, k0, tau, T0, N0, B0


def frenet_core_o2_py(P, T, h, conformal):
    """Second-order variant of :func:`frenet_core_o4_py`.

    P, T: (n, 5, 3) positions and velocities at nodes j = -2..2.
    """
    n = P.shape[0]
    d = 2.0 * h
    kap = np.empty((n, 3))
    Nx = np.empty((n, 3))
    Ny = np.empty((n, 3))
    Nz = np.empty((n, 3))
    for k in range(3):
        j = k + 1
        dTx = (T[:, j + 1, 0] - T[:, j - 1, 0]) / d
        dTy = (T[:, j + 1, 1] - T[:, j - 1, 1]) / d
        dTz = (T[:, j + 1, 2] - T[:, j - 1, 2]) / d
        tx = T[:, j, 0]
        ty = T[:, j, 1]
        tz = T[:, j, 2]
        if conformal:
            z = P[:, j, 2]
            ax = dTx - 2.0 * (tz / z) * tx
            ay = dTy - 2.0 * (tz / z) * ty
            az = dTz - 2.0 * (tz / z) * tz + (tx * tx + ty * ty + tz * tz) / z
            kk = np.sqrt(ax * ax + ay * ay + az * az) / z
        else:
            ax = dTx
            ay = dTy
            az = dTz
            kk = np.sqrt(ax * ax + ay * ay + az * az)
        kap[:, k] = kk
        safe = np.maximum(kk, 1e-300)
        if conformal:
            safe = safe * P[:, j, 2]
        Nx[:, k] = ax / safe
        Ny[:, k] = ay / safe
        Nz[:, k] = az / safe
    tx = T[:, 2, 0]
    ty = T[:, 2, 1]
    tz = T[:, 2, 2]
    nx = Nx[:, 1]
    ny = Ny[:, 1]
    nz = Nz[:, 1]
    k0 = kap[:, 1]
    dNx = (Nx[:, 2] - Nx[:, 0]) / d
    dNy = (Ny[:, 2] - Ny[:, 0]) / d
    dNz = (Nz[:, 2] - Nz[:, 0]) / d
    if conformal:
        z0 = P[:, 2, 2]
        cx = dNx - (tz / z0) * nx - (nz / z0) * tx
        cy = dNy - (tz / z0) * ny - (nz / z0) * ty
        cz = dNz - (tz / z0) * nz - (nz / z0) * tz + (tx * nx + ty * ny + tz * nz) / z0
        bx = (ty * nz - tz * ny) / z0
        by = (tz * nx - tx * nz) / z0
        bz = (tx * ny - ty * nx) / z0
        zz = z0 * z0
        tau = ((cx + k0 * tx) * bx + (cy + k0 * ty) * by + (cz + k0 * tz) * bz) / zz
        speed = np.sqrt(tx * tx + ty * ty + tz * tz) / z0
    else:
        bx = ty * nz - tz * ny
        by = tz * nx - tx * nz
        bz = tx * ny - ty * nx
        tau = (dNx + k0 * tx) * bx + (dNy + k0 * ty) * by + (dNz + k0 * tz) * bz
        speed = np.sqrt(tx * tx + ty * ty + tz * tz)
    T0 = np.empty((n, 3))
    N0 = np.empty((n, 3))
    B0 = np.empty((n, 3))
    T0[:, 0] = tx
    T0[:, 1] = ty
    T0[:, 2] = tz
    N0[:, 0] = nx
    N0[:, 1] = ny
    N0[:, 2] = nz
    B0[:, 0] = bx
    B0[:, 1] = by
    B0[:, 2] = bz
    return speed, k0, tau, T0, N0, B0


# ---------------------------------------------------------------------------
# Quadrature kernel.
# ---------------------------------------------------------------------------


def cumulative_simpson_py(f, h):
    """Prefix integrals of samples taken at half-panel spacing.

    f: (2m+1,) integrand values at nodes x0, x0+h/2, x0+h, ...; h is the
    panel width.  Returns (m+1,) integrals from x0 to each panel boundary.
    """
    m = (f.shape[0] - 1) // 2
    left = f[0:2 * m - 1:2]
    mid = f[1:2 * m:2]
    right = f[2:2 * m + 1:2]
    out = np.empty(m + 1)
    out[0] = 0.0
    out[1:] = np.cumsum((h / 6.0) * (left + 4.0 * mid + right))
    return out


# ---------------------------------------------------------------------------
# Closed-form family evaluation kernels.
# ---------------------------------------------------------------------------


def exp_circle_points_py(s, m, a, b, c):
    """Points m*e^(a s) * (c cos(b s), c sin(b s), 1) for an array of s."""
    n = s.shape[0]
    out = np.empty((n, 3))
    e = m * np.exp(a * s)
    out[:, 0] = e * c * np.cos(b * s)
    out[:, 1] = e * c * np.sin(b * s)
    out[:, 2] = e
    return out


def rot_helix_points_py(s, r, w, vz):
    """Points (r cos(w s), r sin(w s), vz * s) for an array of s."""
    n = s.shape[0]
    out = np.empty((n, 3))
    out[:, 0] = r * np.cos(w * s)
    out[:, 1] = r * np.sin(w * s)
    out[:, 2] = vz * s
    return out


def plane_line_points_py(s, x0, y0, c, ct, st):
    """Points (c s ct + x0, c s st + y0, c): a line in the plane z=c."""
    n = s.shape[0]
    out = np.empty((n, 3))
    out[:, 0] = c * ct * s + x0
    out[:, 1] = c * st * s + y0
    out[:, 2] = c
    return out


_PY_KERNELS = {
    "velocity_nodes_o4": velocity_nodes_o4_py,
    "velocity_nodes_o2": velocity_nodes_o2_py,
    "frenet_core_o4": frenet_core_o4_py,
    "frenet_core_o2": frenet_core_o2_py,
    "cumulative_simpson": cumulative_simpson_py,
    "exp_circle_points": exp_circle_points_py,
    "rot_helix_points": rot_helix_points_py,
    "plane_line_points": plane_line_points_py,
}


def compile_kernels():
    """Return {name: jitted kernel}.  Importable regardless of BACKEND."""
    from numba import njit

    return {name: njit(cache=True)(fn) for name, fn in _PY_KERNELS.items()}


if BACKEND == "numba":
    _active = compile_kernels()
else:
    _active = dict(_PY_KERNELS)

velocity_nodes_o4 = _active["velocity_nodes_o4"]
velocity_nodes_o2 = _active["velocity_nodes_o2"]
frenet_core_o4 = _active["frenet_core_o4"]
frenet_core_o2 = _active["frenet_core_o2"]
cumulative_simpson = _active["cumulative_simpson"]
exp_circle_points = _active["exp_circle_points"]
rot_helix_points = _active["rot_helix_points"]
plane_line_points = _active["plane_line_points"]
