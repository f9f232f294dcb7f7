"""Parametrized curves and their Frenet apparatus in either metric.

A :class:`Curve` wraps a vectorized position map ``s -> (x, y, z)`` together
with its reporting domain and metric.  The frame computation samples the
curve on a small uniform stencil around each requested parameter and feeds
the stencil to the kernels in :mod:`helixgeo._kernels`:

* T is the raw velocity (analytic when the curve carries one, otherwise a
  central difference of positions);
* ``nabla_T T`` comes from differencing T along the stencil plus the
  conformal correction, giving kappa and N;
* ``nabla_T N`` comes from differencing N, giving tau against the
  orientation-completing binormal B.

B is chosen so that (T, N, B) is positively oriented with respect to the
chart orientation; in the conformal metric that is B = (T x N) / z.

Stencils default to 4th-order with step 5e-3.  Second-order stencils are
also available (``fd_order=2``) but need a visibly larger step before the
roundoff floor of the nested differencing stops dominating the torsion.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels as _k
from .errors import DomainError, GeodesicPointError, NotUnitSpeedError, ParameterError
from .geometry import Metric, Z_MIN

UNIT_SPEED_TOL = 1e-6
GEODESIC_KAPPA_MIN = 1e-9


@dataclass(frozen=True)
class Curve:
    """A parametrized curve s -> point in one of the two ambient metrics.

    ``point`` (and ``d1``/``d2`` when given) must accept a float array of
    shape (n,) and return (n, 3).  ``domain`` is the reporting interval;
    evaluation for differencing is allowed on ``eval_domain`` (``None``
    means the map is evaluable at any s).
    """

    point: Callable[[np.ndarray], np.ndarray]
    domain: tuple[float, float]
    metric: Metric
    eval_domain: tuple[float, float] | None = None
    d1: Callable[[np.ndarray], np.ndarray] | None = None
    d2: Callable[[np.ndarray], np.ndarray] | None = None
    fd_step: float = 5e-3
    fd_order: int = 4

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ParameterError(f"empty curve domain [{lo}, {hi}]")
        if self.fd_step <= 0:
            raise ParameterError("fd_step must be positive")
        if self.fd_order not in (2, 4):
            raise ParameterError("fd_order must be 2 or 4")
        if self.eval_domain is not None:
            elo, ehi = self.eval_domain
            if elo > lo or ehi < hi:
                raise ParameterError("eval_domain must contain the reporting domain")

    def at(self, s: float) -> np.ndarray:
        """Position at a single parameter value, shape (3,)."""
        return self.points(np.array([float(s)]))[0]

    def points(self, s: np.ndarray) -> np.ndarray:
        """Positions at an array of parameter values, shape (n, 3)."""
        return np.asarray(self.point(np.asarray(s, dtype=float)), dtype=float)

    def check_params(self, s: np.ndarray, for_eval: bool = False) -> np.ndarray:
        s = np.atleast_1d(np.asarray(s, dtype=float))
        lo, hi = self.eval_domain if (for_eval and self.eval_domain) else self.domain
        if for_eval and self.eval_domain is None:
            return s
        if s.min() < lo - 1e-12 or s.max() > hi + 1e-12:
            raise DomainError(
                f"parameter out of range [{lo:g}, {hi:g}]: got [{s.min():g}, {s.max():g}]"
            )
        return s

    def sample_grid(self, samples: int) -> np.ndarray:
        if samples < 2:
            raise ParameterError("need at least 2 samples")
        return np.linspace(self.domain[0], self.domain[1], samples)


@dataclass(frozen=True)
class FrenetData:
    """Frame and scalar invariants of a curve at one parameter value."""

    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float
    speed: float


@dataclass(frozen=True)
class FrenetFrames:
    """Vectorized Frenet data at an array of parameter values."""

    s: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    speed: np.ndarray

    def __len__(self) -> int:
        return self.s.size

    def item(self, i: int) -> FrenetData:
        return FrenetData(
            s=float(self.s[i]),
            T=self.T[i].copy(),
            N=self.N[i].copy(),
            B=self.B[i].copy(),
            kappa=float(self.kappa[i]),
            tau=float(self.tau[i]),
            speed=float(self.speed[i]),
        )


def _stencil(curve: Curve, s: np.ndarray, n_nodes: int) -> np.ndarray:
    """Evaluate positions on the n_nodes-wide uniform stencil around each s."""
    half = n_nodes // 2
    offs = (np.arange(n_nodes) - half) * curve.fd_step
    grid = s[:, None] + offs[None, :]
    curve.check_params(grid.ravel(), for_eval=True)
    P = curve.points(grid.ravel()).reshape(s.size, n_nodes, 3)
    if curve.metric.conformal and P[:, :, 2].min() <= Z_MIN:
        raise DomainError("curve leaves the upper half space on the stencil")
    return P


def _velocity_nodes(curve: Curve, s: np.ndarray):
    """(P, T) at the velocity nodes of the Frenet stencil for curve.fd_order."""
    h = curve.fd_step
    if curve.fd_order == 4:
        if curve.d1 is not None:
            P = _stencil(curve, s, 9)
            offs = (np.arange(9) - 4) * h
            grid = s[:, None] + offs[None, :]
            T = np.asarray(curve.d1(grid.ravel()), dtype=float).reshape(s.size, 9, 3)
        else:
            P13 = _stencil(curve, s, 13)
            T = _k.velocity_nodes_o4(P13, h)
            P = np.ascontiguousarray(P13[:, 2:11])
        return P, T
    if curve.d1 is not None:
        P = _stencil(curve, s, 5)
        offs = (np.arange(5) - 2) * h
        grid = s[:, None] + offs[None, :]
        T = np.asarray(curve.d1(grid.ravel()), dtype=float).reshape(s.size, 5, 3)
    else:
        P7 = _stencil(curve, s, 7)
        T = _k.velocity_nodes_o2(P7, h)
        P = np.ascontiguousarray(P7[:, 1:6])
    return P, T


def velocity(curve: Curve, s) -> np.ndarray:
    """First derivative of the curve at s (scalar s -> (3,), array -> (n, 3))."""
    scalar = np.ndim(s) == 0
    sa = curve.check_params(s)
    if curve.d1 is not None:
        v = np.asarray(curve.d1(sa), dtype=float)
    else:
        h = curve.fd_step
        if curve.fd_order == 4:
            P = _stencil(curve, sa, 5)
            v = (-P[:, 4] + 8.0 * P[:, 3] - 8.0 * P[:, 1] + P[:, 0]) / (12.0 * h)
        else:
            P = _stencil(curve, sa, 3)
            v = (P[:, 2] - P[:, 0]) / (2.0 * h)
    return v[0] if scalar else v


def speed(curve: Curve, s) -> float | np.ndarray:
    """Metric norm of the velocity at s."""
    scalar = np.ndim(s) == 0
    sa = curve.check_params(s)
    v = velocity(curve, sa)
    p = curve.points(sa)
    sp = np.sqrt(np.sum(v * v, axis=-1))
    if curve.metric.conformal:
        sp = sp / p[:, 2]
    return float(sp[0]) if scalar else sp


def unit_speed_residual(curve: Curve, samples: int) -> float:
    """max over an equispaced grid of |speed - 1|."""
    s = curve.sample_grid(samples)
    return float(np.max(np.abs(speed(curve, s) - 1.0)))


def frenet_array(
    curve: Curve,
    s,
    *,
    unit_speed_tol: float = UNIT_SPEED_TOL,
    geodesic_tol: float = GEODESIC_KAPPA_MIN,
    check: bool = True,
) -> FrenetFrames:
    """Frenet frames, curvature and torsion at an array of parameter values.

    Raises NotUnitSpeedError if any sampled speed strays from 1 beyond
    ``unit_speed_tol`` and GeodesicPointError if the curvature falls below
    ``geodesic_tol`` (N, B, tau are undefined there).  ``check=False`` skips
    both guards and returns whatever the differencing produced.
    """
    sa = curve.check_params(s)
    P, T = _velocity_nodes(curve, sa)
    core = _k.frenet_core_o4 if curve.fd_order == 4 else _k.frenet_core_o2
    sp, kappa, tau, T0, N0, B0 = core(P, T, curve.fd_step, curve.metric.conformal)
    if check:
        worst = np.argmax(np.abs(sp - 1.0))
        if abs(sp[worst] - 1.0) > unit_speed_tol:
            raise NotUnitSpeedError(
                f"|speed - 1| = {abs(sp[worst] - 1.0):.3g} at s = {sa[worst]:g} "
                f"(tolerance {unit_speed_tol:g})"
            )
        kmin = np.argmin(kappa)
        if kappa[kmin] < geodesic_tol:
            raise GeodesicPointError(
                f"kappa = {kappa[kmin]:.3g} at s = {sa[kmin]:g}: frame undefined "
                f"below {geodesic_tol:g}"
            )
    return FrenetFrames(s=sa, T=T0, N=N0, B=B0, kappa=kappa, tau=tau, speed=sp)


def frenet(curve: Curve, s: float, **kwargs) -> FrenetData:
    """Frenet data at a single parameter value.  See :func:`frenet_array`."""
    return frenet_array(curve, [float(s)], **kwargs).item(0)


def polyline_kappa(s: np.ndarray, pts: np.ndarray, metric: Metric):
    """Curvature recovered from a sampled polyline by central differencing.

    ``s`` must be a uniform grid and ``pts`` the matching (n, 3) positions.
    Returns (s_inner, kappa) at the interior nodes where the double central
    stencil fits.  Used to cross-check exported polylines against the kappa
    column they were written with.
    """
    s = np.asarray(s, dtype=float)
    pts = np.asarray(pts, dtype=float)
    if s.size < 5:
        raise ParameterError("need at least 5 polyline samples")
    h = s[1] - s[0]
    T = (pts[2:] - pts[:-2]) / (2.0 * h)    # at nodes 1..n-2
    dT = (T[2:] - T[:-2]) / (2.0 * h)       # at nodes 2..n-3
    Tm = T[1:-1]
    Pm = pts[2:-2]
    if metric.conformal:
        z = Pm[:, 2]
        A = dT - 2.0 * (Tm[:, 2] / z)[:, None] * Tm
        A[:, 2] += np.sum(Tm * Tm, axis=1) / z
        kappa = np.sqrt(np.sum(A * A, axis=1)) / z
    else:
        kappa = np.sqrt(np.sum(dT * dT, axis=1))
    return s[2:-2], kappa
