"""Ambient metrics and the conformal covariant derivative.

Two fixed metrics on (subsets of) R^3 are supported:

* ``Metric.EUCLIDEAN`` on all of R^3;
* ``Metric.HYPERBOLIC`` on the upper half space {z > 0} with line element
  (dx^2 + dy^2 + dz^2) / z^2.

Points and tangent vectors are plain float arrays of shape (3,); batched
variants take (n, 3).  Vector components are always coordinates with respect
to the chart fields (d/dx, d/dy, d/dz).
"""

from enum import Enum

import numpy as np

from .errors import DomainError

# Reject z at or below this in the hyperbolic chart so the conformal factor
# 1/z^2 cannot overflow.
Z_MIN = 1e-12


class Metric(Enum):
    """Tag for the two ambient metrics."""

    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic-uhs"

    @property
    def conformal(self) -> bool:
        return self is Metric.HYPERBOLIC


def check_point(metric: Metric, p: np.ndarray) -> np.ndarray:
    """Validate admissibility of a point (or batch of points) for a metric."""
    p = np.asarray(p, dtype=float)
    if not np.all(np.isfinite(p)):
        raise DomainError("point has non-finite coordinates")
    if metric.conformal:
        z = p[..., 2]
        if np.any(z <= Z_MIN):
            raise DomainError(
                f"hyperbolic chart requires z > {Z_MIN:g}; got min z = {np.min(z):g}"
            )
    return p


def inner(metric: Metric, p: np.ndarray, u: np.ndarray, v: np.ndarray) -> float | np.ndarray:
    """Metric inner product of u and v at p.

    Euclidean: the dot product.  Hyperbolic: dot(u, v) / z^2.
    Broadcasts over leading axes; scalar for (3,) inputs.
    """
    p = check_point(metric, p)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    dot = np.sum(u * v, axis=-1)
    if metric.conformal:
        dot = dot / p[..., 2] ** 2
    return dot if dot.ndim else float(dot)


def norm(metric: Metric, p: np.ndarray, u: np.ndarray) -> float | np.ndarray:
    """Metric length of u at p."""
    return np.sqrt(inner(metric, p, u, u))


def angle(metric: Metric, p: np.ndarray, u: np.ndarray, v: np.ndarray) -> float | np.ndarray:
    """Angle in [0, pi] between u and v at p.

    The cosine is clamped to [-1, 1] before arccos so numerically parallel
    vectors do not produce NaN.  Zero vectors are rejected.
    """
    nu = norm(metric, p, u)
    nv = norm(metric, p, v)
    if np.any(np.asarray(nu) == 0.0) or np.any(np.asarray(nv) == 0.0):
        raise DomainError("angle undefined for a zero vector")
    c = inner(metric, p, u, v) / (nu * nv)
    c = np.clip(c, -1.0, 1.0)
    out = np.arccos(c)
    return out if np.ndim(out) else float(out)


def covariant_derivative(
    metric: Metric,
    p: np.ndarray,
    x: np.ndarray,
    y: np.ndarray,
    dy: np.ndarray,
) -> np.ndarray:
    """Covariant derivative of the field Y along X at p.

    ``dy`` must be the componentwise directional derivative of Y along X at p
    (supplied by the caller, analytically or by differencing), so this
    function is purely algebraic.  In the Euclidean metric it returns ``dy``
    unchanged; in the hyperbolic metric it applies the conformal correction

        dy - (X3/z) Y - (Y3/z) X + (<X, Y>_e / z) e3.

    Batched inputs of shape (n, 3) are supported.
    """
    p = check_point(metric, p)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dy = np.asarray(dy, dtype=float)
    if not metric.conformal:
        return dy.copy()
    z = p[..., 2]
    out = dy - (x[..., 2] / z)[..., None] * y - (y[..., 2] / z)[..., None] * x
    out[..., 2] += np.sum(x * y, axis=-1) / z
    return out
