"""Killing vector fields of the two ambient spaces.

Both isometry algebras are 6-dimensional.  The Euclidean basis consists of
the three translations and the three rotations; the hyperbolic basis (upper
half-space chart) consists of the dilation about the origin, the rotation
about the z-axis, the two horizontal translations, and two quadratic fields
generated by special conformal transformations of the boundary plane:

    conformal_x = ((x^2 - y^2 - z^2)/2) d/dx + xy d/dy + xz d/dz
    conformal_y = xy d/dx + ((y^2 - x^2 - z^2)/2) d/dy + yz d/dz

The quadratic fields satisfy the Killing identity
``d_i K_j + d_j K_i = (2 K_z / z) delta_ij`` of the conformal metric, which
:func:`killing_residual` checks numerically for every catalog entry.
"""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .curves import Curve, velocity
from .errors import DomainError
from .geometry import Metric, angle, check_point, covariant_derivative, inner, norm


@dataclass(frozen=True)
class KillingField:
    """A named analytic vector field on the chart of one ambient metric."""

    name: str
    metric: Metric
    func: Callable[[np.ndarray], np.ndarray]

    def __call__(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        if p.ndim == 1:
            return np.asarray(self.func(p[None, :]), dtype=float)[0]
        return np.asarray(self.func(p), dtype=float)


def _const(c1: float, c2: float, c3: float):
    v = np.array([c1, c2, c3], dtype=float)

    def f(p):
        return np.broadcast_to(v, p.shape).copy()

    return f


def _rot_xy(p):
    out = np.empty_like(p)
    out[:, 0] = -p[:, 1]
    out[:, 1] = p[:, 0]
    out[:, 2] = 0.0
    return out


def _rot_yz(p):
    out = np.empty_like(p)
    out[:, 0] = 0.0
    out[:, 1] = -p[:, 2]
    out[:, 2] = p[:, 1]
    return out


def _rot_zx(p):
    out = np.empty_like(p)
    out[:, 0] = p[:, 2]
    out[:, 1] = 0.0
    out[:, 2] = -p[:, 0]
    return out


def _dilation(p):
    return p.copy()


def _conformal_x(p):
    x, y, z = p[:, 0], p[:, 1], p[:, 2]
    out = np.empty_like(p)
    out[:, 0] = 0.5 * (x * x - y * y - z * z)
    out[:, 1] = x * y
    out[:, 2] = x * z
    return out


def _conformal_y(p):
    x, y, z = p[:, 0], p[:, 1], p[:, 2]
    out = np.empty_like(p)
    out[:, 0] = x * y
    out[:, 1] = 0.5 * (y * y - x * x - z * z)
    out[:, 2] = y * z
    return out


_EUCLIDEAN = (
    ("trans_x", _const(1, 0, 0)),
    ("trans_y", _const(0, 1, 0)),
    ("trans_z", _const(0, 0, 1)),
    ("rot_xy", _rot_xy),
    ("rot_yz", _rot_yz),
    ("rot_zx", _rot_zx),
)

_HYPERBOLIC = (
    ("dilation", _dilation),
    ("rot_xy", _rot_xy),
    ("trans_x", _const(1, 0, 0)),
    ("trans_y", _const(0, 1, 0)),
    ("conformal_x", _conformal_x),
    ("conformal_y", _conformal_y),
)


def basis(metric: Metric) -> list[KillingField]:
    """The six cataloged Killing fields of the given metric, fixed order."""
    table = _EUCLIDEAN if metric is Metric.EUCLIDEAN else _HYPERBOLIC
    return [KillingField(name, metric, fn) for name, fn in table]


def get_field(metric: Metric, name: str) -> KillingField:
    for f in basis(metric):
        if f.name == name:
            return f
    raise DomainError(f"no Killing field named {name!r} for {metric.value}")


def length_along(field: KillingField, curve: Curve, s) -> float | np.ndarray:
    """Metric length of the field evaluated along the curve at s."""
    scalar = np.ndim(s) == 0
    sa = curve.check_params(s)
    p = curve.points(sa)
    out = norm(curve.metric, p, field(p))
    return float(np.atleast_1d(out)[0]) if scalar else out


def angle_with_curve(field: KillingField, curve: Curve, s) -> float | np.ndarray:
    """Angle between the curve velocity and the field at s (radians, [0, pi]).

    Raises DomainError where the field vanishes (e.g. the rotation field on
    the z-axis).
    """
    scalar = np.ndim(s) == 0
    sa = curve.check_params(s)
    p = curve.points(sa)
    out = angle(curve.metric, p, velocity(curve, sa), field(p))
    return float(np.atleast_1d(out)[0]) if scalar else out


def coordinate_probe_pairs() -> list[tuple[np.ndarray, np.ndarray]]:
    """The six unordered pairs of chart coordinate directions."""
    e = np.eye(3)
    return [(e[i], e[j]) for i in range(3) for j in range(i, 3)]


def killing_residual(
    field: KillingField,
    p: np.ndarray,
    probe_pairs: Sequence[tuple[np.ndarray, np.ndarray]] | None = None,
    step: float = 1e-5,
) -> float:
    """Symmetrized-derivative residual of the Killing equation at p.

    For each probe pair (X, Y) evaluates
    ``|<nabla_X K, Y> + <nabla_Y K, X>|`` with the directional derivatives of
    the field taken by central differences along straight chart lines, and
    returns the maximum.  Zero (up to differencing error) iff the field
    generates isometries.
    """
    p = check_point(field.metric, np.asarray(p, dtype=float))
    if probe_pairs is None:
        probe_pairs = coordinate_probe_pairs()

    def directional(x):
        return (field(p + step * x) - field(p - step * x)) / (2.0 * step)

    kp = field(p)
    worst = 0.0
    for x, y in probe_pairs:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        dxk = covariant_derivative(field.metric, p, x, kp, directional(x))
        dyk = covariant_derivative(field.metric, p, y, kp, directional(y))
        r = abs(inner(field.metric, p, dxk, y) + inner(field.metric, p, dyk, x))
        worst = max(worst, float(r))
    return worst
