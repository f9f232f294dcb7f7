"""Implicit surfaces used by the geodesic and containment checks.

Each surface carries its defining function f and the analytic Euclidean
gradient of f.  Because the hyperbolic metric is conformal to the Euclidean
one, the metric normal direction of a level set is a positive multiple of
that gradient in both metrics, so one gradient serves both.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class ImplicitSurface:
    """Level set f = 0 with analytic Euclidean gradient."""

    name: str
    f: Callable[[np.ndarray], np.ndarray]
    grad: Callable[[np.ndarray], np.ndarray]

    def value(self, p: np.ndarray):
        p = np.asarray(p, dtype=float)
        out = np.asarray(self.f(np.atleast_2d(p)), dtype=float)
        return float(out[0]) if p.ndim == 1 else out

    def gradient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        out = np.asarray(self.grad(np.atleast_2d(p)), dtype=float)
        return out[0] if p.ndim == 1 else out


def cone_about_z(c: float, apex_z: float = 0.0) -> ImplicitSurface:
    """x^2 + y^2 = c^2 (z - apex_z)^2: the locus at constant distance from
    the z-axis geodesic in the hyperbolic metric (apex_z = 0)."""
    if c <= 0:
        raise ParameterError("cone parameter c must be positive")

    def f(p):
        dz = p[:, 2] - apex_z
        return p[:, 0] ** 2 + p[:, 1] ** 2 - c * c * dz * dz

    def grad(p):
        out = np.empty_like(p)
        out[:, 0] = 2.0 * p[:, 0]
        out[:, 1] = 2.0 * p[:, 1]
        out[:, 2] = -2.0 * c * c * (p[:, 2] - apex_z)
        return out

    name = f"cone[c={c:g}]" if apex_z == 0.0 else f"cone[c={c:g},apex_z={apex_z:g}]"
    return ImplicitSurface(name, f, grad)


def circular_cylinder(r: float) -> ImplicitSurface:
    """x^2 + y^2 = r^2."""
    if r <= 0:
        raise ParameterError("cylinder radius must be positive")

    def f(p):
        return p[:, 0] ** 2 + p[:, 1] ** 2 - r * r

    def grad(p):
        out = np.empty_like(p)
        out[:, 0] = 2.0 * p[:, 0]
        out[:, 1] = 2.0 * p[:, 1]
        out[:, 2] = 0.0
        return out

    return ImplicitSurface(f"cylinder[r={r:g}]", f, grad)


def horosphere(c: float) -> ImplicitSurface:
    """The horizontal plane z = c, a horosphere of the hyperbolic metric."""
    if c <= 0:
        raise ParameterError("horosphere height must be positive")

    def f(p):
        return p[:, 2] - c

    def grad(p):
        out = np.zeros_like(p)
        out[:, 2] = 1.0
        return out

    return ImplicitSurface(f"horosphere[c={c:g}]", f, grad)


def sphere(radius: float, center=(0.0, 0.0, 0.0)) -> ImplicitSurface:
    """x^2 + y^2 + z^2 = R^2 about an optional center."""
    if radius <= 0:
        raise ParameterError("sphere radius must be positive")
    cx, cy, cz = (float(v) for v in center)

    def f(p):
        return ((p[:, 0] - cx) ** 2 + (p[:, 1] - cy) ** 2
                + (p[:, 2] - cz) ** 2 - radius * radius)

    def grad(p):
        out = np.empty_like(p)
        out[:, 0] = 2.0 * (p[:, 0] - cx)
        out[:, 1] = 2.0 * (p[:, 1] - cy)
        out[:, 2] = 2.0 * (p[:, 2] - cz)
        return out

    name = f"sphere[R={radius:g}]"
    if center != (0.0, 0.0, 0.0):
        name = f"sphere[R={radius:g},center=({cx:g},{cy:g},{cz:g})]"
    return ImplicitSurface(name, f, grad)


def vertical_plane(theta: float, x0: float = 0.0, y0: float = 0.0) -> ImplicitSurface:
    """sin(theta) (x - x0) - cos(theta) (y - y0) = 0: a vertical plane, which
    is a totally geodesic surface of the hyperbolic metric."""
    st, ct = np.sin(theta), np.cos(theta)

    def f(p):
        return st * (p[:, 0] - x0) - ct * (p[:, 1] - y0)

    def grad(p):
        out = np.empty_like(p)
        out[:, 0] = st
        out[:, 1] = -ct
        out[:, 2] = 0.0
        return out

    return ImplicitSurface(f"vertical-plane[theta={theta:g}]", f, grad)


_CATALOG = {
    "killing-cylinder-cone": (cone_about_z, ("c",)),
    "euclidean-cylinder": (circular_cylinder, ("r",)),
    "horosphere": (horosphere, ("c",)),
    "origin-sphere": (sphere, ("R",)),
    "vertical-plane": (vertical_plane, ("theta", "x0", "y0")),
}


def catalog_surface(kind: str, **params) -> ImplicitSurface:
    """Build a cataloged surface by kind name.

    Kinds: killing-cylinder-cone(c), euclidean-cylinder(r), horosphere(c),
    origin-sphere(R), vertical-plane(theta, x0, y0).
    """
    if kind not in _CATALOG:
        raise ParameterError(
            f"unknown surface kind {kind!r}; expected one of {sorted(_CATALOG)}"
        )
    builder, names = _CATALOG[kind]
    unknown = set(params) - set(names)
    if unknown:
        raise ParameterError(f"unknown parameters for {kind}: {sorted(unknown)}")
    return builder(**params)
