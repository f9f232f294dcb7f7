"""Closed-form generators for every constant-angle curve family.

Every generator returns a :class:`HelixBundle`: a unit-speed curve together
with its axis field, the constant angle theta between curve and axis, closed
forms for curvature and torsion where the family has them, and the surfaces
the curve is claimed to lie on.

Families
--------
``euclidean-rotational``
    (r cos(s cos(th)/r), r sin(s cos(th)/r), s sin(th)): the circular helix
    of radius r, seen as the constant-angle curve of the rotation field
    -y dx + x dy.  kappa = cos^2(th)/r, tau = sin(th)cos(th)/r.

``hyp-dilation``
    m e^(a s) (c cos(b s), c sin(b s), 1) with a = cos(th)/sqrt(1+c^2) and
    b = sin(th)/c: constant angle th with the dilation field x dx + y dy + z dz
    in the hyperbolic metric.  kappa = (c^2 + sin^2 th)/(c sqrt(1+c^2)),
    tau = sin(th)cos(th)/(c sqrt(1+c^2)).

``hyp-elliptic``
    Same exponential-circle shape with a = -sin(th)/sqrt(1+c^2) and
    b = cos(th)/c: constant angle th with the rotation field -y dx + x dy.
    The decaying branch of the classification is used so that the torsion
    tau = -sin(th)cos(th)/(c sqrt(1+c^2)) is negative for acute th under the
    positively-oriented binormal; the growing branch is the same curve with
    the parameter reversed and the supplementary angle parameter.

``hyp-parabolic``
    (c s cos(th) + x0, c s sin(th) + y0, c): a straight chart line inside the
    horosphere z = c making angle th with the horizontal translation field.
    kappa = 1, tau = 0.

``position-angle``
    e^(phi(s)) (r cos(phi), r sin(phi), h), phi = h s / sqrt(2 r^2 + h^2):
    the curve making a constant angle with the position vector, here a
    dilation-axis helix with cos(th) = sqrt(r^2+h^2)/sqrt(2r^2+h^2).

``mn`` (:func:`generate_mn`)
    The quadrature family (r(s) cos(phi(s)), r(s) sin(phi(s)), z(s)) driven
    by a free turning function omega(s); constant angle th with the rotation
    field but generally non-constant axis length.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels as _k
from .curves import Curve
from .errors import DomainError, ParameterError
from .geometry import Metric
from .killing import KillingField, get_field
from .quadrature import PrefixIntegral
from .surfaces import (
    ImplicitSurface,
    circular_cylinder,
    cone_about_z,
    horosphere,
    sphere,
    vertical_plane,
)

FAMILIES = (
    "euclidean-rotational",
    "hyp-dilation",
    "hyp-elliptic",
    "hyp-parabolic",
    "position-angle",
    "mn",
)


@dataclass(frozen=True)
class ClosedFormKT:
    """Closed forms s -> kappa(s) >= 0 and s -> tau(s)."""

    kappa: Callable[[np.ndarray], np.ndarray]
    tau: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class HelixSpec:
    """Family name plus its numeric parameters (see FAMILY_PARAMS)."""

    family: str
    params: dict


@dataclass(frozen=True)
class HelixBundle:
    """A generated curve with its verification metadata."""

    family: str
    params: dict
    curve: Curve
    axis: KillingField
    theta: float
    kt: ClosedFormKT | None
    surfaces: tuple[ImplicitSurface, ...] = ()
    geodesic_surface: ImplicitSurface | None = None
    degenerate: bool = False
    axis_length_constant: bool = True
    axis2: KillingField | None = None
    theta2: float | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def _const_kt(kappa: float, tau: float) -> ClosedFormKT:
    def kfn(s):
        return np.full(np.shape(s), kappa, dtype=float)

    def tfn(s):
        return np.full(np.shape(s), tau, dtype=float)

    return ClosedFormKT(kfn, tfn)


def _check_angle(theta: float, lo: float, hi: float, family: str,
                 hi_open: bool = True) -> float:
    theta = float(theta)
    if not np.isfinite(theta):
        raise ParameterError(f"{family}: theta must be finite")
    ok = theta >= lo and (theta < hi if hi_open else theta <= hi)
    if not ok:
        bracket = ")" if hi_open else "]"
        raise ParameterError(
            f"{family}: theta must lie in [{lo:g}, {hi:g}{bracket}, got {theta:g}"
        )
    return theta


def _positive(value: float, name: str, family: str) -> float:
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise ParameterError(f"{family}: {name} must be positive, got {value:g}")
    return value


# ---------------------------------------------------------------------------
# Degenerate axis curves (geodesic lines).
# ---------------------------------------------------------------------------


def _z_axis_euclidean(domain):
    def point(s):
        out = np.zeros((s.shape[0], 3))
        out[:, 2] = s
        return out

    return Curve(point=point, domain=domain, metric=Metric.EUCLIDEAN)


def _z_axis_hyperbolic(m, domain):
    def point(s):
        out = np.zeros((s.shape[0], 3))
        out[:, 2] = m * np.exp(s)
        return out

    return Curve(point=point, domain=domain, metric=Metric.HYPERBOLIC)


# ---------------------------------------------------------------------------
# The five closed-form families.
# ---------------------------------------------------------------------------


def euclidean_rotational(r: float, theta: float, domain=None,
                         fd_step: float = 5e-3, fd_order: int = 4) -> HelixBundle:
    """Circular helix with axis the rotation field -y dx + x dy, angle theta.

    r = 0 degenerates to the z-axis (angle pi/2 by convention); theta = pi/2
    is rejected because the curve flattens to a straight line there.
    """
    theta = _check_angle(theta, 0.0, math.pi / 2, "euclidean-rotational")
    r = float(r)
    if r < 0 or not np.isfinite(r):
        raise ParameterError(f"euclidean-rotational: r must be >= 0, got {r:g}")
    axis = get_field(Metric.EUCLIDEAN, "rot_xy")
    axis2 = get_field(Metric.EUCLIDEAN, "trans_z")
    if r == 0.0:
        dom = tuple(domain) if domain else (0.0, 2 * math.pi)
        return HelixBundle(
            family="euclidean-rotational",
            params={"r": r, "theta": math.pi / 2},
            curve=_z_axis_euclidean(dom),
            axis=axis,
            theta=math.pi / 2,
            kt=_const_kt(0.0, 0.0),
            degenerate=True,
            axis2=axis2,
            theta2=0.0,
            notes=("degenerate: r=0 gives the z-axis geodesic",),
        )
    w = math.cos(theta) / r
    vz = math.sin(theta)

    def point(s):
        return _k.rot_helix_points(s, r, w, vz)

    dom = tuple(domain) if domain else (0.0, 2 * math.pi * r / math.cos(theta))
    curve = Curve(point=point, domain=dom, metric=Metric.EUCLIDEAN,
                  fd_step=fd_step, fd_order=fd_order)
    kappa = math.cos(theta) ** 2 / r
    tau = math.sin(theta) * math.cos(theta) / r
    cyl = circular_cylinder(r)
    return HelixBundle(
        family="euclidean-rotational",
        params={"r": r, "theta": theta},
        curve=curve,
        axis=axis,
        theta=theta,
        kt=_const_kt(kappa, tau),
        surfaces=(cyl,),
        geodesic_surface=cyl,
        axis2=axis2,
        theta2=math.pi / 2 - theta,
    )


def _exp_circle_bundle(family, m, c, theta, a, b, kappa, tau, axis_name, domain,
                       fd_step, fd_order, notes=()):
    def point(s):
        return _k.exp_circle_points(s, m, a, b, c)

    dom = tuple(domain) if domain else (-1.5, 1.5)
    curve = Curve(point=point, domain=dom, metric=Metric.HYPERBOLIC,
                  fd_step=fd_step, fd_order=fd_order)
    cone = cone_about_z(c)
    return HelixBundle(
        family=family,
        params={"m": m, "c": c, "theta": theta},
        curve=curve,
        axis=get_field(Metric.HYPERBOLIC, axis_name),
        theta=theta,
        kt=_const_kt(kappa, tau),
        surfaces=(cone,),
        geodesic_surface=cone,
        notes=tuple(notes),
    )


def hyp_dilation(c: float, theta: float, m: float = 1.0, domain=None,
                 fd_step: float = 5e-3, fd_order: int = 4) -> HelixBundle:
    """Dilation-axis helix on the cone x^2 + y^2 = c^2 z^2, angle theta.

    c = 0 degenerates to the z-axis geodesic (angle 0 with the dilation
    field, which restricts to d/dz there).
    """
    theta = _check_angle(theta, 0.0, math.pi, "hyp-dilation")
    m = _positive(m, "m", "hyp-dilation")
    c = float(c)
    if c < 0 or not np.isfinite(c):
        raise ParameterError(f"hyp-dilation: c must be >= 0, got {c:g}")
    if c == 0.0:
        dom = tuple(domain) if domain else (-1.5, 1.5)
        return HelixBundle(
            family="hyp-dilation",
            params={"m": m, "c": c, "theta": 0.0},
            curve=_z_axis_hyperbolic(m, dom),
            axis=get_field(Metric.HYPERBOLIC, "dilation"),
            theta=0.0,
            kt=_const_kt(0.0, 0.0),
            degenerate=True,
            notes=("degenerate: c=0 gives the z-axis geodesic",),
        )
    root = math.sqrt(1.0 + c * c)
    a = math.cos(theta) / root
    b = math.sin(theta) / c
    kappa = (c * c + math.sin(theta) ** 2) / (c * root)
    tau = math.sin(theta) * math.cos(theta) / (c * root)
    return _exp_circle_bundle("hyp-dilation", m, c, theta, a, b, kappa, tau,
                              "dilation", domain, fd_step, fd_order)


def hyp_elliptic(c: float, theta: float, m: float = 1.0, domain=None,
                 fd_step: float = 5e-3, fd_order: int = 4) -> HelixBundle:
    """Rotation-axis helix on the cone x^2 + y^2 = c^2 z^2, angle theta.

    Emits the branch with decaying height, whose torsion is negative for
    acute theta under the positively-oriented frame.  c = 0 degenerates to
    the z-axis (conventional angle pi/2; the axis field vanishes there).
    """
    theta = _check_angle(theta, 0.0, math.pi, "hyp-elliptic")
    m = _positive(m, "m", "hyp-elliptic")
    c = float(c)
    if c < 0 or not np.isfinite(c):
        raise ParameterError(f"hyp-elliptic: c must be >= 0, got {c:g}")
    if c == 0.0:
        dom = tuple(domain) if domain else (-1.5, 1.5)
        return HelixBundle(
            family="hyp-elliptic",
            params={"m": m, "c": c, "theta": math.pi / 2},
            curve=_z_axis_hyperbolic(m, dom),
            axis=get_field(Metric.HYPERBOLIC, "rot_xy"),
            theta=math.pi / 2,
            kt=_const_kt(0.0, 0.0),
            degenerate=True,
            notes=("degenerate: c=0 gives the z-axis geodesic; "
                   "the axis field vanishes on it",),
        )
    root = math.sqrt(1.0 + c * c)
    a = -math.sin(theta) / root
    b = math.cos(theta) / c
    kappa = (c * c + math.cos(theta) ** 2) / (c * root)
    tau = -math.sin(theta) * math.cos(theta) / (c * root)
    return _exp_circle_bundle("hyp-elliptic", m, c, theta, a, b, kappa, tau,
                              "rot_xy", domain, fd_step, fd_order)


def hyp_parabolic(c: float, theta: float, x0: float = 0.0, y0: float = 0.0,
                  domain=None, fd_step: float = 5e-3, fd_order: int = 4) -> HelixBundle:
    """Straight line in the horosphere z = c, angle theta with d/dx.

    Unit speed in the hyperbolic metric requires the chart speed c, so the
    line is (c s cos(th) + x0, c s sin(th) + y0, c).  kappa = 1, tau = 0;
    the line is a geodesic of the horosphere and lies in a vertical plane.
    """
    theta = _check_angle(theta, 0.0, math.pi, "hyp-parabolic")
    c = _positive(c, "c", "hyp-parabolic")
    x0 = float(x0)
    y0 = float(y0)
    ct, st = math.cos(theta), math.sin(theta)

    def point(s):
        return _k.plane_line_points(s, x0, y0, c, ct, st)

    dom = tuple(domain) if domain else (-3.0, 3.0)
    curve = Curve(point=point, domain=dom, metric=Metric.HYPERBOLIC,
                  fd_step=fd_step, fd_order=fd_order)
    horo = horosphere(c)
    plane = vertical_plane(theta, x0, y0)
    return HelixBundle(
        family="hyp-parabolic",
        params={"c": c, "theta": theta, "x0": x0, "y0": y0},
        curve=curve,
        axis=get_field(Metric.HYPERBOLIC, "trans_x"),
        theta=theta,
        kt=_const_kt(1.0, 0.0),
        surfaces=(horo, plane),
        geodesic_surface=horo,
    )


def position_angle(r: float, h: float, domain=None,
                   fd_step: float = 5e-3, fd_order: int = 4) -> HelixBundle:
    """The constant-angle-with-position curve e^phi (r cos(phi), r sin(phi), h).

    In the hyperbolic metric this is a dilation-axis helix on the cone with
    slope parameter r/h; phi(s) = h s / sqrt(2 r^2 + h^2) is the arc-length
    parametrization.
    """
    r = _positive(r, "r", "position-angle")
    h = _positive(h, "h", "position-angle")
    q = 2 * r * r + h * h
    rate = h / math.sqrt(q)  # both the growth and angular rate
    theta = math.acos(math.sqrt(r * r + h * h) / math.sqrt(q))
    kappa = 2 * r * math.sqrt(r * r + h * h) / q
    tau = h * h / q

    def point(s):
        return _k.exp_circle_points(s, h, rate, rate, r / h)

    dom = tuple(domain) if domain else (-1.5, 1.5)
    curve = Curve(point=point, domain=dom, metric=Metric.HYPERBOLIC,
                  fd_step=fd_step, fd_order=fd_order)
    cone = cone_about_z(r / h)
    return HelixBundle(
        family="position-angle",
        params={"r": r, "h": h},
        curve=curve,
        axis=get_field(Metric.HYPERBOLIC, "dilation"),
        theta=theta,
        kt=_const_kt(kappa, tau),
        surfaces=(cone,),
        geodesic_surface=cone,
    )


def pitch(r: float, theta: float) -> float:
    """Height gained by the circular helix over one full turn: 2 pi r tan(theta)."""
    r = _positive(r, "r", "pitch")
    theta = _check_angle(theta, 0.0, math.pi / 2, "pitch")
    return 2.0 * math.pi * r * math.tan(theta)


# ---------------------------------------------------------------------------
# The quadrature family.
# ---------------------------------------------------------------------------


def generate_mn(
    omega: Callable[[np.ndarray], np.ndarray],
    theta: float,
    r0: float,
    domain: tuple[float, float],
    *,
    panels_per_unit: float = 10_000,
    extension: float = 0.05,
    fd_step: float = 5e-3,
    fd_order: int = 4,
) -> Curve:
    """Constant-rotation-angle curve driven by the turning function omega.

    The coordinates are quadratures of the unit-speed system

        r(s)   = r0 + sin(th) * integral of cos(omega),
        z(s)   = sin(th) * integral of sin(omega),
        phi(s) = cos(th) * integral of 1/r,

    with all three integrals anchored at s_min (r(s_min) = r0, z(s_min) = 0,
    phi(s_min) = 0).  The radius must stay positive; a non-positive r(s) is
    reported with the offending parameter value.  The evaluation domain is
    extended by ``extension`` on each side so the curve can be differenced
    at the reporting boundaries.
    """
    theta = _check_angle(theta, 0.0, math.pi, "mn")
    lo, hi = float(domain[0]), float(domain[1])
    if not lo < hi:
        raise ParameterError(f"mn: empty domain [{lo:g}, {hi:g}]")
    st, ct = math.sin(theta), math.cos(theta)
    elo, ehi = lo - extension, hi + extension

    def cos_omega(t):
        return np.cos(np.asarray(omega(t), dtype=float))

    def sin_omega(t):
        return np.sin(np.asarray(omega(t), dtype=float))

    F_cos = PrefixIntegral(cos_omega, elo, ehi, panels_per_unit)
    F_sin = PrefixIntegral(sin_omega, elo, ehi, panels_per_unit)
    base_cos = F_cos(lo)
    base_sin = F_sin(lo)

    def radius(t):
        return r0 + st * (F_cos(t) - base_cos)

    r_nodes = radius(F_cos.nodes)
    bad = np.flatnonzero(r_nodes <= 0.0)
    if bad.size:
        inside = bad[(F_cos.nodes[bad] >= lo) & (F_cos.nodes[bad] <= hi)]
        if inside.size:
            s_bad = F_cos.nodes[inside[0]]
            raise DomainError(
                f"mn: r(s) = {r_nodes[inside[0]]:g} <= 0 at s = {s_bad:g}"
            )
        # only the differencing margin is invalid: shrink it
        good = np.flatnonzero(r_nodes > 0.0)
        elo2 = max(elo, F_cos.nodes[good[0]])
        ehi2 = min(ehi, F_cos.nodes[good[-1]])
        min_margin = 7 * fd_step
        if elo2 > lo - min_margin or ehi2 < hi + min_margin:
            raise DomainError(
                "mn: r(s) <= 0 too close to the reporting domain for differencing"
            )
        return generate_mn(omega, theta, r0, domain,
                           panels_per_unit=panels_per_unit,
                           extension=min(lo - elo2, ehi2 - hi),
                           fd_step=fd_step, fd_order=fd_order)

    F_phi = PrefixIntegral(lambda t: 1.0 / radius(t), elo, ehi, panels_per_unit)
    base_phi = F_phi(lo)

    def point(s):
        r = radius(s)
        phi = ct * (F_phi(s) - base_phi)
        z = st * (F_sin(s) - base_sin)
        out = np.empty((s.shape[0], 3))
        out[:, 0] = r * np.cos(phi)
        out[:, 1] = r * np.sin(phi)
        out[:, 2] = z
        return out

    return Curve(point=point, domain=(lo, hi), metric=Metric.EUCLIDEAN,
                 eval_domain=(elo, ehi), fd_step=fd_step, fd_order=fd_order)


def mn_bundle(omega, theta, r0, domain, *, kt=None, surfaces=(),
              notes=(), **kwargs) -> HelixBundle:
    """Wrap :func:`generate_mn` output with its rotation-field diagnostics."""
    curve = generate_mn(omega, theta, r0, domain, **kwargs)
    return HelixBundle(
        family="mn",
        params={"theta": float(theta), "r0": float(r0)},
        curve=curve,
        axis=get_field(Metric.EUCLIDEAN, "rot_xy"),
        theta=float(theta),
        kt=kt,
        surfaces=tuple(surfaces),
        degenerate=False,
        axis_length_constant=False,
        notes=tuple(notes),
    )


def constant_omega(w: float) -> Callable[[np.ndarray], np.ndarray]:
    """Turning function omega(s) = w."""
    w = float(w)

    def f(t):
        return np.full(np.shape(t), w, dtype=float)

    return f


def omega_identity(t):
    """Turning function omega(s) = s."""
    return np.asarray(t, dtype=float)


def mn_cone_example(theta: float, w: float, domain=(1.0, 10.0), **kwargs) -> HelixBundle:
    """Constant omega = w != pi/2: the curve lies on a cone about the z-axis.

    r0 is chosen so the parameter s measures arc length from the cone apex
    (r(s) = sin(th) cos(w) s), matching the closed forms of
    :func:`mn_example_closed_forms`.  The apex sits at z = z(s_min) - r0 tan(w).
    """
    theta = float(theta)
    w = float(w)
    lo = float(domain[0])
    if lo <= 0:
        raise ParameterError("cone example needs s_min > 0 (apex at s = 0)")
    slope = math.sin(theta) * math.cos(w)
    if slope <= 0:
        raise ParameterError(
            "cone example needs sin(theta) cos(w) > 0 for a positive radius"
        )
    r0 = slope * lo
    apex_z = -r0 * math.tan(w)
    cone = cone_about_z(abs(1.0 / math.tan(w)), apex_z=apex_z)
    return mn_bundle(
        constant_omega(w), theta, r0, domain,
        kt=mn_example_closed_forms("cone", theta=theta, w=w),
        surfaces=(cone,),
        notes=(f"cone apex at z = {apex_z:g} fixed by the quadrature anchoring",),
        **kwargs,
    )


def mn_sphere_example(theta: float, domain=(0.1, math.pi - 0.1), **kwargs) -> HelixBundle:
    """omega(s) = s: the curve lies on a sphere of radius sin(theta).

    r0 is chosen so r(s) = sin(th) sin(s); with the z quadrature anchored at
    z(s_min) = 0 the sphere center sits at (0, 0, sin(th) cos(s_min)).
    The default domain keeps clear of the polar singularities at s = 0, pi.
    """
    theta = float(theta)
    lo, hi = float(domain[0]), float(domain[1])
    if not 0.0 < lo < hi < math.pi:
        raise ParameterError("sphere example domain must sit inside (0, pi)")
    st = math.sin(theta)
    if st <= 0:
        raise ParameterError("sphere example needs sin(theta) > 0")
    r0 = st * math.sin(lo)
    center_z = st * math.cos(lo)
    ball = sphere(st, center=(0.0, 0.0, center_z))
    return mn_bundle(
        omega_identity, theta, r0, domain,
        kt=mn_example_closed_forms("sphere", theta=theta),
        surfaces=(ball,),
        notes=(f"sphere center at z = {center_z:g} fixed by the quadrature anchoring",),
        **kwargs,
    )


def mn_example_closed_forms(example: str, **params) -> ClosedFormKT:
    """Printed curvature/torsion of the two worked quadrature examples.

    ``example='cone'`` (params theta, w, with s > 0):
        kappa(s) = sqrt(4 csc^2 th - 2 cos(2 th) sin^2 w + cos(2 w) - 5) / (2 s cos w)
        tau(s)   = cos(th) tan(w) / s
    ``example='sphere'`` (param theta, with 0 < s < pi):
        kappa(s) = sqrt(1 - sin^2 th cos^2 s) / (sin th sin s)
        tau(s)   = cos(th) / (1 - sin^2 th cos^2 s)
    """
    if example == "cone":
        theta = float(params.pop("theta"))
        w = float(params.pop("w"))
        if params:
            raise ParameterError(f"unknown params {sorted(params)}")
        if math.sin(theta) == 0 or math.cos(w) == 0:
            raise ParameterError("cone closed forms need sin(theta), cos(w) != 0")
        radicand = (4.0 / math.sin(theta) ** 2
                    - 2.0 * math.cos(2 * theta) * math.sin(w) ** 2
                    + math.cos(2 * w) - 5.0)
        if radicand < 0:
            raise ParameterError("cone closed forms: negative radicand")
        num = math.sqrt(radicand)

        def kfn(s):
            s = np.asarray(s, dtype=float)
            if np.any(s <= 0):
                raise DomainError("cone closed forms defined for s > 0")
            return num / (2.0 * s * math.cos(w))

        def tfn(s):
            s = np.asarray(s, dtype=float)
            if np.any(s <= 0):
                raise DomainError("cone closed forms defined for s > 0")
            return math.cos(theta) * math.tan(w) / s

        return ClosedFormKT(kfn, tfn)
    if example == "sphere":
        theta = float(params.pop("theta"))
        if params:
            raise ParameterError(f"unknown params {sorted(params)}")
        st, ct = math.sin(theta), math.cos(theta)
        if st == 0:
            raise ParameterError("sphere closed forms need sin(theta) != 0")

        def kfn(s):
            s = np.asarray(s, dtype=float)
            if np.any((s <= 0) | (s >= math.pi)):
                raise DomainError("sphere closed forms defined for 0 < s < pi")
            return np.sqrt(1.0 - st * st * np.cos(s) ** 2) / (st * np.sin(s))

        def tfn(s):
            s = np.asarray(s, dtype=float)
            if np.any((s <= 0) | (s >= math.pi)):
                raise DomainError("sphere closed forms defined for 0 < s < pi")
            return ct / (1.0 - st * st * np.cos(s) ** 2)

        return ClosedFormKT(kfn, tfn)
    raise ParameterError(f"unknown example {example!r}; expected 'cone' or 'sphere'")


def cone_axis_angle(theta: float, w: float) -> float:
    """Angle the constant-omega cone curve makes with d/dz: arccos(sin th sin w)."""
    return math.acos(np.clip(math.sin(theta) * math.sin(w), -1.0, 1.0))


# ---------------------------------------------------------------------------
# Family registry and the generic entry point.
# ---------------------------------------------------------------------------

FAMILY_PARAMS: dict[str, dict] = {
    "euclidean-rotational": {
        "metric": Metric.EUCLIDEAN,
        "required": ("r", "theta"),
        "optional": {},
        "angles": ("theta",),
        "invariants": "r >= 0 (r = 0 degenerates to the z-axis); theta in [0, pi/2)",
    },
    "hyp-dilation": {
        "metric": Metric.HYPERBOLIC,
        "required": ("c", "theta"),
        "optional": {"m": 1.0},
        "angles": ("theta",),
        "invariants": "c >= 0 (c = 0 degenerates to the z-axis); m > 0; theta in [0, pi)",
    },
    "hyp-elliptic": {
        "metric": Metric.HYPERBOLIC,
        "required": ("c", "theta"),
        "optional": {"m": 1.0},
        "angles": ("theta",),
        "invariants": "c >= 0 (c = 0 degenerates to the z-axis); m > 0; theta in [0, pi)",
    },
    "hyp-parabolic": {
        "metric": Metric.HYPERBOLIC,
        "required": ("c", "theta"),
        "optional": {"x0": 0.0, "y0": 0.0},
        "angles": ("theta",),
        "invariants": "c > 0; theta in [0, pi)",
    },
    "position-angle": {
        "metric": Metric.HYPERBOLIC,
        "required": ("r", "h"),
        "optional": {},
        "angles": (),
        "invariants": "r > 0; h > 0",
    },
    "mn": {
        "metric": Metric.EUCLIDEAN,
        "required": ("omega", "theta"),
        "optional": {"r0": 1.0},
        "angles": ("theta",),
        "invariants": "omega is 'const:<w>' or 's'; theta in [0, pi); r(s) > 0 on the domain",
    },
}


def parse_omega(descriptor) -> Callable[[np.ndarray], np.ndarray]:
    """Turn an omega descriptor ('const:<w>' or 's') into a callable."""
    if callable(descriptor):
        return descriptor
    text = str(descriptor).strip()
    if text == "s":
        return omega_identity
    if text.startswith("const:"):
        try:
            return constant_omega(float(text[len("const:"):]))
        except ValueError:
            raise ParameterError(f"bad omega constant in {text!r}") from None
    raise ParameterError(
        f"omega descriptor must be 'const:<w>' or 's', got {descriptor!r}"
    )


def generate(spec: HelixSpec, domain=None, fd_step: float = 5e-3,
             fd_order: int = 4) -> HelixBundle:
    """Build the bundle for a family spec; raises ParameterError on bad input."""
    family = spec.family
    if family not in FAMILY_PARAMS:
        raise ParameterError(
            f"unknown family {family!r}; expected one of {list(FAMILIES)}"
        )
    meta = FAMILY_PARAMS[family]
    params = dict(meta["optional"])
    params.update(spec.params)
    missing = [k for k in meta["required"] if k not in params]
    if missing:
        raise ParameterError(f"{family}: missing required parameters {missing}")
    unknown = set(params) - set(meta["required"]) - set(meta["optional"])
    if unknown:
        raise ParameterError(f"{family}: unknown parameters {sorted(unknown)}")
    kw = dict(domain=domain, fd_step=fd_step, fd_order=fd_order)
    if family == "euclidean-rotational":
        return euclidean_rotational(params["r"], params["theta"], **kw)
    if family == "hyp-dilation":
        return hyp_dilation(params["c"], params["theta"], params["m"], **kw)
    if family == "hyp-elliptic":
        return hyp_elliptic(params["c"], params["theta"], params["m"], **kw)
    if family == "hyp-parabolic":
        return hyp_parabolic(params["c"], params["theta"], params["x0"],
                             params["y0"], **kw)
    if family == "position-angle":
        return position_angle(params["r"], params["h"], **kw)
    # mn
    omega = parse_omega(params["omega"])
    dom = tuple(domain) if domain else (0.0, 5.0)
    return mn_bundle(omega, params["theta"], params["r0"], dom,
                     fd_step=fd_step, fd_order=fd_order)
