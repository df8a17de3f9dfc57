"""AdS-Schwarzschild geometry made numerical.

Blackening factor, horizon, Hawking temperature and horizon entropy of
the eternal black hole; the critical interior surface whose volume rate
bounds the late-time growth of the Einstein-Rosen bridge; maximal-volume
slices anchored at finite boundary times; volume-complexity growth rates;
and the late-time action growth of the Wheeler-DeWitt patch, which equals
2M for neutral static black holes of any size and therefore saturates the
2M / (pi hbar) bound on complexity growth.

Units default to G = l_ads = hbar = 1 and every quantity is configurable
through BlackHoleSpec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

_BRENTQ_RTOL = 4 * np.finfo(float).eps
DEFAULT_QUAD_TOL = 1e-10
DEFAULT_RCUT_FACTOR = 1e3


@dataclass(frozen=True)
class BlackHoleSpec:
    """Eternal AdS-Schwarzschild black hole in d bulk spacetime dimensions.

    Exactly one of ``mu`` (mass parameter) or ``mass`` must be given; they
    are tied by mu = 16 pi G M / ((d-2) Omega_{d-2}).
    """

    d: int
    mu: float | None = None
    mass: float | None = None
    l_ads: float = 1.0
    G: float = 1.0

    def __post_init__(self):
        if self.d < 4:
            raise ValueError(f"need bulk dimension d >= 4, got {self.d}")
        if self.l_ads <= 0 or self.G <= 0:
            raise ValueError("l_ads and G must be positive")
        if (self.mu is None) == (self.mass is None):
            raise ValueError("give exactly one of mu or mass")
        if self.mu is None:
            object.__setattr__(self, "mu", 16 * math.pi * self.G * self.mass / ((self.d - 2) * self.omega))
        else:
            object.__setattr__(self, "mass", self.mu * (self.d - 2) * self.omega / (16 * math.pi * self.G))
        if self.mu <= 0:
            raise ValueError(f"need a positive mass parameter, got mu={self.mu}")

    @property
    def omega(self) -> float:
        """Volume of the unit (d-2)-sphere, 2 pi^((d-1)/2) / Gamma((d-1)/2)."""
        return 2 * math.pi ** ((self.d - 1) / 2) / math.gamma((self.d - 1) / 2)

    @cached_property
    def r_h(self) -> float:
        return horizon(self)

    @cached_property
    def temperature(self) -> float:
        return hawking_temperature(self)

    @cached_property
    def entropy(self) -> float:
        return bekenstein_entropy(self)


def blackening(spec: BlackHoleSpec, r: float):
    """f(r) = 1 - mu / r^(d-3) + r^2 / l^2."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    out = 1.0 - spec.mu / r ** (spec.d - 3) + (r / spec.l_ads) ** 2
    return float(out) if out.ndim == 0 else out


def blackening_derivative(spec: BlackHoleSpec, r: float) -> float:
    return (spec.d - 3) * spec.mu / r ** (spec.d - 2) + 2 * r / spec.l_ads**2


def _blackening_second(spec: BlackHoleSpec, r: float) -> float:
    return -(spec.d - 2) * (spec.d - 3) * spec.mu / r ** (spec.d - 1) + 2 / spec.l_ads**2


def horizon(spec: BlackHoleSpec) -> float:
    """Unique positive root of the blackening factor (f is strictly increasing)."""
    hi = max(spec.l_ads, spec.mu ** (1.0 / (spec.d - 3)), 1.0)
    while blackening(spec, hi) <= 0:
        hi *= 2
    lo = hi
    while blackening(spec, lo) >= 0:
        lo /= 2
    return brentq(lambda r: blackening(spec, r), lo, hi, xtol=1e-300, rtol=_BRENTQ_RTOL)


def hawking_temperature(spec: BlackHoleSpec) -> float:
    """Surface-gravity temperature f'(r_h) / (4 pi)."""
    return blackening_derivative(spec, spec.r_h) / (4 * math.pi)


def bekenstein_entropy(spec: BlackHoleSpec) -> float:
    """Horizon area over 4G: Omega_{d-2} r_h^(d-2) / (4G)."""
    return spec.omega * spec.r_h ** (spec.d - 2) / (4 * spec.G)


def _interior_weight(spec: BlackHoleSpec, r: float) -> float:
    """W(r) = -r^(2(d-2)) f(r), positive between the singularity and the horizon."""
    return -(r ** (2 * (spec.d - 2))) * blackening(spec, r)


def critical_surface(spec: BlackHoleSpec) -> tuple[float, float]:
    """(r_m, V_d): the interior radius maximizing r^(d-2) sqrt|f| and the
    corresponding limiting volume rate Omega_{d-2} r_m^(d-2) sqrt|f(r_m)|.

    The stationarity condition (d-1) mu - (2d-4) r^(d-3) - (2d-2) r^(d-1)/l^2 = 0
    is strictly decreasing in r, so the maximizer is the unique root.
    """
    d, l = spec.d, spec.l_ads

    def stationarity(r: float) -> float:
        return (d - 1) * spec.mu - (2 * d - 4) * r ** (d - 3) - (2 * d - 2) * r ** (d - 1) / l**2

    r_m = brentq(stationarity, 1e-12 * spec.r_h, spec.r_h, xtol=1e-300, rtol=_BRENTQ_RTOL)
    v_d = spec.omega * math.sqrt(_interior_weight(spec, r_m))
    return r_m, v_d


def critical_energy(spec: BlackHoleSpec) -> float:
    """Per-unit-sphere limiting rate E_c = r_m^(d-2) sqrt|f(r_m)|; maximal
    conserved energy of an interior maximal-volume slice."""
    r_m, _ = critical_surface(spec)
    return math.sqrt(_interior_weight(spec, r_m))


@dataclass(frozen=True)
class VolumeCurvePoint:
    """One maximal slice: conserved energy, turning radius, interior volume
    per unit sphere, and the total boundary anchor time t_l + t_r."""

    E: float
    r_turn: float
    interior_volume_per_sphere: float
    boundary_time_sum: float


def interior_volume(
    spec: BlackHoleSpec,
    E: float,
    r_cut: float | None = None,
    tol: float = DEFAULT_QUAD_TOL,
) -> VolumeCurvePoint:
    """Maximal-volume slice through the interior at conserved energy E.

    The turning radius is the largest root of E^2 + r^(2(d-2)) f(r)
    between the critical radius and the horizon.  The volume integrand
    has an inverse-square-root endpoint singularity there, removed by the
    substitution r = r_turn + u^2.  The boundary anchor time integrates
    dt/dr = E / (f sqrt(E^2 + r^(2(d-2)) f)) across the simple pole at the
    horizon as a principal value: over a window symmetric about r_h the
    subtracted pole s / (f'(r_h) (r - r_h)) integrates to zero, and the
    remainder is regular.  Of the two geodesic branches through the
    turning point the one reaching the boundary at positive anchor time
    is reported, and the symmetric two-sided configuration makes
    boundary_time_sum = 2 t_r.
    """
    r_m, _ = critical_surface(spec)
    e_c = math.sqrt(_interior_weight(spec, r_m))
    if not 0 <= E < e_c:
        raise ValueError(f"need 0 <= E < E_c = {e_c:.6g}, got E = {E}")
    r_h = spec.r_h
    if r_cut is None:
        r_cut = DEFAULT_RCUT_FACTOR * max(r_h, spec.l_ads)
    if r_cut <= r_h:
        raise ValueError(f"r_cut must exceed the horizon radius {r_h:.6g}")
    if E == 0:
        return VolumeCurvePoint(0.0, r_h, 0.0, 0.0)

    two_dm2 = 2 * (spec.d - 2)

    def phi(r: float) -> float:
        return E * E + r**two_dm2 * blackening(spec, r)

    r_turn = brentq(phi, r_m, r_h, xtol=1e-300, rtol=_BRENTQ_RTOL)
    # residual of the root solve; subtracting it keeps the radicand >= 0
    phi_t = phi(r_turn)

    def radicand(r: float) -> float:
        return phi(r) - phi_t

    def vol_integrand(u: float) -> float:
        r = r_turn + u * u
        rad = radicand(r)
        if rad <= 0:
            return 0.0
        return 4.0 * u * r**two_dm2 / math.sqrt(rad)

    u_max = math.sqrt(r_h - r_turn)
    volume, _ = quad(vol_integrand, 0.0, u_max, epsabs=tol, epsrel=tol, limit=500)

    fp_h = blackening_derivative(spec, r_h)
    fpp_h = _blackening_second(spec, r_h)
    delta = 0.5 * min(r_h - r_turn, r_cut - r_h)

    def time_integrand(r: float) -> float:
        return E / (blackening(spec, r) * math.sqrt(radicand(r)))

    def time_integrand_u(u: float) -> float:
        r = r_turn + u * u
        rad = radicand(r)
        if rad <= 0:
            return 0.0
        return 2.0 * u * E / (blackening(spec, r) * math.sqrt(rad))

    pole_limit = -(fpp_h / (2 * fp_h**2) + r_h**two_dm2 / (2 * E * E))

    def subtracted(r: float) -> float:
        if abs(r - r_h) < 1e-9 * r_h:
            return pole_limit
        return time_integrand(r) - 1.0 / (fp_h * (r - r_h))

    t1, _ = quad(time_integrand_u, 0.0, math.sqrt(r_h - delta - r_turn), epsabs=tol, epsrel=tol, limit=500)
    t2, _ = quad(subtracted, r_h - delta, r_h + delta, points=[r_h], epsabs=tol, epsrel=tol, limit=500)
    t3, _ = quad(time_integrand, r_h + delta, r_cut, epsabs=tol, epsrel=tol, limit=500)
    t_r = -(t1 + t2 + t3)
    return VolumeCurvePoint(E, r_turn, volume, 2.0 * t_r)


def volume_curve(
    spec: BlackHoleSpec,
    eta_max: float = 1e-1,
    eta_min: float = 1e-5,
    points: int = 16,
    r_cut: float | None = None,
    tol: float = DEFAULT_QUAD_TOL,
) -> list[VolumeCurvePoint]:
    """Slices on a geometric grid E = E_c (1 - eta) approaching criticality."""
    if points < 2:
        raise ValueError("need at least 2 grid points")
    e_c = critical_energy(spec)
    etas = np.geomspace(eta_max, eta_min, points)
    return [interior_volume(spec, e_c * (1.0 - eta), r_cut=r_cut, tol=tol) for eta in etas]


@dataclass(frozen=True)
class CVRate:
    dC_dt: float
    S_times_T: float
    ratio: float


def cv_rate(spec: BlackHoleSpec) -> CVRate:
    """Late-time volume-complexity rate V_d / (l G) against entropy x temperature.

    In the high-temperature regime the ratio approaches the constant
    8 pi / (d - 1).
    """
    _, v_d = critical_surface(spec)
    rate = v_d / (spec.l_ads * spec.G)
    st = spec.entropy * spec.temperature
    return CVRate(rate, st, rate / st)


def rindler_rate(spec: BlackHoleSpec) -> float:
    """Complexity rate per dimensionless near-horizon boost angle:
    dC/dtau = (dC/dt) / (2 pi T)."""
    return cv_rate(spec).dC_dt / (2 * math.pi * spec.temperature)


@dataclass(frozen=True)
class ActionRate:
    bulk: float
    boundary: float
    total: float


def wdw_action_rate(spec: BlackHoleSpec) -> ActionRate:
    """Late-time growth rate of the Wheeler-DeWitt patch action.

    bulk: the interior volume term -r_h^(d-1) Omega_{d-2} / (8 pi G l^2).
    boundary: the surface (extrinsic-curvature) bracket
        -((d-1)/(d-2)) M + (r^(d-3) Omega / (8 pi G)) ((d-2) + (d-1) r^2/l^2)
    evaluated at r_h minus at r = 0.  Their sum collapses, through
    f(r_h) = 0, to exactly 2M for every neutral static spec.
    """
    d, l, G, om = spec.d, spec.l_ads, spec.G, spec.omega
    r_h = spec.r_h
    bulk = -(r_h ** (d - 1)) * om / (8 * math.pi * G * l**2)

    def bracket(r: float) -> float:
        if r == 0.0:
            surface = 0.0
        else:
            surface = r ** (d - 3) * om / (8 * math.pi * G) * ((d - 2) + (d - 1) * r**2 / l**2)
        return -((d - 1) / (d - 2)) * spec.mass + surface

    boundary = bracket(r_h) - bracket(0.0)
    return ActionRate(bulk, boundary, bulk + boundary)


@dataclass(frozen=True)
class LloydReport:
    bound: float
    cA_rate: float
    saturation: float


def lloyd_bound(spec: BlackHoleSpec, hbar: float = 1.0) -> LloydReport:
    """Maximal complexification rate 2M / (pi hbar) against the
    action-complexity rate; neutral static black holes saturate it."""
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    bound = 2 * spec.mass / (math.pi * hbar)
    rate = wdw_action_rate(spec).total / (math.pi * hbar)
    return LloydReport(bound, rate, rate / bound)
