"""Field reradiated by a 1-D surface segment, from a line integral of secondary sources.

The surface occupies [-L, L] on the x axis; source and observer sit at y > 0.
A profile prescribes the amplitude Delta(x) and the phase response
Upsilon(x) (in metres, so that k*Upsilon is in radians).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, RegimeError
from .quadrature import MAX_NODES, integrate
from .wave import MediumVacuum, fraunhofer_distance

PANEL_PHASE = 2.0 * np.pi / 16  # max phase change of k*P across one panel
SINC_SERIES_BELOW = 1e-4


class ProfileKind(enum.Enum):
    SPECULAR = "specular"
    ANOMALOUS = "anomalous"
    FOCUSING = "focusing"
    CUSTOM = "custom"


def _unit(x):
    return np.ones(np.shape(x))


@dataclass(frozen=True)
class SurfaceProfile:
    kind: ProfileKind
    upsilon: Callable
    delta: Callable = _unit
    params: tuple = ()

    @classmethod
    def specular(cls, medium: MediumVacuum, phi0: float = 0.0, delta=_unit):
        c = phi0 / medium.k
        return cls(ProfileKind.SPECULAR, lambda x: np.full(np.shape(x), c), delta, (phi0,))

    @classmethod
    def anomalous(cls, medium: MediumVacuum, phibar_t: float, phibar_r: float, phi0: float = 0.0, delta=_unit):
        """Linear phase gradient; phibar_t and phibar_r are dimensionless (sines of steering angles)."""
        g, c = phibar_t - phibar_r, phi0 / medium.k
        return cls(ProfileKind.ANOMALOUS, lambda x: g * np.asarray(x, dtype=float) + c, delta,
                   (phibar_t, phibar_r, phi0))

    @classmethod
    def anomalous_from_angles(cls, medium: MediumVacuum, theta_t: float, theta_r: float, phi0: float = 0.0,
                              delta=_unit):
        """Gradient that sends a wave arriving from theta_t (seen from the centre) towards theta_r."""
        return cls.anomalous(medium, np.sin(theta_t), np.sin(theta_r), phi0, delta)

    @classmethod
    def focusing(cls, source: tuple[float, float], focus: tuple[float, float], delta=_unit):
        xt, yt = source
        xf, yf = focus
        if not (yt > 0 and yf > 0):
            raise DomainError("source and focus must lie at y > 0")

        def ups(x):
            x = np.asarray(x, dtype=float)
            return np.hypot(x - xt, yt) + np.hypot(x - xf, yf)

        return cls(ProfileKind.FOCUSING, ups, delta, (xf, yf))

    @classmethod
    def custom(cls, upsilon, delta=_unit):
        return cls(ProfileKind.CUSTOM, upsilon, delta)


@dataclass(frozen=True)
class Scenario:
    source: tuple[float, float]
    observer: tuple[float, float]
    half_length: float
    medium: MediumVacuum
    profile: SurfaceProfile

    def __post_init__(self):
        if not (self.source[1] > 0 and self.observer[1] > 0):
            raise DomainError("source and observer must lie at y > 0")
        if not self.half_length > 0:
            raise DomainError(f"half length must be positive, got {self.half_length!r}")

    @property
    def k(self) -> float:
        return self.medium.k


def path_distances(sc: Scenario, x):
    x = np.asarray(x, dtype=float)
    (xt, yt), (xr, yr) = sc.source, sc.observer
    return np.hypot(x - xt, yt), np.hypot(x - xr, yr)


def path_phase(sc: Scenario, x):
    """P(x) = d_T + d_R - Upsilon, in metres."""
    dt, dr = path_distances(sc, x)
    return dt + dr - sc.profile.upsilon(x)


def integrand(sc: Scenario, x):
    dt, dr = path_distances(sc, x)
    yt, yr = sc.source[1], sc.observer[1]
    amp = sc.profile.delta(x) / np.sqrt(dt * dr) * (yt / dt + yr / dr)
    return amp * np.exp(-1j * sc.k * (dt + dr - sc.profile.upsilon(x)))


def integrand_terms(sc: Scenario, x):
    """The integrand split as (source wavelet, surface response, observer wavelet, obliquity)."""
    dt, dr = path_distances(sc, x)
    k = sc.k
    src = np.exp(-1j * k * dt) / np.sqrt(dt)
    surf = sc.profile.delta(x) * np.exp(1j * k * sc.profile.upsilon(x))
    obs = np.exp(-1j * k * dr) / np.sqrt(dr)
    obl = sc.source[1] / dt + sc.observer[1] / dr
    return src, surf, obs, obl


class FieldResult(NamedTuple):
    value: complex
    error: float
    nodes: int


def panel_count(sc: Scenario, samples: int = 2049, panel_phase: float = PANEL_PHASE) -> int:
    """Equal panels such that k*P changes by at most ``panel_phase`` over each one."""
    L = sc.half_length
    x = np.linspace(-L, L, samples)
    slope = np.max(np.abs(np.diff(sc.k * path_phase(sc, x)))) / (x[1] - x[0])
    return max(int(np.ceil(2 * L * slope / panel_phase)), 4)


def field_integral(sc: Scenario, rtol: float = 1e-9, max_nodes: int = MAX_NODES * 8,
                   panel_phase: float = PANEL_PHASE) -> FieldResult:
    """(1/8 pi) times the integral of the secondary-source integrand over the surface."""
    L = sc.half_length
    panels = panel_count(sc, panel_phase=panel_phase)
    # absolute floor relative to the co-phased magnitude, so deep nulls terminate
    scale = 2 * L * np.max(np.abs(integrand(sc, np.linspace(-L, L, 257))))
    res = integrate(lambda x: integrand(sc, x), -L, L, panels=panels, rtol=rtol,
                    atol=1e-12 * scale, max_nodes=max_nodes)
    return FieldResult(complex(res.value) / (8 * np.pi), res.error / (8 * np.pi), res.nodes)


def reflection_slope(sc: Scenario, x):
    """(x - x_T)/d_T - (x_R - x)/d_R; zero where the specular law of reflection holds."""
    dt, dr = path_distances(sc, x)
    return (x - sc.source[0]) / dt - (sc.observer[0] - x) / dr


def sin_angles(sc: Scenario, x):
    """(sin theta_T(x), sin theta_R(x)) of the incoming and outgoing rays at x."""
    dt, dr = path_distances(sc, x)
    return (x - sc.source[0]) / dt, (sc.observer[0] - x) / dr


def stationary_point(sc: Scenario, tol: float = 1e-12) -> float | None:
    """Root of reflection_slope in [-L, L] by bisection, or None if there is none."""
    lo, hi = -sc.half_length, sc.half_length
    flo, fhi = reflection_slope(sc, lo), reflection_slope(sc, hi)
    if flo * fhi > 0:
        return None
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    while True:
        mid = 0.5 * (lo + hi)
        fm = reflection_slope(sc, mid)
        if abs(fm) < tol or mid in (lo, hi):
            return float(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid


def intensity_large(sc: Scenario) -> float:
    """Mirror-like estimate 1/sqrt(8 pi k (d_T + d_R)) at the reflection point."""
    xs = stationary_point(sc)
    if xs is None:
        raise RegimeError("no specular reflection point on the surface")
    dt, dr = path_distances(sc, xs)
    return float(1.0 / np.sqrt(8 * np.pi * sc.k * (dt + dr)))


def sinc(u):
    """sin(u)/u with a series near zero."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) < SINC_SERIES_BELOW
    safe = np.where(small, 1.0, u)
    return np.where(small, 1.0 - u * u / 6.0, np.sin(safe) / safe)


def center_geometry(sc: Scenario):
    """Distances to the surface centre and the sines/cosines of the view angles."""
    (xt, yt), (xr, yr) = sc.source, sc.observer
    dt0, dr0 = np.hypot(xt, yt), np.hypot(xr, yr)
    return dt0, dr0, -xt / dt0, xr / dr0, yt / dt0, yr / dr0


def intensity_small(sc: Scenario) -> float:
    """Scatterer-like estimate with the sinc array factor of the whole segment."""
    L, k = sc.half_length, sc.k
    dt0, dr0, st, sr, ct, cr = center_geometry(sc)
    return float(L / (4 * np.pi) * abs((ct + cr) / np.sqrt(dt0 * dr0)) * abs(sinc(k * L * (st - sr))))


@dataclass(frozen=True)
class RegimeReport:
    fraunhofer_distance: float
    total_distance: float
    stationary_point: float | None
    hint: str


def regime_report(sc: Scenario) -> RegimeReport:
    """Diagnostics only; nothing here gates a computation."""
    df = fraunhofer_distance(2 * sc.half_length, sc.medium)
    dt0, dr0 = center_geometry(sc)[:2]
    xs = stationary_point(sc)
    large = xs is not None and dt0 + dr0 < df
    return RegimeReport(df, float(dt0 + dr0), xs, "electrically large" if large else "electrically small")


def equal_leg_scenario(medium: MediumVacuum, half_length: float, total_distance: float,
                       theta: float = 0.0, profile: SurfaceProfile | None = None) -> Scenario:
    """Source and observer at total_distance/2 from the centre, mirrored at angle theta."""
    d = total_distance / 2.0
    s, c = np.sin(theta), np.cos(theta)
    profile = profile if profile is not None else SurfaceProfile.specular(medium)
    return Scenario((-d * s, d * c), (d * s, d * c), half_length, medium, profile)
