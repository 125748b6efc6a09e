"""Net power flow through the surface and passivity classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import integrate
from .reflection import ReflectionProfile
from .synthesis import PERIOD_GRID, SurfacePeriod, surface_period
from .wave import Evaluator, MediumVacuum, ReflectorGeometry, TangentialSurfaceFields

GLOBAL_RTOL = 1e-9  # tol_global = GLOBAL_RTOL * P0
LOCAL_RTOL = 1e-9


class PowerClass(enum.Enum):
    LOCALLY_PASSIVE = "LocallyPassive"
    GLOBALLY_PASSIVE_ONLY = "GloballyPassiveOnly"
    GLOBALLY_ACTIVE = "GloballyActive"
    UNITARY_EFFICIENCY = "UnitaryEfficiency"


@dataclass(frozen=True)
class PowerReport:
    pnet_local: Evaluator
    pnet_global: float
    P0: float
    period: SurfacePeriod
    error: float = 0.0

    @property
    def tol_global(self) -> float:
        return GLOBAL_RTOL * self.P0

    @property
    def classification(self) -> PowerClass:
        return classify(self)

    def locally_passive(self, tol_local: float | None = None, n: int = PERIOD_GRID) -> bool:
        tol = LOCAL_RTOL * self.P0 if tol_local is None else tol_local
        return bool(np.all(self.pnet_local(self.period.grid(n)) <= tol))

    def globally_passive(self) -> bool:
        return self.pnet_global <= self.tol_global


def classify(report: PowerReport, tol_local: float | None = None, n: int = PERIOD_GRID) -> PowerClass:
    """Unitary efficiency wins over the other labels, then global activity, then local passivity."""
    if abs(report.pnet_global) <= report.tol_global:
        return PowerClass.UNITARY_EFFICIENCY
    if report.pnet_global > report.tol_global:
        return PowerClass.GLOBALLY_ACTIVE
    if report.locally_passive(tol_local, n):
        return PowerClass.LOCALLY_PASSIVE
    return PowerClass.GLOBALLY_PASSIVE_ONLY


def _period_average(f: Evaluator, period: SurfacePeriod, scale: float, rtol: float = 1e-9):
    if period.is_uniform:
        return float(np.real(f(np.zeros(1))[0])), 0.0
    L = period.length
    res = integrate(f, 0.0, L, panels=4, rtol=rtol, atol=1e-15 * scale * L)
    return float(np.real(res.value)) / L, res.error / L


def pnet_direct(fields: TangentialSurfaceFields, period: SurfacePeriod, P0: float = 1.0,
                rtol: float = 1e-9) -> PowerReport:
    """Poynting flux leaving the sheet, from the tangential fields on both sides.

    Positive values mean the sheet delivers net power.
    """

    def local(x):
        ex_i, ey_i, hx_i, hy_i = fields.incident.at(x)
        ex_r, ey_r, hx_r, hy_r = fields.reflected.at(x)
        ex_t, ey_t, hx_t, hy_t = fields.transmitted.at(x)
        top = 0.5 * np.real((ex_i + ex_r) * np.conj(hy_i + hy_r) - (ey_i + ey_r) * np.conj(hx_i + hx_r))
        bottom = 0.5 * np.real(ex_t * np.conj(hy_t) - ey_t * np.conj(hx_t))
        return top - bottom

    glob, err = _period_average(local, period, P0, rtol)
    return PowerReport(local, glob, P0, period, err)


def pnet_benchmark(geom: ReflectorGeometry, medium: MediumVacuum) -> PowerReport:
    """Closed-form flux of the plane-wave anomalous reflector."""
    P0, A, ci, cr = geom.P0, geom.Ar, geom.cos_i, geom.cos_r
    rate = geom.phase_rate(medium)

    def local(x):
        return P0 * (A * A * cr - ci + A * (cr - ci) * np.cos(rate * np.asarray(x, dtype=float)))

    return PowerReport(local, P0 * (A * A * cr - ci), P0, surface_period(geom, medium))


def pnet_from_reflection(profile: ReflectionProfile, medium: MediumVacuum, rtol: float = 1e-9) -> PowerReport:
    """Flux of the fields written through R(x), for either kind of R."""
    geom = profile.geom
    P0, ci, r = geom.P0, geom.cos_i, profile.r_factor

    def local(x):
        R = profile.R(x)
        return P0 * ci * (r * np.abs(R) ** 2 - 1.0 - (1.0 - r) * np.real(R))

    period = surface_period(geom, medium)
    mean_r2, err = _period_average(lambda x: np.abs(profile.R(x)) ** 2, period, 1.0, rtol)
    glob = P0 * r * ci * mean_r2 - P0 * ci
    return PowerReport(local, glob, P0, period, P0 * r * ci * err)


def _check_angles(theta_i, theta_r):
    if not (abs(theta_i) < np.pi / 2 and abs(theta_r) < np.pi / 2):
        raise DomainError("grazing or back-side angle: |theta| must be below pi/2")
    return float(np.cos(theta_i)), float(np.cos(theta_r))


def ar_unitary_em(theta_i: float, theta_r: float) -> float:
    """Reflected amplitude that zeroes the benchmark global flux."""
    ci, cr = _check_angles(theta_i, theta_r)
    return float(np.sqrt(ci / cr))


def ar_unitary_z(theta_i: float, theta_r: float) -> float:
    """Amplitude law sqrt(2/(1 + (ci/cr)^2)) used for the third curve of the power sweeps.

    It reduces to 1 at specular reflection. Away from specular it does not
    zero the period-averaged |R_Z|^2 condition; see :func:`ar_z_condition_root`.
    """
    ci, cr = _check_angles(theta_i, theta_r)
    return float(np.sqrt(2.0 / (1.0 + (ci / cr) ** 2)))


def z_condition_lhs(theta_i: float, theta_r: float, Ar: float) -> float:
    """Period average of |R_Z|^2 expressed through the cosine ratio c = cr/ci.

    Equals 1 exactly when the Z-kind global flux vanishes.
    """
    ci, cr = _check_angles(theta_i, theta_r)
    c = cr / ci
    return float(1.0 / abs((1.0 - c) ** 2 / (1.0 + c) ** 2 - 4.0 / (Ar**2 * (1.0 + c) ** 2)))


def ar_z_condition_root(theta_i: float, theta_r: float) -> float:
    """Positive root of z_condition_lhs(...) = 1 on the branch through A_r = 1 at specular."""
    ci, cr = _check_angles(theta_i, theta_r)
    return float(np.sqrt(2.0 / (1.0 + (cr / ci) ** 2)))
