"""Surface susceptibilities from prescribed field transformations.

Only the monoanisotropic, uniaxial case is synthesised: the electric-magnetic
cross susceptibilities and the off-diagonal entries are zero, which leaves one
diagonal entry per tensor.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._guard import checked_div
from .wave import Evaluator, MediumVacuum, ReflectorGeometry, TangentialSurfaceFields

PERIOD_GRID = 512  # samples per period for property checks


@dataclass(frozen=True)
class SusceptibilityQuad:
    chi_ee_xx: Evaluator
    chi_ee_yy: Evaluator
    chi_mm_xx: Evaluator
    chi_mm_yy: Evaluator


@dataclass(frozen=True)
class SurfacePeriod:
    """Spatial period of a surface profile; ``length is None`` means uniform."""

    length: float | None

    @property
    def is_uniform(self) -> bool:
        return self.length is None

    def grid(self, n: int = PERIOD_GRID, periods: float = 1.0) -> np.ndarray:
        """``n`` samples of [0, periods*length); a single x=0 sample when uniform."""
        if self.is_uniform:
            return np.zeros(1)
        return np.arange(n) * (periods * self.length / n)


def _sums(fields: TangentialSurfaceFields, x):
    """Per-component sums over the three sides, plus the t - i - r differences."""
    i = fields.incident.at(x)
    r = fields.reflected.at(x)
    t = fields.transmitted.at(x)
    tot = [a + b + c for a, b, c in zip(t, i, r)]
    jump = [c - a - b for a, b, c in zip(i, r, t)]
    mag = [np.abs(a) + np.abs(b) + np.abs(c) for a, b, c in zip(t, i, r)]
    return tot, jump, mag  # each ordered Ex, Ey, Hx, Hy


def susceptibilities_from_fields(fields: TangentialSurfaceFields, medium: MediumVacuum) -> SusceptibilityQuad:
    """Diagonal susceptibilities realising the given incident/reflected/transmitted fields.

    Each evaluator is lazy: a component whose denominator vanishes (for
    instance ``chi_ee_xx`` for TE fields, where every E_x is zero) raises
    :class:`SingularPointError` only when it is evaluated.
    """
    we = 1j * medium.omega * medium.permittivity
    wm = 1j * medium.omega * medium.permeability
    EX, EY, HX, HY = range(4)

    def chi_ee_xx(x):
        tot, jump, mag = _sums(fields, x)
        return -2.0 / we * checked_div(jump[HY], tot[EX], x, mag[EX])

    def chi_ee_yy(x):
        tot, jump, mag = _sums(fields, x)
        return 2.0 / we * checked_div(jump[HX], tot[EY], x, mag[EY])

    def chi_mm_xx(x):
        tot, jump, mag = _sums(fields, x)
        return 2.0 / wm * checked_div(jump[EY], tot[HX], x, mag[HX])

    def chi_mm_yy(x):
        tot, jump, mag = _sums(fields, x)
        return -2.0 / wm * checked_div(jump[EX], tot[HY], x, mag[HY])

    return SusceptibilityQuad(chi_ee_xx, chi_ee_yy, chi_mm_xx, chi_mm_yy)


def reflector_susceptibility(geom: ReflectorGeometry, medium: MediumVacuum) -> Evaluator:
    """Closed-form chi_ee^yy(x) of the perfect anomalous reflector."""
    phi = geom.phi(medium)
    ci, cr, A, k = geom.cos_i, geom.cos_r, geom.Ar, medium.k

    def chi(x):
        p = phi(x)
        return (2j / k) * checked_div(ci - A * cr * p, 1.0 + A * p, x)

    return chi


def surface_period(geom: ReflectorGeometry, medium: MediumVacuum) -> SurfacePeriod:
    rate = abs(geom.phase_rate(medium))
    # a period beyond float range is indistinguishable from a uniform surface
    if rate == 0.0 or rate < 2.0 * np.pi / np.finfo(float).max:
        return SurfacePeriod(None)
    return SurfacePeriod(float(2.0 * np.pi / rate))
