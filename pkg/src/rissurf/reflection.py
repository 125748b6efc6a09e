"""Surface-averaged reflection coefficients, wave impedances and the sheet-impedance view.

Two definitions of the reflection coefficient are supported. ``EM`` is the
ratio of reflected to incident tangential electric field. ``Z`` is the
circuit-style definition in which the incident and reflected waves see the
same impedance. They differ only through the factor ``r`` that multiplies R
in the reflected magnetic field.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._guard import checked_div
from .wave import EPS0, MU0, Evaluator, FieldSide, MediumVacuum, ReflectorGeometry, TangentialSurfaceFields


ETA0 = float(np.sqrt(MU0 / EPS0))


class ReflectionKind(enum.Enum):
    EM = "EM"
    Z = "Z"

    def r_factor(self, geom: ReflectorGeometry) -> float:
        if self is ReflectionKind.EM:
            return geom.cos_r / geom.cos_i
        return 1.0


@dataclass(frozen=True)
class ReflectionProfile:
    kind: ReflectionKind
    R: Evaluator
    geom: ReflectorGeometry

    @property
    def r_factor(self) -> float:
        return self.kind.r_factor(self.geom)


@dataclass(frozen=True)
class ImpedanceTriple:
    """Series/shunt sheet impedances; Z2 and Z3 are identically zero here."""

    Z1: Evaluator
    Z2: Evaluator
    Z3: Evaluator


def reflection_profile(kind: ReflectionKind, geom: ReflectorGeometry, medium: MediumVacuum) -> ReflectionProfile:
    """R(x) = (1 - G)/(r + G) with G = (ci - A cr Phi)/(ci (1 + A Phi)).

    Both kinds go through this single expression and differ only in ``r``.
    It is evaluated with the common factor ci (1 + A Phi) cleared, which
    removes the spurious pole at A Phi = -1.
    """
    r = kind.r_factor(geom)
    phi = geom.phi(medium)
    ci, cr, A = geom.cos_i, geom.cos_r, geom.Ar

    def R(x):
        p = A * phi(x)
        return checked_div(p * (ci + cr), ci * (1.0 + r) + p * (r * ci - cr), x)

    return ReflectionProfile(kind, R, geom)


def r_em_profile(geom: ReflectorGeometry, medium: MediumVacuum) -> ReflectionProfile:
    return reflection_profile(ReflectionKind.EM, geom, medium)


def r_z_profile(geom: ReflectorGeometry, medium: MediumVacuum) -> ReflectionProfile:
    return reflection_profile(ReflectionKind.Z, geom, medium)


def r_em_closed_form(geom: ReflectorGeometry, medium: MediumVacuum) -> Evaluator:
    """A_r Phi(x)."""
    phi = geom.phi(medium)
    return lambda x: geom.Ar * phi(x)


def r_z_closed_form(geom: ReflectorGeometry, medium: MediumVacuum) -> Evaluator:
    """A_r (cr + ci) Phi / (2 ci - A_r (cr - ci) Phi)."""
    phi = geom.phi(medium)
    ci, cr, A = geom.cos_i, geom.cos_r, geom.Ar

    def R(x):
        p = phi(x)
        return checked_div(A * (cr + ci) * p, 2.0 * ci - A * (cr - ci) * p, x)

    return R


def r_from_susceptibility(chi_ee_yy: Evaluator, kind: ReflectionKind, geom: ReflectorGeometry,
                          medium: MediumVacuum) -> ReflectionProfile:
    r = kind.r_factor(geom)
    kappa = medium.k / (2.0 * geom.cos_i)

    def R(x):
        jk = 1j * kappa * chi_ee_yy(x)
        return checked_div(1.0 + jk, r - jk, x)

    return ReflectionProfile(kind, R, geom)


def susceptibility_from_r(profile: ReflectionProfile, medium: MediumVacuum) -> Evaluator:
    r = profile.r_factor
    ci = profile.geom.cos_i
    scale = 2j / medium.k * ci

    def chi(x):
        R = profile.R(x)
        return scale * checked_div(1.0 - r * R, 1.0 + R, x)

    return chi


def wave_impedances(geom: ReflectorGeometry, kind: ReflectionKind, medium: MediumVacuum | None = None):
    """(Z_i, Z_r) seen by the incident and reflected waves, in ohms."""
    eta = medium.eta if medium is not None else ETA0
    z_i = eta / geom.cos_i
    if kind is ReflectionKind.EM:
        return z_i, -eta / geom.cos_r
    return z_i, -z_i


def z1_profile(geom: ReflectorGeometry, medium: MediumVacuum) -> ImpedanceTriple:
    """Sheet impedance Z1(x) = eta (1 + A Phi) / (ci - A cr Phi), with Z2 = Z3 = 0.

    Z1 is the ratio of total tangential voltage to total tangential current on
    the sheet. It is proportional to 1/chi_ee^yy with the constant factor
    2j eta / k, and maps to R_Z through the usual mismatch formula for any A_r.
    """
    phi = geom.phi(medium)
    ci, cr, A, eta = geom.cos_i, geom.cos_r, geom.Ar, medium.eta

    def Z1(x):
        p = phi(x)
        return eta * checked_div(1.0 + A * p, ci - A * cr * p, x, what="Z1 denominator")

    return ImpedanceTriple(Z1, _zero_real, _zero_real)


def z1_literal(geom: ReflectorGeometry, medium: MediumVacuum) -> Evaluator:
    """Diagnostic variant with ci in both denominator terms.

    It coincides with :func:`z1_profile` only at specular reflection; through
    :func:`r_from_impedance` it yields R_EM rather than R_Z.
    """
    phi = geom.phi(medium)
    ci, A, eta = geom.cos_i, geom.Ar, medium.eta

    def Z1(x):
        p = phi(x)
        return eta * checked_div(1.0 + A * p, ci - A * ci * p, x, what="Z1 denominator")

    return Z1


def z1_split_form(geom: ReflectorGeometry, medium: MediumVacuum) -> Evaluator:
    """Z1 written with sqrt(ci), sqrt(cr) factors; equals z1_profile when A_r = sqrt(ci/cr)."""
    phi = geom.phi(medium)
    si, sr, eta = np.sqrt(geom.cos_i), np.sqrt(geom.cos_r), medium.eta

    def Z1(x):
        p = phi(x)
        return eta / (si * sr) * checked_div(sr + si * p, si - sr * p, x, what="Z1 denominator")

    return Z1


def r_from_impedance(triple: ImpedanceTriple, geom: ReflectorGeometry, medium: MediumVacuum) -> ReflectionProfile:
    """Mismatch reflection (Z1 - Z_i)/(Z1 + Z_i) against the incident-wave impedance."""
    z_i = medium.eta / geom.cos_i

    def R(x):
        z = triple.Z1(x)
        return checked_div(z - z_i, z + z_i, x)

    return ReflectionProfile(ReflectionKind.Z, R, geom)


def fields_from_reflection(profile: ReflectionProfile, medium: MediumVacuum) -> TangentialSurfaceFields:
    """TE fields with the reflected wave written as R(x) times the incident one."""
    geom = profile.geom
    e0 = np.sqrt(2.0 * medium.eta * geom.P0)
    h0 = np.sqrt(2.0 * geom.P0 / medium.eta) * geom.cos_i
    rate = medium.k * np.sin(geom.theta_i)
    r = profile.r_factor

    def inc(x):
        return np.exp(-1j * rate * np.asarray(x, dtype=float))

    return TangentialSurfaceFields(
        incident=FieldSide(Ey=lambda x: e0 * inc(x), Hx=lambda x: h0 * inc(x)),
        reflected=FieldSide(Ey=lambda x: e0 * profile.R(x) * inc(x),
                            Hx=lambda x: -h0 * r * profile.R(x) * inc(x)),
    )


def _zero_real(x):
    return np.zeros(np.shape(x), dtype=complex)
