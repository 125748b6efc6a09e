"""Vacuum constants, reflector geometry and the TE plane-wave benchmark fields."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import DomainError

C0 = 299_792_458.0  # m/s, exact
MU0 = 1.25663706212e-6  # H/m
EPS0 = 1.0 / (MU0 * C0**2)  # F/m, tied to MU0 so that k = w*sqrt(mu*eps) holds to rounding

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class MediumVacuum:
    frequency: float
    wavelength: float
    wavenumber: float
    angular_frequency: float
    impedance: float
    permittivity: float = EPS0
    permeability: float = MU0

    # short aliases used throughout the formulas
    @property
    def k(self) -> float:
        return self.wavenumber

    @property
    def eta(self) -> float:
        return self.impedance

    @property
    def omega(self) -> float:
        return self.angular_frequency


def vacuum_params(frequency: float) -> MediumVacuum:
    """Frequency-derived constants of the vacuum background."""
    frequency = float(frequency)
    if not np.isfinite(frequency) or frequency <= 0.0:
        raise DomainError(f"frequency must be positive, got {frequency!r}")
    wavelength = C0 / frequency
    return MediumVacuum(
        frequency=frequency,
        wavelength=wavelength,
        wavenumber=2.0 * np.pi / wavelength,
        angular_frequency=2.0 * np.pi * frequency,
        impedance=float(np.sqrt(MU0 / EPS0)),
    )


@dataclass(frozen=True)
class ReflectorGeometry:
    """Parameters of the anomalous-reflector benchmark transformation.

    Angles are in radians, ``P0`` is the incident power density in W/m^2 and
    ``Ar`` the (real, positive) amplitude of the reflected plane wave.
    """

    theta_i: float
    theta_r: float
    P0: float = 1.0
    Ar: float = 1.0

    def __post_init__(self):
        for name in ("theta_i", "theta_r"):
            th = getattr(self, name)
            if not np.isfinite(th) or abs(th) >= np.pi / 2:
                raise DomainError(f"|{name}| must be below pi/2, got {th!r}")
        if not self.P0 > 0:
            raise DomainError(f"P0 must be positive, got {self.P0!r}")
        if not (np.isfinite(self.Ar) and self.Ar > 0):
            raise DomainError(f"Ar must be a positive real, got {self.Ar!r}")

    @property
    def cos_i(self) -> float:
        return float(np.cos(self.theta_i))

    @property
    def cos_r(self) -> float:
        return float(np.cos(self.theta_r))

    @property
    def is_specular(self) -> bool:
        return bool(np.sin(self.theta_r) == np.sin(self.theta_i))

    def with_ar(self, Ar: float) -> "ReflectorGeometry":
        return replace(self, Ar=float(Ar))

    def phase_rate(self, medium: MediumVacuum) -> float:
        """k (sin theta_r - sin theta_i), in rad/m."""
        return medium.k * (np.sin(self.theta_r) - np.sin(self.theta_i))

    def phi(self, medium: MediumVacuum) -> Evaluator:
        """The unit-modulus phasor exp(-j k (sin theta_r - sin theta_i) x)."""
        rate = self.phase_rate(medium)
        return lambda x: np.exp(-1j * rate * np.asarray(x, dtype=float))


def _zero(x):
    return np.zeros(np.shape(x), dtype=complex)


@dataclass(frozen=True)
class FieldSide:
    """Tangential components on one side of the sheet as functions of x."""

    Ex: Evaluator = _zero
    Ey: Evaluator = _zero
    Hx: Evaluator = _zero
    Hy: Evaluator = _zero

    def at(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.Ex(x), self.Ey(x), self.Hx(x), self.Hy(x)


@dataclass(frozen=True)
class TangentialSurfaceFields:
    incident: FieldSide = field(default_factory=FieldSide)
    reflected: FieldSide = field(default_factory=FieldSide)
    transmitted: FieldSide = field(default_factory=FieldSide)


def te_plane_wave_fields(geom: ReflectorGeometry, medium: MediumVacuum) -> TangentialSurfaceFields:
    """Benchmark TE fields of a perfect anomalous reflector (zero transmission)."""
    e0 = np.sqrt(2.0 * medium.eta * geom.P0)
    h0 = np.sqrt(2.0 * geom.P0 / medium.eta)
    si, sr = np.sin(geom.theta_i), np.sin(geom.theta_r)
    ci, cr = geom.cos_i, geom.cos_r
    k, A = medium.k, geom.Ar

    def ey_i(x):
        return e0 * np.exp(-1j * k * si * np.asarray(x, dtype=float))

    def ey_r(x):
        return e0 * A * np.exp(-1j * k * sr * np.asarray(x, dtype=float))

    def hx_i(x):
        return h0 * ci * np.exp(-1j * k * si * np.asarray(x, dtype=float))

    def hx_r(x):
        return -h0 * A * cr * np.exp(-1j * k * sr * np.asarray(x, dtype=float))

    return TangentialSurfaceFields(
        incident=FieldSide(Ey=ey_i, Hx=hx_i),
        reflected=FieldSide(Ey=ey_r, Hx=hx_r),
    )


def fraunhofer_distance(largest_dimension: float, medium: MediumVacuum) -> float:
    """Far-field boundary 2 D^2 / lambda."""
    if not largest_dimension > 0:
        raise DomainError(f"largest dimension must be positive, got {largest_dimension!r}")
    return 2.0 * largest_dimension**2 / medium.wavelength
