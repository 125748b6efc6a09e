"""Metasurface modelling toolkit: susceptibility synthesis, reflection models, power budgets,
sheet-transition analysis and surface-to-point propagation."""

from .errors import DomainError, NumericalError, RegimeError, RisError, SingularPointError
from .wave import MediumVacuum, ReflectorGeometry, te_plane_wave_fields, vacuum_params

__all__ = [
    "DomainError",
    "MediumVacuum",
    "NumericalError",
    "ReflectorGeometry",
    "RegimeError",
    "RisError",
    "SingularPointError",
    "te_plane_wave_fields",
    "vacuum_params",
]
