"""Sheet transition conditions as a linear system, and its solution for the scattered fields.

Unknown vector Z = (Ex^r, Ex^t, Ey^r, Ey^t, Hx^r, Hx^t, Hy^r, Hy^t), incident
vector F = (Ex^i, Ey^i, Hx^i, Hy^i). The four transition conditions read
M Z = W F with M = [M1 | M2] (4x8) and W (4x4), both built from the scaled
susceptibility blocks A, B, C, D.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._guard import checked_div
from .linalg import pinv
from .wave import MediumVacuum

Z_LABELS = ("Ex_r", "Ex_t", "Ey_r", "Ey_t", "Hx_r", "Hx_t", "Hy_r", "Hy_t")
F_LABELS = ("Ex_i", "Ey_i", "Hx_i", "Hy_i")
REFLECTED = (0, 2, 4, 6)
TRANSMITTED = (1, 3, 5, 7)


def _mat(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 tensor, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("susceptibility entries must be finite")
    return m


@dataclass(frozen=True)
class SusceptibilityTensors:
    """The four 2x2 surface susceptibility tensors at one surface point.

    Entry [u, v] is chi^{uv} with u, v in (x, y).
    """

    chi_ee: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), complex))
    chi_em: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), complex))
    chi_me: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), complex))
    chi_mm: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), complex))

    def __post_init__(self):
        for name in ("chi_ee", "chi_em", "chi_me", "chi_mm"):
            object.__setattr__(self, name, _mat(getattr(self, name)))

    @classmethod
    def monoanisotropic(cls, chi_ee_xx=0.0, chi_ee_yy=0.0, chi_mm_xx=0.0, chi_mm_yy=0.0):
        return cls(chi_ee=np.diag([chi_ee_xx, chi_ee_yy]), chi_mm=np.diag([chi_mm_xx, chi_mm_yy]))


@dataclass(frozen=True)
class GstcSystem:
    M: np.ndarray
    W: np.ndarray
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray


def scaled_blocks(tensors: SusceptibilityTensors, medium: MediumVacuum):
    jw = 1j * medium.omega
    eps, mu = medium.permittivity, medium.permeability
    A = jw * eps / 2.0 * tensors.chi_ee
    B = jw * np.sqrt(mu * eps) / 2.0 * tensors.chi_em
    C = jw * mu / 2.0 * tensors.chi_mm
    D = jw * np.sqrt(mu * eps) / 2.0 * tensors.chi_me
    return A, B, C, D


def assemble(tensors: SusceptibilityTensors, medium: MediumVacuum, printed_w: bool = False) -> GstcSystem:
    """Build M and W.

    Row order: jump of H_y, jump of H_x, jump of E_y, jump of E_x. With
    ``printed_w`` the third row of W uses C3 in its last entry instead of C2;
    that variant does not reproduce the transition conditions when
    chi_mm^xy differs from chi_mm^yx and is kept for comparison only.
    """
    A, B, C, D = scaled_blocks(tensors, medium)
    (A1, A2), (A3, A4) = A
    (B1, B2), (B3, B4) = B
    (C1, C2), (C3, C4) = C
    (D1, D2), (D3, D4) = D
    M1 = np.array([
        [A1, A1, A2, A2],
        [A3, A3, A4, A4],
        [D1, D1, D2 + 1, D2 - 1],
        [D3 - 1, D3 + 1, D4, D4],
    ])
    M2 = np.array([
        [B1, B1, B2 - 1, B2 + 1],
        [B3 + 1, B3 - 1, B4, B4],
        [C1, C1, C2, C2],
        [C3, C3, C4, C4],
    ])
    # M2 columns are (Hx_r, Hx_t, Hy_r, Hy_t); interleave with M1 into Z order
    M = np.empty((4, 8), dtype=complex)
    M[:, 0:4] = M1
    M[:, 4:8] = M2
    W = np.array([
        [-A1, -A2, -B1, 1 - B2],
        [-A3, -A4, -1 - B3, -B4],
        [-D1, -1 - D2, -C1, -(C3 if printed_w else C2)],
        [1 - D3, -D4, -C3, -C4],
    ], dtype=complex)
    return GstcSystem(M, W, A, B, C, D)


def _columns(pin: str | None):
    if pin is None:
        return np.arange(8)
    if pin == "transmitted":
        return np.array(REFLECTED)
    if pin == "reflected":
        return np.array(TRANSMITTED)
    raise ValueError(f"pin must be None, 'transmitted' or 'reflected', got {pin!r}")


def solution_matrix(system: GstcSystem, pin: str | None = None) -> np.ndarray:
    """The 8x4 map P with Z = P F.

    ``pin="transmitted"`` forces the transmitted block to zero (pure
    reflection), ``pin="reflected"`` forces the reflected block to zero; the
    remaining 4x4 system is then solved by the same pseudo-inverse.
    """
    cols = _columns(pin)
    P = np.zeros((8, 4), dtype=complex)
    P[cols] = pinv(system.M[:, cols]) @ system.W
    return P


def solve_surface_fields(system: GstcSystem, F, pin: str | None = None):
    """Minimum-norm least-squares Z for M Z = W F, and the residual norm."""
    F = np.asarray(F, dtype=complex)
    Z = solution_matrix(system, pin) @ F
    residual = float(np.linalg.norm(system.M @ Z - system.W @ F))
    return Z, residual


@dataclass(frozen=True)
class CoefficientTable:
    """Entries of P: each scattered component as a combination of incident ones.

    Rows of E outputs are the varsigma coefficients, rows of H outputs the
    xi coefficients; the column names the incident component.
    """

    P: np.ndarray

    def get(self, output: str, incident: str) -> complex:
        return complex(self.P[Z_LABELS.index(output), F_LABELS.index(incident)])

    def symbol(self, output: str, incident: str) -> str:
        sym = "varsigma" if output.startswith("E") else "xi"
        side = output[-1]
        return f"{sym}^{side}_{{{incident[0]},{incident[1]}}}[{output}]"

    def as_dict(self) -> dict:
        return {(o, i): self.get(o, i) for o in Z_LABELS for i in F_LABELS}

    def apply(self, F) -> np.ndarray:
        return self.P @ np.asarray(F, dtype=complex)


def extract_coefficients(system: GstcSystem, pin: str | None = None) -> CoefficientTable:
    return CoefficientTable(solution_matrix(system, pin))


def reflected_fields_closed_form(chi_ee_yy, e_coupling, Ey_i, Hx_i, medium: MediumVacuum, x=0.0):
    """Reflected (E_y, H_x) of a non-transmitting sheet with H_x^r = e E_y^r."""
    a4 = 1j * medium.omega * medium.permittivity / 2.0 * np.asarray(chi_ee_yy)
    e = np.asarray(e_coupling)
    den = e + a4
    Ey_r = checked_div(-a4 * Ey_i - Hx_i, den, x, np.abs(e) + np.abs(a4))
    return Ey_r, e * Ey_r


def transmitted_fields_closed_form(chi_ee_yy, chi_mm_xx, Ey_i, Hx_i, medium: MediumVacuum, x=0.0):
    """Transmitted (E_y, H_x) of a non-reflecting sheet."""
    a4 = 1j * medium.omega * medium.permittivity / 2.0 * np.asarray(chi_ee_yy)
    c1 = 1j * medium.omega * medium.permeability / 2.0 * np.asarray(chi_mm_xx)
    den = 1.0 - a4 * c1
    Ey_t = checked_div((1.0 + a4 * c1) * Ey_i + 2.0 * c1 * Hx_i, den, x, 1.0 + np.abs(a4 * c1))
    Hx_t = checked_div(2.0 * a4 * Ey_i + (1.0 + a4 * c1) * Hx_i, den, x, 1.0 + np.abs(a4 * c1))
    return Ey_t, Hx_t


def reflector_tensors(chi_ee_yy: complex, medium: MediumVacuum) -> SusceptibilityTensors:
    """Point tensors of the TE anomalous reflector: chi_mm^xx fixed by chi_ee^yy chi_mm^xx = -4/k^2.

    The x-polarised entries are left at zero since TE fields do not determine them.
    """
    chi_mm_xx = checked_div(-4.0 / medium.k**2, chi_ee_yy, 0.0, 1.0 / medium.k, what="chi_ee^yy")
    return SusceptibilityTensors.monoanisotropic(chi_ee_yy=chi_ee_yy, chi_mm_xx=chi_mm_xx)
