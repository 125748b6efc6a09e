"""Dataset builders behind the CLI subcommands.

Each builder returns a :class:`Table` whose cells are floats, strings, or
None for points where a closed form is singular or a quadrature failed.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import ConfigError, ScenarioConfig
from .errors import NumericalError, RegimeError, SingularPointError
from .power import ar_unitary_em, ar_unitary_z, pnet_benchmark, pnet_from_reflection
from .propagation import (
    Scenario,
    SurfaceProfile,
    equal_leg_scenario,
    field_integral,
    intensity_large,
    intensity_small,
)
from .reflection import r_em_profile, r_z_profile, z1_profile
from .synthesis import PERIOD_GRID, reflector_susceptibility, surface_period
from .wave import ReflectorGeometry, vacuum_params

UNIFORM = "UNIFORM"


@dataclass
class Table:
    header: list[str]
    rows: list[list] = field(default_factory=list)

    def column(self, name: str) -> list:
        return [r[self.header.index(name)] for r in self.rows]


def thread_count() -> int:
    raw = os.environ.get("RIS_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(n, 1)


def parallel_map(fn, items) -> list:
    """Map in a bounded thread pool; results come back in input order."""
    items = list(items)
    n = min(thread_count(), len(items))
    if n <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def pointwise(f, x) -> np.ndarray:
    """Evaluate f on an array, falling back to per-point calls so singular points become NaN."""
    try:
        return np.asarray(f(x), dtype=complex)
    except SingularPointError:
        out = np.empty(len(x), dtype=complex)
        for i, xi in enumerate(x):
            try:
                out[i] = f(np.array([xi]))[0]
            except SingularPointError:
                out[i] = np.nan
        return out


def _cell(v):
    v = float(v)
    return v if np.isfinite(v) else None


def _deg(z):
    return None if not np.isfinite(z) else float(np.degrees(np.angle(z)))


def geometry_from(cfg: ScenarioConfig, theta_r: float | None = None, Ar: float | None = None) -> ReflectorGeometry:
    ti, tr = cfg.angles()
    tr = tr if theta_r is None else theta_r
    Ar = cfg.ar(ti, tr) if Ar is None else Ar
    return ReflectorGeometry(ti, tr, cfg.P0, Ar)


def synthesize_dataset(cfg: ScenarioConfig) -> Table:
    medium = vacuum_params(cfg.frequency)
    geom = geometry_from(cfg)
    period = surface_period(geom, medium)
    n = cfg.output("samples", PERIOD_GRID)
    span = medium.wavelength if period.is_uniform else period.length
    x = np.arange(n) * (span / n)
    chi = pointwise(reflector_susceptibility(geom, medium), x)
    z1 = pointwise(z1_profile(geom, medium).Z1, x)
    pcell = UNIFORM if period.is_uniform else period.length
    t = Table(["x [m]", "re_chi [m]", "im_chi [m]", "re_Z1 [ohm]", "im_Z1 [ohm]", "period [m]"])
    for xi, c, z in zip(x, chi, z1):
        t.rows.append([float(xi), _cell(c.real), _cell(c.imag), _cell(z.real), _cell(z.imag), pcell])
    return t


def reflection_dataset(cfg: ScenarioConfig) -> Table:
    medium = vacuum_params(cfg.frequency)
    geom = geometry_from(cfg)
    period = surface_period(geom, medium)
    n = cfg.output("samples", PERIOD_GRID)
    span = 2 * medium.wavelength if period.is_uniform else 2 * period.length
    x = np.linspace(0.0, span, n)
    r_em = pointwise(r_em_profile(geom, medium).R, x)
    r_z = pointwise(r_z_profile(geom, medium).R, x)
    ray = np.exp(-1j * geom.with_ar(1.0).phase_rate(medium) * x)
    t = Table(["x_over_lambda [1]", "abs_R_EM [1]", "arg_R_EM_deg [deg]", "abs_R_Z [1]", "arg_R_Z_deg [deg]",
               "rayoptics_arg_deg [deg]"])
    for xi, a, b, c in zip(x / medium.wavelength, r_em, r_z, ray):
        t.rows.append([float(xi), _cell(abs(a)), _deg(a), _cell(abs(b)), _deg(b), _deg(c)])
    return t


AR_SETS = (("A1", lambda ti, tr: 1.0), ("A2", ar_unitary_em), ("A3", ar_unitary_z))


def power_sweep_dataset(cfg: ScenarioConfig) -> Table:
    """Normalised net flow versus reflection angle for the three amplitude laws."""
    medium = vacuum_params(cfg.frequency)
    ti, _ = cfg.angles()
    top = cfg.output("theta_r_max_deg", 89)
    thetas = list(range(0, top + 1))
    t = Table(["ar_set", "theta_r_deg [deg]", "a_r [1]", "pnet_over_p0_benchmark [1]", "pnet_over_p0_fromR [1]",
               "classification"])

    def row(item):
        name, law, deg = item
        tr = np.deg2rad(deg)
        geom = ReflectorGeometry(ti, tr, cfg.P0, law(ti, tr))
        bench = pnet_benchmark(geom, medium)
        try:
            from_r = pnet_from_reflection(r_z_profile(geom, medium), medium).pnet_global / geom.P0
        except SingularPointError:
            from_r = None
        return [name, float(deg), geom.Ar, bench.pnet_global / geom.P0, from_r, bench.classification.value]

    t.rows = parallel_map(row, [(name, law, d) for name, law in AR_SETS for d in thetas])
    return t


def distance_sweep_dataset(cfg: ScenarioConfig) -> Table:
    """Field magnitude versus total path length with equal legs.

    The full integral uses ``propagation.profile`` (specular by default); the
    two estimates are those of the specular surface.
    """
    medium = vacuum_params(cfg.frequency)
    prop = cfg.require("propagation")
    L = float(prop["L_x"])
    spec = prop.get("profile")
    d = cfg.output("distance", {})
    dist = np.geomspace(d.get("min_m", 1.0), d.get("max_m", 1e4), d.get("points", 60))
    theta = np.deg2rad(d.get("theta_deg", 0.0))
    t = Table(["total_distance_m [m]", "abs_full_integral [1]", "abs_eq_large [1]", "abs_eq_small [1]"])

    def row(D):
        sc = equal_leg_scenario(medium, L, float(D), theta)
        try:
            large = intensity_large(sc)
        except RegimeError:
            large = None
        full = sc if spec is None else Scenario(sc.source, sc.observer, L, medium, build_profile(spec, medium, sc.source))
        return [float(D), abs(field_integral(full).value), large, intensity_small(sc)]

    t.rows = parallel_map(row, dist)
    return t


def build_profile(spec: dict, medium, source) -> SurfaceProfile:
    kind = spec["kind"]
    phi0 = spec.get("phi0", 0.0)
    if kind == "specular":
        return SurfaceProfile.specular(medium, phi0)
    if kind == "anomalous":
        return SurfaceProfile.anomalous(medium, spec["phibar_t"], spec["phibar_r"], phi0)
    if kind == "anomalous_angles":
        return SurfaceProfile.anomalous_from_angles(
            medium, np.deg2rad(spec["theta_t_deg"]), np.deg2rad(spec["theta_r_deg"]), phi0)
    if kind == "focusing":
        return SurfaceProfile.focusing(source, (spec["x_f"], spec["y_f"]))
    raise ConfigError(f"unknown profile kind {kind!r}")


MAP_PROFILES = ("specular", "anomalous", "focusing")


def field_map_profiles(cfg: ScenarioConfig):
    medium = vacuum_params(cfg.frequency)
    prop = cfg.require("propagation")
    if "x_T" not in prop or "y_T" not in prop:
        raise ConfigError("propagation.x_T and propagation.y_T are required for field-map")
    source = (float(prop["x_T"]), float(prop["y_T"]))
    mp = cfg.output("map", {})
    dt0 = np.hypot(*source)
    theta_t = np.arcsin(-source[0] / dt0)
    if "anomalous_theta_deg" in mp:
        theta_a = np.deg2rad(mp["anomalous_theta_deg"])
    elif "geometry" in cfg.raw:
        theta_a = cfg.angles()[1]
    else:
        raise ConfigError("output.map.anomalous_theta_deg or geometry.theta_r_deg is required for field-map")
    if "focus" in mp:
        focus = tuple(float(v) for v in mp["focus"])
    elif "x_R" in prop and "y_R" in prop:
        focus = (float(prop["x_R"]), float(prop["y_R"]))
    else:
        raise ConfigError("output.map.focus or propagation.x_R/y_R is required for field-map")
    if not focus[1] > 0:
        raise ConfigError("focus must lie at y > 0")
    return medium, source, {
        "specular": SurfaceProfile.specular(medium),
        "anomalous": SurfaceProfile.anomalous_from_angles(medium, theta_t, theta_a),
        "focusing": SurfaceProfile.focusing(source, focus),
    }


def map_grid(cfg: ScenarioConfig):
    mp = cfg.output("map", {})
    xs = np.linspace(mp.get("x_min", -5.0), mp.get("x_max", 5.0), mp.get("nx", 41))
    ys = np.linspace(mp.get("y_min", 0.5), mp.get("y_max", 10.0), mp.get("ny", 41))
    return xs, ys


def field_map_datasets(cfg: ScenarioConfig) -> dict[str, Table]:
    medium, source, profiles = field_map_profiles(cfg)
    L = float(cfg.require("propagation")["L_x"])
    xs, ys = map_grid(cfg)
    cells = [(x, y) for y in ys for x in xs]
    out = {}
    for name in MAP_PROFILES:
        prof = profiles[name]

        def cell(xy, prof=prof):
            sc = Scenario(source, (float(xy[0]), float(xy[1])), L, medium, prof)
            try:
                z = field_integral(sc).value
            except NumericalError:
                return [float(xy[0]), float(xy[1]), None, None]
            return [float(xy[0]), float(xy[1]), abs(z), _deg(z)]

        t = Table(["x [m]", "y [m]", "abs_Z [1]", "arg_Z_deg [deg]"])
        t.rows = parallel_map(cell, cells)
        out[name] = t
    return out
