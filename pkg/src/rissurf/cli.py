"""ris: command-line front end writing deterministic CSV datasets.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import experiments as ex
from .config import ConfigError, load_config
from .errors import DomainError, NumericalError, RisError, SingularPointError

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3
SINGULAR = "SINGULAR"

DEFAULT_NAMES = {
    "synthesize": "synthesize.csv",
    "reflection": "reflection.csv",
    "power-sweep": "power_sweep.csv",
    "distance-sweep": "distance_sweep.csv",
    "field-map": "field_map.csv",
}


def format_cell(v) -> str:
    if v is None:
        return SINGULAR
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def render(table: ex.Table) -> str:
    lines = [",".join(table.header)]
    width = len(table.header)
    for row in table.rows:
        if len(row) != width:
            raise ValueError("ragged row in output table")
        lines.append(",".join(format_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    """Read a dataset back; header cells lose their ``[unit]`` suffix."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    header = [h.split(" [")[0] for h in lines[0].split(",")]
    return header, [ln.split(",") for ln in lines[1:]]


def _output_path(cfg, command: str, out_dir: str | None) -> Path:
    name = cfg.output("csv_path", DEFAULT_NAMES[command])
    p = Path(name)
    if out_dir is not None:
        p = Path(out_dir) / p.name if p.is_absolute() else Path(out_dir) / p
    return p


def run(command: str, cfg, out_dir: str | None) -> list[Path]:
    target = _output_path(cfg, command, out_dir)
    if command == "field-map":
        tables = ex.field_map_datasets(cfg)
        rendered = {target.with_name(f"{target.stem}_{name}{target.suffix}"): render(t) for name, t in tables.items()}
    else:
        build = {
            "synthesize": ex.synthesize_dataset,
            "reflection": ex.reflection_dataset,
            "power-sweep": ex.power_sweep_dataset,
            "distance-sweep": ex.distance_sweep_dataset,
        }[command]
        rendered = {target: render(build(cfg))}
    # everything is computed before the first file is written
    for path, text in rendered.items():
        write_atomic(path, text)
    return list(rendered)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ris", description="Metasurface reflection and propagation datasets")
    sub = ap.add_subparsers(dest="command", required=True)
    helps = {
        "synthesize": "reflector susceptibility and sheet impedance over one period",
        "reflection": "R_EM and R_Z over two periods with the ray-optics phase",
        "power-sweep": "normalised net power versus reflection angle for three amplitude laws",
        "field-map": "|Z| over an observer grid for specular, anomalous and focusing surfaces",
        "distance-sweep": "full integral against the two asymptotic estimates versus distance",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", required=True, help="JSON config (schema 1)")
        p.add_argument("--out", default=None, help="output directory (default: current directory)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        paths = run(args.command, cfg, args.out)
    except (ConfigError, DomainError) as exc:
        print(f"ris: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, SingularPointError, RisError) as exc:
        print(f"ris: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    for p in paths:
        print(p)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
