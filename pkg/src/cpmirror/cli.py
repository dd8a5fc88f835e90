"""Command line interface.

Subcommands:
  energy   single-point energy breakdown from a JSON config
  sweep    parameter sweep to CSV (or JSON)
  verify   closed forms against the quadrature oracle
  figure   bundled sweep presets fig2..fig5 to CSV files

Exit codes: 0 success, 2 config/parse error, 3 verification or quadrature
failure, 4 I/O error, 5 invalid geometry.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import sweeps
from .energies import energy_breakdown
from .errors import GeometryError, InputError, QuadratureError
from .geometry import AtomSpec, SystemConfig, diagonal_tensor
from .oracle import QuadratureSettings, VerificationReport, random_configs, verify

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_IO = 4
EXIT_GEOMETRY = 5


# ---------------------------------------------------------------- config


def _parse_alpha(entry: dict, where: str) -> np.ndarray:
    if "alpha" in entry:
        if "alpha_perp" in entry or "alpha_z" in entry:
            raise InputError(f"{where}: give either alpha or alpha_perp/alpha_z, not both")
        return np.asarray(entry["alpha"], dtype=float)
    if "alpha_perp" in entry or "alpha_z" in entry:
        for key in ("alpha_perp", "alpha_z"):
            if key not in entry:
                raise InputError(f"{where}.{key}: missing")
            if not isinstance(entry[key], (int, float)):
                raise InputError(f"{where}.{key}: expected a number")
        return diagonal_tensor(entry["alpha_perp"], entry["alpha_z"])
    raise InputError(f"{where}: needs alpha (3x3) or the alpha_perp/alpha_z shorthand")


def _parse_atom(entry, where: str) -> AtomSpec:
    if not isinstance(entry, dict):
        raise InputError(f"{where}: expected an object")
    if "position" in entry:
        pos = entry["position"]
    else:
        raise InputError(f"{where}.position: missing")
    try:
        return AtomSpec(np.asarray(pos, dtype=float), _parse_alpha(entry, where))
    except InputError as exc:
        message = str(exc)
        if not message.startswith(where):
            message = f"{where}: {message}"
        raise InputError(message) from exc
    except (ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def _atom_entries(doc: dict) -> list:
    atoms = doc.get("atoms")
    if not isinstance(atoms, list) or len(atoms) != 2:
        raise InputError("atoms: expected a list of exactly 2 entries")
    return atoms


def parse_system(doc: dict) -> SystemConfig:
    atoms = _atom_entries(doc)
    allow_contact = doc.get("allow_contact", False)
    if not isinstance(allow_contact, bool):
        raise InputError("allow_contact: expected true or false")
    return SystemConfig(
        _parse_atom(atoms[0], "atoms[0]"),
        _parse_atom(atoms[1], "atoms[1]"),
        allow_contact=allow_contact,
    )


def _sweep_values(spec: dict) -> np.ndarray:
    for key in ("min", "max", "steps"):
        if key not in spec:
            raise InputError(f"sweep.{key}: missing")
    steps = spec["steps"]
    if not isinstance(steps, int) or steps < 2:
        raise InputError("sweep.steps: expected an integer >= 2")
    return np.linspace(float(spec["min"]), float(spec["max"]), steps)


def run_sweep_config(doc: dict) -> list[sweeps.SweepRow]:
    atoms = _atom_entries(doc)
    alpha1 = _parse_alpha(atoms[0], "atoms[0]")
    alpha2 = _parse_alpha(atoms[1], "atoms[1]")
    spec = doc.get("sweep")
    if not isinstance(spec, dict):
        raise InputError("sweep: missing object")
    parameter = spec.get("parameter")
    values = _sweep_values(spec)
    if parameter == "z_over_a":
        if values[0] < 0:
            raise InputError("sweep.min: z_over_a cannot be negative")
        return sweeps.sweep_equidistant(alpha1, alpha2, float(spec.get("a", 1.0)), values)
    if parameter == "gamma":
        if values[0] < 1:
            raise InputError("sweep.min: gamma cannot be below 1")
        a_over_r = spec.get("a_over_r")
        if not isinstance(a_over_r, (int, float)) or not 0 < a_over_r <= 1:
            raise InputError("sweep.a_over_r: expected a number in (0, 1]")
        return sweeps.sweep_image_ratio(alpha1, alpha2, float(a_over_r), values,
                                        r=float(spec.get("r", 1.0)))
    raise InputError(f"sweep.parameter: unknown value {parameter!r} (use z_over_a or gamma)")


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise InputError("config root: expected a JSON object")
    return doc


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


# -------------------------------------------------------------- commands


def cmd_energy(args) -> int:
    bd = energy_breakdown(parse_system(_load_config(args.config)))
    if args.format == "json":
        _write_text(args.out, json.dumps(bd.to_dict(), indent=2) + "\n")
    else:
        lines = []
        for key, val in bd.to_dict().items():
            shown = repr(val) if val is not None else "excluded (atom on plate)"
            lines.append(f"{key:<9} {shown}")
        _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = run_sweep_config(_load_config(args.config))
    if args.format == "json":
        payload = [dict(zip(sweeps.CSV_COLUMNS, row.values())) for row in rows]
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        _write_text(args.out, sweeps.rows_to_csv(rows))
    return EXIT_OK


def _report_lines(report: VerificationReport) -> list[str]:
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(
            f"{c.term.value:<7} analytic={c.analytic: .15e}  numeric={c.numeric: .15e}  "
            f"rel={c.rel_diff:.2e}  {status}"
        )
    return lines


def cmd_verify(args) -> int:
    settings = QuadratureSettings()
    if args.random is not None:
        if args.random < 1:
            raise InputError("--random: expected a positive count")
        configs = random_configs(args.random, args.seed)
        worst_overall = 0.0
        for idx, cfg in enumerate(configs):
            report = verify(cfg, settings, tol=args.tol)
            worst = report.worst()
            worst_overall = max(worst_overall, worst.rel_diff)
            print(f"config {idx:03d}  worst {worst.term.value} rel={worst.rel_diff:.2e}  "
                  f"{'PASS' if report.passed else 'FAIL'}")
            if not report.passed:
                print(f"verify: FAIL at config {idx} term {worst.term.value} "
                      f"(rel {worst.rel_diff:.2e} > tol {args.tol:g})")
                return EXIT_VERIFY
        print(f"verify: {len(configs)}/{len(configs)} configs PASS "
              f"(worst {worst_overall:.2e}, tol {args.tol:g})")
        return EXIT_OK
    if args.config is None:
        raise InputError("verify needs --config PATH or --random N")
    report = verify(parse_system(_load_config(args.config)), settings, tol=args.tol)
    print("\n".join(_report_lines(report)))
    if not report.passed:
        worst = report.worst()
        print(f"verify: FAIL at term {worst.term.value} "
              f"(rel {worst.rel_diff:.2e} > tol {args.tol:g})")
        return EXIT_VERIFY
    print(f"verify: PASS (worst {report.max_rel_diff:.2e}, tol {args.tol:g})")
    return EXIT_OK


def cmd_figure(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    names = sweeps.FIGURE_NAMES if args.preset == "all" else (args.preset,)
    for name in names:
        path = out_dir / f"{name}.csv"
        path.write_text(sweeps.rows_to_csv(sweeps.figure_rows(name)), encoding="utf-8")
        print(f"wrote {path}")
    return EXIT_OK


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpmirror",
        description="Casimir-Polder energies for two anisotropic atoms near a conducting plate",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_energy = sub.add_parser("energy", help="energy breakdown for one configuration")
    p_energy.add_argument("--config", required=True, help="JSON config path")
    p_energy.add_argument("--format", choices=("text", "json"), default="text")
    p_energy.add_argument("--out", default=None, help="write output here instead of stdout")
    p_energy.set_defaults(func=cmd_energy)

    p_sweep = sub.add_parser("sweep", help="parameter sweep to CSV")
    p_sweep.add_argument("--config", required=True, help="JSON config path")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None, help="write output here instead of stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="closed forms against the quadrature oracle")
    p_verify.add_argument("--config", default=None, help="JSON config path")
    p_verify.add_argument("--random", type=int, default=None, metavar="N",
                          help="verify N random seeded configurations instead")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.set_defaults(func=cmd_verify)

    p_figure = sub.add_parser("figure", help="write bundled sweep presets as CSV")
    p_figure.add_argument("preset", choices=sweeps.FIGURE_NAMES + ("all",))
    p_figure.add_argument("--out", default=".", help="output directory")
    p_figure.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"config parse error: {exc.msg} at line {exc.lineno} column {exc.colno}",
              file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except QuadratureError as exc:
        print(f"quadrature failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except GeometryError as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
