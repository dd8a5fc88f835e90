"""Parameter sweeps and the bundled figure presets.

Rows carry the raw energy terms plus the ratios g = delta_e3/e12,
g3 = (e123 + e213)/e12 and g4 = e1323/e12.  Degenerate sweep points never
abort a sweep: the row is emitted with NaN markers and a warning goes to
stderr.  CSV output uses full-precision floats so rows round-trip.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .energies import e12, three_body_terms
from .errors import GeometryError, InputError
from .geometry import SystemConfig, diagonal_tensor, equidistant_config, isotropic_tensor, ratio_config

CSV_COLUMNS = ("param", "e12", "e123", "e213", "e1323", "delta_e3", "g", "g3", "g4")
FIGURE_NAMES = ("fig2", "fig3", "fig4", "fig5")


@dataclass(frozen=True)
class SweepRow:
    param: float
    e12: float
    e123: float
    e213: float
    e1323: float
    delta_e3: float
    g: float
    g3: float
    g4: float

    def values(self) -> tuple[float, ...]:
        return (self.param, self.e12, self.e123, self.e213, self.e1323,
                self.delta_e3, self.g, self.g3, self.g4)


def row_for_config(param: float, cfg: SystemConfig) -> SweepRow:
    pair = e12(cfg)
    terms = three_body_terms(cfg)
    delta = terms.e123 + terms.e213 + terms.e1323
    if pair != 0.0 and math.isfinite(pair):
        g = delta / pair
        g3 = (terms.e123 + terms.e213) / pair
        g4 = terms.e1323 / pair
    else:
        g = g3 = g4 = math.nan
    return SweepRow(param, pair, terms.e123, terms.e213, terms.e1323, delta, g, g3, g4)


def _nan_row(param: float) -> SweepRow:
    n = math.nan
    return SweepRow(param, n, n, n, n, n, n, n, n)


def sweep_equidistant(alpha1, alpha2, a: float, z_over_a_values) -> list[SweepRow]:
    """Sweep the common height of two equal-height atoms, param = Z/a."""
    rows = []
    for val in z_over_a_values:
        val = float(val)
        try:
            cfg = equidistant_config(alpha1, alpha2, a, val * a, allow_contact=True)
            rows.append(row_for_config(val, cfg))
        except GeometryError as exc:
            print(f"sweep: skipping z_over_a = {val}: {exc}", file=sys.stderr)
            rows.append(_nan_row(val))
    return rows


def sweep_image_ratio(alpha1, alpha2, a_over_r: float, gamma_values, r: float = 1.0) -> list[SweepRow]:
    """Sweep Gamma = R/r at fixed a/r, param = Gamma."""
    rows = []
    for val in gamma_values:
        val = float(val)
        try:
            cfg = ratio_config(alpha1, alpha2, a_over_r * r, r, val)
            rows.append(row_for_config(val, cfg))
        except GeometryError as exc:
            print(f"sweep: skipping Gamma = {val}: {exc}", file=sys.stderr)
            rows.append(_nan_row(val))
    return rows


def figure_rows(name: str) -> list[SweepRow]:
    """The pinned sweep behind one of the bundled figures.

    fig2: isotropic unit atoms, g versus Z/a in [0, 2].
    fig3: axial-only unit atoms, same axis (g3 and g4 split out).
    fig4: axial-only unit atoms, energies versus Gamma in [1, 4] at a/r = 0.75.
    fig5: transverse-only unit atoms, same axis at a/r = 0.5.

    Axis ranges and the 201-point density are chosen so every feature of
    interest (sign changes, the slope nonmonotonicity near contact) is
    inside the window.
    """
    if name == "fig2":
        iso = isotropic_tensor(1.0)
        return sweep_equidistant(iso, iso, 1.0, np.linspace(0.0, 2.0, 201))
    if name == "fig3":
        axial = diagonal_tensor(0.0, 1.0)
        return sweep_equidistant(axial, axial, 1.0, np.linspace(0.0, 2.0, 201))
    if name == "fig4":
        axial = diagonal_tensor(0.0, 1.0)
        return sweep_image_ratio(axial, axial, 0.75, np.linspace(1.0, 4.0, 201))
    if name == "fig5":
        perp = diagonal_tensor(1.0, 0.0)
        return sweep_image_ratio(perp, perp, 0.5, np.linspace(1.0, 4.0, 201))
    raise InputError(f"unknown figure preset {name!r}; choose from {', '.join(FIGURE_NAMES)}")


def rows_to_csv(rows) -> str:
    """Serialize rows with shortest round-trip float formatting."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row.values()))
    return "\n".join(lines) + "\n"
