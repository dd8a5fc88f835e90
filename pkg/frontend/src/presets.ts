import type { SweepRow } from "./csv.js";

export interface SeriesSpec {
  label: string;
  value: (row: SweepRow) => number;
}

export interface FigurePreset {
  name: string;
  title: string;
  xLabel: string;
  yLabel: string;
  series: SeriesSpec[];
}

export const PRESETS: Record<string, FigurePreset> = {
  fig2: {
    name: "fig2",
    title: "Isotropic atoms at equal height",
    xLabel: "Z/a",
    yLabel: "g = delta_e3 / e12",
    series: [{ label: "g", value: (r) => r.g }],
  },
  fig3: {
    name: "fig3",
    title: "Axially polarizable atoms at equal height",
    xLabel: "Z/a",
    yLabel: "ratio to e12",
    series: [
      { label: "g3", value: (r) => r.g3 },
      { label: "g4", value: (r) => r.g4 },
      { label: "g", value: (r) => r.g },
    ],
  },
  fig4: {
    name: "fig4",
    title: "Axially polarizable atoms, a/r = 0.75",
    xLabel: "Gamma",
    yLabel: "energy (alpha_z1 alpha_z2 / r^7)",
    series: [
      { label: "e12", value: (r) => r.e12 },
      { label: "2 e123", value: (r) => 2 * r.e123 },
      { label: "e1323", value: (r) => r.e1323 },
      { label: "delta_e3", value: (r) => r.delta_e3 },
    ],
  },
  fig5: {
    name: "fig5",
    title: "Transversely polarizable atoms, a/r = 0.5",
    xLabel: "Gamma",
    yLabel: "energy (alpha_perp1 alpha_perp2 / r^7)",
    series: [
      { label: "e12", value: (r) => r.e12 },
      { label: "2 e123", value: (r) => 2 * r.e123 },
      { label: "e1323", value: (r) => r.e1323 },
      { label: "delta_e3", value: (r) => r.delta_e3 },
    ],
  },
};

export function getPreset(name: string): FigurePreset {
  const preset = PRESETS[name];
  if (!preset) {
    throw new Error(`unknown preset: ${name} (choose from ${Object.keys(PRESETS).join(", ")})`);
  }
  return preset;
}
