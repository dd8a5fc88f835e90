import { writeFileSync } from "fs";
import { loadSweepCsv } from "./csv.js";
import { getPreset } from "./presets.js";
import { buildSvg, type Series } from "./svg.js";

export interface RenderedFigure {
  svg: string;
  series: Series[];
}

/** Build the SVG and the underlying data series for one preset. */
export function renderFigure(presetName: string, csvPath: string): RenderedFigure {
  const preset = getPreset(presetName);
  const rows = loadSweepCsv(csvPath);
  const series: Series[] = preset.series.map((spec) => ({
    label: spec.label,
    points: rows.map((row) => [row.param, spec.value(row)] as [number, number]),
  }));
  const svg = buildSvg(series, preset.xLabel, preset.yLabel, preset.title);
  return { svg, series };
}

/** Render a preset and write the SVG; nothing is written if rendering fails. */
export function renderToFile(presetName: string, csvPath: string, outPath: string): RenderedFigure {
  const rendered = renderFigure(presetName, csvPath);
  writeFileSync(outPath, rendered.svg, "utf-8");
  return rendered;
}
