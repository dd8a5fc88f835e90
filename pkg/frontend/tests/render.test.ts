import { mkdtempSync, readFileSync, writeFileSync, existsSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { loadSweepCsv } from "../src/csv.js";
import { main } from "../src/cli.js";
import { renderFigure, renderToFile } from "../src/render.js";

const FIXTURES = join(__dirname, "fixtures");
const PRESETS = ["fig2", "fig3", "fig4", "fig5"] as const;

function fixture(name: string): string {
  return join(FIXTURES, `${name}.csv`);
}

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "cpmirror-figures-"));
}

describe("csv loader", () => {
  it("reads all sweep columns", () => {
    const rows = loadSweepCsv(fixture("fig2"));
    expect(rows).toHaveLength(201);
    expect(rows[0].param).toBe(0);
    expect(rows[0].g).toBeCloseTo(3 / 23, 12);
  });

  it("names a missing column", () => {
    const dir = tmp();
    const mangled = readFileSync(fixture("fig2"), "utf-8")
      .split("\n")
      .map((line) => line.split(",").slice(0, -2).join(","))
      .join("\n");
    const path = join(dir, "short.csv");
    writeFileSync(path, mangled, "utf-8");
    expect(() => loadSweepCsv(path)).toThrow(/missing column: g3/);
  });

  it("rejects an empty file", () => {
    const dir = tmp();
    const path = join(dir, "empty.csv");
    writeFileSync(path, "param,e12,e123,e213,e1323,delta_e3,g,g3,g4\n", "utf-8");
    expect(() => loadSweepCsv(path)).toThrow(/empty CSV/);
  });
});

describe("renderFigure", () => {
  it("fig2 series starts at the on-plate ratio 0.130", () => {
    const { series } = renderFigure("fig2", fixture("fig2"));
    expect(series).toHaveLength(1);
    const [x0, y0] = series[0].points[0];
    expect(x0).toBe(0);
    expect(Math.abs(y0 - 0.13)).toBeLessThan(0.001);
  });

  it("renders every preset without error", () => {
    for (const name of PRESETS) {
      const { svg, series } = renderFigure(name, fixture(name));
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
      expect(series.length).toBeGreaterThan(0);
    }
  });

  it("fig3 carries the three ratio curves", () => {
    const { series } = renderFigure("fig3", fixture("fig3"));
    expect(series.map((s) => s.label)).toEqual(["g3", "g4", "g"]);
  });

  it("fig4 doubles the single-reflection term", () => {
    const { series } = renderFigure("fig4", fixture("fig4"));
    const rows = loadSweepCsv(fixture("fig4"));
    const doubled = series.find((s) => s.label === "2 e123");
    expect(doubled?.points[0][1]).toBeCloseTo(2 * rows[0].e123, 14);
  });

  it("is deterministic on identical input", () => {
    const a = renderFigure("fig5", fixture("fig5"));
    const b = renderFigure("fig5", fixture("fig5"));
    expect(a.svg).toBe(b.svg);
  });

  it("leaves the input CSV untouched", () => {
    const before = readFileSync(fixture("fig3"));
    renderFigure("fig3", fixture("fig3"));
    const after = readFileSync(fixture("fig3"));
    expect(Buffer.compare(before, after)).toBe(0);
  });

  it("rejects an unknown preset by name", () => {
    expect(() => renderFigure("fig9", fixture("fig2"))).toThrow(/unknown preset: fig9/);
  });
});

describe("renderToFile and cli", () => {
  it("writes an SVG file per preset", () => {
    const dir = tmp();
    for (const name of PRESETS) {
      const out = join(dir, `${name}.svg`);
      renderToFile(name, fixture(name), out);
      expect(readFileSync(out, "utf-8")).toContain("</svg>");
    }
  });

  it("writes nothing when the input is empty", () => {
    const dir = tmp();
    const csv = join(dir, "empty.csv");
    writeFileSync(csv, "param,e12,e123,e213,e1323,delta_e3,g,g3,g4\n", "utf-8");
    const out = join(dir, "empty.svg");
    expect(() => renderToFile("fig2", csv, out)).toThrow(/empty CSV/);
    expect(existsSync(out)).toBe(false);
  });

  it("cli renders and reports missing arguments", () => {
    const dir = tmp();
    const out = join(dir, "fig2.svg");
    expect(main(["--in", fixture("fig2"), "--out", out, "--preset", "fig2"])).toBe(0);
    expect(existsSync(out)).toBe(true);
    expect(main(["--in", fixture("fig2")])).toBe(1);
    expect(main(["--in", fixture("fig2"), "--out", out, "--preset", "fig9"])).toBe(1);
  });
});
