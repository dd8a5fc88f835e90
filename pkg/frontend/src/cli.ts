import { renderToFile } from "./render.js";

function usage(): string {
  return "usage: render --in SWEEP_CSV --out IMAGE_SVG --preset fig2|fig3|fig4|fig5";
}

function parseArgs(argv: string[]): { input: string; output: string; preset: string } {
  const values: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!["--in", "--out", "--preset"].includes(flag)) {
      throw new Error(`unknown argument: ${flag}\n${usage()}`);
    }
    if (value === undefined) {
      throw new Error(`missing value for ${flag}\n${usage()}`);
    }
    values[flag] = value;
  }
  for (const flag of ["--in", "--out", "--preset"]) {
    if (!(flag in values)) {
      throw new Error(`missing required argument ${flag}\n${usage()}`);
    }
  }
  return { input: values["--in"], output: values["--out"], preset: values["--preset"] };
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    renderToFile(args.preset, args.input, args.output);
    console.log(`wrote ${args.output}`);
    return 0;
  } catch (err) {
    console.error(err instanceof Error ? err.message : String(err));
    return 1;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
