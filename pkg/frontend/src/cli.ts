#!/usr/bin/env node
/** render_figures <figure-id> --in <csv...> --out <image.svg> */

import { writeFileSync, mkdirSync } from "node:fs";
import { dirname } from "node:path";

import { SchemaError } from "./csv";
import { buildFigure, FIGURE_IDS, FigureId, FigureSpec } from "./figures";

export function parseArgs(argv: string[]): FigureSpec {
  if (argv.length === 0) {
    throw new SchemaError(
      `usage: render_figures <${FIGURE_IDS.join("|")}> --in <csv...> --out <image.svg>`,
    );
  }
  const id = argv[0];
  if (!(FIGURE_IDS as string[]).includes(id)) {
    throw new SchemaError(
      `unknown figure id ${id}; expected one of ${FIGURE_IDS.join(", ")}`,
    );
  }
  const inputs: string[] = [];
  let output = "";
  let mode: "in" | "out" | null = null;
  for (const arg of argv.slice(1)) {
    if (arg === "--in") {
      mode = "in";
    } else if (arg === "--out") {
      mode = "out";
    } else if (mode === "in") {
      inputs.push(arg);
    } else if (mode === "out") {
      output = arg;
      mode = null;
    } else {
      throw new SchemaError(`unexpected argument ${arg}`);
    }
  }
  if (inputs.length === 0 || output === "") {
    throw new SchemaError("both --in <csv...> and --out <image> are required");
  }
  return { id: id as FigureId, inputs, output };
}

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(argv);
    const svg = buildFigure(spec);
    mkdirSync(dirname(spec.output), { recursive: true });
    writeFileSync(spec.output, svg);
  } catch (err) {
    if (err instanceof SchemaError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 2;
    }
    throw err;
  }
  process.stdout.write(`wrote ${spec.output}\n`);
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
