#!/usr/bin/env node
/**
 * Plot CLI over the simulator's CSV outputs.
 *
 * Usage:
 *   plots threshold --csv results.csv [--predicted 400] --out fig1.svg
 *   plots ycdf --csv traces.csv --eta 8 --out fig2.svg
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseResultsCsv, parseTraceCsv } from "./csv.js";
import { buildThresholdChart } from "./threshold.js";
import { buildYCdfChart } from "./ycdf.js";

const USAGE = `usage:
  plots threshold --csv <results.csv> [--predicted <m>] [--title <t>] --out <file.svg>
  plots ycdf --csv <traces.csv> --eta <eta> [--title <t>] --out <file.svg>`;

function parseFlags(argv: string[]): Map<string, string> {
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    if (!key.startsWith("--") || i + 1 >= argv.length) {
      throw new Error(`malformed arguments near ${JSON.stringify(key)}\n${USAGE}`);
    }
    flags.set(key.slice(2), argv[i + 1]);
  }
  return flags;
}

function required(flags: Map<string, string>, name: string): string {
  const v = flags.get(name);
  if (v === undefined) throw new Error(`missing --${name}\n${USAGE}`);
  return v;
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  if (command !== "threshold" && command !== "ycdf") {
    console.error(USAGE);
    return 2;
  }
  const flags = parseFlags(rest);
  const csvText = readFileSync(required(flags, "csv"), "utf-8");
  const out = required(flags, "out");

  let svg: string;
  if (command === "threshold") {
    const predictedRaw = flags.get("predicted");
    svg = buildThresholdChart(parseResultsCsv(csvText), {
      predicted: predictedRaw === undefined ? undefined : Number(predictedRaw),
      title: flags.get("title"),
    });
  } else {
    svg = buildYCdfChart(parseTraceCsv(csvText), Number(required(flags, "eta")), {
      title: flags.get("title"),
    });
  }
  writeFileSync(out, svg);
  console.log(`wrote ${out}`);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  try {
    process.exit(main(process.argv.slice(2)));
  } catch (err) {
    console.error(err instanceof Error ? err.message : err);
    process.exit(1);
  }
}
