import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { parseResultsCsv, parseTraceCsv } from "../src/csv.js";
import { buildThresholdChart } from "../src/threshold.js";
import { buildYCdfChart } from "../src/ycdf.js";

const FIXTURES = join(__dirname, "fixtures");
const resultsCsv = join(FIXTURES, "results.csv");
const tracesCsv = join(FIXTURES, "traces.csv");

describe("plots CLI", () => {
  it("threshold subcommand writes the same SVG as the library call", () => {
    const out = join(mkdtempSync(join(tmpdir(), "plots-")), "fig1.svg");
    const code = main(["threshold", "--csv", resultsCsv, "--predicted", "80", "--out", out]);
    expect(code).toBe(0);
    const expected = buildThresholdChart(
      parseResultsCsv(readFileSync(resultsCsv, "utf-8")),
      { predicted: 80 },
    );
    expect(readFileSync(out, "utf-8")).toBe(expected);
  });

  it("ycdf subcommand writes the same SVG as the library call", () => {
    const out = join(mkdtempSync(join(tmpdir(), "plots-")), "fig2.svg");
    const code = main(["ycdf", "--csv", tracesCsv, "--eta", "1", "--out", out]);
    expect(code).toBe(0);
    const expected = buildYCdfChart(
      parseTraceCsv(readFileSync(tracesCsv, "utf-8")),
      1,
    );
    expect(readFileSync(out, "utf-8")).toBe(expected);
  });

  it("rejects unknown subcommands and missing flags", () => {
    expect(main(["scatter"])).toBe(2);
    expect(() => main(["ycdf", "--csv", tracesCsv])).toThrow(/--eta|--out/);
  });
});
