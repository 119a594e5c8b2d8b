/**
 * Acceptance: binding output equals direct CLI output within 1e-12 on ten
 * random matrices, and matches an independent reimplementation of the
 * four-cell MI formula within 1e-10.
 *
 * The reference below counts cells with a plain loop and applies
 *   MI = sum over cells of p * log2(p / (px * py)),  0*log(0) = 0,
 * sharing no code with the binding or the engine.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import { miAllPairs } from "../src/index";
import { engineCommand } from "../src/cli";

const scratch = mkdtempSync(join(tmpdir(), "mimatrix-parity-"));
afterAll(() => rmSync(scratch, { recursive: true, force: true }));

// Small deterministic PRNG (mulberry32) so test data is reproducible and
// independent of the engine's own generator.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomMatrix(seed: number, rows: number, cols: number, density: number): number[][] {
  const rnd = mulberry32(seed);
  return Array.from({ length: rows }, () =>
    Array.from({ length: cols }, () => (rnd() < density ? 1 : 0))
  );
}

function naiveMi(x: number[], y: number[]): number {
  const n = x.length;
  let c11 = 0;
  let c10 = 0;
  let c01 = 0;
  let c00 = 0;
  for (let i = 0; i < n; i++) {
    if (x[i] === 1 && y[i] === 1) c11++;
    else if (x[i] === 1) c10++;
    else if (y[i] === 1) c01++;
    else c00++;
  }
  const px1 = (c11 + c10) / n;
  const px0 = (c01 + c00) / n;
  const py1 = (c11 + c01) / n;
  const py0 = (c10 + c00) / n;
  const cells: Array<[number, number]> = [
    [c11 / n, px1 * py1],
    [c10 / n, px1 * py0],
    [c01 / n, px0 * py1],
    [c00 / n, px0 * py0],
  ];
  let total = 0;
  for (const [p, e] of cells) {
    if (p > 0) total += p * Math.log2(p / e);
  }
  return total;
}

function computeViaCli(data: number[][], tag: string): number[][] {
  const csv = data.map((row) => row.join(",")).join("\n") + "\n";
  const input = join(scratch, `${tag}.csv`);
  const output = join(scratch, `${tag}-mi.csv`);
  writeFileSync(input, csv);
  const [cmd, ...prefix] = engineCommand();
  const res = spawnSync(
    cmd,
    [
      ...prefix,
      "compute",
      "--input", input,
      "--format", "csv",
      "--backend", "dense",
      "--precision", "17",
      "--output", output,
    ],
    { encoding: "utf-8" }
  );
  expect(res.status).toBe(0);
  return readFileSync(output, "utf-8")
    .split("\n")
    .filter((ln) => ln.length > 0)
    .map((ln) => ln.split(",").map(Number));
}

const CASES = Array.from({ length: 10 }, (_, k) => ({
  seed: 1000 + 17 * k,
  rows: 30 + 11 * k,
  cols: 3 + (k % 5),
  density: [0.1, 0.3, 0.5, 0.7, 0.9][k % 5],
}));

describe("binding parity", () => {
  it("equals CLI output within 1e-12 and the naive formula within 1e-10", () => {
    let maxVsCli = 0;
    let maxVsNaive = 0;
    for (const { seed, rows, cols, density } of CASES) {
      const data = randomMatrix(seed, rows, cols, density);
      const viaBinding = miAllPairs(data);
      const viaCli = computeViaCli(data, `case-${seed}`);
      expect(viaBinding.length).toBe(cols);
      const columns = Array.from({ length: cols }, (_, j) => data.map((row) => row[j]));
      for (let i = 0; i < cols; i++) {
        for (let j = 0; j < cols; j++) {
          maxVsCli = Math.max(maxVsCli, Math.abs(viaBinding[i][j] - viaCli[i][j]));
          const reference = naiveMi(columns[i], columns[j]);
          maxVsNaive = Math.max(maxVsNaive, Math.abs(viaBinding[i][j] - reference));
        }
      }
    }
    expect(maxVsCli).toBeLessThanOrEqual(1e-12);
    expect(maxVsNaive).toBeLessThanOrEqual(1e-10);
    console.log(
      `[ACCEPTANCE] binding parity: PASS (max vs CLI ${maxVsCli.toExponential(2)}, ` +
        `max vs naive ${maxVsNaive.toExponential(2)})`
    );
  });
});
