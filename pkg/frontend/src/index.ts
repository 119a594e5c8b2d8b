/**
 * Node bindings for the all-pairs mutual information engine.
 *
 * Two functions are exposed. `miAllPairs` takes a row-major {0,1} matrix and
 * returns the symmetric m x m matrix of pairwise mutual information in bits;
 * `generate` reproduces the engine's deterministic synthetic datasets. Both
 * delegate to the engine through its command-line interface and packed file
 * formats, so results are numerically identical to direct CLI use. Inputs
 * are never mutated, and concurrent calls are safe (each call gets a private
 * scratch directory).
 */

import { packBmi, unpackBmi } from "./bmi.js";
import {
  parseMatrixCsv,
  readBytes,
  runEngine,
  withScratchDir,
  writeScratchFile,
} from "./cli.js";
import { join } from "node:path";

export const VERSION = "0.1.0";

export class ShapeError extends Error {}
export class DataError extends Error {}

export interface MiOptions {
  /** "exact" applies the 0*log(0)=0 limit convention; "epsilon" stabilizes
   * each term as p*log2((p+eps)/(e+eps)). Default "exact". */
  mode?: "exact" | "epsilon";
  epsilon?: number;
  /** Counting path: bit-packed "dense" (default) or index-list "sparse". */
  backend?: "dense" | "sparse";
  /** Worker cap for the engine; 0 = automatic. Never changes the values. */
  threads?: number;
}

// 17 decimal places round-trips every float64 the engine can produce.
const WIRE_PRECISION = "17";

function validateBinaryMatrix(data: ReadonlyArray<ReadonlyArray<number>>): void {
  if (!Array.isArray(data) || data.length === 0 || !Array.isArray(data[0])) {
    throw new ShapeError("expected a non-empty two-dimensional array");
  }
  const cols = data[0].length;
  if (cols === 0) throw new ShapeError("rows must have at least one column");
  for (let r = 0; r < data.length; r++) {
    const row = data[r];
    if (!Array.isArray(row)) {
      throw new ShapeError(`row ${r} is not an array`);
    }
    if (row.length !== cols) {
      throw new ShapeError(`row ${r} has ${row.length} values, expected ${cols}`);
    }
    for (let c = 0; c < cols; c++) {
      const v = row[c];
      if (v !== 0 && v !== 1) {
        throw new DataError(`non-binary value ${v} at (${r}, ${c})`);
      }
    }
  }
}

/**
 * Mutual information between every pair of columns of a binary dataset.
 * Returns an m x m symmetric matrix in bits.
 */
export function miAllPairs(
  data: ReadonlyArray<ReadonlyArray<number>>,
  options: MiOptions = {}
): number[][] {
  validateBinaryMatrix(data);
  const mode = options.mode ?? "exact";
  const backend = options.backend ?? "dense";
  const epsilon = options.epsilon ?? 1e-12;
  const threads = options.threads ?? 0;
  if (mode !== "exact" && mode !== "epsilon") {
    throw new DataError(`unknown mode ${JSON.stringify(mode)}`);
  }
  if (backend !== "dense" && backend !== "sparse") {
    throw new DataError(`unknown backend ${JSON.stringify(backend)}`);
  }
  if (!(epsilon > 0)) throw new DataError(`epsilon must be positive, got ${epsilon}`);
  return withScratchDir((dir) => {
    const input = writeScratchFile(dir, "data.bmi", packBmi(data));
    const output = join(dir, "mi.csv");
    runEngine([
      "compute",
      "--input", input,
      "--format", "bmi",
      "--backend", backend,
      "--mode", mode,
      "--epsilon", String(epsilon),
      "--threads", String(threads),
      "--precision", WIRE_PRECISION,
      "--output", output,
    ]);
    return parseMatrixCsv(output);
  });
}

/**
 * Deterministic synthetic {0,1} dataset: same (rows, cols, density, seed)
 * always yields the same matrix, matching engine-generated files bit for bit.
 */
export function generate(
  rows: number,
  cols: number,
  density: number,
  seed: number | bigint
): number[][] {
  if (!Number.isInteger(rows) || !Number.isInteger(cols) || rows < 1 || cols < 1) {
    throw new DataError(`rows and cols must be positive integers, got ${rows}x${cols}`);
  }
  if (!(density >= 0 && density <= 1)) {
    throw new DataError(`density must lie in [0, 1], got ${density}`);
  }
  const seedBig = typeof seed === "bigint" ? seed : BigInt(seed);
  if (seedBig < 0n || seedBig >= 1n << 64n) {
    throw new DataError(`seed must fit in an unsigned 64-bit integer, got ${seed}`);
  }
  return withScratchDir((dir) => {
    const output = join(dir, "data.bmi");
    runEngine([
      "generate",
      "--rows", String(rows),
      "--cols", String(cols),
      "--density", String(density),
      "--seed", seedBig.toString(),
      "--output", output,
      "--format", "bmi",
    ]);
    return unpackBmi(readBytes(output));
  });
}
