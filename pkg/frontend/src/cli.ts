/**
 * Process plumbing: locate and invoke the compute engine's command-line
 * interface, exchange data through temporary files, parse its CSV output.
 *
 * The engine command defaults to `python3 -m mimatrix` and can be overridden
 * with the MIMATRIX_CLI environment variable (whitespace-separated argv).
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

export class EngineError extends Error {}

export function engineCommand(): string[] {
  const override = process.env.MIMATRIX_CLI;
  const parts = (override ?? "python3 -m mimatrix").split(/\s+/).filter(Boolean);
  if (parts.length === 0) throw new EngineError("MIMATRIX_CLI is empty");
  return parts;
}

export function runEngine(args: string[]): void {
  const [cmd, ...prefix] = engineCommand();
  const result = spawnSync(cmd, [...prefix, ...args], {
    encoding: "utf-8",
    maxBuffer: 64 * 1024 * 1024,
  });
  if (result.error) {
    throw new EngineError(`failed to launch ${cmd}: ${result.error.message}`);
  }
  if (result.status !== 0) {
    const detail = (result.stderr ?? "").trim().split("\n").slice(-3).join("\n");
    throw new EngineError(`engine exited with ${result.status}: ${detail}`);
  }
}

/** Run `fn` with a private scratch directory, removed afterwards. */
export function withScratchDir<T>(fn: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "mimatrix-"));
  try {
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

export function writeScratchFile(dir: string, name: string, bytes: Uint8Array): string {
  const path = join(dir, name);
  writeFileSync(path, bytes);
  return path;
}

export function readBytes(path: string): Uint8Array {
  return new Uint8Array(readFileSync(path));
}

/** Parse the engine's MI matrix CSV (one row per line, plain decimals). */
export function parseMatrixCsv(path: string): number[][] {
  const text = readFileSync(path, "utf-8");
  const lines = text.split("\n").filter((ln) => ln.length > 0);
  if (lines.length === 0) throw new EngineError(`empty matrix file ${path}`);
  return lines.map((line, i) => {
    const values = line.split(",").map(Number);
    if (values.some((v) => Number.isNaN(v))) {
      throw new EngineError(`${path}:${i + 1}: unparseable matrix row`);
    }
    return values;
  });
}
