/**
 * Codec for the packed binary matrix container exchanged with the engine.
 *
 * Layout: 4-byte magic "BMI1", then n_rows and n_cols as unsigned 64-bit
 * little-endian, then one block per column of ceil(n_rows/64) little-endian
 * 64-bit words. Bit r of word w holds row w*64 + r; padding bits are zero.
 */

const MAGIC = "BMI1";
const HEADER_BYTES = 20;

export class BmiFormatError extends Error {}

function wordsPerColumn(rows: number): number {
  return Math.ceil(rows / 64);
}

/** Pack a row-major {0,1} matrix into container bytes. */
export function packBmi(data: ReadonlyArray<ReadonlyArray<number>>): Uint8Array {
  const rows = data.length;
  const cols = data[0].length;
  const nw = wordsPerColumn(rows);
  const buf = new ArrayBuffer(HEADER_BYTES + cols * nw * 8);
  const view = new DataView(buf);
  for (let i = 0; i < 4; i++) view.setUint8(i, MAGIC.charCodeAt(i));
  view.setBigUint64(4, BigInt(rows), true);
  view.setBigUint64(12, BigInt(cols), true);
  for (let c = 0; c < cols; c++) {
    const base = HEADER_BYTES + c * nw * 8;
    for (let w = 0; w < nw; w++) {
      let word = 0n;
      const lo = w * 64;
      const hi = Math.min(lo + 64, rows);
      for (let r = lo; r < hi; r++) {
        if (data[r][c] === 1) word |= 1n << BigInt(r - lo);
      }
      view.setBigUint64(base + w * 8, word, true);
    }
  }
  return new Uint8Array(buf);
}

/** Unpack container bytes into a row-major number[][] of {0,1}. */
export function unpackBmi(bytes: Uint8Array): number[][] {
  if (bytes.length < HEADER_BYTES) {
    throw new BmiFormatError(`file shorter than the ${HEADER_BYTES}-byte header`);
  }
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  let magic = "";
  for (let i = 0; i < 4; i++) magic += String.fromCharCode(view.getUint8(i));
  if (magic !== MAGIC) {
    throw new BmiFormatError(`bad magic ${JSON.stringify(magic)}, expected ${MAGIC}`);
  }
  const rows = Number(view.getBigUint64(4, true));
  const cols = Number(view.getBigUint64(12, true));
  if (rows < 1 || cols < 1) {
    throw new BmiFormatError(`invalid dimensions ${rows}x${cols}`);
  }
  const nw = wordsPerColumn(rows);
  const expected = HEADER_BYTES + cols * nw * 8;
  if (bytes.length !== expected) {
    throw new BmiFormatError(
      `payload length ${bytes.length - HEADER_BYTES} does not match ` +
        `${cols} columns of ${nw} words`
    );
  }
  const out: number[][] = Array.from({ length: rows }, () => new Array<number>(cols).fill(0));
  const padBits = rows % 64;
  for (let c = 0; c < cols; c++) {
    const base = HEADER_BYTES + c * nw * 8;
    for (let w = 0; w < nw; w++) {
      let word = view.getBigUint64(base + w * 8, true);
      if (w === nw - 1 && padBits !== 0 && word >> BigInt(padBits) !== 0n) {
        throw new BmiFormatError(`nonzero padding bits in column ${c}`);
      }
      let r = w * 64;
      while (word !== 0n) {
        if (word & 1n) out[r][c] = 1;
        word >>= 1n;
        r++;
      }
    }
  }
  return out;
}
