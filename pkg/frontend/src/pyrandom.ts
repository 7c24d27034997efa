/**
 * Bit-exact port of CPython's random.Random for the methods the noise
 * planner uses: getrandbits, choice, and sample.
 *
 * The generator is the reference MT19937 with CPython's integer seeding
 * (absolute value split into 32-bit words, little end first, fed to
 * init_by_array).  getrandbits takes the top k bits of one 32-bit draw,
 * and _randbelow rejection-samples on the bit length, so every consumer
 * built on these advances the stream exactly as CPython does.  That is
 * what makes noise output byte-identical across the two runtimes.
 */

const N = 624;
const M = 397;
const MATRIX_A = 0x9908b0df;
const UPPER_MASK = 0x80000000;
const LOWER_MASK = 0x7fffffff;

class MT19937 {
  private mt = new Uint32Array(N);
  private mti = N + 1;

  initGenrand(s: number): void {
    this.mt[0] = s >>> 0;
    for (let i = 1; i < N; i++) {
      const prev = (this.mt[i - 1] ^ (this.mt[i - 1] >>> 30)) >>> 0;
      // Multiplications overflow 53-bit floats; Math.imul keeps the
      // low 32 bits like C unsigned arithmetic does.
      this.mt[i] = (Math.imul(1812433253, prev) + i) >>> 0;
    }
    this.mti = N;
  }

  initByArray(key: readonly number[]): void {
    this.initGenrand(19650218);
    let i = 1;
    let j = 0;
    let k = Math.max(N, key.length);
    for (; k; k--) {
      const prev = (this.mt[i - 1] ^ (this.mt[i - 1] >>> 30)) >>> 0;
      this.mt[i] = (((this.mt[i] ^ Math.imul(prev, 1664525)) >>> 0) + key[j] + j) >>> 0;
      i++;
      j++;
      if (i >= N) {
        this.mt[0] = this.mt[N - 1];
        i = 1;
      }
      if (j >= key.length) j = 0;
    }
    for (k = N - 1; k; k--) {
      const prev = (this.mt[i - 1] ^ (this.mt[i - 1] >>> 30)) >>> 0;
      this.mt[i] = (((this.mt[i] ^ Math.imul(prev, 1566083941)) >>> 0) - i) >>> 0;
      i++;
      if (i >= N) {
        this.mt[0] = this.mt[N - 1];
        i = 1;
      }
    }
    this.mt[0] = 0x80000000;
  }

  genrandUint32(): number {
    let y: number;
    if (this.mti >= N) {
      if (this.mti === N + 1) this.initGenrand(5489);
      const mt = this.mt;
      for (let kk = 0; kk < N - M; kk++) {
        y = ((mt[kk] & UPPER_MASK) | (mt[kk + 1] & LOWER_MASK)) >>> 0;
        mt[kk] = (mt[kk + M] ^ (y >>> 1) ^ (y & 1 ? MATRIX_A : 0)) >>> 0;
      }
      for (let kk = N - M; kk < N - 1; kk++) {
        y = ((mt[kk] & UPPER_MASK) | (mt[kk + 1] & LOWER_MASK)) >>> 0;
        mt[kk] = (mt[kk + (M - N)] ^ (y >>> 1) ^ (y & 1 ? MATRIX_A : 0)) >>> 0;
      }
      y = ((mt[N - 1] & UPPER_MASK) | (mt[0] & LOWER_MASK)) >>> 0;
      mt[N - 1] = (mt[M - 1] ^ (y >>> 1) ^ (y & 1 ? MATRIX_A : 0)) >>> 0;
      this.mti = 0;
    }
    y = this.mt[this.mti++];
    y = (y ^ (y >>> 11)) >>> 0;
    y = (y ^ ((y << 7) & 0x9d2c5680)) >>> 0;
    y = (y ^ ((y << 15) & 0xefc60000)) >>> 0;
    y = (y ^ (y >>> 18)) >>> 0;
    return y;
  }
}

/** CPython's integer seeding: abs(seed) as little-endian 32-bit words. */
function seedKey(seed: number | bigint): number[] {
  let n = typeof seed === "bigint" ? seed : BigInt(Math.trunc(seed));
  if (n < 0n) n = -n;
  if (n === 0n) return [0];
  const key: number[] = [];
  while (n > 0n) {
    key.push(Number(n & 0xffffffffn));
    n >>= 32n;
  }
  return key;
}

function bitLength(n: number): number {
  if (n >= 0x100000000) {
    throw new RangeError(`bounds above 2**32 are not supported, got ${n}`);
  }
  return 32 - Math.clz32(n);
}

export class PyRandom {
  private gen = new MT19937();

  constructor(seed: number | bigint) {
    this.gen.initByArray(seedKey(seed));
  }

  /** k random bits, 1 <= k <= 32, matching Random.getrandbits. */
  getrandbits(k: number): number {
    if (!Number.isInteger(k) || k <= 0 || k > 32) {
      throw new RangeError(`getrandbits supports 1..32 bits, got ${k}`);
    }
    return this.gen.genrandUint32() >>> (32 - k);
  }

  /** Uniform int in [0, n) via CPython's rejection loop; 0 when n is 0. */
  randbelow(n: number): number {
    if (n <= 0) return 0;
    const k = bitLength(n);
    let r = this.getrandbits(k);
    while (r >= n) r = this.getrandbits(k);
    return r;
  }

  choice<T>(seq: readonly T[]): T {
    if (seq.length === 0) {
      throw new RangeError("cannot choose from an empty sequence");
    }
    return seq[this.randbelow(seq.length)];
  }

  /**
   * k unique draws without replacement, same algorithm and stream
   * consumption as Random.sample on a sequence.
   */
  sample<T>(population: readonly T[], k: number): T[] {
    const n = population.length;
    if (k < 0 || k > n) {
      throw new RangeError("sample larger than population or is negative");
    }
    const result: T[] = new Array(k);
    let setsize = 21;
    if (k > 5) {
      setsize += 4 ** Math.ceil(Math.log(k * 3) / Math.log(4));
    }
    if (n <= setsize) {
      // Partial Fisher-Yates over a copied pool. k === n always lands
      // here, so full permutations never depend on the set branch.
      const pool = population.slice();
      for (let i = 0; i < k; i++) {
        const j = this.randbelow(n - i);
        result[i] = pool[j];
        pool[j] = pool[n - i - 1];
      }
    } else {
      const selected = new Set<number>();
      for (let i = 0; i < k; i++) {
        let j = this.randbelow(n);
        while (selected.has(j)) j = this.randbelow(n);
        selected.add(j);
        result[i] = population[j];
      }
    }
    return result;
  }
}
