/** Linear (or log10) mapping between a data interval and a pixel interval. */
export class Scale {
  constructor(
    private d0: number,
    private d1: number,
    private p0: number,
    private p1: number,
    private log = false,
  ) {
    if (log) {
      this.d0 = Math.log10(Math.max(d0, 1e-12));
      this.d1 = Math.log10(Math.max(d1, 1e-12));
    }
    if (this.d1 === this.d0) this.d1 = this.d0 + 1;
  }

  toPixel(v: number): number {
    const x = this.log ? Math.log10(Math.max(v, 1e-12)) : v;
    return this.p0 + ((x - this.d0) / (this.d1 - this.d0)) * (this.p1 - this.p0);
  }

  fromPixel(p: number): number {
    const x = this.d0 + ((p - this.p0) / (this.p1 - this.p0)) * (this.d1 - this.d0);
    return this.log ? Math.pow(10, x) : x;
  }
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 0.5, hi + 0.5];
  const pad = (hi - lo) * 0.05;
  return [lo - pad, hi + pad];
}
