/** Circular layout of the boundary: ray h fills the angular band between
 * accumulation slots h-1 and h, with marked points compressed geometrically
 * toward both ends so the two-sided accumulation is visible at any bound. */

import type { ModelJson, PointJson, Pos } from "./types.js";

export interface LayoutOptions {
  /** Disk radius in user units. */
  radius: number;
  /** Disk centre. */
  cx: number;
  cy: number;
  /** Geometric compression ratio in (0,1); closer to 1 spreads points out. */
  squeeze: number;
  /** Angle of the start of ray 1 (radians). */
  phase: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  radius: 220,
  cx: 250,
  cy: 250,
  squeeze: 0.62,
  phase: -Math.PI / 2,
};

/** Fraction of a ray's band taken by position a: strictly increasing, with
 * increments shrinking geometrically in both directions. */
export function bandFraction(a: number, squeeze: number): number {
  // logistic in squeeze^a: 0 at -infinity, 1/2 at a = 0, 1 at +infinity
  return 1 / (1 + Math.pow(squeeze, a));
}

/** The angle of a marked point; accumulation point h sits at the fixed end
 * of band h regardless of the window bound. */
export function pointAngle(model: ModelJson, p: PointJson, opts: LayoutOptions = DEFAULT_LAYOUT): number {
  const band = (2 * Math.PI) / model.n;
  const base = opts.phase + band * (p.ray - 1);
  if (p.pos === "inf") {
    return base + band;
  }
  return base + band * bandFraction(p.pos, opts.squeeze);
}

export interface XY {
  x: number;
  y: number;
}

export function pointXY(model: ModelJson, p: PointJson, opts: LayoutOptions = DEFAULT_LAYOUT): XY {
  const theta = pointAngle(model, p, opts);
  return {
    x: opts.cx + opts.radius * Math.cos(theta),
    y: opts.cy + opts.radius * Math.sin(theta),
  };
}

/** Window marked points in counterclockwise order starting at (1,-bound). */
export function windowPoints(model: ModelJson, bound: number): PointJson[] {
  const pts: PointJson[] = [];
  for (let h = 1; h <= model.n; h += 1) {
    for (let a = -bound; a <= bound; a += 1) {
      pts.push({ ray: h, pos: a });
    }
    if (model.completed) {
      pts.push({ ray: h, pos: "inf" as Pos });
    }
  }
  return pts;
}

/** Counterclockwise angular span from a to b, normalized into (0, 2*pi). */
export function ccwSpan(a: number, b: number): number {
  const tau = 2 * Math.PI;
  let d = (b - a) % tau;
  if (d <= 0) {
    d += tau;
  }
  return d;
}
