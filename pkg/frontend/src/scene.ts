/** Pure scene construction: window data in, drawable shapes out.  Every
 * displayed fact (membership, labels, mutability) comes from the service. */

import { ccwSpan, DEFAULT_LAYOUT, LayoutOptions, pointAngle, pointXY, windowPoints } from "./layout.js";
import {
  EdgeJson,
  ModelJson,
  WindowJson,
  edgeKey,
  isPunctureEdge,
  touchesAccumulation,
} from "./types.js";

export interface PointShape {
  key: string;
  x: number;
  y: number;
  accumulation: boolean;
}

export interface ArcShape {
  key: string;
  edge: EdgeJson;
  kind: "chord" | "puncture";
  /** SVG path data. */
  path: string;
  /** Tag notch segment for minus-tagged puncture edges. */
  notch: { x1: number; y1: number; x2: number; y2: number } | null;
  limit: boolean;
  mutable: boolean;
  label: string | null;
  selected: boolean;
}

export interface Scene {
  puncture: { x: number; y: number };
  points: PointShape[];
  arcs: ArcShape[];
  notice: string | null;
}

function chordPath(model: ModelJson, e: EdgeJson, opts: LayoutOptions): string {
  const a = pointXY(model, e.from, opts);
  const b = pointXY(model, e.to, opts);
  const t1 = pointAngle(model, e.from, opts);
  const span = ccwSpan(t1, pointAngle(model, e.to, opts));
  // bulge the chord toward the middle of its ccw arc; wide arcs wrap close
  // to the puncture without touching it
  const mid = t1 + span / 2;
  const depth = Math.max(0.14, 1 - (0.92 * span) / (2 * Math.PI));
  const cx = opts.cx + opts.radius * depth * Math.cos(mid);
  const cy = opts.cy + opts.radius * depth * Math.sin(mid);
  return `M ${a.x.toFixed(2)} ${a.y.toFixed(2)} Q ${cx.toFixed(2)} ${cy.toFixed(2)} ${b.x.toFixed(2)} ${b.y.toFixed(2)}`;
}

function punctureArc(
  model: ModelJson,
  e: EdgeJson,
  opts: LayoutOptions,
): { path: string; notch: ArcShape["notch"] } {
  const p = pointXY(model, e.from, opts);
  const path = `M ${p.x.toFixed(2)} ${p.y.toFixed(2)} L ${opts.cx} ${opts.cy}`;
  if (e.tag === "+1") {
    return { path, notch: null };
  }
  // the minus tag is drawn as a short tick across the segment
  const t = 0.45;
  const mx = p.x + (opts.cx - p.x) * t;
  const my = p.y + (opts.cy - p.y) * t;
  const dx = opts.cx - p.x;
  const dy = opts.cy - p.y;
  const len = Math.hypot(dx, dy) || 1;
  const nx = (-dy / len) * 9;
  const ny = (dx / len) * 9;
  return {
    path,
    notch: { x1: mx - nx, y1: my - ny, x2: mx + nx, y2: my + ny },
  };
}

export interface SceneInputs {
  model: ModelJson;
  window: WindowJson;
  selected: string | null;
  notice: string | null;
}

export function render(inputs: SceneInputs, opts: LayoutOptions = DEFAULT_LAYOUT): Scene {
  const { model, window: win } = inputs;
  const points: PointShape[] = windowPoints(model, win.bound).map((p) => {
    const { x, y } = pointXY(model, p, opts);
    return {
      key: `(${p.ray},${p.pos})`,
      x,
      y,
      accumulation: p.pos === "inf",
    };
  });
  const arcs: ArcShape[] = win.members.map((e) => {
    const key = edgeKey(e);
    const puncture = isPunctureEdge(e);
    const drawn = puncture
      ? punctureArc(model, e, opts)
      : { path: chordPath(model, e, opts), notch: null };
    return {
      key,
      edge: e,
      kind: puncture ? "puncture" : "chord",
      path: drawn.path,
      notch: drawn.notch,
      limit: touchesAccumulation(e),
      mutable: win.mutable[key] ?? true,
      label: win.labels[key] ?? null,
      selected: inputs.selected === key,
    };
  });
  arcs.sort((a, b) => (a.key < b.key ? -1 : 1));
  return {
    puncture: { x: opts.cx, y: opts.cy },
    points,
    arcs,
    notice: inputs.notice,
  };
}

/** Keys of arcs present in one scene but not the other. */
export function sceneDiff(before: Scene, after: Scene): { gone: string[]; appeared: string[] } {
  const a = new Set(before.arcs.map((s) => s.key));
  const b = new Set(after.arcs.map((s) => s.key));
  return {
    gone: [...a].filter((k) => !b.has(k)).sort(),
    appeared: [...b].filter((k) => !a.has(k)).sort(),
  };
}
