/** Wire types of the disk service (all combinatorics stay server-side). */

export type Pos = number | "inf";

export interface PointJson {
  ray: number;
  pos: Pos;
}

export interface ModelJson {
  n: number;
  completed: boolean;
}

export type Tag = "+1" | "-1";

export interface EdgeJson {
  from: PointJson;
  to: PointJson;
  tag: Tag;
}

export interface TriangulationJson {
  model: ModelJson;
  apex: PointJson;
  removed: EdgeJson[];
  added: EdgeJson[];
}

export interface SessionInfo {
  id: string;
  triangulation: TriangulationJson;
}

export interface WindowJson {
  bound: number;
  members: EdgeJson[];
  labels: Record<string, string | null>;
  mutable: Record<string, boolean>;
}

export interface MutateOk {
  ok: true;
  replacement: EdgeJson;
  triangulation: TriangulationJson;
}

export interface MutateRefused {
  ok: false;
  code: string;
  message: string;
}

export type MutateResult = MutateOk | MutateRefused;

/** The canonical text key of an edge; matches the service's labels map. */
export function edgeKey(e: EdgeJson): string {
  const pt = (p: PointJson) => `(${p.ray},${p.pos === "inf" ? "inf" : p.pos})`;
  const sign = e.tag === "+1" ? "+" : "-";
  return `E[${pt(e.from)}-${pt(e.to)}]^${sign}`;
}

export function samePoint(a: PointJson, b: PointJson): boolean {
  return a.ray === b.ray && a.pos === b.pos;
}

export function isPunctureEdge(e: EdgeJson): boolean {
  return samePoint(e.from, e.to);
}

export function touchesAccumulation(e: EdgeJson): boolean {
  return e.from.pos === "inf" || e.to.pos === "inf";
}
