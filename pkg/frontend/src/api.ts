/** Thin typed client for the disk service. */

import type {
  EdgeJson,
  ModelJson,
  MutateResult,
  SessionInfo,
  TriangulationJson,
  WindowJson,
} from "./types.js";

export class ApiClient {
  constructor(private readonly base: string) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(this.base + path);
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({}));
      throw new Error(`${resp.status}: ${body.message ?? path}`);
    }
    return (await resp.json()) as T;
  }

  async model(): Promise<ModelJson> {
    return this.get<ModelJson>("/api/model");
  }

  async createSession(model?: ModelJson): Promise<SessionInfo> {
    const resp = await fetch(`${this.base}/api/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(model ? { model } : {}),
    });
    if (!resp.ok) {
      throw new Error(`session creation failed: ${resp.status}`);
    }
    return (await resp.json()) as SessionInfo;
  }

  async window(sessionId: string, bound: number): Promise<WindowJson> {
    return this.get<WindowJson>(`/api/session/${sessionId}/window?bound=${bound}`);
  }

  async mutate(sessionId: string, edge: EdgeJson): Promise<MutateResult> {
    const resp = await fetch(`${this.base}/api/session/${sessionId}/mutate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ edge }),
    });
    const body = await resp.json();
    if (resp.ok) {
      return { ok: true, replacement: body.replacement, triangulation: body.triangulation };
    }
    return { ok: false, code: body.code ?? "Error", message: body.message ?? "" };
  }

  async undo(sessionId: string): Promise<{ restored: EdgeJson; triangulation: TriangulationJson } | null> {
    const resp = await fetch(`${this.base}/api/session/${sessionId}/undo`, {
      method: "POST",
    });
    if (!resp.ok) {
      return null;
    }
    return (await resp.json()) as { restored: EdgeJson; triangulation: TriangulationJson };
  }
}
