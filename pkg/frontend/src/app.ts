/** View-state transitions.  At most one mutate request is in flight per
 * session; while pending, clicks are ignored. */

import type { ApiClient } from "./api.js";
import { EdgeJson, ModelJson, WindowJson, edgeKey } from "./types.js";

export interface ViewState {
  sessionId: string;
  model: ModelJson;
  bound: number;
  window: WindowJson;
  selected: string | null;
  notice: string | null;
  pending: boolean;
  steps: number;
}

export async function startSession(
  api: ApiClient,
  model: ModelJson,
  bound: number,
): Promise<ViewState> {
  const sess = await api.createSession(model);
  const win = await api.window(sess.id, bound);
  return {
    sessionId: sess.id,
    model,
    bound,
    window: win,
    selected: null,
    notice: null,
    pending: false,
    steps: 0,
  };
}

export async function clickArc(state: ViewState, api: ApiClient, edge: EdgeJson): Promise<ViewState> {
  if (state.pending) {
    return state;
  }
  const busy: ViewState = { ...state, pending: true, notice: null };
  const result = await api.mutate(state.sessionId, edge);
  if (!result.ok) {
    const what = result.code === "NonMutable" ? "non-mutable arc" : result.message;
    return { ...busy, pending: false, notice: `${edgeKey(edge)}: ${what}` };
  }
  const win = await api.window(state.sessionId, state.bound);
  return {
    ...busy,
    pending: false,
    window: win,
    selected: edgeKey(result.replacement),
    steps: state.steps + 1,
  };
}

export async function undoStep(state: ViewState, api: ApiClient): Promise<ViewState> {
  if (state.pending || state.steps === 0) {
    return state;
  }
  const busy: ViewState = { ...state, pending: true, notice: null };
  const restored = await api.undo(state.sessionId);
  const win = await api.window(state.sessionId, state.bound);
  return {
    ...busy,
    pending: false,
    window: win,
    selected: restored ? edgeKey(restored.restored) : null,
    steps: Math.max(0, state.steps - 1),
  };
}
