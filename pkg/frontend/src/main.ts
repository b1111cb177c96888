/** DOM layer: draws the scene as SVG and wires clicks to mutations. */

import { ApiClient } from "./api.js";
import { ViewState, clickArc, startSession, undoStep } from "./app.js";
import { Scene, render } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof SVGElementTagNameMap>(
  name: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, v);
  }
  return node;
}

function draw(svg: SVGSVGElement, scene: Scene, onClick: (key: string) => void): void {
  svg.replaceChildren();
  svg.appendChild(
    el("circle", { cx: "250", cy: "250", r: "220", class: "boundary" }),
  );
  for (const arc of scene.arcs) {
    const classes = ["arc"];
    if (arc.limit) classes.push("limit");
    if (!arc.mutable) classes.push("frozen");
    if (arc.selected) classes.push("selected");
    const path = el("path", { d: arc.path, class: classes.join(" ") });
    path.addEventListener("click", () => onClick(arc.key));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = arc.label ? `${arc.key} = ${arc.label}` : arc.key;
    path.appendChild(title);
    svg.appendChild(path);
    if (arc.notch) {
      svg.appendChild(
        el("line", {
          x1: String(arc.notch.x1),
          y1: String(arc.notch.y1),
          x2: String(arc.notch.x2),
          y2: String(arc.notch.y2),
          class: "notch",
        }),
      );
    }
  }
  for (const p of scene.points) {
    svg.appendChild(
      el("circle", {
        cx: p.x.toFixed(2),
        cy: p.y.toFixed(2),
        r: p.accumulation ? "6" : "3.5",
        class: p.accumulation ? "point accumulation" : "point",
      }),
    );
  }
  svg.appendChild(
    el("circle", {
      cx: String(scene.puncture.x),
      cy: String(scene.puncture.y),
      r: "4",
      class: "puncture",
    }),
  );
}

async function boot(): Promise<void> {
  const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
  const api = new ApiClient(apiBase);
  const svg = document.querySelector<SVGSVGElement>("#disk")!;
  const toast = document.querySelector<HTMLElement>("#toast")!;
  const form = document.querySelector<HTMLFormElement>("#controls")!;
  let state: ViewState | null = null;

  const repaint = () => {
    if (!state) return;
    const scene = render({
      model: state.model,
      window: state.window,
      selected: state.selected,
      notice: state.notice,
    });
    draw(svg, scene, async (key) => {
      if (!state) return;
      const shape = scene.arcs.find((a) => a.key === key);
      if (!shape) return;
      state = await clickArc(state, api, shape.edge);
      repaint();
    });
    toast.textContent = state.notice ?? "";
    toast.className = state.notice ? "visible" : "";
  };

  const restart = async () => {
    const n = Number((form.elements.namedItem("n") as HTMLInputElement).value);
    const completed = (form.elements.namedItem("completed") as HTMLInputElement).checked;
    const bound = Number((form.elements.namedItem("bound") as HTMLInputElement).value);
    state = await startSession(api, { n, completed }, bound);
    repaint();
  };

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void restart();
  });
  document.querySelector("#undo")!.addEventListener("click", async () => {
    if (state) {
      state = await undoStep(state, api);
      repaint();
    }
  });
  await restart();
}

if (typeof document !== "undefined") {
  void boot();
}
