/** Node-link diagram. Positions come from the deterministic force layout
 * since GRAPH payloads carry topology only. */

import { h, VNode } from "../vdom.js";
import { Payload } from "../types.js";
import { forceLayout } from "../layout.js";
import { ArtifactLookup, displayName, emptyState } from "./shared.js";

const SIZE = 600;

export function renderGraph(payload: Payload, artifacts: ArtifactLookup): VNode {
  if (payload.items.length === 0) {
    return h("div", { class: "view-graph" }, emptyState("nothing to show"));
  }
  const ids = payload.items.map((i) => i.id);
  const positions = forceLayout(ids, payload.edges ?? []);
  const point = (id: string): { x: number; y: number } =>
    positions.get(id) ?? { x: 0.5, y: 0.5 };

  const edges = (payload.edges ?? []).map((edge) => {
    const a = point(edge.from);
    const b = point(edge.to);
    const parts: VNode[] = [
      h("line", {
        class: "graph-edge",
        "data-from": edge.from,
        "data-to": edge.to,
        x1: a.x * SIZE,
        y1: a.y * SIZE,
        x2: b.x * SIZE,
        y2: b.y * SIZE,
      }),
    ];
    if (edge.label) {
      parts.push(
        h(
          "text",
          {
            class: "graph-edge-label",
            x: ((a.x + b.x) / 2) * SIZE,
            y: ((a.y + b.y) / 2) * SIZE,
          },
          edge.label,
        ),
      );
    }
    return h("g", { class: "graph-edge-group" }, parts);
  });

  const nodes = ids.map((id) => {
    const p = point(id);
    return h(
      "g",
      { class: "graph-node", "data-id": id },
      h("circle", { class: "graph-node-dot", cx: p.x * SIZE, cy: p.y * SIZE, r: 14 }),
      h(
        "text",
        { class: "graph-node-label", x: p.x * SIZE, y: p.y * SIZE - 20 },
        displayName(id, artifacts),
      ),
    );
  });

  return h(
    "div",
    { class: "view-graph" },
    h("svg", { viewBox: `0 0 ${SIZE} ${SIZE}`, class: "graph-canvas" }, edges, nodes),
  );
}
