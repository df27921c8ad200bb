/** 2-D scatter plot at the coordinates the provider supplied: one mark per
 * position, no layout of our own. */

import { h, VNode } from "../vdom.js";
import { Payload } from "../types.js";
import { ArtifactLookup, displayName, emptyState } from "./shared.js";

const SIZE = 600;

export function renderEmbedding(payload: Payload, artifacts: ArtifactLookup): VNode {
  const positions = Object.entries(payload.positions ?? {});
  if (positions.length === 0) {
    return h("div", { class: "view-embedding" }, emptyState("nothing to show"));
  }
  const marks = positions.map(([id, p]) =>
    h(
      "g",
      { class: "mark", "data-id": id },
      h("circle", { class: "mark-dot", cx: p.x * SIZE, cy: p.y * SIZE, r: 6 }),
      h(
        "title",
        {},
        `${displayName(id, artifacts)} (${p.x.toFixed(3)}, ${p.y.toFixed(3)})`,
      ),
    ),
  );
  return h(
    "div",
    { class: "view-embedding" },
    h("svg", { viewBox: `0 0 ${SIZE} ${SIZE}`, class: "embedding-canvas" }, marks),
  );
}
