import { h, VNode } from "../vdom.js";
import { Payload } from "../types.js";
import { ArtifactLookup, artifactChip, emptyState } from "./shared.js";

export function renderTiles(payload: Payload, artifacts: ArtifactLookup): VNode {
  if (payload.items.length === 0) {
    return h("div", { class: "view-tiles" }, emptyState("nothing to show"));
  }
  return h(
    "div",
    { class: "view-tiles" },
    payload.items.map((item) => artifactChip(item, artifacts, "tile")),
  );
}
