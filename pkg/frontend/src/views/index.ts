/** Dispatch a payload to its renderer. Renderers are pure functions of
 * payload + local UI state; anything structurally wrong becomes an inline
 * error card instead of throwing into the page. */

import { h, VNode } from "../vdom.js";
import { Payload, ViewJson } from "../types.js";
import { ArtifactLookup, errorCard } from "./shared.js";
import { renderTiles } from "./tiles.js";
import { renderList, SortState } from "./list.js";
import { renderHierarchy } from "./hierarchy.js";
import { renderGraph } from "./graph.js";
import { renderCategories } from "./categories.js";
import { renderEmbedding } from "./embedding.js";

export interface ViewUiState {
  sort?: SortState | null;
  expanded?: ReadonlySet<string>;
  onSort?: (column: string) => void;
  onToggle?: (id: string) => void;
}

export function renderView(
  payload: Payload,
  artifacts: ArtifactLookup = {},
  ui: ViewUiState = {},
): VNode {
  if (!payload || !Array.isArray(payload.items)) {
    return errorCard("payload has no items section", "malformed_payload");
  }
  switch (payload.representation) {
    case "TILES":
      return renderTiles(payload, artifacts);
    case "LIST":
      return renderList(payload, artifacts, ui.sort ?? null, ui.onSort);
    case "HIERARCHY":
      return renderHierarchy(payload, artifacts, ui.expanded ?? new Set(), ui.onToggle);
    case "GRAPH":
      return renderGraph(payload, artifacts);
    case "CATEGORIES":
      return renderCategories(payload, artifacts);
    case "EMBEDDING":
      return renderEmbedding(payload, artifacts);
    default:
      return errorCard(
        `unknown representation ${JSON.stringify(payload.representation)}`,
        "malformed_payload",
      );
  }
}

/** Render one server view result: payload when the provider answered,
 * error card when it failed (fault isolation keeps failed views inline). */
export function renderViewResult(view: ViewJson, ui: ViewUiState = {}): VNode {
  if (view.error) {
    return h(
      "div",
      { class: "view-result failed" },
      errorCard(view.error.message, view.error.kind),
    );
  }
  if (!view.payload) {
    return h(
      "div",
      { class: "view-result failed" },
      errorCard("provider returned no payload", "malformed_payload"),
    );
  }
  return h(
    "div",
    { class: "view-result" },
    renderView(view.payload, view.artifacts ?? {}, ui),
  );
}
