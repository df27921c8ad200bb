/** Flat named groups with item counts. */

import { h, VNode } from "../vdom.js";
import { Payload } from "../types.js";
import { ArtifactLookup, artifactChip, emptyState } from "./shared.js";

export function renderCategories(payload: Payload, artifacts: ArtifactLookup): VNode {
  const categories = Object.entries(payload.categories ?? {});
  if (categories.length === 0) {
    return h("div", { class: "view-categories" }, emptyState("nothing to show"));
  }
  const byId = new Map(payload.items.map((item) => [item.id, item]));
  const sections = categories.map(([label, ids]) =>
    h(
      "section",
      { class: "category", "data-label": label },
      h(
        "header",
        { class: "category-header" },
        h("span", { class: "category-label" }, label),
        h("span", { class: "category-count" }, String(ids.length)),
      ),
      h(
        "div",
        { class: "category-items" },
        ids.map((id) =>
          artifactChip(byId.get(id) ?? { id }, artifacts, "category-item"),
        ),
      ),
    ),
  );
  return h("div", { class: "view-categories" }, sections);
}
