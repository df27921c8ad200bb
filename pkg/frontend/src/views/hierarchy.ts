/** Expandable tree of arbitrary depth. Roots are the items no other item
 * lists as a child; children render only while their parent is expanded. */

import { h, VNode } from "../vdom.js";
import { Payload } from "../types.js";
import { ArtifactLookup, displayName, emptyState } from "./shared.js";

export function hierarchyRoots(payload: Payload): string[] {
  const referenced = new Set<string>();
  for (const kids of Object.values(payload.children ?? {})) {
    for (const kid of kids) referenced.add(kid);
  }
  return payload.items.map((i) => i.id).filter((id) => !referenced.has(id));
}

export function toggleExpanded(expanded: ReadonlySet<string>, id: string): Set<string> {
  const next = new Set(expanded);
  if (next.has(id)) {
    next.delete(id);
  } else {
    next.add(id);
  }
  return next;
}

function renderNode(
  id: string,
  payload: Payload,
  artifacts: ArtifactLookup,
  expanded: ReadonlySet<string>,
  onToggle: ((id: string) => void) | undefined,
  seen: Set<string>,
): VNode {
  const kids = payload.children?.[id] ?? [];
  const open = expanded.has(id);
  const props: Record<string, string | ((event: Event) => void)> = {
    class: "tree-toggle",
    "data-id": id,
  };
  if (onToggle) props["onclick"] = () => onToggle(id);
  const marker = kids.length === 0 ? "·" : open ? "−" : "+";
  const line = h(
    "div",
    { class: "tree-line" },
    h("span", props, marker),
    h("span", { class: "tree-name", "data-id": id }, displayName(id, artifacts)),
  );
  const nested: VNode[] = [];
  if (open && kids.length > 0) {
    // seen guards display only; the server already rejects cyclic payloads.
    const children = kids
      .filter((kid) => !seen.has(kid))
      .map((kid) =>
        renderNode(kid, payload, artifacts, expanded, onToggle, new Set([...seen, kid])),
      );
    nested.push(h("ul", { class: "tree-children" }, children));
  }
  return h("li", { class: "tree-node", "data-id": id }, line, nested);
}

export function renderHierarchy(
  payload: Payload,
  artifacts: ArtifactLookup,
  expanded: ReadonlySet<string> = new Set(),
  onToggle?: (id: string) => void,
): VNode {
  const roots = hierarchyRoots(payload);
  if (roots.length === 0) {
    return h("div", { class: "view-hierarchy" }, emptyState("nothing to show"));
  }
  return h(
    "div",
    { class: "view-hierarchy" },
    h(
      "ul",
      { class: "tree-root" },
      roots.map((id) =>
        renderNode(id, payload, artifacts, expanded, onToggle, new Set([id])),
      ),
    ),
  );
}
