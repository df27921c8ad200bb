import { h, VNode } from "../vdom.js";
import { ArtifactDoc, PayloadItem } from "../types.js";

export type ArtifactLookup = Record<string, ArtifactDoc>;

export function displayName(id: string, artifacts: ArtifactLookup): string {
  return artifacts[id]?.name ?? id;
}

export function displayKind(id: string, artifacts: ArtifactLookup): string {
  return artifacts[id]?.kind ?? "";
}

/** Chip for one artifact; every view builds on this so selection wiring is
 * uniform. data-id carries the artifact id for the click handler. */
export function artifactChip(
  item: PayloadItem,
  artifacts: ArtifactLookup,
  className: string,
): VNode {
  const annotations = item.annotations
    ? Object.entries(item.annotations).map(([key, value]) =>
        h("span", { class: "annotation", "data-key": key }, `${key}: ${value}`),
      )
    : [];
  return h(
    "div",
    { class: className, "data-id": item.id },
    h("span", { class: "chip-name" }, displayName(item.id, artifacts)),
    h("span", { class: "chip-kind" }, displayKind(item.id, artifacts)),
    annotations,
  );
}

export function emptyState(message: string): VNode {
  return h("div", { class: "empty-state" }, message);
}

export function errorCard(message: string, kind = "error"): VNode {
  return h(
    "div",
    { class: "error-card", "data-kind": kind },
    h("span", { class: "error-kind" }, kind),
    h("span", { class: "error-message" }, message),
  );
}
