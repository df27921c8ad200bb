/** Application state: tabs, selection, and the config panel mode.
 *
 * Overview tabs mirror the server's overviews exactly; the client never
 * invents or reorders providers on its own. Selecting an artifact replaces
 * the related-tab strip (single-selection model) and the strip renders next
 * to the preview rather than in the far tab bar.
 */

import { ArtifactDoc, ViewJson, providerKey } from "./types.js";

export interface Tab {
  key: string;
  title: string;
  kind: "overview" | "search" | "related";
  view: ViewJson | null;
}

export const SEARCH_TAB = "search:results";

export interface AppState {
  tabs: Tab[];
  relatedTabs: Tab[];
  activeTab: string | null;
  selection: string | null;
  preview: ArtifactDoc | null;
  configMode: "off" | ConfigMode;
}

export type ConfigMode = "user" | "team" | "admin";

export function initialApp(): AppState {
  return {
    tabs: [],
    relatedTabs: [],
    activeTab: null,
    selection: null,
    preview: null,
    configMode: "off",
  };
}

function overviewTab(view: ViewJson): Tab {
  return {
    key: `overview:${providerKey(view.provider)}`,
    title: view.provider.name,
    kind: "overview",
    view,
  };
}

/** Replace overview tabs with the server's list; keeps the active tab if it
 * survived (search and related tabs are untouched by a refresh), otherwise
 * activates the first tab. */
export function withOverviews(state: AppState, views: ViewJson[]): AppState {
  const tabs = views.map(overviewTab);
  const searchTab = state.tabs.find((t) => t.kind === "search");
  if (searchTab) tabs.push(searchTab);
  const stillKnown =
    state.activeTab !== null &&
    (tabs.some((t) => t.key === state.activeTab) ||
      state.relatedTabs.some((t) => t.key === state.activeTab));
  const activeTab = stillKnown ? state.activeTab : (tabs[0]?.key ?? null);
  return { ...state, tabs, activeTab };
}

export function withSearchResults(state: AppState, view: ViewJson): AppState {
  const tabs = state.tabs.filter((t) => t.kind !== "search");
  tabs.push({ key: SEARCH_TAB, title: "Search results", kind: "search", view });
  return { ...state, tabs, activeTab: SEARCH_TAB };
}

export function activateTab(state: AppState, key: string): AppState {
  const known =
    state.tabs.some((t) => t.key === key) ||
    state.relatedTabs.some((t) => t.key === key);
  return known ? { ...state, activeTab: key } : state;
}

/** Single-selection: a new selection replaces the previous related strip. */
export function selectArtifact(
  state: AppState,
  artifact: ArtifactDoc,
  related: ViewJson[],
): AppState {
  return {
    ...state,
    selection: artifact.id,
    preview: artifact,
    relatedTabs: related.map((view) => ({
      key: `related:${providerKey(view.provider)}`,
      title: view.provider.name,
      kind: "related",
      view,
    })),
  };
}

export function clearSelection(state: AppState): AppState {
  const activeTab = state.activeTab?.startsWith("related:")
    ? (state.tabs[0]?.key ?? null)
    : state.activeTab;
  return { ...state, selection: null, preview: null, relatedTabs: [], activeTab };
}

export function setConfigMode(state: AppState, mode: "off" | ConfigMode): AppState {
  return { ...state, configMode: mode };
}

export function findTab(state: AppState, key: string): Tab | null {
  return (
    state.tabs.find((t) => t.key === key) ??
    state.relatedTabs.find((t) => t.key === key) ??
    null
  );
}
