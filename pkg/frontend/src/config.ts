/** Config panel model: a checkbox per provider plus reordering. The same
 * panel drives three scopes; which rows and buttons are live depends on the
 * caller's role. Saving is PUT-then-refresh: the caller re-fetches overviews
 * after a successful write so tabs always reflect the server. */

import { ProviderInfo, providerKey } from "./types.js";

export type ConfigScope = "user" | "team" | "admin";

export interface ConfigPanelState {
  /** Registry rows in display order, as provider keys. */
  order: string[];
  checked: Set<string>;
  byKey: Map<string, ProviderInfo>;
}

export function initPanel(
  providers: ProviderInfo[],
  checkedKeys: Iterable<string> = [],
): ConfigPanelState {
  const order = providers.map(providerKey);
  const byKey = new Map(providers.map((p) => [providerKey(p), p]));
  const checked = new Set<string>();
  for (const key of checkedKeys) {
    if (byKey.has(key)) checked.add(key);
  }
  return { order, checked, byKey };
}

export function toggleChecked(state: ConfigPanelState, key: string): ConfigPanelState {
  if (!state.byKey.has(key)) return state;
  const checked = new Set(state.checked);
  if (checked.has(key)) {
    checked.delete(key);
  } else {
    checked.add(key);
  }
  return { ...state, checked };
}

/** Move a row up (delta -1) or down (+1); out-of-range moves are no-ops. */
export function moveRow(
  state: ConfigPanelState,
  key: string,
  delta: -1 | 1,
): ConfigPanelState {
  const from = state.order.indexOf(key);
  const to = from + delta;
  if (from === -1 || to < 0 || to >= state.order.length) return state;
  const order = [...state.order];
  const other = order[to] as string;
  order[to] = key;
  order[from] = other;
  return { ...state, order };
}

function refOf(state: ConfigPanelState, key: string): [string, string] {
  const info = state.byKey.get(key);
  if (!info) throw new Error(`unknown provider row ${key}`);
  return [info.type, info.name];
}

/** Team scope: checked rows, in display order, become the home page. */
export function teamConfigBody(state: ConfigPanelState): {
  home_providers: [string, string][];
} {
  return {
    home_providers: state.order
      .filter((key) => state.checked.has(key))
      .map((key) => refOf(state, key)),
  };
}

/** User scope: unchecked rows are hidden; the display order is kept. */
export function userConfigBody(state: ConfigPanelState): {
  hidden_providers: [string, string][];
  provider_order: [string, string][];
} {
  return {
    hidden_providers: state.order
      .filter((key) => !state.checked.has(key))
      .map((key) => refOf(state, key)),
    provider_order: state.order.map((key) => refOf(state, key)),
  };
}

/** Admin scope: unchecked rows are disabled for everyone. */
export function adminConfigBody(state: ConfigPanelState): {
  disabled_providers: [string, string][];
} {
  return {
    disabled_providers: state.order
      .filter((key) => !state.checked.has(key))
      .map((key) => refOf(state, key)),
  };
}

export function canEdit(scope: ConfigScope, role: string): boolean {
  if (scope === "admin") return role === "admin";
  if (scope === "team") return role === "team-admin" || role === "admin";
  return true;
}
