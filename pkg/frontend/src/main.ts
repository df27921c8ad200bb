/** Browser bootstrap: wires state, API client, and DOM together.
 *
 * Base URL comes from the `api` query parameter (dev mode), falling back to
 * same-origin. Identity is picked through plain header fields in the top
 * bar since the backend's auth is a stub.
 */

import { ApiClient, ApiError, latestWins } from "./api.js";
import {
  AppState,
  activateTab,
  clearSelection,
  findTab,
  initialApp,
  selectArtifact,
  setConfigMode,
  withOverviews,
  withSearchResults,
} from "./app.js";
import {
  ConfigPanelState,
  canEdit,
  initPanel,
  moveRow,
  teamConfigBody,
  toggleChecked,
  userConfigBody,
} from "./config.js";
import {
  EditorState,
  acceptSuggestion,
  applySuggestions,
  commitText,
  editText,
  initialEditor,
  removePill,
  serializedQuery,
  setParseError,
  suggestRequest,
} from "./editor.js";
import { pillLabel } from "./pills.js";
import { replaceChildren } from "./dom.js";
import { Child, h, VNode } from "./vdom.js";
import { ArtifactDoc, Suggestion, ViewJson, timestampOf } from "./types.js";
import { renderViewResult } from "./views/index.js";
import { SortState, toggleSort } from "./views/list.js";

interface UiState {
  app: AppState;
  editor: EditorState;
  panel: ConfigPanelState | null;
  sort: SortState | null;
  expanded: Set<string>;
  toast: string | null;
}

function baseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? window.location.origin;
}

function identity(): { user: string; role: "user" | "team-admin" | "admin" } {
  const params = new URLSearchParams(window.location.search);
  const role = params.get("role");
  return {
    user: params.get("user") ?? "anonymous",
    role: role === "admin" || role === "team-admin" ? role : "user",
  };
}

export function start(root: Element): void {
  const client = new ApiClient(baseUrl(), identity());
  const state: UiState = {
    app: initialApp(),
    editor: initialEditor(),
    panel: null,
    sort: null,
    expanded: new Set(),
    toast: null,
  };

  const suggestLater = latestWins(async (signal, q: string, cursor: number) => {
    const response = await client.suggest(q, cursor, signal);
    return { q, suggestions: response.suggestions };
  });

  const render = (): void => replaceChildren(root, page());

  const refreshOverviews = async (): Promise<void> => {
    const { views } = await client.overviews();
    state.app = withOverviews(state.app, views);
    render();
  };

  const runSearch = async (): Promise<void> => {
    const q = serializedQuery(state.editor);
    try {
      const { ids, artifacts } = await client.search(q);
      const byId: Record<string, ArtifactDoc> = {};
      for (const artifact of artifacts) byId[artifact.id] = artifact;
      const view: ViewJson = {
        provider: {
          type: "search",
          name: "Search results",
          description: q ? `results for ${q}` : "all artifacts, ranked",
          representation: "LIST",
          input: [],
          visible: {},
        },
        payload: { representation: "LIST", items: ids.map((id) => ({ id })) },
        artifacts: byId,
      };
      state.app = withSearchResults(state.app, view);
    } catch (error) {
      if (error instanceof ApiError && error.body.position !== undefined) {
        state.editor = setParseError(state.editor, error.body.position, error.message);
      } else {
        state.toast = String(error);
      }
    }
    render();
  };

  const onEdit = async (text: string): Promise<void> => {
    state.editor = editText(state.editor, text);
    render();
    const { q, cursor } = suggestRequest(state.editor);
    const reply = await suggestLater(q, cursor);
    if (reply && serializedQuery(state.editor) === reply.q) {
      state.editor = applySuggestions(state.editor, state.editor.text, reply.suggestions);
      render();
    }
  };

  const onSelect = async (id: string): Promise<void> => {
    try {
      const { artifact, views } = await client.related(id);
      state.app = selectArtifact(state.app, artifact, views);
    } catch (error) {
      state.toast = error instanceof ApiError ? error.message : String(error);
    }
    render();
  };

  const openConfig = async (mode: "user" | "team" | "admin"): Promise<void> => {
    const { providers } = await client.providers("");
    const checked =
      mode === "team" ? [] : providers.map((p) => `${p.type}/${p.name}`);
    state.panel = initPanel(providers, checked);
    state.app = setConfigMode(state.app, mode);
    render();
  };

  const saveConfig = async (): Promise<void> => {
    if (!state.panel || state.app.configMode === "off") return;
    const mode = state.app.configMode;
    try {
      if (mode === "team") {
        const team = window.prompt("team name") ?? "";
        await client.putTeamConfig(team, teamConfigBody(state.panel));
      } else if (mode === "user") {
        await client.putUserConfig(userConfigBody(state.panel));
      }
      state.app = setConfigMode(state.app, "off");
      state.panel = null;
      await refreshOverviews();
    } catch (error) {
      state.toast = error instanceof ApiError ? error.message : String(error);
      render();
    }
  };

  const pillBar = (): VNode => {
    const pills = state.editor.pills.map((pill, index) =>
      h(
        "span",
        { class: "pill", "data-index": index },
        pillLabel(pill),
        h(
          "button",
          {
            class: "pill-remove",
            onclick: () => {
              state.editor = removePill(state.editor, index);
              void runSearch();
            },
          },
          "×",
        ),
      ),
    );
    const input = h("input", {
      class: "query-input",
      value: state.editor.text,
      placeholder: "search, field: value, :provider()",
      oninput: (event: Event) =>
        void onEdit((event.target as HTMLInputElement).value),
      onkeydown: (event: Event) => {
        const key = (event as KeyboardEvent).key;
        if (key === "Enter") {
          state.editor = commitText(state.editor);
          void runSearch();
        } else if (key === "Backspace" && state.editor.text === "") {
          state.editor = removePill(state.editor, state.editor.pills.length - 1);
          void runSearch();
        }
      },
    });
    const dropdown = state.editor.suggestions.map((s: Suggestion) =>
      h(
        "div",
        {
          class: `suggestion suggestion-${s.kind}`,
          onclick: () => {
            state.editor = acceptSuggestion(state.editor, s);
            void runSearch();
          },
        },
        `${s.kind}: ${s.text}`,
      ),
    );
    const error = state.editor.error
      ? [
          h(
            "div",
            { class: "parse-error" },
            `${state.editor.error.message} @ ${state.editor.error.position}`,
          ),
        ]
      : [];
    return h(
      "div",
      { class: "query-editor" },
      h("div", { class: "pill-bar" }, pills, input),
      h("div", { class: "suggestions" }, dropdown),
      error,
    );
  };

  const preview = (): Child[] => {
    const artifact = state.app.preview;
    if (!artifact) return [];
    const fields = Object.entries(artifact.fields).map(([key, value]) => {
      const ts = timestampOf(value);
      const shown = ts !== null
        ? new Date(ts * 1000).toISOString().slice(0, 10)
        : Array.isArray(value)
          ? value.join(", ")
          : String(value);
      return h("div", { class: "preview-field" }, `${key}: ${shown}`);
    });
    const related = state.app.relatedTabs.map((tab) =>
      h(
        "button",
        {
          class: "related-tab",
          onclick: () => {
            state.app = activateTab(state.app, tab.key);
            render();
          },
        },
        tab.title,
      ),
    );
    return [
      h(
        "aside",
        { class: "preview" },
        h("h2", {}, artifact.name),
        h("div", { class: "preview-kind" }, artifact.kind),
        fields,
        artifact.columns
          ? h("div", { class: "preview-columns" }, artifact.columns.join(", "))
          : null,
        h("div", { class: "related-tabs" }, related),
        h(
          "button",
          {
            class: "preview-close",
            onclick: () => {
              state.app = clearSelection(state.app);
              render();
            },
          },
          "close",
        ),
      ),
    ];
  };

  const configPanel = (): Child[] => {
    if (state.app.configMode === "off" || !state.panel) return [];
    const role = client.identity.role ?? "user";
    const editable = canEdit(state.app.configMode, role);
    const rows = state.panel.order.map((key) => {
      const info = state.panel!.byKey.get(key)!;
      return h(
        "div",
        { class: "config-row", "data-key": key },
        h("input", {
          type: "checkbox",
          checked: state.panel!.checked.has(key),
          disabled: !editable,
          onchange: () => {
            state.panel = toggleChecked(state.panel!, key);
            render();
          },
        }),
        h("span", { class: "config-name" }, `${info.name} (${info.type})`),
        h(
          "button",
          {
            class: "config-up",
            disabled: !editable,
            onclick: () => {
              state.panel = moveRow(state.panel!, key, -1);
              render();
            },
          },
          "↑",
        ),
        h(
          "button",
          {
            class: "config-down",
            disabled: !editable,
            onclick: () => {
              state.panel = moveRow(state.panel!, key, 1);
              render();
            },
          },
          "↓",
        ),
      );
    });
    return [
      h(
        "section",
        { class: editable ? "config-panel" : "config-panel disabled" },
        h("h2", {}, `${state.app.configMode} configuration`),
        rows,
        h(
          "button",
          { class: "config-save", disabled: !editable, onclick: () => void saveConfig() },
          "save",
        ),
        h(
          "button",
          {
            class: "config-cancel",
            onclick: () => {
              state.app = setConfigMode(state.app, "off");
              state.panel = null;
              render();
            },
          },
          "cancel",
        ),
      ),
    ];
  };

  const page = (): VNode => {
    const tabButtons = [...state.app.tabs, ...state.app.relatedTabs].map((tab) =>
      h(
        "button",
        {
          class: tab.key === state.app.activeTab ? "tab active" : "tab",
          onclick: () => {
            state.app = activateTab(state.app, tab.key);
            render();
          },
        },
        tab.title,
      ),
    );
    const active = state.app.activeTab ? findTab(state.app, state.app.activeTab) : null;
    const body = active?.view
      ? renderViewResult(active.view, {
          sort: state.sort,
          expanded: state.expanded,
          onSort: (column) => {
            state.sort = toggleSort(state.sort, column);
            render();
          },
          onToggle: (id) => {
            if (state.expanded.has(id)) {
              state.expanded.delete(id);
            } else {
              state.expanded.add(id);
            }
            render();
          },
        })
      : h("div", { class: "empty-state" }, "loading…");

    // Clicks bubble here; any element carrying data-id selects that artifact.
    const content = h(
      "main",
      {
        class: "content",
        onclick: (event: Event) => {
          const target = (event.target as Element).closest?.("[data-id]");
          const id = target?.getAttribute("data-id");
          if (id) void onSelect(id);
        },
      },
      body,
    );

    return h(
      "div",
      { class: "app" },
      h(
        "header",
        { class: "topbar" },
        h("h1", {}, "Data discovery"),
        pillBar(),
        h(
          "nav",
          { class: "config-buttons" },
          h("button", { onclick: () => void openConfig("user") }, "my views"),
          h("button", { onclick: () => void openConfig("team") }, "team"),
          h("button", { onclick: () => void openConfig("admin") }, "admin"),
        ),
      ),
      h("div", { class: "tabs" }, tabButtons),
      content,
      preview(),
      configPanel(),
      state.toast ? h("div", { class: "toast" }, state.toast) : null,
    );
  };

  render();
  void refreshOverviews();
}

declare global {
  interface Window {
    __discoveryStart?: typeof start;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start(document.getElementById("app") as Element);
} else if (typeof window !== "undefined") {
  window.__discoveryStart = start;
}
