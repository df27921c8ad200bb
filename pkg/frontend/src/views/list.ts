/** Sortable table view. Clicking a column header toggles ascending and
 * descending order on that column; sorting is pure local UI state. */

import { h, VNode } from "../vdom.js";
import { Payload, timestampOf } from "../types.js";
import { ArtifactLookup, emptyState } from "./shared.js";

export interface SortState {
  column: string;
  descending: boolean;
}

export const LIST_COLUMNS = ["name", "kind", "owner", "views", "created_at"] as const;

type Row = { id: string; cells: Record<string, string | number> };

function cellValue(
  id: string,
  column: string,
  artifacts: ArtifactLookup,
): string | number {
  const artifact = artifacts[id];
  if (!artifact) return column === "name" ? id : "";
  if (column === "name") return artifact.name;
  if (column === "kind") return artifact.kind;
  const raw = artifact.fields[column];
  if (raw === undefined) return "";
  const ts = timestampOf(raw);
  if (ts !== null) return ts;
  if (Array.isArray(raw)) return raw.join(", ");
  if (typeof raw === "boolean") return raw ? "yes" : "no";
  if (typeof raw === "object") return "";
  return raw;
}

function buildRows(payload: Payload, artifacts: ArtifactLookup): Row[] {
  return payload.items.map((item) => {
    const cells: Record<string, string | number> = {};
    for (const column of LIST_COLUMNS) {
      cells[column] = cellValue(item.id, column, artifacts);
    }
    return { id: item.id, cells };
  });
}

/** Stable sort; numbers compare numerically, strings case-insensitively,
 * blanks always sink to the bottom. */
export function sortRows(rows: Row[], sort: SortState | null): Row[] {
  if (!sort) return rows;
  const keyed = rows.map((row, i) => ({ row, i }));
  keyed.sort((a, b) => {
    const va = a.row.cells[sort.column] ?? "";
    const vb = b.row.cells[sort.column] ?? "";
    const blankA = va === "";
    const blankB = vb === "";
    if (blankA !== blankB) return blankA ? 1 : -1;
    let cmp: number;
    if (typeof va === "number" && typeof vb === "number") {
      cmp = va - vb;
    } else {
      cmp = String(va).toLowerCase().localeCompare(String(vb).toLowerCase());
    }
    if (sort.descending) cmp = -cmp;
    return cmp !== 0 ? cmp : a.i - b.i;
  });
  return keyed.map((k) => k.row);
}

export function toggleSort(sort: SortState | null, column: string): SortState {
  if (sort && sort.column === column) {
    return { column, descending: !sort.descending };
  }
  return { column, descending: false };
}

function formatCell(column: string, value: string | number): string {
  if (column === "created_at" && typeof value === "number") {
    return new Date(value * 1000).toISOString().slice(0, 10);
  }
  return String(value);
}

export function renderList(
  payload: Payload,
  artifacts: ArtifactLookup,
  sort: SortState | null = null,
  onSort?: (column: string) => void,
): VNode {
  if (payload.items.length === 0) {
    return h("div", { class: "view-list" }, emptyState("nothing to show"));
  }
  const rows = sortRows(buildRows(payload, artifacts), sort);
  const header = h(
    "tr",
    {},
    LIST_COLUMNS.map((column) => {
      const marker =
        sort && sort.column === column ? (sort.descending ? " ▼" : " ▲") : "";
      const props: Record<string, string | ((event: Event) => void)> = {
        class: "sortable",
        "data-column": column,
      };
      if (onSort) props["onclick"] = () => onSort(column);
      return h("th", props, column + marker);
    }),
  );
  const body = rows.map((row) =>
    h(
      "tr",
      { class: "row", "data-id": row.id },
      LIST_COLUMNS.map((column) =>
        h("td", { "data-column": column }, formatCell(column, row.cells[column] ?? "")),
      ),
    ),
  );
  return h(
    "div",
    { class: "view-list" },
    h("table", {}, h("thead", {}, header), h("tbody", {}, body)),
  );
}
