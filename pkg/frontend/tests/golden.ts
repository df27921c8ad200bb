/** Golden payloads: one per representation, shapes hand-counted so the
 * render tests can assert exact structural element counts. */

import { ArtifactDoc, Payload, ViewJson } from "../src/types.js";

export const ARTIFACTS: Record<string, ArtifactDoc> = {
  t1: {
    id: "t1",
    kind: "table",
    name: "AIRLINES",
    fields: { owner: "Maya Flores", views: 10, favorite: true, created_at: { ts: 1717200000 } },
    columns: ["carrier_id", "flight_no"],
    position: { x: 0.12, y: 0.3 },
  },
  t2: {
    id: "t2",
    kind: "table",
    name: "CARRIERS",
    fields: { owner: "Maya Flores", views: 4, created_at: { ts: 1714608000 } },
  },
  t3: {
    id: "t3",
    kind: "table",
    name: "FLIGHTS",
    fields: { owner: "Dev Patel", views: 7, created_at: { ts: 1719800000 } },
  },
  w1: {
    id: "w1",
    kind: "workbook",
    name: "Fleet Utilization",
    fields: { owner: "John Doe", views: 12 },
  },
};

export const TILES: Payload = {
  representation: "TILES",
  items: [
    { id: "t1", annotations: { note: "hub" } },
    { id: "t2" },
    { id: "t3" },
    { id: "w1" },
  ],
};

export const LIST: Payload = {
  representation: "LIST",
  items: [{ id: "t1" }, { id: "t2" }, { id: "w1" }],
};

export const EMPTY_LIST: Payload = { representation: "LIST", items: [] };

// One root (t1); t3 is a child of t2, which is a child of t1, plus w1 under t1.
export const HIERARCHY: Payload = {
  representation: "HIERARCHY",
  items: [{ id: "t1" }, { id: "t2" }, { id: "t3" }, { id: "w1" }],
  children: { t1: ["t2", "w1"], t2: ["t3"] },
};

// The two-node one-edge shape; counts are asserted verbatim.
export const GRAPH: Payload = {
  representation: "GRAPH",
  items: [{ id: "t1" }, { id: "t2" }],
  edges: [{ from: "t1", to: "t2", label: "carrier_id" }],
};

export const GRAPH_TRIANGLE: Payload = {
  representation: "GRAPH",
  items: [{ id: "t1" }, { id: "t2" }, { id: "t3" }, { id: "w1" }],
  edges: [
    { from: "t1", to: "t2", label: "carrier_id" },
    { from: "t1", to: "t3", label: "flight_no" },
    { from: "t2", to: "t3" },
  ],
};

export const CATEGORIES: Payload = {
  representation: "CATEGORIES",
  items: [{ id: "t1" }, { id: "t2" }, { id: "w1" }],
  categories: { tables: ["t1", "t2"], workbooks: ["w1"] },
};

export const EMBEDDING: Payload = {
  representation: "EMBEDDING",
  items: [{ id: "t1" }, { id: "t2" }, { id: "t3" }],
  positions: {
    t1: { x: 0.12, y: 0.3 },
    t2: { x: 0.18, y: 0.36 },
    t3: { x: 0.25, y: 0.28 },
  },
};

export const FAILED_VIEW: ViewJson = {
  provider: {
    type: "recents",
    name: "Recent Documents",
    description: "",
    representation: "LIST",
    input: [],
    visible: {},
  },
  error: { kind: "provider_unavailable", message: "connection refused" },
};
