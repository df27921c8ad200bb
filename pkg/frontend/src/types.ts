/** Wire types for the discovery REST API. */

export type Representation =
  | "TILES"
  | "LIST"
  | "HIERARCHY"
  | "GRAPH"
  | "CATEGORIES"
  | "EMBEDDING";

export type InputType = "TABLEID" | "USERID" | "TEXT";

export interface InputSlot {
  type: InputType;
  required: boolean;
}

export interface RankingEntry {
  field: string;
  weight: number;
}

export interface ProviderInfo {
  type: string;
  name: string;
  description: string;
  representation: Representation;
  input: InputSlot[];
  visible: Record<string, boolean>;
  endpoint?: string;
  ranking?: RankingEntry[];
}

export interface PayloadItem {
  id: string;
  annotations?: Record<string, string>;
}

export interface PayloadEdge {
  from: string;
  to: string;
  label?: string;
}

export interface Point {
  x: number;
  y: number;
}

export interface Payload {
  representation: Representation;
  items: PayloadItem[];
  edges?: PayloadEdge[];
  children?: Record<string, string[]>;
  categories?: Record<string, string[]>;
  positions?: Record<string, Point>;
}

// Timestamps arrive as {ts: seconds}; lists stay lists.
export type FieldValue =
  | string
  | number
  | boolean
  | string[]
  | { ts: number };

export interface ArtifactDoc {
  id: string;
  kind: string;
  name: string;
  fields: Record<string, FieldValue>;
  columns?: string[];
  position?: Point;
}

export interface ApiErrorBody {
  kind: string;
  message: string;
  position?: number;
  expected?: string[];
  path?: string;
}

/** One provider-rendered view; payload and error are mutually exclusive. */
export interface ViewJson {
  provider: ProviderInfo;
  payload?: Payload;
  artifacts?: Record<string, ArtifactDoc>;
  error?: ApiErrorBody;
}

export interface Suggestion {
  kind: "provider" | "field" | "value" | "hint";
  text: string;
}

export type AstJson =
  | { node: "all" }
  | { node: "keyword"; text: string }
  | { node: "pill"; field: string; value: string }
  | { node: "call"; name: string; args: string[] }
  | { node: "and"; left: AstJson; right: AstJson }
  | { node: "or"; left: AstJson; right: AstJson }
  | { node: "not"; child: AstJson }
  | { node: "group"; child: AstJson };

export interface UserConfigJson {
  user_id: string;
  team: string | null;
  hidden_providers: [string, string][];
  provider_order: [string, string][];
}

export interface TeamConfigJson {
  team: string;
  home_providers: [string, string][];
}

export interface AdminConfigJson {
  disabled_providers: [string, string][];
}

/** Stable key for a provider reference, used for tabs and config rows. */
export function providerKey(ref: { type: string; name: string }): string {
  return `${ref.type}/${ref.name}`;
}

export function timestampOf(value: FieldValue): number | null {
  if (typeof value === "object" && !Array.isArray(value) && "ts" in value) {
    return value.ts;
  }
  return null;
}
