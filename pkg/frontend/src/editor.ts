/** Query editor state: accepted pills plus the free text being typed.
 *
 * Every edit requests fresh suggestions; responses are applied latest-wins
 * (a reply for text the user has since changed is dropped). Accepting a
 * value suggestion completes the pending `field: ` into a pill, accepting a
 * provider becomes a call pill, accepting a field rewrites the text to
 * `field: ` so the value dropdown follows. Server parse errors carry a
 * character position into the serialized query for underlining.
 */

import { Pill, serializeQuery } from "./pills.js";
import { Suggestion } from "./types.js";

export interface ParseIndication {
  position: number;
  message: string;
}

export interface EditorState {
  pills: Pill[];
  text: string;
  suggestions: Suggestion[];
  /** Text the current suggestions were computed for. */
  suggestionsFor: string | null;
  error: ParseIndication | null;
}

export function initialEditor(): EditorState {
  return { pills: [], text: "", suggestions: [], suggestionsFor: null, error: null };
}

export function editText(state: EditorState, text: string): EditorState {
  return { ...state, text, error: null };
}

/** Apply a suggest response. Ignored unless it answers the current text. */
export function applySuggestions(
  state: EditorState,
  forText: string,
  suggestions: Suggestion[],
): EditorState {
  if (forText !== state.text) return state;
  return { ...state, suggestions, suggestionsFor: forText };
}

const PENDING_FIELD = /^\s*([A-Za-z0-9_][A-Za-z0-9_.\-]*):\s*(.*)$/;

/** The field name when the text looks like `owner: ` awaiting its value. */
export function pendingField(text: string): string | null {
  const m = PENDING_FIELD.exec(text);
  return m ? (m[1] as string) : null;
}

export function acceptSuggestion(state: EditorState, s: Suggestion): EditorState {
  const cleared = { suggestions: [], suggestionsFor: null, error: null };
  switch (s.kind) {
    case "provider":
      return {
        ...state,
        ...cleared,
        pills: [...state.pills, { kind: "call", name: s.text, args: [] }],
        text: "",
      };
    case "field":
      return { ...state, ...cleared, text: `${s.text}: ` };
    case "value": {
      const field = pendingField(state.text);
      if (field) {
        return {
          ...state,
          ...cleared,
          pills: [...state.pills, { kind: "field", field, value: s.text, quoted: true }],
          text: "",
        };
      }
      return {
        ...state,
        ...cleared,
        pills: [...state.pills, { kind: "keyword", text: s.text, quoted: true }],
        text: "",
      };
    }
    case "hint":
      return state;
  }
}

/** Commit whatever is typed as a pill (enter on free text). Explicit quotes
 * in the typed value survive into the pill's serialization. */
export function commitText(state: EditorState): EditorState {
  const text = state.text.trim();
  if (!text) return state;
  const field = pendingField(state.text);
  const rest = field ? state.text.slice(state.text.indexOf(":") + 1).trim() : "";
  const wasQuoted = /^(['"]).*\1$/.test(rest || text);
  const pill: Pill =
    field && rest
      ? {
          kind: "field",
          field,
          value: rest.replace(/^['"]|['"]$/g, ""),
          quoted: wasQuoted,
        }
      : { kind: "keyword", text: text.replace(/^['"]|['"]$/g, ""), quoted: wasQuoted };
  return {
    ...state,
    pills: [...state.pills, pill],
    text: "",
    suggestions: [],
    suggestionsFor: null,
    error: null,
  };
}

export function removePill(state: EditorState, index: number): EditorState {
  if (index < 0 || index >= state.pills.length) return state;
  const pills = state.pills.filter((_, i) => i !== index);
  return { ...state, pills, error: null };
}

export function removeLastPill(state: EditorState): EditorState {
  return removePill(state, state.pills.length - 1);
}

export function setParseError(
  state: EditorState,
  position: number,
  message: string,
): EditorState {
  return { ...state, error: { position, message } };
}

/** The full query string the editor stands for right now. */
export function serializedQuery(state: EditorState): string {
  return serializeQuery(state.pills, state.text);
}

/** Suggest wants the caret position inside the serialized query. */
export function suggestRequest(state: EditorState): { q: string; cursor: number } {
  const q = serializedQuery(state);
  return { q, cursor: q.length };
}
