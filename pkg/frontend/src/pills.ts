/** Pill model and serializer.
 *
 * A pill is one structured query element. Serialization mirrors the server's
 * canonical printer exactly: bare values stay bare, everything else prefers
 * single quotes and falls back to double quotes; a value containing both
 * quote kinds cannot be written. Pills joined by a space conjoin (adjacency
 * means AND), so the serialized bar round-trips through /api/parse.
 */

export type Pill =
  | { kind: "field"; field: string; value: string; quoted?: boolean }
  | { kind: "call"; name: string; args: string[] }
  | { kind: "keyword"; text: string; quoted?: boolean };

const BARE = /^[A-Za-z0-9_][A-Za-z0-9_.\-]*$/;

export function isBare(value: string): boolean {
  return BARE.test(value);
}

function quote(value: string): string {
  if (!value.includes("'")) return `'${value}'`;
  if (!value.includes('"')) return `"${value}"`;
  throw new Error(`value ${JSON.stringify(value)} mixes both quote kinds`);
}

/** Bare when identifier-shaped, quoted otherwise. Values accepted from the
 * suggest dropdown keep explicit quotes (quoted=true) so catalog strings
 * read as string literals even when they happen to be identifier-shaped. */
export function formatValue(value: string, quoted = false): string {
  if (!quoted && isBare(value)) return value;
  return quote(value);
}

export function serializePill(pill: Pill): string {
  switch (pill.kind) {
    case "field":
      if (!isBare(pill.field)) {
        throw new Error(`field name ${JSON.stringify(pill.field)} is not writable`);
      }
      return `${pill.field}: ${formatValue(pill.value, pill.quoted)}`;
    case "call":
      if (!isBare(pill.name)) {
        throw new Error(`provider alias ${JSON.stringify(pill.name)} is not writable`);
      }
      return `:${pill.name}(${pill.args.map((a) => formatValue(a)).join(", ")})`;
    case "keyword":
      return formatValue(pill.text, pill.quoted);
  }
}

/** Full query text: pills first, then any free text, space-separated. */
export function serializeQuery(pills: Pill[], freeText = ""): string {
  const parts = pills.map(serializePill);
  const tail = freeText.trim();
  if (tail) parts.push(tail);
  return parts.join(" ");
}

/** Short label for rendering a pill chip. */
export function pillLabel(pill: Pill): string {
  switch (pill.kind) {
    case "field":
      return `${pill.field}: ${pill.value}`;
    case "call":
      return pill.args.length ? `:${pill.name}(${pill.args.join(", ")})` : `:${pill.name}`;
    case "keyword":
      return pill.text;
  }
}
