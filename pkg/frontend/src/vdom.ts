/** Minimal virtual DOM. View renderers return plain VNode trees so tests can
 * assert structure without a browser; dom.ts materializes them. */

export type Handler = (event: Event) => void;

export type PropValue = string | number | boolean | Handler;

export interface VNode {
  tag: string;
  props: Record<string, PropValue>;
  children: Child[];
}

export type Child = VNode | string;

export function h(
  tag: string,
  props: Record<string, PropValue> = {},
  ...children: (Child | Child[] | null | undefined)[]
): VNode {
  const flat: Child[] = [];
  for (const child of children) {
    if (child === null || child === undefined) continue;
    if (Array.isArray(child)) {
      for (const c of child) flat.push(c);
    } else {
      flat.push(child);
    }
  }
  return { tag, props, children: flat };
}

export function isVNode(child: Child): child is VNode {
  return typeof child !== "string";
}

function classList(node: VNode): string[] {
  const cls = node.props["class"];
  return typeof cls === "string" ? cls.split(/\s+/).filter(Boolean) : [];
}

/** All descendants (including the root) carrying the given class. */
export function selectAll(root: VNode, className: string): VNode[] {
  const out: VNode[] = [];
  const walk = (node: VNode): void => {
    if (classList(node).includes(className)) out.push(node);
    for (const child of node.children) {
      if (isVNode(child)) walk(child);
    }
  };
  walk(root);
  return out;
}

export function selectOne(root: VNode, className: string): VNode | null {
  return selectAll(root, className)[0] ?? null;
}

/** Concatenated text content, depth-first. */
export function textOf(node: VNode): string {
  let out = "";
  for (const child of node.children) {
    out += isVNode(child) ? textOf(child) : child;
  }
  return out;
}
