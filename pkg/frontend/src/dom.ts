/** Materialize VNode trees into real DOM. Only the browser entry uses this;
 * tests assert on the VNodes directly. */

import { Child, VNode, isVNode } from "./vdom.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SVG_TAGS = new Set([
  "svg",
  "g",
  "circle",
  "line",
  "text",
  "title",
  "path",
  "rect",
]);

export function materialize(node: VNode, doc: Document = document): Element {
  const element = SVG_TAGS.has(node.tag)
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.props)) {
    if (typeof value === "function") {
      element.addEventListener(key.replace(/^on/, ""), value);
    } else if (typeof value === "boolean") {
      if (value) element.setAttribute(key, "");
    } else {
      element.setAttribute(key, String(value));
    }
  }
  for (const child of node.children) {
    element.appendChild(materializeChild(child, doc));
  }
  return element;
}

function materializeChild(child: Child, doc: Document): Node {
  return isVNode(child) ? materialize(child, doc) : doc.createTextNode(child);
}

export function replaceChildren(target: Element, ...nodes: VNode[]): void {
  target.replaceChildren(
    ...nodes.map((n) => materialize(n, target.ownerDocument)),
  );
}
