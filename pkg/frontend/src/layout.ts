/** Force-directed layout for GRAPH payloads, which carry topology only.
 *
 * Fully deterministic: nodes start on a circle in sorted-id order and the
 * simulation runs a fixed number of steps, so the same payload always lays
 * out identically (tests rely on this). Output coordinates are normalized
 * into the unit square.
 */

export interface LayoutEdge {
  from: string;
  to: string;
}

const STEPS = 120;
const REPULSION = 0.02;
const SPRING = 0.05;
const REST_LENGTH = 0.35;
const CENTER_PULL = 0.01;
const MAX_MOVE = 0.05;

export function forceLayout(
  ids: string[],
  edges: LayoutEdge[],
): Map<string, { x: number; y: number }> {
  const order = [...ids].sort();
  const n = order.length;
  const pos = new Map<string, { x: number; y: number }>();
  if (n === 0) return pos;
  if (n === 1) {
    pos.set(order[0] as string, { x: 0.5, y: 0.5 });
    return pos;
  }

  const xs: number[] = new Array(n);
  const ys: number[] = new Array(n);
  const index = new Map<string, number>();
  order.forEach((id, i) => {
    index.set(id, i);
    const angle = (2 * Math.PI * i) / n;
    xs[i] = 0.5 + 0.4 * Math.cos(angle);
    ys[i] = 0.5 + 0.4 * Math.sin(angle);
  });
  const at = (arr: number[], i: number): number => arr[i] as number;

  const springs: [number, number][] = [];
  for (const edge of edges) {
    const a = index.get(edge.from);
    const b = index.get(edge.to);
    if (a !== undefined && b !== undefined && a !== b) springs.push([a, b]);
  }

  for (let step = 0; step < STEPS; step++) {
    const fx: number[] = new Array(n).fill(0);
    const fy: number[] = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = at(xs, i) - at(xs, j);
        let dy = at(ys, i) - at(ys, j);
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          // Coincident nodes: nudge apart along a fixed direction.
          dx = 1e-3 * (i - j);
          dy = 1e-3;
          d2 = dx * dx + dy * dy;
        }
        const d = Math.sqrt(d2);
        const f = REPULSION / d2;
        fx[i] = at(fx, i) + (f * dx) / d;
        fy[i] = at(fy, i) + (f * dy) / d;
        fx[j] = at(fx, j) - (f * dx) / d;
        fy[j] = at(fy, j) - (f * dy) / d;
      }
    }
    for (const [a, b] of springs) {
      const dx = at(xs, b) - at(xs, a);
      const dy = at(ys, b) - at(ys, a);
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-6;
      const f = SPRING * (d - REST_LENGTH);
      fx[a] = at(fx, a) + (f * dx) / d;
      fy[a] = at(fy, a) + (f * dy) / d;
      fx[b] = at(fx, b) - (f * dx) / d;
      fy[b] = at(fy, b) - (f * dy) / d;
    }
    const cool = 1 - step / STEPS;
    for (let i = 0; i < n; i++) {
      const moveX = Math.max(-MAX_MOVE, Math.min(MAX_MOVE, at(fx, i) * cool));
      const moveY = Math.max(-MAX_MOVE, Math.min(MAX_MOVE, at(fy, i) * cool));
      const x = at(xs, i) + moveX;
      const y = at(ys, i) + moveY;
      xs[i] = x - (x - 0.5) * CENTER_PULL;
      ys[i] = y - (y - 0.5) * CENTER_PULL;
    }
  }

  // Normalize into the unit square with a small margin.
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (let i = 0; i < n; i++) {
    minX = Math.min(minX, at(xs, i));
    maxX = Math.max(maxX, at(xs, i));
    minY = Math.min(minY, at(ys, i));
    maxY = Math.max(maxY, at(ys, i));
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  order.forEach((id, i) => {
    pos.set(id, {
      x: 0.1 + (0.8 * (at(xs, i) - minX)) / spanX,
      y: 0.1 + (0.8 * (at(ys, i) - minY)) / spanY,
    });
  });
  return pos;
}
