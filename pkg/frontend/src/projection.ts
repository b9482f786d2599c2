/**
 * 2D projections of vertex sets and flow trajectories for the geometry
 * panel.  For three most-local coordinates the axes are used directly
 * (an oblique cabinet projection of the cube picture); higher dimensions
 * project onto a user-selected coordinate triple.
 */

export interface Point2 {
  x: number;
  y: number;
}

/** Oblique projection of (x, y, z) in [0,1]^3 onto the plane. */
export function project3(p: readonly number[]): Point2 {
  const [x = 0, y = 0, z = 0] = p;
  return { x: x + 0.35 * y, y: z + 0.35 * y };
}

export function pickTriple(point: readonly number[], triple: readonly number[]): number[] {
  return triple.map((i) => point[i] ?? 0);
}

export interface Viewport {
  width: number;
  height: number;
  pad: number;
}

/** Map projected points into pixel coordinates, preserving aspect. */
export function toPixels(points: Point2[], vp: Viewport): Point2[] {
  if (!points.length) return [];
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((vp.width - 2 * vp.pad) / spanX, (vp.height - 2 * vp.pad) / spanY);
  return points.map((p) => ({
    x: vp.pad + (p.x - minX) * scale,
    y: vp.height - vp.pad - (p.y - minY) * scale,
  }));
}
