import { scaleLinear, scaleLog } from "d3-scale";
import { line } from "d3-shape";
import type { Curve } from "./series.js";

export interface Panel {
  title: string;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
  xDomain?: [number, number];
  yDomain?: [number, number];
  yScale?: "linear" | "log";
}

export interface Figure {
  title: string;
  panels: Panel[];
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

const PANEL_W = 440;
const PANEL_H = 380;
const GAP = 24;
const MARGIN = { top: 34, right: 16, bottom: 52, left: 70 };
const TITLE_H = 30;

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

// stable tick text: strips float noise like 0.30000000000000004
const fmt = (v: number) => String(Number(v.toPrecision(10)));

const px = (v: number) => Math.round(v * 100) / 100;

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  const pad = 0.04 * (hi - lo);
  return [lo - pad, hi + pad];
}

function logExtent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v > 0 && v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || hi <= 0) return [0.1, 10];
  return [lo / 1.5, hi * 1.5];
}

function decades([lo, hi]: [number, number]): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo)); 10 ** e <= hi * (1 + 1e-12); e++) {
    ticks.push(10 ** e);
  }
  return ticks;
}

const decadeLabel = (v: number) => {
  const e = Math.round(Math.log10(v));
  return e >= -3 && e <= 3 ? fmt(v) : `1e${e}`;
};

function panelSvg(p: Panel, ox: number, oy: number): string {
  const innerW = PANEL_W - MARGIN.left - MARGIN.right;
  const innerH = PANEL_H - MARGIN.top - MARGIN.bottom;
  const log = p.yScale === "log";
  const yValues = p.curves.flatMap((c) => c.y);
  const xd = p.xDomain ?? extent(p.curves.flatMap((c) => c.x));
  const yd = p.yDomain ?? (log ? logExtent(yValues) : extent(yValues));
  const xs = scaleLinear().domain(xd).range([0, innerW]);
  const ys = (log ? scaleLog() : scaleLinear()).domain(yd).range([innerH, 0]);

  const parts: string[] = [];
  parts.push(`<g transform="translate(${ox + MARGIN.left},${oy + MARGIN.top})">`);
  parts.push(
    `<text x="${px(innerW / 2)}" y="-14" text-anchor="middle" font-size="13" font-weight="bold">${esc(p.title)}</text>`,
  );

  const yTicks = log ? decades(yd) : (ys as ReturnType<typeof scaleLinear>).ticks(6);
  for (const t of yTicks) {
    const y = px(ys(t));
    parts.push(`<line x1="0" y1="${y}" x2="${innerW}" y2="${y}" stroke="#ddd" stroke-width="0.5"/>`);
    parts.push(
      `<text x="-8" y="${y}" text-anchor="end" dominant-baseline="middle" font-size="10">${log ? decadeLabel(t) : fmt(t)}</text>`,
    );
  }
  for (const t of xs.ticks(6)) {
    const x = px(xs(t));
    parts.push(`<line x1="${x}" y1="${innerH}" x2="${x}" y2="${innerH + 5}" stroke="#000" stroke-width="1"/>`);
    parts.push(
      `<text x="${x}" y="${innerH + 18}" text-anchor="middle" font-size="10">${fmt(t)}</text>`,
    );
  }
  parts.push(`<rect x="0" y="0" width="${innerW}" height="${innerH}" fill="none" stroke="#000" stroke-width="1"/>`);
  parts.push(
    `<text x="${px(innerW / 2)}" y="${innerH + 38}" text-anchor="middle" font-size="12">${esc(p.xLabel)}</text>`,
  );
  parts.push(
    `<text transform="translate(${-MARGIN.left + 16},${px(innerH / 2)}) rotate(-90)" text-anchor="middle" font-size="12">${esc(p.yLabel)}</text>`,
  );

  const gen = line<[number, number]>()
    .x((d) => px(xs(d[0])))
    .y((d) => px(ys(d[1])))
    .defined((d) => !log || d[1] > 0);
  p.curves.forEach((c, i) => {
    const pts: Array<[number, number]> = c.x.map((xv, j) => [xv, c.y[j]]);
    const d = gen(pts);
    if (!d) return;
    const color = c.color ?? PALETTE[i % PALETTE.length];
    const dash = c.dash ? ` stroke-dasharray="${c.dash}"` : "";
    parts.push(`<path d="${d}" fill="none" stroke="${color}" stroke-width="1.5"${dash}/>`);
  });

  // legend, top right corner of the plot area
  const lx = innerW - 138;
  p.curves.forEach((c, i) => {
    const ly = 12 + 16 * i;
    const color = c.color ?? PALETTE[i % PALETTE.length];
    const dash = c.dash ? ` stroke-dasharray="${c.dash}"` : "";
    parts.push(`<line x1="${lx}" y1="${ly}" x2="${lx + 20}" y2="${ly}" stroke="${color}" stroke-width="1.5"${dash}/>`);
    parts.push(`<text x="${lx + 26}" y="${ly + 3.5}" font-size="10.5">${esc(c.label)}</text>`);
  });

  parts.push("</g>");
  return parts.join("\n");
}

export function figureSvg(fig: Figure): string {
  const n = fig.panels.length;
  const width = n * PANEL_W + (n - 1) * GAP;
  const height = PANEL_H + TITLE_H;
  const parts: string[] = [];
  parts.push('<?xml version="1.0" encoding="UTF-8"?>');
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect x="0" y="0" width="${width}" height="${height}" fill="#fff"/>`);
  parts.push(
    `<text x="${px(width / 2)}" y="20" text-anchor="middle" font-size="15" font-weight="bold">${esc(fig.title)}</text>`,
  );
  fig.panels.forEach((p, i) => {
    parts.push(panelSvg(p, i * (PANEL_W + GAP), TITLE_H));
  });
  parts.push("</svg>");
  parts.push("");
  return parts.join("\n");
}
