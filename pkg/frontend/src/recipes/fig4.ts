import type { FigureRecipe } from "../recipe.js";
import { table } from "../recipe.js";
import { betaLabel, curveOf, groupByBeta, type Curve } from "../series.js";
import type { SweepRow } from "../schema.js";

// Coherence near the transition for weaker anisotropies (gamma0 = 0.9 and
// 0.2) as the temperature drops. The cusp at g0 = 1 sharpens and sits on an
// asymmetric background; both panels share the y range so the two anisotropy
// values can be compared directly.
function curves(rows: SweepRow[]): Curve[] {
  const out: Curve[] = [];
  for (const [beta, group] of groupByBeta(rows)) {
    out.push(curveOf(group, (r) => r.g0, (r) => r.C, betaLabel(beta)));
  }
  return out;
}

export const fig4: FigureRecipe = {
  id: "fig4",
  inputs: ["fig4a.csv", "fig4b.csv"],
  columns: ["g0", "gamma0", "beta", "C", "lowT"],
  output: "fig4.svg",
  build(tables) {
    const a = table(tables, "fig4a.csv");
    const b = table(tables, "fig4b.csv");
    const all = [...a, ...b].map((r) => r.C);
    const yDomain: [number, number] = [0, 1.06 * Math.max(...all)];
    return {
      title: "Coherence cusp for weak anisotropy, low temperature (δg = 0.01)",
      panels: [
        {
          title: `γ₀ = ${a[0].gamma0}`,
          xLabel: "g₀",
          yLabel: "C",
          curves: curves(a),
          yDomain,
        },
        {
          title: `γ₀ = ${b[0].gamma0}`,
          xLabel: "g₀",
          yLabel: "C",
          curves: curves(b),
          yDomain,
        },
      ],
    };
  },
};
