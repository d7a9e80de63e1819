import type { FigureRecipe } from "../recipe.js";
import { table } from "../recipe.js";
import { betaLabel, curveOf, groupByBeta, type Curve } from "../series.js";

// Share of the entropy production carried by coherence for a weak field
// quench at gamma0 = 1, against the pre-quench field. Betas 0.1 (high T,
// ratio pinned near 1/2), 2 (near-optimal, peak close to 1) and 5, 20
// (coherence share collapses except near the transition). Zero-temperature
// rows carry no ratio, so every curve here is a finite beta.
export const fig5: FigureRecipe = {
  id: "fig5",
  inputs: ["fig5.csv"],
  columns: ["g0", "beta", "ratio"],
  output: "fig5.svg",
  build(tables) {
    const rows = table(tables, "fig5.csv");
    const out: Curve[] = [];
    for (const [beta, group] of groupByBeta(rows)) {
      out.push(curveOf(group, (r) => r.g0, (r) => r.ratio ?? NaN, betaLabel(beta)));
    }
    return {
      title: "Coherence share of the entropy production (field quench, δg = 0.01)",
      panels: [
        {
          title: "γ₀ = 1",
          xLabel: "g₀",
          yLabel: "C / ΔS",
          curves: out,
          yDomain: [0, 1],
        },
      ],
    };
  },
};
