import type { FigureRecipe } from "../recipe.js";
import { table } from "../recipe.js";
import { betaLabel, curveOf, groupByBeta, type Curve } from "../series.js";

// Coherence share for a weak anisotropy quench at the critical field g0 = 1,
// against the pre-quench anisotropy. At small beta the share tends to 1 as
// gamma0 -> 0: switching on anisotropy from the isotropic line rotates every
// mode eigenbasis, so almost all entropy production is coherence. Betas 0.1,
// 2, 100.
export const fig6: FigureRecipe = {
  id: "fig6",
  inputs: ["fig6.csv"],
  columns: ["gamma0", "beta", "ratio"],
  output: "fig6.svg",
  build(tables) {
    const rows = table(tables, "fig6.csv");
    const out: Curve[] = [];
    for (const [beta, group] of groupByBeta(rows)) {
      out.push(curveOf(group, (r) => r.gamma0, (r) => r.ratio ?? NaN, betaLabel(beta)));
    }
    return {
      title: "Coherence share of the entropy production (anisotropy quench, δγ = 0.01)",
      panels: [
        {
          title: "g₀ = 1",
          xLabel: "γ₀",
          yLabel: "C / ΔS",
          curves: out,
          yDomain: [0, 1],
        },
      ],
    };
  },
};
