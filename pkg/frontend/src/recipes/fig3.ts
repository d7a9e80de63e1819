import type { FigureRecipe } from "../recipe.js";
import { table } from "../recipe.js";
import { betaLabel, curveOf, groupByBeta, populationPerBeta, type Curve } from "../series.js";
import { HALF_LN2 } from "../reference.js";

// Low-temperature field quench at gamma0 = 1: coherence per site stays finite
// (bounded by ln(2)/2) while the population contribution keeps growing with
// beta, so the right panel plots D/beta. Betas: 5, 10, 50 and the zero
// temperature limit.
export const fig3: FigureRecipe = {
  id: "fig3",
  inputs: ["fig3.csv"],
  columns: ["g0", "beta", "C", "D", "lowT"],
  output: "fig3.svg",
  build(tables) {
    const rows = table(tables, "fig3.csv");
    const cCurves: Curve[] = [];
    const dCurves: Curve[] = [];
    for (const [beta, group] of groupByBeta(rows)) {
      cCurves.push(curveOf(group, (r) => r.g0, (r) => r.C, betaLabel(beta)));
      dCurves.push(curveOf(group, (r) => r.g0, populationPerBeta, betaLabel(beta)));
    }
    const [lo, hi] = [rows[0].g0, rows[rows.length - 1].g0];
    cCurves.push({
      label: "½ ln 2 bound",
      x: [lo, hi],
      y: [HALF_LN2, HALF_LN2],
      color: "#000",
      dash: "2,3",
    });
    return {
      title: "Weak field quench at γ₀ = 1, low temperature (δg = 0.01)",
      panels: [
        {
          title: "coherence",
          xLabel: "g₀",
          yLabel: "C",
          curves: cCurves,
          yScale: "log",
        },
        {
          title: "population",
          xLabel: "g₀",
          yLabel: "D / β",
          curves: dCurves,
        },
      ],
    };
  },
};
