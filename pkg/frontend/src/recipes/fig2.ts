import type { FigureRecipe } from "../recipe.js";
import { table } from "../recipe.js";
import { betaLabel, curveOf, groupByBeta, type Curve } from "../series.js";
import { highTCoherencePerUnit } from "../reference.js";

export const FIG2_DELTA = 0.01;

// High-temperature coefficients of the coherence and population for a weak
// transverse-field quench at gamma0 = 1, normalized per (beta * dg)^2 so the
// ordered-phase plateau sits at 1/4. Betas: 0.05, 0.1, 0.2 (all deep in the
// high-temperature regime; the three curves should collapse).
export const fig2: FigureRecipe = {
  id: "fig2",
  inputs: ["fig2.csv"],
  columns: ["g0", "beta", "C", "D"],
  output: "fig2.svg",
  build(tables) {
    const rows = table(tables, "fig2.csv");
    const norm = (beta: number) => 1 / (beta * beta * FIG2_DELTA * FIG2_DELTA);
    const cCurves: Curve[] = [];
    const dCurves: Curve[] = [];
    for (const [beta, group] of groupByBeta(rows)) {
      cCurves.push(curveOf(group, (r) => r.g0, (r) => r.C * norm(beta), betaLabel(beta)));
      dCurves.push(curveOf(group, (r) => r.g0, (r) => r.D * norm(beta), betaLabel(beta)));
    }
    const g0s = [...new Set(rows.map((r) => r.g0))].sort((a, b) => a - b);
    cCurves.push({
      label: "high-T reference",
      x: g0s,
      y: g0s.map(highTCoherencePerUnit),
      color: "#000",
      dash: "6,4",
    });
    return {
      title: `Weak field quench at γ₀ = 1, high temperature (δg = ${FIG2_DELTA})`,
      panels: [
        {
          title: "coherence",
          xLabel: "g₀",
          yLabel: "C / (β δg)²",
          curves: cCurves,
          yDomain: [0, 0.3],
        },
        {
          title: "population",
          xLabel: "g₀",
          yLabel: "D / (β δg)²",
          curves: dCurves,
          yDomain: [0, 0.45],
        },
      ],
    };
  },
};
