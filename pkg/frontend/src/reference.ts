// Analytic overlays. These are closed-form reference curves drawn on top of
// the swept data, not recomputed physics.

// Leading high-temperature coherence coefficient per unit (beta * dg)^2 for a
// transverse-field quench at gamma0 = 1: a flat 1/4 plateau inside the
// ordered phase, 1/(4 g0^2) outside, with a kink at |g0| = 1.
export function highTCoherencePerUnit(g0: number): number {
  const a = Math.abs(g0);
  return a <= 1 ? 0.25 : 0.25 / (a * a);
}

// Upper bound on the coherence per site for any quench.
export const HALF_LN2 = Math.log(2) / 2;
