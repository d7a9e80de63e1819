import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";
import { renderRecipe } from "./render.js";
import { RECIPES } from "./recipes/index.js";

const here = dirname(fileURLToPath(import.meta.url));
const opts = {
  dataDir: process.argv[2] ?? join(here, "..", "data"),
  outDir: process.argv[3] ?? join(here, "..", "figures"),
};

for (const recipe of RECIPES) {
  const out = renderRecipe(recipe, opts);
  console.log(`${recipe.id} -> ${out}`);
}
