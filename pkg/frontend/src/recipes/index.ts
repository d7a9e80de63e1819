import { fig2 } from "./fig2.js";
import { fig3 } from "./fig3.js";
import { fig4 } from "./fig4.js";
import { fig5 } from "./fig5.js";
import { fig6 } from "./fig6.js";

export const RECIPES = [fig2, fig3, fig4, fig5, fig6];
export { fig2, fig3, fig4, fig5, fig6 };
