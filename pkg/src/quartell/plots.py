"""Optional figure rendering for verification reports and tabulations."""

from __future__ import annotations

import math
from pathlib import Path

from .extension import c_complex, d_complex, s_squared
from .modulus import context_from_kappa


def render_verification_figures(report: dict, outdir: str) -> list:
    """Render one residual chart and one real-axis profile per kappa.

    Returns the list of written file paths.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    tol = report.get("tol")
    for entry in report.get("results", []):
        kappa = entry["kappa"]
        tag = f"{kappa:.3f}".replace(".", "p")
        residuals = entry.get("residuals")
        if residuals:
            names = list(residuals)
            values = [max(residuals[n], 1e-18) for n in names]
            fig, ax = plt.subplots(figsize=(7, 0.3 * len(names) + 1.5))
            ax.barh(range(len(names)), values, color="steelblue")
            ax.set_yticks(range(len(names)))
            ax.set_yticklabels(names, fontsize=7)
            ax.set_xscale("log")
            ax.set_xlabel("max residual")
            if tol:
                ax.axvline(tol, color="crimson", ls="--", lw=1, label=f"tol = {tol:g}")
                ax.legend(fontsize=7)
            ax.set_title(f"identity residuals, kappa = {kappa:g}")
            fig.tight_layout()
            path = out / f"residuals_kappa_{tag}.png"
            fig.savefig(path, dpi=150)
            plt.close(fig)
            written.append(str(path))

        ctx = context_from_kappa(kappa)
        us = [-2.0 * ctx.omega + 4.0 * ctx.omega * i / 400 for i in range(401)]
        fig, ax = plt.subplots(figsize=(7, 4))
        for fn, label in ((d_complex, "d"), (c_complex, "c"), (s_squared, "s^2")):
            ax.plot(us, [fn(ctx, complex(u, 0.0)).real for u in us], label=label)
        ax.axhline(0.0, color="0.7", lw=0.8)
        ax.set_xlabel("u")
        ax.set_title(f"real-axis profiles, kappa = {kappa:g}")
        ax.legend()
        fig.tight_layout()
        path = out / f"profiles_kappa_{tag}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(str(path))
    return written
