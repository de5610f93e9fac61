"""Figures for survey output."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

VERDICT_STYLE = {
    "meets_bound": dict(color="tab:blue", marker="o", label="meets bound"),
    "petersen_exception": dict(color="tab:red", marker="*", s=160, label="Petersen"),
    "unknown": dict(color="tab:gray", marker="x", label="budget exhausted"),
    "violation": dict(color="black", marker="X", s=120, label="violation"),
}


def plot_survey(rows, path, title: str = "gamma against odd girth"):
    """Scatter of gamma per graph with the curve ``1 - 2/(3g+2)``, saved to ``path``.

    Bipartite graphs (no odd girth) are left out of the scatter. Returns the
    path written.
    """
    path = Path(path)
    fig, (ax, hist) = plt.subplots(1, 2, figsize=(10, 4), gridspec_kw={"width_ratios": [3, 2]})

    finite = [r for r in rows if r.g_odd is not None]
    gs = sorted({r.g_odd for r in finite}) or [3, 5]
    xs = list(range(min(gs), max(gs) + 1, 2))
    ax.plot(xs, [float(1 - Fraction(2, 3 * g + 2)) for g in xs], "k--", lw=1, label="1 - 2/(3g+2)")
    for verdict, style in VERDICT_STYLE.items():
        sel = [r for r in finite if r.verdict == verdict]
        if not sel:
            continue
        style = dict(style)
        ax.scatter([r.g_odd for r in sel], [float(Fraction(r.gamma)) for r in sel], alpha=0.6, **style)
    ax.set_xlabel("odd girth")
    ax.set_ylabel("gamma")
    ax.set_xticks(xs)
    ax.set_title(title)
    ax.legend(loc="lower right", fontsize=8)

    svals = [r.s for r in rows]
    if svals:
        hist.hist(svals, bins=range(0, max(svals) + 2), align="left", rwidth=0.8, color="tab:blue")
    hist.set_xlabel("s (delta edges)")
    hist.set_ylabel("graphs")
    hist.set_title(f"{len(rows)} graphs")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
