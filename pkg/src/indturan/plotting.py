"""Figure rendering for sweep reports: log-log edge growth with a fitted
exponent, written next to the delimited output."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def fit_exponent(ns, es) -> tuple[float, float]:
    """Least-squares slope and intercept of log e against log n."""
    pts = [(math.log(n), math.log(e)) for n, e in zip(ns, es) if n > 1 and e > 0]
    if len(pts) < 2:
        return float("nan"), float("nan")
    xs, ys = zip(*pts)
    k = len(pts)
    xbar, ybar = sum(xs) / k, sum(ys) / k
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx if sxx else float("nan")
    return slope, ybar - slope * xbar


def render_sweep_plot(rows: list[dict], path: str) -> None:
    """Scatter e(G) against n on log-log axes with the fitted power law."""
    ns = [int(r["n"]) for r in rows]
    es = [int(r["e"]) for r in rows]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    ax.loglog(ns, es, "o", label="sweep points")
    slope, intercept = fit_exponent(ns, es)
    if slope == slope:  # not NaN
        xs = sorted(n for n in ns if n > 1)
        ax.loglog(
            xs,
            [math.exp(intercept) * x**slope for x in xs],
            "--",
            label=f"fit: e ~ n^{slope:.3f}",
        )
    ax.set_xlabel("n")
    ax.set_ylabel("e(G)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
