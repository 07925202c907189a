"""Figure rendering for analysis reports and parameter scans.

matplotlib is imported lazily with the Agg backend so the library core has
no hard display dependency; figures are written straight to files next to
the JSON/CSV outputs.
"""

from __future__ import annotations

from typing import Sequence


def _get_axes():
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt
    return plt


def plot_weight_distribution(record: dict, path: str) -> None:
    """Bar chart of the weight distribution from an analyze record, with the
    applicable bound window drawn around the maximum-weight count."""
    plt = _get_axes()
    dist = [int(a) for a in record["weight_distribution"]]
    weights = list(range(len(dist)))
    fig, ax = plt.subplots(figsize=(7, 4.2))
    ax.bar(weights, dist, color="#4878a8", width=0.72)
    ax.set_yscale("symlog")
    ax.set_xlabel("rank weight")
    ax.set_ylabel("codewords")
    p = record["params"]
    ax.set_title(
        f"[{p['n']},{p['k']},{p['d']}] over GF({p['q']}^{p['m']})/GF({p['q']}): "
        f"M = {record['M']}")
    top = len(dist) - 1
    for rep in record["bounds"]:
        if not rep.get("applicable") or rep.get("lower") is None:
            continue
        lo, up = int(rep["lower"]), int(rep["upper"])
        ax.plot([top - 0.36, top + 0.36], [lo, lo], color="#b04030", lw=1.4)
        ax.plot([top - 0.36, top + 0.36], [up, up], color="#b04030", lw=1.4)
    ax.set_xticks(weights)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_scan(rows: Sequence[dict], path: str) -> None:
    """Observed M per scanned system against its bound window."""
    plt = _get_axes()
    xs, ms, los, ups = [], [], [], []
    for i, row in enumerate(rows):
        if not row["M"]:
            continue
        xs.append(i)
        ms.append(int(row["M"]))
        los.append(int(row["lower"]) if row["lower"] != "" else None)
        ups.append(int(row["upper"]) if row["upper"] != "" else None)
    fig, ax = plt.subplots(figsize=(7.5, 4.2))
    band_x = [x for x, lo in zip(xs, los) if lo is not None]
    band_lo = [lo for lo in los if lo is not None]
    band_up = [up for up, lo in zip(ups, los) if lo is not None]
    if band_x:
        ax.fill_between(band_x, band_lo, band_up, color="#c8d8e8",
                        step="mid", label="bound window")
    ax.plot(xs, ms, ".", color="#203050", ms=5, label="M(C)")
    ax.set_xlabel("system index")
    ax.set_ylabel("maximum-weight codewords")
    ax.legend(loc="best", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
