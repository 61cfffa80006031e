"""Figure rendering for temperature sweeps (headless-safe Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_sweep_figure(reports, path, title: str | None = None) -> str:
    """Render entanglement-vs-temperature curves from sweep reports to a file.

    Draws the Hilbert-Schmidt entanglement and the negativity against T and
    marks the entanglement temperature when it falls inside the sweep range.
    The format follows the file extension (png, pdf, svg, ...).
    """
    ts = [r.T for r in reports]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ts, [r.entanglement_hs for r in reports], color="tab:blue",
            label="HS entanglement")
    ax.plot(ts, [r.negativity for r in reports], color="tab:orange",
            linestyle="--", label="negativity")

    t_e = reports[0].T_E if reports else None
    if t_e is not None and ts and min(ts) <= t_e <= max(ts):
        ax.axvline(t_e, color="0.4", linewidth=0.9, linestyle=":",
                   label=r"$T_E$")

    ax.set_xlabel("T")
    ax.set_ylabel("entanglement")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
