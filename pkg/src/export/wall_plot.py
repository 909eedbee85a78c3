"""
Module: wall_plot.py
Part of the Restriction Stability Toolkit.

Standalone SVG diagrams of the (s, t) upper half-plane: semicircular walls,
vertical markers for the category window, and ticks on the s-axis.

Exact data stays exact everywhere else; this module is the only place where
centers and radii become floats, for pixel coordinates. Legend labels carry
the exact values.

Output is byte-stable: matplotlib's Agg backend, a fixed ``svg.hashsalt``
and no creation date in the metadata.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

from src.stability.walls import Wall  # noqa: E402
from src.utils import messages  # noqa: E402
from src.utils.rationals import format_rational  # noqa: E402

logger = logging.getLogger(__name__)

HASH_SALT = "restriction-stability-toolkit"
COLORS = ("tab:blue", "tab:red", "tab:green", "tab:purple", "tab:orange")


@dataclass
class WallDiagram:
    """Everything one diagram shows, in exact form."""

    title: str
    walls: List[Tuple[str, Wall]] = field(default_factory=list)
    window: Optional[Tuple[Fraction, Fraction]] = None
    ticks: List[Tuple[str, Fraction]] = field(default_factory=list)
    annotations: List[str] = field(default_factory=list)

    def extent(self) -> Tuple[float, float, float]:
        """(s_min, s_max, t_max) covering every drawn element with a margin."""
        xs: List[float] = []
        top = 1.0
        for _, w in self.walls:
            if w.is_semicircle:
                radius = math.sqrt(float(w.radius_sq))
                xs.extend([float(w.center_s) - radius, float(w.center_s) + radius])
                top = max(top, radius)
            else:
                xs.append(float(w.center_s))
        if self.window is not None:
            xs.extend(float(x) for x in self.window)
        xs.extend(float(x) for _, x in self.ticks)
        if not xs:
            xs = [-1.0, 1.0]
        lo, hi = min(xs), max(xs)
        margin = max(0.5, 0.1 * (hi - lo))
        return lo - margin, hi + margin, top * 1.15


def render_svg(diagram: WallDiagram, path: Path) -> Path:
    """Draw ``diagram`` to ``path`` as SVG and return the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": HASH_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(8, 4.5))
        try:
            s_min, s_max, t_max = diagram.extent()

            for index, (label, w) in enumerate(diagram.walls):
                color = COLORS[index % len(COLORS)]
                exact = f"{label}: center {w.center_s}, radius^2 {w.radius_sq}"
                if w.is_semicircle:
                    diameter = 2 * math.sqrt(float(w.radius_sq))
                    arc = Arc((float(w.center_s), 0.0), diameter, diameter, theta1=0, theta2=180,
                              color=color, linewidth=1.5, label=exact)
                    ax.add_patch(arc)
                elif w.kind.value == "vertical":
                    ax.axvline(float(w.center_s), color=color, linewidth=1.5, label=exact)
                else:
                    ax.plot([], [], color=color, label=f"{label}: no wall ({w.kind.value})")

            if diagram.window is not None:
                lo, hi = diagram.window
                for x in (lo, hi):
                    ax.axvline(float(x), color="grey", linestyle="--", linewidth=1)
                ax.plot([], [], color="grey", linestyle="--", label=f"category window [{lo}, {hi})")

            for label, x in diagram.ticks:
                ax.plot([float(x)], [0.0], marker="|", markersize=14, color="black", linestyle="none",
                        label=f"{label}: s = {x}")

            for row, text in enumerate(diagram.annotations):
                ax.text(0.02, 0.95 - 0.07 * row, text, transform=ax.transAxes, fontsize=9, va="top")

            ax.set_xlim(s_min, s_max)
            ax.set_ylim(0.0, t_max)
            ax.set_xlabel("s")
            ax.set_ylabel("t")
            ax.set_title(diagram.title)
            ax.legend(loc="upper right", fontsize=7)
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    logger.info(messages.ExportMessages.written.format(path=path))
    return path


def wall_rows(diagram: WallDiagram, digits: int = 6) -> List[dict]:
    """Exact CSV rows for the diagram's walls, window and ticks."""
    rows = []
    for label, w in diagram.walls:
        rows.append({
            "element": label,
            "kind": w.kind.value,
            "center": format_rational(w.center_s),
            "radius_sq": format_rational(w.radius_sq),
            "radius_approx": f"{math.sqrt(float(w.radius_sq)):.{digits}f}" if w.is_semicircle else "",
        })
    if diagram.window is not None:
        for label, x in zip(("window_left", "window_right"), diagram.window):
            rows.append({"element": label, "kind": "vertical", "center": format_rational(x), "radius_sq": "0",
                         "radius_approx": ""})
    for label, x in diagram.ticks:
        rows.append({"element": label, "kind": "tick", "center": format_rational(x), "radius_sq": "0",
                     "radius_approx": ""})
    return rows


WALL_COLUMNS: Sequence[str] = ("element", "kind", "center", "radius_sq", "radius_approx")
