"""Figure rendering for root-system reports (written to files, Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def degree_bar_chart(rows, path):
    """Bar chart of the degree table; bounded rows show their lower bound hatched."""
    labels = [r.label for r in rows]
    values = [(r.degree if r.degree is not None else (r.bounds or (0,))[0])
              for r in rows]
    hatched = [r.degree is None for r in rows]
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(rows) + 1.5), 3.2))
    bars = ax.bar(labels, values, color="#4878a8")
    for bar, h in zip(bars, hatched):
        if h:
            bar.set_hatch("//")
            bar.set_color("#c8c8c8")
    ax.set_ylabel("degree of the punctured Weyl group")
    ax.set_xlabel("root system")
    for bar, v in zip(bars, values):
        ax.annotate(str(v), (bar.get_x() + bar.get_width() / 2, v),
                    ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _affine_coordinates(rs, beta):
    """Barycentric projection onto the affine plane through the simple roots."""
    c = rs.simple_coeffs(beta)
    total = sum(c)
    w = [x / total for x in c]
    corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254)]
    x = sum(float(wi) * cx for wi, (cx, _) in zip(w, corners))
    y = sum(float(wi) * cy for wi, (_, cy) in zip(w, corners))
    return x, y


def free_set_projection(rs, witness, path):
    """Affine picture of the positive roots of a rank-3 system with the
    really-abelian witness highlighted."""
    if rs.rank != 3:
        raise ValueError("projection figure is drawn for rank-3 systems")
    fig, ax = plt.subplots(figsize=(4.6, 4.2))
    wit = set(witness)
    for i, beta in enumerate(rs.positive):
        x, y = _affine_coordinates(rs, beta)
        inside = i in wit
        ax.plot([x], [y], "o", color="#1f4fbf" if inside else "#c0392b",
                markersize=7 if inside else 5)
        label = "+".join(f"{int(c)}a{k + 1}" if c != 1 else f"a{k + 1}"
                         for k, c in enumerate(rs.simple_coeffs(beta)) if c != 0)
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 4),
                    fontsize=7)
    hull = sorted(_affine_coordinates(rs, rs.positive[i]) for i in wit)
    if len(hull) >= 3:
        import math
        cx = sum(p[0] for p in hull) / len(hull)
        cy = sum(p[1] for p in hull) / len(hull)
        ring = sorted(hull, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        ring.append(ring[0])
        ax.plot([p[0] for p in ring], [p[1] for p in ring], ":",
                color="#1f4fbf", linewidth=1)
    ax.set_title(f"really abelian witness in {rs.name}")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
