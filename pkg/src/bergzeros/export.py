"""Deterministic CSV/JSON/SVG export of computed data.

Floats are written with 17 significant digits so that parsing an exported
file reproduces the in-memory doubles bit-exactly.  Identical inputs produce
byte-identical files: fixed header order, '\\n' line endings, '.' decimal
separator, no timestamps.
"""

import json
from dataclasses import dataclass

import numpy as np

from .curves import ZeroCurve
from .errors import ParameterError

CURVES_SCHEMA = ("curves", 1)
POINTS_SCHEMA = ("points", 1)
ROUCHE_SCHEMA = ("rouche", 1)
SALPHA_SCHEMA = ("s_alpha", 1)
PARITY_SCHEMA = ("parity_counts", 1)


def format_float(x: float) -> str:
    """Decimal text with 17 significant digits (round-trips float64 exactly)."""
    return format(float(x), ".17g")


def _write_text(path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def curves_rows(curves: list[ZeroCurve]) -> list[dict]:
    """Tidy rows for a curve family: beta ascending, then component index.

    The stored beta is the actual (negative) parameter value; no sign flips.
    """
    if not curves:
        raise ParameterError("E_EMPTY", "no curves to export")
    rows = []
    n_samples = len(curves[0].betas)
    by_k = sorted(curves, key=lambda c: c.k)
    for i in range(n_samples):
        for curve in by_k:
            rows.append(
                {
                    "alpha": curve.alpha,
                    "beta": float(curve.betas[i]),
                    "k": curve.k,
                    "re": float(curve.zs[i].real),
                    "im": float(curve.zs[i].imag),
                }
            )
    return rows


_FIELDS = {
    "curves": ("alpha", "beta", "k", "re", "im"),
    "points": ("alpha", "beta", "index", "re", "im", "weight"),
    "rouche": ("alpha", "r0", "beta1", "beta2", "midpoint"),
    "s_alpha": ("alpha", "s_alpha"),
    "parity_counts": ("alpha", "beta", "even_count", "odd_count"),
    "kernel": ("alpha", "beta", "xi_re", "xi_im", "re", "im"),
}


def rows_to_csv(schema: str, rows: list[dict]) -> str:
    fields = _FIELDS[schema]
    lines = [",".join(fields)]
    for row in rows:
        cells = []
        for name in fields:
            v = row[name]
            cells.append(str(v) if isinstance(v, int) else format_float(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_json(schema: str, version: int, rows: list[dict]) -> str:
    doc = {"schema": schema, "version": version, "rows": rows}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def export_curves(curves: list[ZeroCurve], path, *, mirror_json=None) -> None:
    """Write the curve family as CSV (header ``alpha,beta,k,re,im``)."""
    rows = curves_rows(curves)
    _write_text(path, rows_to_csv("curves", rows))
    if mirror_json is not None:
        _write_text(mirror_json, rows_to_json("curves", CURVES_SCHEMA[1], rows))


def parse_curves_csv(path) -> list[dict]:
    """Read back an exported curve file; values reproduce the source doubles."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().split("\n") if ln]
    header = lines[0].split(",")
    if tuple(header) != _FIELDS["curves"]:
        raise ParameterError("E_SCHEMA", f"unexpected curve CSV header: {header}")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        rows.append(
            {
                "alpha": int(cells[0]),
                "beta": float(cells[1]),
                "k": int(cells[2]),
                "re": float(cells[3]),
                "im": float(cells[4]),
            }
        )
    return rows


@dataclass(frozen=True)
class SvgStyle:
    width: int = 800
    height: int = 800
    margin: float = 60.0
    radius: float = 3.0
    color: str = "#2266cc"
    title: str = ""
    xlim: tuple | None = None
    ylim: tuple | None = None


def _axis_ticks(lo: float, hi: float, n: int = 5):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def svg_scatter(points, style: SvgStyle = SvgStyle()) -> str:
    """Standalone scatter SVG with axes on a fixed 800x800 viewport.

    Deterministic for identical input; an empty point list still yields a
    valid document with axes (default range [-1, 1]).
    """
    pts = [complex(p) for p in points]
    if any(not (np.isfinite(p.real) and np.isfinite(p.imag)) for p in pts):
        raise ParameterError("E_NONFINITE", "scatter points must be finite")
    if style.xlim is not None:
        x_lo, x_hi = style.xlim
    elif pts:
        xs = [p.real for p in pts]
        x_lo, x_hi = min(xs), max(xs)
    else:
        x_lo, x_hi = -1.0, 1.0
    if style.ylim is not None:
        y_lo, y_hi = style.ylim
    elif pts:
        ys = [p.imag for p in pts]
        y_lo, y_hi = min(ys), max(ys)
    else:
        y_lo, y_hi = -1.0, 1.0
    if x_hi - x_lo < 1e-300:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi - y_lo < 1e-300:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0

    w, h, m = style.width, style.height, style.margin

    def sx(x):
        return m + (x - x_lo) / (x_hi - x_lo) * (w - 2 * m)

    def sy(y):
        return h - m - (y - y_lo) / (y_hi - y_lo) * (h - 2 * m)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        f'<rect x="{m:.2f}" y="{m:.2f}" width="{w - 2 * m:.2f}" height="{h - 2 * m:.2f}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    if style.title:
        out.append(f'<text x="{w / 2:.2f}" y="{m / 2:.2f}" text-anchor="middle" '
                   f'font-family="monospace" font-size="14">{style.title}</text>')
    for tx in _axis_ticks(x_lo, x_hi):
        px = sx(tx)
        out.append(f'<line x1="{px:.2f}" y1="{h - m:.2f}" x2="{px:.2f}" y2="{h - m + 6:.2f}" '
                   'stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{px:.2f}" y="{h - m + 20:.2f}" text-anchor="middle" '
                   f'font-family="monospace" font-size="11">{tx:.3g}</text>')
    for ty in _axis_ticks(y_lo, y_hi):
        py = sy(ty)
        out.append(f'<line x1="{m - 6:.2f}" y1="{py:.2f}" x2="{m:.2f}" y2="{py:.2f}" '
                   'stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{m - 10:.2f}" y="{py + 4:.2f}" text-anchor="end" '
                   f'font-family="monospace" font-size="11">{ty:.3g}</text>')
    for p in pts:
        out.append(f'<circle cx="{sx(p.real):.3f}" cy="{sy(p.imag):.3f}" r="{style.radius}" '
                   f'fill="{style.color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_svg_scatter(points, path, style: SvgStyle = SvgStyle()) -> None:
    _write_text(path, svg_scatter(points, style))
