"""Deterministic SVG and TSV renderings of the region picture.

Byte-identical output is a contract here: iteration orders are fixed, every
coordinate goes through exact rational arithmetic and is printed with exactly
three decimals, and the palette is hard coded. Regenerating a chart from the
same inputs must reproduce the committed golden files bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .charts import MotivicLift, StemsTable
from .families import builtin_families
from .regions import GroupValue, RegionLabel, classify, resolve_group

REGION_FILL = {
    RegionLabel.ZERO: "#f2f2f2",
    RegionLabel.TAU_LOCAL: "#ffe8b3",
    RegionLabel.ETA_LOCAL: "#cfe3f7",
    RegionLabel.NOT_UNDERSTOOD: "#e3d1ee",
}

REGION_LEGEND = [
    (RegionLabel.TAU_LOCAL, "tau-local"),
    (RegionLabel.ETA_LOCAL, "eta-local"),
    (RegionLabel.NOT_UNDERSTOOD, "not understood"),
    (RegionLabel.ZERO, "zero"),
]

BOUNDARY_STYLE = [
    # (slope, intercept, stroke, label)
    (Fraction(1), Fraction(0), "#444444", "w = s"),
    (Fraction(3, 5), Fraction(1), "#b02e2e", "w = 3s/5 + 1"),
    (Fraction(1, 2), Fraction(1), "#1f7a3d", "w = s/2 + 1"),
]

FAMILY_PALETTE = ["#d42f2f", "#7a3fd1", "#1c8c4e", "#e08a00", "#0b66a8"]

MARGIN_LEFT = 56
MARGIN_TOP = 36
MARGIN_RIGHT = 20
MARGIN_BOTTOM = 44
LEGEND_HEIGHT = 30


class RenderError(ValueError):
    pass


def fmt3(x: Fraction | int) -> str:
    """Exactly three decimals, computed from the exact rational value."""
    n = round(Fraction(x) * 1000)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1000}.{n % 1000:03d}"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


@dataclass(frozen=True)
class ChartStyle:
    """Viewport and layer toggles for the region chart, in chart units."""

    s_min: int = -4
    s_max: int = 24
    w_min: int = -8
    w_max: int = 26
    scale: int = 20  # pixels per unit
    shade_regions: bool = True
    boundary_lines: bool = True
    group_dots: bool = False
    family_overlays: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.s_min > self.s_max or self.w_min > self.w_max:
            raise RenderError(
                f"empty chart range: s in [{self.s_min},{self.s_max}], w in [{self.w_min},{self.w_max}]"
            )
        if self.scale <= 0:
            raise RenderError(f"scale must be positive, got {self.scale}")
        known = {f.name for f in builtin_families()}
        unknown = [n for n in self.family_overlays if n not in known]
        if unknown:
            raise RenderError(f"unknown family overlays: {unknown}")


class _Canvas:
    """Pixel transforms for one style; all arithmetic stays in Fractions."""

    def __init__(self, style: ChartStyle):
        self.style = style
        self.plot_w = (style.s_max - style.s_min + 1) * style.scale
        self.plot_h = (style.w_max - style.w_min + 1) * style.scale
        self.width = MARGIN_LEFT + self.plot_w + MARGIN_RIGHT
        self.height = MARGIN_TOP + self.plot_h + MARGIN_BOTTOM + LEGEND_HEIGHT

    def x(self, s: Fraction | int) -> Fraction:
        # lattice point s sits in the middle of its unit cell
        return MARGIN_LEFT + (Fraction(s) - self.style.s_min + Fraction(1, 2)) * self.style.scale

    def y(self, w: Fraction | int) -> Fraction:
        return MARGIN_TOP + (self.style.w_max + Fraction(1, 2) - Fraction(w)) * self.style.scale

    def s_edges(self) -> tuple[Fraction, Fraction]:
        return Fraction(2 * self.style.s_min - 1, 2), Fraction(2 * self.style.s_max + 1, 2)

    def w_edges(self) -> tuple[Fraction, Fraction]:
        return Fraction(2 * self.style.w_min - 1, 2), Fraction(2 * self.style.w_max + 1, 2)


def _region_cells(canvas: _Canvas) -> list[str]:
    # one rect per horizontal run of equal region, top row first
    style = canvas.style
    out = []
    half = Fraction(1, 2)
    for w in range(style.w_max, style.w_min - 1, -1):
        s = style.s_min
        while s <= style.s_max:
            label = classify(s, w)
            run_end = s
            while run_end + 1 <= style.s_max and classify(run_end + 1, w) == label:
                run_end += 1
            out.append(
                f'<rect x="{fmt3(canvas.x(s - half))}" y="{fmt3(canvas.y(w + half))}" '
                f'width="{fmt3((run_end - s + 1) * style.scale)}" height="{fmt3(style.scale)}" '
                f'fill="{REGION_FILL[label]}"/>'
            )
            s = run_end + 1
    return out


def _clip_line(
    slope: Fraction, intercept: Fraction, s_lo: Fraction, s_hi: Fraction, w_lo: Fraction, w_hi: Fraction
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] | None:
    # segment of w = slope*s + intercept inside the rectangle, exact arithmetic
    lo, hi = s_lo, s_hi
    if slope > 0:
        lo = max(lo, (w_lo - intercept) / slope)
        hi = min(hi, (w_hi - intercept) / slope)
    elif slope == 0:
        if not (w_lo <= intercept <= w_hi):
            return None
    if lo > hi:
        return None
    return (lo, slope * lo + intercept), (hi, slope * hi + intercept)


def _boundary_layer(canvas: _Canvas) -> list[str]:
    out = []
    s_lo, s_hi = canvas.s_edges()
    w_lo, w_hi = canvas.w_edges()
    for slope, intercept, stroke, label in BOUNDARY_STYLE:
        seg = _clip_line(slope, intercept, max(s_lo, Fraction(0)), s_hi, w_lo, w_hi)
        if seg is None:
            continue
        (sa, wa), (sb, wb) = seg
        out.append(
            f'<line x1="{fmt3(canvas.x(sa))}" y1="{fmt3(canvas.y(wa))}" '
            f'x2="{fmt3(canvas.x(sb))}" y2="{fmt3(canvas.y(wb))}" '
            f'stroke="{stroke}" stroke-width="1.500"/>'
        )
        out.append(
            f'<text x="{fmt3(canvas.x(sb) - 2)}" y="{fmt3(canvas.y(wb) - 6)}" '
            f'font-size="11.000" text-anchor="end" fill="{stroke}">{_escape(label)}</text>'
        )
    # the vanishing boundary continues down the 0-stem ray
    if s_lo <= 0 <= s_hi and w_lo <= 0:
        top = min(Fraction(0), w_hi)
        out.append(
            f'<line x1="{fmt3(canvas.x(0))}" y1="{fmt3(canvas.y(top))}" '
            f'x2="{fmt3(canvas.x(0))}" y2="{fmt3(canvas.y(w_lo))}" '
            f'stroke="#444444" stroke-width="1.500"/>'
        )
    return out


def _axes_layer(canvas: _Canvas, vertical_label: str = "w") -> list[str]:
    style = canvas.style
    out = []
    x0, x1 = MARGIN_LEFT, MARGIN_LEFT + canvas.plot_w
    y0, y1 = MARGIN_TOP, MARGIN_TOP + canvas.plot_h
    out.append(
        f'<rect x="{fmt3(x0)}" y="{fmt3(y0)}" width="{fmt3(canvas.plot_w)}" '
        f'height="{fmt3(canvas.plot_h)}" fill="none" stroke="#888888" stroke-width="1.000"/>'
    )
    for s in range(style.s_min, style.s_max + 1):
        if s % 5 == 0:
            out.append(
                f'<text x="{fmt3(canvas.x(s))}" y="{fmt3(y1 + 16)}" font-size="10.000" '
                f'text-anchor="middle" fill="#333333">{s}</text>'
            )
    for w in range(style.w_min, style.w_max + 1):
        if w % 5 == 0:
            out.append(
                f'<text x="{fmt3(x0 - 8)}" y="{fmt3(canvas.y(w) + 3)}" font-size="10.000" '
                f'text-anchor="end" fill="#333333">{w}</text>'
            )
    out.append(
        f'<text x="{fmt3(x1 + 4)}" y="{fmt3(y1 + 16)}" font-size="12.000" '
        f'text-anchor="start" fill="#000000">s</text>'
    )
    out.append(
        f'<text x="{fmt3(x0 - 8)}" y="{fmt3(y0 - 10)}" font-size="12.000" '
        f'text-anchor="end" fill="#000000">{_escape(vertical_label)}</text>'
    )
    return out


def _legend_layer(canvas: _Canvas) -> list[str]:
    out = []
    y = MARGIN_TOP + canvas.plot_h + MARGIN_BOTTOM
    x = MARGIN_LEFT
    for label, text in REGION_LEGEND:
        out.append(
            f'<rect x="{fmt3(x)}" y="{fmt3(y)}" width="14.000" height="14.000" '
            f'fill="{REGION_FILL[label]}" stroke="#888888" stroke-width="0.500"/>'
        )
        out.append(
            f'<text x="{fmt3(x + 19)}" y="{fmt3(y + 11)}" font-size="11.000" '
            f'text-anchor="start" fill="#333333">{_escape(text)}</text>'
        )
        x += 19 + 9 * len(text) + 18
    return out


def _dot_layer(canvas: _Canvas, resolver: Callable[[int, int], GroupValue]) -> list[str]:
    style = canvas.style
    out = []
    r = Fraction(style.scale * 18, 100)
    for s in range(style.s_min, style.s_max + 1):
        for w in range(style.w_min, style.w_max + 1):
            value = resolver(s, w)
            cx, cy = canvas.x(s), canvas.y(w)
            if value.kind == "unknown":
                out.append(
                    f'<text x="{fmt3(cx)}" y="{fmt3(cy + 3)}" font-size="10.000" '
                    f'text-anchor="middle" fill="#7a3fd1">?</text>'
                )
            elif value.kind == "classical":
                out.append(
                    f'<circle cx="{fmt3(cx)}" cy="{fmt3(cy)}" r="{fmt3(r)}" '
                    f'fill="none" stroke="#222222" stroke-width="1.000"/>'
                )
            elif not value.descriptor.is_trivial:
                out.append(f'<circle cx="{fmt3(cx)}" cy="{fmt3(cy)}" r="{fmt3(r)}" fill="#222222"/>')
    return out


def _family_layer(canvas: _Canvas) -> list[str]:
    style = canvas.style
    out = []
    families = {f.name: f for f in builtin_families()}
    r = Fraction(style.scale * 3, 10)
    for idx, name in enumerate(style.family_overlays):
        fam = families[name]
        color = FAMILY_PALETTE[idx % len(FAMILY_PALETTE)]
        k = 0
        first = None
        while True:
            p = fam.bidegree(k)
            if not (style.s_min <= p.s <= style.s_max and style.w_min <= p.w <= style.w_max):
                if fam.period.s >= 0 and p.s > style.s_max:
                    break
                if fam.period.s == 0 and p.w < style.w_min:
                    break
                if k > 4 * (abs(style.s_max) + abs(style.w_min) + 2):
                    break
                k += 1
                continue
            if first is None:
                first = p
            out.append(
                f'<circle cx="{fmt3(canvas.x(p.s))}" cy="{fmt3(canvas.y(p.w))}" r="{fmt3(r)}" '
                f'fill="none" stroke="{color}" stroke-width="1.500"/>'
            )
            k += 1
        if first is not None:
            out.append(
                f'<text x="{fmt3(canvas.x(first.s) + 6)}" y="{fmt3(canvas.y(first.w) - 6)}" '
                f'font-size="10.000" text-anchor="start" fill="{color}">{_escape(name)}</text>'
            )
    return out


def region_chart_svg(
    style: ChartStyle | None = None,
    resolver: Callable[[int, int], GroupValue] | None = None,
    stems_table: StemsTable | None = None,
) -> str:
    """Region chart of the (s, w) plane, drawn to scale.

    Lattice cells are shaded by region, the three boundary lines are drawn
    from exactly computed endpoints, and an optional dot layer marks each
    lattice point with its resolved group (blank, dot, open dot, or ?).
    """
    style = style or ChartStyle()
    if resolver is None:
        resolver = lambda s, w: resolve_group(s, w, stems_table)
    canvas = _Canvas(style)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas.width}" height="{canvas.height}" '
        f'viewBox="0 0 {canvas.width} {canvas.height}">',
        "<title>Region structure of the motivic stable stems over C</title>",
        f'<rect x="0.000" y="0.000" width="{fmt3(canvas.width)}" height="{fmt3(canvas.height)}" fill="#ffffff"/>',
    ]
    if style.shade_regions:
        parts.append('<g id="regions">')
        parts.extend(_region_cells(canvas))
        parts.append("</g>")
    parts.append('<g id="axes">')
    parts.extend(_axes_layer(canvas))
    parts.append("</g>")
    if style.boundary_lines:
        parts.append('<g id="boundaries">')
        parts.extend(_boundary_layer(canvas))
        parts.append("</g>")
    if style.group_dots:
        parts.append('<g id="groups">')
        parts.extend(_dot_layer(canvas, resolver))
        parts.append("</g>")
    if style.family_overlays:
        parts.append('<g id="families">')
        parts.extend(_family_layer(canvas))
        parts.append("</g>")
    parts.append('<g id="legend">')
    parts.extend(_legend_layer(canvas))
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bidegree_window(s_min: int, s_max: int, w_min: int, w_max: int) -> Iterator[tuple[int, int]]:
    """Lattice rectangle, iterated in the TSV's (s, w) sort order."""
    if s_min > s_max or w_min > w_max:
        raise RenderError(f"empty window: s in [{s_min},{s_max}], w in [{w_min},{w_max}]")
    for s in range(s_min, s_max + 1):
        for w in range(w_min, w_max + 1):
            yield s, w


def groups_tsv(
    window: Iterable[tuple[int, int]],
    resolver: Callable[[int, int], GroupValue] | None = None,
    stems_table: StemsTable | None = None,
) -> str:
    """One row per (s, w): region, group, and generator, sorted by (s, w)."""
    if resolver is None:
        resolver = lambda s, w: resolve_group(s, w, stems_table)
    lines = ["# s\tw\tregion\tgroup\tgenerator"]
    for s, w in sorted(set(window)):
        value = resolver(s, w)
        lines.append(f"{s}\t{w}\t{classify(s, w)}\t{value.group_str}\t{value.generator_str}")
    return "\n".join(lines) + "\n"


def motivic_chart_svg(lift: MotivicLift, style: ChartStyle | None = None) -> str:
    """Adams-style (s, f) chart of a motivic lift.

    The vertical axis reuses the style's w range as the filtration range. Each
    class is a dot whose tooltip (an SVG title element) records its weight
    tower: the class exists in all weights w <= (s+f)/2. Eta edges are drawn
    as diagonal segments.
    """
    style = style or ChartStyle(s_min=0, s_max=max(lift.chart.s_max, 1), w_min=0, w_max=max(lift.chart.s_max, 1))
    canvas = _Canvas(style)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas.width}" height="{canvas.height}" '
        f'viewBox="0 0 {canvas.width} {canvas.height}">',
        "<title>Motivic lift of a classical Adams-Novikov chart</title>",
        f'<rect x="0.000" y="0.000" width="{fmt3(canvas.width)}" height="{fmt3(canvas.height)}" fill="#ffffff"/>',
        '<g id="axes">',
    ]
    parts.extend(_axes_layer(canvas, vertical_label="f"))
    parts.append("</g>")
    positions: dict[str, tuple[Fraction, Fraction]] = {}
    in_range = [
        c
        for c in sorted(lift.chart.classes, key=lambda c: (c.s, c.f, c.name))
        if style.s_min <= c.s <= style.s_max and style.w_min <= c.f <= style.w_max
    ]
    for c in in_range:
        siblings = [d for d in lift.chart.at(c.s, c.f) if d in in_range]
        offset = Fraction(0)
        if len(siblings) > 1:
            i = sorted(s.name for s in siblings).index(c.name)
            offset = Fraction(22 * (2 * i - (len(siblings) - 1)), 100)
        positions[c.name] = (canvas.x(Fraction(c.s) + offset), canvas.y(c.f))
    parts.append('<g id="eta-edges">')
    for c in in_range:
        if c.eta_edge and c.eta_edge in positions:
            x1, y1 = positions[c.name]
            x2, y2 = positions[c.eta_edge]
            parts.append(
                f'<line x1="{fmt3(x1)}" y1="{fmt3(y1)}" x2="{fmt3(x2)}" y2="{fmt3(y2)}" '
                f'stroke="#999999" stroke-width="1.000"/>'
            )
    parts.append("</g>")
    parts.append('<g id="classes">')
    r = Fraction(style.scale * 16, 100)
    for c in in_range:
        x, y = positions[c.name]
        top = lift.w_top[c.name]
        label = _escape(f"{c.name}: w <= {top}")
        order = "Z2" if c.order == 0 else f"Z/{c.order}"
        parts.append(
            f'<circle cx="{fmt3(x)}" cy="{fmt3(y)}" r="{fmt3(r)}" fill="#1d3f8f">'
            f"<title>{label} ({_escape(order)})</title></circle>"
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
