"""Render the four-region chart of the motivic stable stems to an SVG file.

Example:
    python scripts/draw_region_chart.py out.svg --window -6:40:-10:42 --dots \
        --overlay Pk_h1_4 --overlay w1_family
"""

from __future__ import annotations

import argparse

from motivic_stems.charts import load_sample_stems
from motivic_stems.render import ChartStyle, region_chart_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output")
    parser.add_argument("--window", default="-4:24:-8:26", help="smin:smax:wmin:wmax")
    parser.add_argument("--scale", type=int, default=20)
    parser.add_argument("--dots", action="store_true")
    parser.add_argument("--overlay", action="append", default=[])
    args = parser.parse_args()

    s_min, s_max, w_min, w_max = (int(p) for p in args.window.split(":"))
    style = ChartStyle(
        s_min=s_min,
        s_max=s_max,
        w_min=w_min,
        w_max=w_max,
        scale=args.scale,
        group_dots=args.dots,
        family_overlays=tuple(args.overlay),
    )
    svg = region_chart_svg(style, stems_table=load_sample_stems() if args.dots else None)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.output} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
