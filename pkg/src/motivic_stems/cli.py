"""Command line interface.

Machine-readable `key=value` output on stdout, prose behind --pretty, errors
on stderr. Exit codes: 0 on success, 1 when data fails validation or a
verification check fails, 2 for usage errors (argparse's default).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charts import (
    ChartError,
    ctau_homotopy,
    eta_localize_chart,
    lift_to_motivic,
    load_sample_chart,
    load_sample_stems,
    parse_chart,
    parse_stems,
    serialize_chart,
    serialize_stems,
)
from .families import (
    FamilyError,
    builtin_families,
    family_line,
    may_e1_generators,
    sharpness_report,
)
from .regions import classify, resolve_group
from .render import ChartStyle, RenderError, bidegree_window, groups_tsv, motivic_chart_svg, region_chart_svg
from .resources import DATA_ENV_VAR
from . import verify as verify_mod

REGION_PROSE = {
    "Zero": "the group vanishes (negative stem or weight above the stem)",
    "TauLocal": "multiplication by tau is invertible; the group is the classical 2-complete stem",
    "EtaLocal": "multiplication by eta is invertible; the group is read off a three-generator ring",
    "NotUnderstood": "between the local regions; no general answer is known",
}


def _load_chart(path: str):
    if path == "sample":
        return load_sample_chart()
    return parse_chart(Path(path).read_text(encoding="utf-8"))


def _load_stems(path: str):
    if path == "sample":
        return load_sample_stems()
    return parse_stems(Path(path).read_text(encoding="utf-8"))


def _parse_window4(text: str, parser: argparse.ArgumentParser) -> tuple[int, int, int, int]:
    parts = text.split(":")
    if len(parts) != 4:
        parser.error(f"--window expects smin:smax:wmin:wmax, got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        parser.error(f"--window has a non-integer bound in {text!r}")
        raise AssertionError  # unreachable; parser.error exits


def _parse_exponent_window(text: str, parser: argparse.ArgumentParser) -> dict[str, tuple[int, int]]:
    bounds: dict[str, tuple[int, int]] = {}
    for piece in text.split(","):
        if "=" not in piece or ":" not in piece:
            parser.error(f"--einfty-window expects name=lo:hi[,...], got {piece!r}")
        name, span = piece.split("=", 1)
        lo_text, hi_text = span.split(":", 1)
        try:
            bounds[name.strip()] = (int(lo_text), int(hi_text))
        except ValueError:
            parser.error(f"--einfty-window has a non-integer bound in {piece!r}")
    return bounds


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic-stems",
        description="Region structure and group values of the motivic stable stems over C.",
        epilog=f"Chart and stems paths accept the literal 'sample' for the bundled data; "
        f"set {DATA_ENV_VAR} to point at a different data directory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="region of a bidegree (s, w)")
    p.add_argument("s", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("group", help="resolved group value at (s, w)")
    p.add_argument("s", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--stems", default="sample", help="stems table file, or 'sample'")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("ctau", help="homotopy of the cofiber of tau at (s, w)")
    p.add_argument("s", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--chart", default="sample", help="classical chart file, or 'sample'")

    p = sub.add_parser("localize", help="eta-localize the classes of a chart")
    p.add_argument("--chart", default="sample")
    p.add_argument("--name", help="restrict to one class")
    p.add_argument("--max-steps", type=int, default=None)

    p = sub.add_parser("ingest", help="parse and validate a chart or stems file")
    p.add_argument("path")
    p.add_argument("--kind", choices=("chart", "stems"), default="chart")
    p.add_argument("--canonical", action="store_true", help="print the canonical serialization")

    p = sub.add_parser("families", help="named element families")
    fam_sub = p.add_subparsers(dest="families_command", required=True)
    fam_sub.add_parser("list", help="bases, periods, and lines of the built-in families")
    fam_sub.add_parser("check", help="run the families verification suite")

    p = sub.add_parser("may-census", help="May E1 generators up to a stem bound")
    p.add_argument("max_stem", type=int)

    p = sub.add_parser("chart", help="render charts")
    chart_sub = p.add_subparsers(dest="chart_command", required=True)

    pc = chart_sub.add_parser("regions", help="SVG of the four-region picture")
    pc.add_argument("--window", default="-4:24:-8:26", help="smin:smax:wmin:wmax")
    pc.add_argument("--scale", type=int, default=20)
    pc.add_argument("--dots", action="store_true", help="mark each lattice point with its group")
    pc.add_argument("--overlay", action="append", default=[], help="family name; repeatable")
    pc.add_argument("--stems", default="sample")
    pc.add_argument("-o", "--output", default=None, help="output file; stdout when omitted")

    pc = chart_sub.add_parser("groups", help="TSV of resolved groups over a window")
    pc.add_argument("--window", default="-2:12:-6:12", help="smin:smax:wmin:wmax")
    pc.add_argument("--stems", default="sample")
    pc.add_argument("-o", "--output", default=None)

    pc = chart_sub.add_parser("motivic", help="SVG of the motivic lift of a chart")
    pc.add_argument("--chart", default="sample")
    pc.add_argument("--window", default=None, help="smin:smax:fmin:fmax")
    pc.add_argument("--scale", type=int, default=24)
    pc.add_argument("-o", "--output", default=None)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", help=f"subset of {', '.join(verify_mod.SUITES)}; all when omitted")
    p.add_argument("--table", action="store_true", help="with einfty: per-tridegree comparison table")
    p.add_argument("--einfty-window", default=None, help="override, e.g. tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1")

    return parser


def _cmd_classify(args) -> int:
    label = classify(args.s, args.w)
    print(f"region={label}")
    if args.pretty:
        print(f"pi_{{{args.s},{args.w}}}: {REGION_PROSE[str(label)]}")
    return 0


def _cmd_group(args) -> int:
    table = _load_stems(args.stems)
    value = resolve_group(args.s, args.w, table)
    print(f"group={value.group_str} generator={value.generator_str}")
    if args.pretty:
        label = classify(args.s, args.w)
        print(f"region={label}; {REGION_PROSE[str(label)]}")
    return 0


def _cmd_ctau(args) -> int:
    chart = _load_chart(args.chart)
    print(f"group={ctau_homotopy(chart, args.s, args.w)}")
    return 0


def _cmd_localize(args) -> int:
    chart = _load_chart(args.chart)
    results = eta_localize_chart(chart, max_steps=args.max_steps)
    flat = [r for lst in results.values() for r in lst]
    if args.name:
        flat = [r for r in flat if r.cls.name == args.name]
        if not flat:
            print(f"no class named {args.name!r} in the chart", file=sys.stderr)
            return 1
    for r in sorted(flat, key=lambda r: (r.cls.s, r.cls.f, r.cls.name)):
        target = r.value.name if r.value is not None else "0"
        print(f"{r.cls.name} ({r.cls.s},{r.cls.f}): {r.status} -> {target} steps={r.steps}")
    return 0


def _cmd_ingest(args) -> int:
    text = Path(args.path).read_text(encoding="utf-8") if args.path != "sample" else None
    if args.kind == "chart":
        chart = _load_chart(args.path) if text is None else parse_chart(text)
        print(
            f"ok: {len(chart.classes)} classes, s_max={chart.s_max}, "
            f"provenance={chart.provenance or '(none)'}"
        )
        if args.canonical:
            sys.stdout.write(serialize_chart(chart))
    else:
        table = _load_stems(args.path) if text is None else parse_stems(text)
        print(f"ok: stems 0..{table.s_max}, provenance={table.provenance or '(none)'}")
        if args.canonical:
            sys.stdout.write(serialize_stems(table))
    return 0


def _cmd_families(args) -> int:
    if args.families_command == "list":
        for fam in builtin_families():
            print(f"{fam.name}: base={fam.base} period={fam.period} annihilated_by={fam.annihilated_by}")
            if fam.period.s != 0:
                slope, intercept = family_line(fam.name)
                print(f"  line: w = {slope}*s + {intercept}")
            print(f"  {fam.note}")
        print()
        print(sharpness_report(load_sample_stems()))
        return 0
    results = verify_mod.check_families()
    for r in results:
        print(r.line)
    return 0 if all(r.passed for r in results) else 1


def _cmd_may_census(args) -> int:
    for g in may_e1_generators(args.max_stem):
        print(f"{g.name} stem={g.stem} weight={g.weight}")
    return 0


def _cmd_chart(args, parser: argparse.ArgumentParser) -> int:
    if args.chart_command == "regions":
        s_min, s_max, w_min, w_max = _parse_window4(args.window, parser)
        style = ChartStyle(
            s_min=s_min,
            s_max=s_max,
            w_min=w_min,
            w_max=w_max,
            scale=args.scale,
            group_dots=args.dots,
            family_overlays=tuple(args.overlay),
        )
        table = _load_stems(args.stems) if args.dots else None
        _emit(region_chart_svg(style, stems_table=table), args.output)
        return 0
    if args.chart_command == "groups":
        s_min, s_max, w_min, w_max = _parse_window4(args.window, parser)
        table = _load_stems(args.stems)
        _emit(groups_tsv(bidegree_window(s_min, s_max, w_min, w_max), stems_table=table), args.output)
        return 0
    lift = lift_to_motivic(_load_chart(args.chart))
    if args.window is None:
        style = ChartStyle(
            s_min=0, s_max=lift.chart.s_max + 1, w_min=0, w_max=lift.chart.s_max + 1, scale=args.scale
        )
    else:
        s_min, s_max, f_min, f_max = _parse_window4(args.window, parser)
        style = ChartStyle(s_min=s_min, s_max=s_max, w_min=f_min, w_max=f_max, scale=args.scale)
    _emit(motivic_chart_svg(lift, style), args.output)
    return 0


def _cmd_verify(args) -> int:
    window_bounds = None
    if args.einfty_window:
        window_bounds = _parse_exponent_window(args.einfty_window, build_parser())
    names = args.suites or list(verify_mod.SUITES)
    unknown = [n for n in names if n not in verify_mod.SUITES]
    if unknown:
        print(f"unknown suites: {', '.join(unknown)}; available: {', '.join(verify_mod.SUITES)}", file=sys.stderr)
        return 2
    results = []
    for name in names:
        if name == "einfty":
            if args.table:
                for line in verify_mod.einfty_report(window_bounds):
                    print(line)
            results.extend(verify_mod.check_einfty(window_bounds))
        else:
            results.extend(verify_mod.SUITES[name]())
    for r in results:
        print(r.line)
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "group":
            return _cmd_group(args)
        if args.command == "ctau":
            return _cmd_ctau(args)
        if args.command == "localize":
            return _cmd_localize(args)
        if args.command == "ingest":
            return _cmd_ingest(args)
        if args.command == "families":
            return _cmd_families(args)
        if args.command == "may-census":
            return _cmd_may_census(args)
        if args.command == "chart":
            return _cmd_chart(args, parser)
        return _cmd_verify(args)
    except (ChartError, FamilyError, RenderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
