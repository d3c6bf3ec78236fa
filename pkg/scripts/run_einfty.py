"""Run the eta-localized Adams-Novikov spectral sequence over a chosen window.

Prints the per-tridegree comparison of computed survivors against the closed
form, then the suite verdicts. Larger windows push the certified core outward;
the INDETERMINATE band at the window boundary is expected and is the point.
"""

from __future__ import annotations

import argparse

from motivic_stems.verify import EINFTY_WINDOW, check_einfty, einfty_report


def parse_bounds(text: str) -> dict[str, tuple[int, int]]:
    bounds = {}
    for piece in text.split(","):
        name, span = piece.split("=", 1)
        lo, hi = span.split(":", 1)
        bounds[name.strip()] = (int(lo), int(hi))
    return bounds


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    default = ",".join(f"{n}={lo}:{hi}" for n, (lo, hi) in EINFTY_WINDOW.items())
    parser.add_argument("--window", default=default, help=f"exponent bounds, default {default}")
    parser.add_argument("--quiet", action="store_true", help="suite verdicts only, no table")
    args = parser.parse_args()

    bounds = parse_bounds(args.window)
    if not args.quiet:
        for line in einfty_report(bounds):
            print(line)
    for result in check_einfty(bounds):
        print(result.line)


if __name__ == "__main__":
    main()
