"""Figure CLI.

    netosc-figures plot --csv run.csv --quantity displacement \
        --times 0,2,4,6,8,10 --out run.png
    netosc-figures plot-compare --csv-a boson.csv --csv-b fermion.csv \
        --quantity velocity --times 0,2,4 --out compare.png

Exit codes: 0 success, 1 validation or file-format error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import CsvFormatError, FigureValidationError
from .panels import PanelSpec, render, render_compare


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FigureValidationError(message)


def _parse_times(raw: str) -> tuple[float, ...]:
    try:
        times = tuple(float(part) for part in raw.split(",") if part.strip())
    except ValueError as exc:
        raise FigureValidationError(f"cannot parse --times {raw!r}: {exc}") from exc
    if not times:
        raise FigureValidationError("--times needs at least one value")
    return times


def _add_panel_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--quantity", required=True, choices=("displacement", "velocity")
    )
    parser.add_argument("--times", required=True, help="comma-separated sample times")
    parser.add_argument("--out", required=True, help="output image (.png or .svg)")
    parser.add_argument("--title", default="")
    parser.add_argument("--y-min", type=float, default=None)
    parser.add_argument("--y-max", type=float, default=None)


def _spec_from(args) -> PanelSpec:
    if (args.y_min is None) != (args.y_max is None):
        raise FigureValidationError("--y-min and --y-max must be given together")
    y_range = None if args.y_min is None else (args.y_min, args.y_max)
    return PanelSpec(
        quantity=args.quantity,
        times=_parse_times(args.times),
        y_range=y_range,
        title=args.title,
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="netosc-figures", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    plot_p = sub.add_parser("plot", help="stacked panels from one trajectory CSV")
    plot_p.add_argument("--csv", required=True)
    _add_panel_arguments(plot_p)

    cmp_p = sub.add_parser("plot-compare", help="two-column comparison of two CSVs")
    cmp_p.add_argument("--csv-a", required=True)
    cmp_p.add_argument("--csv-b", required=True)
    cmp_p.add_argument("--label-a", default=None)
    cmp_p.add_argument("--label-b", default=None)
    _add_panel_arguments(cmp_p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        spec = _spec_from(args)
        if args.command == "plot":
            out = render(args.csv, spec, args.out)
        else:
            out = render_compare(
                args.csv_a, args.csv_b, spec, args.out,
                label_a=args.label_a, label_b=args.label_b,
            )
        print(f"wrote {out}")
        return 0
    except (FigureValidationError, CsvFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
