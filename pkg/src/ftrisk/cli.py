"""Command line interface.

    ftrisk smooth @czech2011 --format text
    ftrisk report data.csv --format json --k-sigma 3 --s-multiplier 4
    ftrisk plot @czech2011 --out inflation.svg

Exit status: 0 success, 1 input error, 2 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from . import datasets, report
from .errors import (
    DataFileNotFound,
    EmptySeries,
    InputError,
    IoError,
    NumericalError,
    ParseError,
)
from .geometry import Point
from .interpolant import czech_interpolant
from .plot import emit_plot
from .smoothing import Series, smooth

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    command: str = "report"
    t_column: Optional[str] = None
    v_column: Optional[str] = None
    k_sigma: float = 3.0
    s_multiplier: float = 4.0
    t_scale: float = 1.0
    repeat: int = 1
    output_format: str = "text"
    out_path: Optional[str] = None
    plot_path: Optional[str] = None
    curve: Optional[bool] = None

    def __post_init__(self):
        if not self.k_sigma > 0:
            raise InputError(f"k_sigma must be > 0, got {self.k_sigma}")
        if not self.s_multiplier > 0:
            raise InputError(f"s_multiplier must be > 0, got {self.s_multiplier}")
        if not self.t_scale > 0:
            raise InputError(f"t_scale must be > 0, got {self.t_scale}")
        if self.repeat < 1:
            raise InputError(f"repeat must be >= 1, got {self.repeat}")
        if self.output_format not in ("text", "json"):
            raise InputError(f"unknown format {self.output_format!r}")
        if self.command not in ("smooth", "report", "plot"):
            raise InputError(f"unknown command {self.command!r}")

    @property
    def is_builtin(self) -> bool:
        return self.input_path == datasets.BUILTIN_TAG


def _column(header: list[str], name: Optional[str], path) -> Optional[int]:
    if name is None:
        return None
    try:
        return header.index(name)
    except ValueError:
        raise ParseError(f"{path}: no column named {name!r} in header {header}") from None


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def load_csv(path, t_column: Optional[str] = None, v_column: Optional[str] = None) -> Series:
    """Read a series from a CSV file with a header row.

    Without explicit column names: a ``value`` column (else the only column,
    else the second of two) holds the values, and a ``t`` column (else the
    first of two) holds time.  With no time column, t = 1..n.
    """
    if str(path) == datasets.BUILTIN_TAG:
        return datasets.czech2011()
    path = Path(path)
    try:
        with path.open(encoding="utf-8-sig", newline="") as fh:
            rows = list(csv.reader(fh))
    except FileNotFoundError:
        raise DataFileNotFound(f"input file not found: {path}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: cannot read: {exc}") from None

    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError(f"{path}: missing header row", row=1)
    header = [h.strip() for h in rows[0]]
    if all(_is_number(h) for h in header):
        raise ParseError(f"{path}: header row required, got {rows[0]}", row=1)

    v_idx = _column(header, v_column, path)
    if v_idx is None:
        if "value" in header:
            v_idx = header.index("value")
        elif len(header) == 1:
            v_idx = 0
        elif len(header) == 2:
            v_idx = 1
        else:
            raise ParseError(f"{path}: cannot tell which column holds values in {header}")
    t_idx = _column(header, t_column, path)
    if t_idx is None:
        if "t" in header:
            t_idx = header.index("t")
        elif len(header) == 2:
            t_idx = 1 - v_idx

    points = []
    for lineno, row in enumerate(rows[1:], start=2):
        cells = {}
        for label, idx in (("value", v_idx), ("t", t_idx)):
            if idx is None:
                continue
            if idx >= len(row):
                raise ParseError(
                    f"{path}: row {lineno}: missing column {header[idx]!r}",
                    row=lineno, column=header[idx],
                )
            try:
                cells[label] = float(row[idx].strip())
            except ValueError:
                raise ParseError(
                    f"{path}: row {lineno}, column {header[idx]!r}: "
                    f"not a number: {row[idx]!r}",
                    row=lineno, column=header[idx],
                ) from None
        t = cells.get("t", float(len(points) + 1))
        try:
            points.append(Point(t, cells["value"]))
        except InputError as exc:
            raise ParseError(f"{path}: row {lineno}: {exc}", row=lineno) from None
    if not points:
        raise EmptySeries(f"{path}: no data rows")
    return Series(tuple(points), label=path.stem)


def _emit(text: str, out_path: Optional[str], stdout: TextIO) -> None:
    if out_path is None:
        stdout.write(text)
        return
    try:
        Path(out_path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {out_path}: {exc.strerror or exc}") from exc


def run_pipeline(config: RunConfig, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Run one command end to end and return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        series = load_csv(config.input_path, config.t_column, config.v_column)
        smoothed = smooth(series, t_scale=config.t_scale, repeat=config.repeat)

        if config.command == "plot" or config.plot_path:
            plot_path = config.plot_path or config.out_path
            if plot_path is None:
                raise InputError("plot needs an output path (--out)")
            curve = config.is_builtin if config.curve is None else config.curve
            emit_plot(series, smoothed, plot_path, czech_interpolant() if curve else None)
            if config.command == "plot":
                return EXIT_OK

        if config.command == "smooth":
            rep = report.smooth_report(series, smoothed, config.input_path)
        else:
            rep = report.build_report(
                series, smoothed, config.input_path, config.k_sigma, config.s_multiplier
            )
        text = report.to_json(rep) if config.output_format == "json" else report.render_text(rep)
        _emit(text, config.out_path, stdout)
    except InputError as exc:
        print(f"ftrisk: error: {exc}", file=stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"ftrisk: numerical error: {exc}", file=stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help=f"CSV file, or {datasets.BUILTIN_TAG} for the bundled data")
    common.add_argument("--t-column", help="name of the time column")
    common.add_argument("--v-column", help="name of the value column")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    common.add_argument("--k-sigma", type=float, default=3.0, help="classical interval multiplier")
    common.add_argument("--s-multiplier", type=float, default=4.0,
                        help="Fermat-relative interval multiplier")
    common.add_argument("--t-scale", type=float, default=1.0,
                        help="scale applied to the time axis before solving")
    common.add_argument("--repeat", type=int, default=1, help="number of smoothing passes")
    common.add_argument("--out", dest="out_path",
                        help="output file (the SVG for `plot`; the report otherwise)")

    parser = _Parser(prog="ftrisk", description="Fermat-Torricelli smoothing and risk intervals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("smooth", parents=[common], help="per-point Fermat displacement table")
    rep = sub.add_parser("report", parents=[common], help="classical vs Fermat-relative comparison")
    rep.add_argument("--plot", dest="plot_path", help="also write an SVG chart here")
    plot = sub.add_parser("plot", parents=[common], help="SVG chart of data and Fermat points")
    plot.add_argument("--curve", action=argparse.BooleanOptionalAction, default=None,
                      help="draw the published interpolant (default: only for the bundled data)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    opts = vars(args)
    return RunConfig(
        input_path=opts["input"],
        command=opts["command"],
        t_column=opts["t_column"],
        v_column=opts["v_column"],
        k_sigma=opts["k_sigma"],
        s_multiplier=opts["s_multiplier"],
        t_scale=opts["t_scale"],
        repeat=opts["repeat"],
        output_format=opts["output_format"],
        out_path=opts["out_path"],
        plot_path=opts.get("plot_path"),
        curve=opts.get("curve"),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except InputError as exc:
        print(f"ftrisk: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run_pipeline(config)


if __name__ == "__main__":
    sys.exit(main())
