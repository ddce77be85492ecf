# *******************************************************************************
# Copyright (c) 2025 Contributors to the Eclipse Foundation
#
# See the NOTICE file(s) distributed with this work for additional
# information regarding copyright ownership.
#
# This program and the accompanying materials are made available under the
# terms of the Apache License Version 2.0 which is available at
# https://www.apache.org/licenses/LICENSE-2.0
#
# SPDX-License-Identifier: Apache-2.0
# *******************************************************************************

import argparse
import sys
from pathlib import Path

from .diagram import parse_gauss, parse_pd
from .errors import InputError
from .gh_logging import Logger, set_level
from .manifold import read_heegaard
from .report import InvariantReport, heegaard_report, knot_report, render
from .table import read_knot_table, resolve_table_path

log = Logger(__name__)

EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2

DEFAULT_COLORINGS = (3, 5, 7)


def _coloring_list(value: str) -> tuple[int, ...]:
    try:
        moduli = tuple(int(x) for x in value.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got '{value}'"
        ) from None
    if not moduli or any(n < 2 for n in moduli):
        raise argparse.ArgumentTypeError(f"coloring moduli must be >= 2: '{value}'")
    return moduli


def parse_args(args: list[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="knotforge",
        description=(
            "Fundamental groups and homology of knot complements "
            "and of 3-manifolds given by Heegaard diagrams."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v logs progress, -vv adds debug detail (default: $KNOTFORGE_LOG_LEVEL or warning).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    knot = sub.add_parser("knot", help="Invariants of a knot complement.")
    knot.add_argument(
        "names",
        nargs="*",
        help="Knot table names. If neither names nor a code are provided, "
        "every knot in the table is processed.",
    )
    code = knot.add_mutually_exclusive_group()
    code.add_argument("--pd", type=str, default=None, help="PD code, e.g. 'X(1,5,2,4) ...'.")
    code.add_argument("--gauss", type=str, default=None, help="Signed Gauss code, e.g. 'O1+U2+...'.")
    knot.add_argument(
        "--colorings",
        type=_coloring_list,
        default=DEFAULT_COLORINGS,
        help="Comma-separated moduli for Fox coloring counts (default: 3,5,7).",
    )
    knot.add_argument(
        "--keep-redundant",
        action="store_true",
        help="Report pi1 with every Wirtinger relator instead of dropping the last one.",
    )
    _add_table_option(knot)
    _add_format_option(knot)

    heegaard = sub.add_parser("heegaard", help="Invariants of a Heegaard diagram.")
    heegaard.add_argument("files", nargs="+", type=Path, help="Heegaard diagram files.")
    _add_format_option(heegaard)

    table = sub.add_parser("table", help="Inspect the knot table.")
    table.add_argument("action", choices=["list", "show"])
    table.add_argument("name", nargs="?", default=None, help="Knot to show.")
    _add_table_option(table)

    return parser.parse_args(args)


def _add_table_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--table",
        type=str,
        default=None,
        help="Knot table file; defaults to $KNOTFORGE_TABLE or the bundled table.",
    )


def _add_format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text")


def cmd_knot(args: argparse.Namespace) -> list[InvariantReport]:
    if args.names and (args.pd is not None or args.gauss is not None):
        raise InputError("Give either knot names or a code, not both")

    if args.pd is not None:
        log.info("Reading PD code from the command line")
        return [
            knot_report(
                {"kind": "pd", "code": args.pd},
                parse_pd(args.pd),
                args.colorings,
                args.keep_redundant,
            )
        ]
    if args.gauss is not None:
        log.info("Reading Gauss code from the command line")
        return [
            knot_report(
                {"kind": "gauss", "code": args.gauss},
                parse_gauss(args.gauss),
                args.colorings,
                args.keep_redundant,
            )
        ]

    table = read_knot_table(resolve_table_path(args.table))
    names = args.names or table.names
    reports: list[InvariantReport] = []
    for name in names:
        entry = table.lookup(name)
        log.info(f"Computing invariants of {name}")
        reports.append(
            knot_report(
                {"kind": "table", "name": name, "pd": entry.pd},
                table.diagram(name),
                args.colorings,
                args.keep_redundant,
            )
        )
    return reports


def cmd_heegaard(args: argparse.Namespace) -> list[InvariantReport]:
    reports: list[InvariantReport] = []
    for path in args.files:
        log.info(f"Reading Heegaard diagram {path}")
        reports.append(
            heegaard_report({"kind": "heegaard", "path": str(path)}, read_heegaard(path))
        )
    return reports


def cmd_table(args: argparse.Namespace) -> str:
    table = read_knot_table(resolve_table_path(args.table))
    if args.action == "list":
        return "\n".join(table.names)

    if args.name is None:
        raise InputError("`table show` needs a knot name")
    return table.lookup(args.name).pd


def run(args: argparse.Namespace) -> str:
    if args.command == "knot":
        return render(cmd_knot(args), args.format)
    if args.command == "heegaard":
        return render(cmd_heegaard(args), args.format)
    return cmd_table(args)


def main(args: list[str]) -> None:
    """Main entry point.

    Exit codes: 0 on success, 2 for bad input, 1 for anything unexpected.
    """
    log.clear()  # log is a module-level singleton; start every run clean

    p = parse_args(args)
    set_level({0: None, 1: "info"}.get(p.verbose, "debug"))

    try:
        output = run(p)
    except InputError as e:
        log.fatal(str(e), file=e.file, line=e.line, exit_code=EXIT_INPUT_ERROR)
    except Exception as e:
        log.fatal(f"internal error: {e}", exit_code=EXIT_INTERNAL_ERROR)

    print(output)


def cli() -> None:
    main(args=sys.argv[1:])


if __name__ == "__main__":
    cli()
