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

import os
from dataclasses import dataclass
from pathlib import Path

from .diagram import KnotDiagram, parse_pd
from .errors import InputError, InputFileNotFound, TableFormatError, UnknownKnotName
from .gh_logging import Logger

log = Logger(__name__)

BUNDLED_TABLE = Path(__file__).parent / "data" / "knots.tsv"


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    pd: str
    line: int


class KnotTable:
    """Named PD codes, in file order."""

    def __init__(self, entries: list[KnotTableEntry], path: Path | None = None):
        self.path = path
        self._entries = {e.name: e for e in entries}

    @property
    def names(self) -> list[str]:
        return list(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def lookup(self, name: str) -> KnotTableEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownKnotName(
                f"Unknown knot '{name}'; see `knotforge table list`"
            ) from None

    def diagram(self, name: str) -> KnotDiagram:
        entry = self.lookup(name)
        try:
            return parse_pd(entry.pd)
        except InputError as e:
            e.file, e.line = self.path, entry.line
            raise


def parse_knot_table(text: str, file: Path | None = None) -> KnotTable:
    """`name<TAB>pd-code` per line; `#` comment lines and blank lines are skipped."""
    entries: list[KnotTableEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue

        name, sep, pd = raw.partition("\t")
        name = name.strip()
        if not sep or not name:
            raise TableFormatError(
                f"Expected 'name<TAB>pd-code', got '{raw.strip()[:40]}'",
                file=file,
                line=lineno,
            )

        if name in seen:
            log.warning(
                f"Duplicate knot '{name}' ignored; first entry wins",
                file=file,
                line=lineno,
            )
            continue
        seen.add(name)
        entries.append(KnotTableEntry(name=name, pd=pd.strip(), line=lineno))

    log.debug(f"Read {len(entries)} knots from {file or '<text>'}")
    return KnotTable(entries, path=file)


def read_knot_table(path: Path) -> KnotTable:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileNotFound(f"Cannot read knot table {path}: {e}", file=path) from e
    except UnicodeDecodeError as e:
        raise TableFormatError(f"Knot table {path} is not valid UTF-8: {e}", file=path) from e
    return parse_knot_table(text, file=path)


def resolve_table_path(option: str | None) -> Path:
    """Pick the knot table to use.

    Tries sources in order:
    1. --table CLI argument
    2. KNOTFORGE_TABLE environment variable
    3. The table bundled with the package
    """
    if option:
        log.debug(f"Using knot table from command-line argument: {option}")
        return Path(option)
    elif env := os.getenv("KNOTFORGE_TABLE"):
        log.debug(f"Using knot table from environment variable: {env}")
        return Path(env)
    else:
        log.debug(f"Using bundled knot table {BUNDLED_TABLE}")
        return BUNDLED_TABLE
