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
import itertools
import random
from pathlib import Path
from typing import Any

import pytest
from src.knotforge.diagram import KnotDiagram, parse_pd
from src.knotforge.fpgroup import Presentation, Word, parse_word
from src.knotforge.gh_logging import Logger, set_level
from src.knotforge.table import BUNDLED_TABLE, read_knot_table

TREFOIL_PD = "X(3,1,4,6) X(5,3,6,2) X(1,5,2,4)"
FIGURE_EIGHT_PD = "X(2,7,3,8) X(6,3,7,4) X(8,6,1,5) X(4,2,5,1)"
TREFOIL_GAUSS = "O1+U2+O3+U1+O2+U3+"


class MockLogger(Logger):
    """Logger that captures messages for testing."""

    def __init__(self):
        super().__init__("test")
        self.debug_messages: list[str] = []
        self.info_messages: list[str] = []
        self.warning_messages: list[str] = []
        self.error_messages: list[str] = []

    def _print(
        self, prefix: str, msg: str, file: Path | None = None, line: int | None = None
    ) -> None:
        if prefix == "debug":
            self.debug_messages.append(msg)
        elif prefix == "info":
            self.info_messages.append(msg)
        elif prefix == "warning":
            self.warning_messages.append(msg)
        elif prefix == "error":
            self.error_messages.append(msg)


@pytest.fixture
def mock_logger() -> MockLogger:
    """Create a mock logger for testing."""
    return MockLogger()


@pytest.fixture(autouse=True)
def reset_log_level():
    """`main` sets a global level from -v; keep it from leaking between tests."""
    set_level(None)
    yield
    set_level(None)


@pytest.fixture
def build_fake_filesystem(fs: Any):
    """Convenience helper to build a fake filesystem from a nested dict."""

    def _build(structure: dict[str, object], base_path: str = "") -> None:
        base = base_path or "/"
        for name, value in structure.items():
            path = f"{base.rstrip('/')}/{name}"
            if isinstance(value, dict):
                fs.makedirs(path, exist_ok=True)
                _build(value, path)
            else:
                fs.create_file(path, contents=value)

    return _build


def trefoil() -> KnotDiagram:
    return parse_pd(TREFOIL_PD)


def figure_eight() -> KnotDiagram:
    return parse_pd(FIGURE_EIGHT_PD)


def table_knot(name: str) -> KnotDiagram:
    return read_knot_table(BUNDLED_TABLE).diagram(name)


def words(*texts: str) -> tuple[Word, ...]:
    """words("a b^-1", "c") -> (Word, Word)"""
    return tuple(parse_word(t) for t in texts)


def brute_force_colorings(d: KnotDiagram, n: int) -> int:
    """Count Fox n-colorings by trying every assignment of Z/n to the arcs."""
    count = 0
    for colors in itertools.product(range(n), repeat=d.arc_count):
        if all(
            (2 * colors[c.over - 1] - colors[c.under_in - 1] - colors[c.under_out - 1])
            % n
            == 0
            for c in d.crossings
        ):
            count += 1
    return count


def random_presentation(rng: random.Random) -> Presentation:
    gens = rng.randint(1, 5)
    relators: list[Word] = []
    for _ in range(rng.randint(0, 5)):
        length = rng.randint(0, 8)
        relators.append(
            Word.from_signed(
                rng.choice((1, -1)) * rng.randint(1, gens) for _ in range(length)
            )
        )
    return Presentation(gens, tuple(relators))
