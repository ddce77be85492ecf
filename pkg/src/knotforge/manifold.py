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
"""Handlebodies and Heegaard diagrams.

Attaching a 2-handle along a curve h kills the normal closure of h in the
fundamental group, so a handlebody of genus g with curves mu_1..mu_k attached
has the presentation <x_1..x_g | mu_1..mu_k>.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .errors import (
    HeegaardFormatError,
    InputFileNotFound,
    InvalidHeegaardDiagram,
    MalformedSyntax,
)
from .fpgroup import (
    AbelianGroup,
    Presentation,
    Word,
    abelianization,
    cyclic_reduce,
    parse_word,
)
from .gh_logging import Logger
from .homology import ChainComplex, homology_groups, presentation_complex
from .intmatrix import IntMatrix

log = Logger(__name__)


@dataclass(frozen=True)
class HeegaardDiagram:
    """Curves are words in the free group of the genus-g handlebody."""

    genus: int
    curves: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise InvalidHeegaardDiagram(f"Negative genus {self.genus}")
        for curve in self.curves:
            if any(g > self.genus for g, _ in curve):
                raise InvalidHeegaardDiagram(
                    f"Curve {curve} uses a generator beyond genus {self.genus}"
                )
            if cyclic_reduce(curve) != curve:
                raise InvalidHeegaardDiagram(f"Curve {curve} is not cyclically reduced")


class HandlebodyInvariants(NamedTuple):
    pi1: Presentation
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup


def handlebody_invariants(g: int) -> HandlebodyInvariants:
    if g < 0:
        raise ValueError(f"Negative genus {g}")
    pi1 = Presentation.free(g)
    h0, h1, h2 = homology_groups(presentation_complex(pi1))
    return HandlebodyInvariants(pi1, h0, h1, h2)


def close_manifold(h: HeegaardDiagram) -> Presentation:
    """One quotient by a normal closure per attached 2-handle."""
    p = Presentation.free(h.genus)
    for curve in h.curves:
        p = Presentation(p.generator_count, (*p.relators, curve))
        log.debug(f"Attached 2-handle along {curve}: {p}")
    return p


def closed_manifold_h1(h: HeegaardDiagram) -> AbelianGroup:
    return abelianization(close_manifold(h))


def lens_space(p: int) -> HeegaardDiagram:
    """Genus-1 diagram whose curve winds p times around the meridian's dual.

    p = 1 gives S^3, p = 2 the projective space P^3.
    """
    if p < 0:
        raise ValueError(f"Negative winding number {p}")
    return HeegaardDiagram(1, (Word(((1, 1),)) ** p,))


def projective_space_complex(n: int) -> ChainComplex:
    """Cellular complex of P^n: one cell per dimension, d_k = 1 + (-1)^k."""
    if n < 0:
        raise ValueError(f"Negative dimension {n}")
    return ChainComplex(
        ranks=(1,) * (n + 1),
        boundaries=tuple(
            IntMatrix(1, 1, (1 + (-1) ** k,)) for k in range(1, n + 1)
        ),
    )


_GENUS_LINE = re.compile(r"genus\s+(\d+)")


def parse_heegaard(text: str, file: Path | None = None) -> HeegaardDiagram:
    """`genus g` on the first content line, then one curve word per line.

    `#` starts a comment; blank lines are ignored.
    """
    genus: int | None = None
    curves: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if genus is None:
            m = _GENUS_LINE.fullmatch(line)
            if not m:
                raise HeegaardFormatError(
                    f"Expected 'genus <g>', got '{line}'", file=file, line=lineno
                )
            genus = int(m.group(1))
            continue

        try:
            word = parse_word(line)
        except MalformedSyntax as e:
            raise HeegaardFormatError(str(e), file=file, line=lineno) from e

        if any(g > genus for g, _ in word):
            raise HeegaardFormatError(
                f"Curve '{line}' uses a generator beyond genus {genus}",
                file=file,
                line=lineno,
            )
        reduced = cyclic_reduce(word)
        if reduced != word:
            log.info(f"Curve '{line}' taken up to conjugacy as '{reduced}'")
        curves.append(reduced)

    if genus is None:
        raise HeegaardFormatError("Missing 'genus <g>' line", file=file)
    return HeegaardDiagram(genus, tuple(curves))


def read_heegaard(path: Path) -> HeegaardDiagram:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise InputFileNotFound(f"No such Heegaard file: {path}", file=path) from e
    except OSError as e:
        raise InputFileNotFound(f"Cannot read {path}: {e}", file=path) from e
    except UnicodeDecodeError as e:
        raise HeegaardFormatError(f"{path} is not valid UTF-8: {e}", file=path) from e
    return parse_heegaard(text, file=path)
