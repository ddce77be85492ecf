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

import json
from collections.abc import Sequence
from dataclasses import dataclass, field

from .diagram import KnotDiagram
from .fpgroup import (
    AbelianGroup,
    Presentation,
    abelianization,
    fox_colorings,
    knot_determinant,
    tietze_simplify,
)
from .homology import homology_groups, presentation_complex
from .intmatrix import IntMatrix
from .manifold import HeegaardDiagram, close_manifold
from .wirtinger import abelianized_boundary, wirtinger_presentation


@dataclass(frozen=True)
class InvariantReport:
    # kind plus name / code / path, in that key order
    source: dict[str, str]
    pi1: Presentation
    pi1_simplified: Presentation
    h0: AbelianGroup
    h1: AbelianGroup
    # None for closed manifolds: the presentation complex misses the 3-handle
    h2: AbelianGroup | None
    boundary: IntMatrix
    colorings: dict[int, int] | None = None
    # text-only details
    notes: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict[str, object]:
        out: dict[str, object] = {
            "source": self.source,
            "pi1": self.pi1.to_structured(),
            "pi1_simplified": self.pi1_simplified.to_structured(),
            "h0": self.h0.to_json(),
            "h1": self.h1.to_json(),
        }
        if self.h2 is not None:
            out["h2"] = self.h2.to_json()
        out["boundary"] = self.boundary.to_rows()
        if self.colorings is not None:
            out["colorings"] = {str(n): k for n, k in self.colorings.items()}
        return out

    def to_text(self) -> str:
        title = " ".join(v for k, v in self.source.items() if k != "kind")
        if self.notes:
            title += " (" + ", ".join(f"{k} {v}" for k, v in self.notes.items()) + ")"
        rows: list[tuple[str, str]] = [
            ("pi1", self.pi1.to_text()),
            ("pi1 simplified", self.pi1_simplified.to_text()),
            ("H0", self.h0.to_text()),
            ("H1", self.h1.to_text()),
        ]
        if self.h2 is not None:
            rows.append(("H2", self.h2.to_text()))
        rows.append(("boundary d2", json.dumps(self.boundary.to_rows())))
        if self.colorings is not None:
            rows.append(
                (
                    "colorings",
                    ", ".join(f"n={n}: {k}" for n, k in self.colorings.items()),
                )
            )
        width = max(len(k) for k, _ in rows)
        return "\n".join([title, *(f"  {k.ljust(width)}  {v}" for k, v in rows)])


def _check_simplification(original: Presentation, simplified: Presentation) -> None:
    if abelianization(original) != abelianization(simplified):
        raise RuntimeError(
            f"Simplifying {original} changed its abelianization; this is a bug"
        )


def knot_report(
    source: dict[str, str],
    d: KnotDiagram,
    coloring_moduli: Sequence[int],
    keep_redundant: bool = False,
) -> InvariantReport:
    pi1 = wirtinger_presentation(d, drop_redundant=not keep_redundant)
    simplified = tietze_simplify(pi1)
    _check_simplification(pi1, simplified)
    h0, h1, h2 = homology_groups(
        presentation_complex(wirtinger_presentation(d, drop_redundant=True))
    )
    return InvariantReport(
        source=source,
        pi1=pi1,
        pi1_simplified=simplified,
        h0=h0,
        h1=h1,
        h2=h2,
        boundary=abelianized_boundary(pi1),
        colorings={n: fox_colorings(d, n) for n in coloring_moduli},
        notes={
            "crossings": str(d.crossing_count),
            "writhe": str(d.writhe),
            "determinant": str(knot_determinant(d)),
        },
    )


def heegaard_report(source: dict[str, str], h: HeegaardDiagram) -> InvariantReport:
    pi1 = close_manifold(h)
    simplified = tietze_simplify(pi1)
    _check_simplification(pi1, simplified)
    h0, h1, _ = homology_groups(presentation_complex(pi1))
    return InvariantReport(
        source=source,
        pi1=pi1,
        pi1_simplified=simplified,
        h0=h0,
        h1=h1,
        h2=None,
        boundary=abelianized_boundary(pi1),
        notes={"genus": str(h.genus), "curves": str(len(h.curves))},
    )


def render(reports: Sequence[InvariantReport], fmt: str) -> str:
    if fmt == "json":
        payload = (
            reports[0].to_json()
            if len(reports) == 1
            else [r.to_json() for r in reports]
        )
        return json.dumps(payload, indent=4, ensure_ascii=False)
    return "\n\n".join(r.to_text() for r in reports)
