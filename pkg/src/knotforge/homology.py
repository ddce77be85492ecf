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
"""Chain complexes over Z and their homology, H_n = Ker(d_n) / Im(d_n+1)."""

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import KnotDiagram
from .errors import IndexOutOfRange, InvalidChainComplex
from .fpgroup import AbelianGroup, Presentation
from .intmatrix import IntMatrix, invariant_factors, matrix_rank
from .wirtinger import (
    abelianized_boundary,
    drop_redundant_relator,
    wirtinger_presentation,
)


@dataclass(frozen=True)
class ChainComplex:
    """C_0 <- C_1 <- ... <- C_N.

    `boundaries[n - 1]` is d_n: C_n -> C_n-1 with shape ranks[n-1] x ranks[n],
    so there are exactly N matrices; d_0 and d_N+1 are zero maps.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        if not self.ranks:
            raise InvalidChainComplex("A chain complex needs at least C_0")
        if any(r < 0 for r in self.ranks):
            raise InvalidChainComplex(f"Negative rank in {self.ranks}")
        if len(self.boundaries) != len(self.ranks) - 1:
            raise InvalidChainComplex(
                f"{len(self.ranks)} chain groups need {len(self.ranks) - 1} "
                f"boundary maps, got {len(self.boundaries)}"
            )
        for n in range(1, self.top + 1):
            expected = (self.ranks[n - 1], self.ranks[n])
            if self.boundary(n).shape != expected:
                raise InvalidChainComplex(
                    f"d_{n} has shape {self.boundary(n).shape}, expected {expected}"
                )
        for n in range(2, self.top + 1):
            if not (self.boundary(n - 1) @ self.boundary(n)).is_zero():
                raise InvalidChainComplex(f"d_{n - 1} o d_{n} is not zero")

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, n: int) -> IntMatrix:
        if n == 0:
            return IntMatrix.zeros(0, self.ranks[0])
        if n == self.top + 1:
            return IntMatrix.zeros(self.ranks[self.top], 0)
        if not 1 <= n <= self.top:
            raise IndexOutOfRange(f"No boundary map d_{n} in a complex of length {self.top}")
        return self.boundaries[n - 1]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))


def homology_of_complex(c: ChainComplex, n: int) -> AbelianGroup:
    if not 0 <= n <= c.top:
        raise IndexOutOfRange(f"H_{n} requested from a complex of length {c.top}")
    incoming = invariant_factors(c.boundary(n + 1))
    return AbelianGroup(
        rank=c.ranks[n] - matrix_rank(c.boundary(n)) - len(incoming),
        torsion=tuple(d for d in incoming if d > 1),
    )


def homology_groups(c: ChainComplex) -> list[AbelianGroup]:
    return [homology_of_complex(c, n) for n in range(c.top + 1)]


def presentation_complex(p: Presentation) -> ChainComplex:
    """One 0-cell, a 1-cell per generator, a 2-cell per relator."""
    return ChainComplex(
        ranks=(1, p.generator_count, len(p.relators)),
        boundaries=(
            IntMatrix.zeros(1, p.generator_count),
            abelianized_boundary(p).transpose(),
        ),
    )


class KnotHomology(NamedTuple):
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup


def knot_homology(d: KnotDiagram) -> KnotHomology:
    p = wirtinger_presentation(d)
    if p.relators:
        p = drop_redundant_relator(p)
    h0, h1, h2 = homology_groups(presentation_complex(p))
    return KnotHomology(h0, h1, h2)
