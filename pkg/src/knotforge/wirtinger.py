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
"""Wirtinger presentations of knot complements."""

from .diagram import Crossing, KnotDiagram
from .errors import NoRelators
from .fpgroup import Presentation, Word
from .intmatrix import IntMatrix


def crossing_relator(c: Crossing) -> Word:
    """The outgoing under-arc is the incoming one conjugated by the over-arc.

    Positive crossing: c a c^-1 b^-1; negative crossing: c^-1 a c b^-1.
    """
    over = Word(((c.over, c.sign),))
    incoming = Word(((c.under_in, 1),))
    outgoing = Word(((c.under_out, 1),))
    return over * incoming * ~over * ~outgoing


def wirtinger_presentation(
    d: KnotDiagram, drop_redundant: bool = False
) -> Presentation:
    p = Presentation(d.arc_count, tuple(crossing_relator(c) for c in d.crossings))
    if drop_redundant and p.relators:
        return drop_redundant_relator(p)
    return p


def drop_redundant_relator(p: Presentation) -> Presentation:
    """Remove the last relator; for a knot it follows from the others."""
    if not p.relators:
        raise NoRelators("Presentation has no relator to drop")
    return Presentation(p.generator_count, p.relators[:-1])


def abelianized_boundary(p: Presentation) -> IntMatrix:
    return p.relator_matrix()
