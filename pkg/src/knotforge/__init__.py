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
"""Fundamental groups and homology of knot complements and Heegaard-split 3-manifolds."""

from .diagram import Crossing, KnotDiagram, parse_gauss, parse_pd
from .fpgroup import AbelianGroup, Presentation, Word, abelianization, tietze_simplify
from .homology import ChainComplex, knot_homology
from .intmatrix import IntMatrix, smith_normal_form
from .manifold import HeegaardDiagram, close_manifold
from .wirtinger import wirtinger_presentation

__all__ = [
    "AbelianGroup",
    "ChainComplex",
    "Crossing",
    "HeegaardDiagram",
    "IntMatrix",
    "KnotDiagram",
    "Presentation",
    "Word",
    "abelianization",
    "close_manifold",
    "knot_homology",
    "parse_gauss",
    "parse_pd",
    "smith_normal_form",
    "tietze_simplify",
    "wirtinger_presentation",
]
