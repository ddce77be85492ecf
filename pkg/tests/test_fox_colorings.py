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

import pytest
from src.knotforge.diagram import KnotDiagram, parse_gauss
from src.knotforge.fpgroup import coloring_matrix, fox_colorings, knot_determinant

from tests.conftest import (
    TREFOIL_GAUSS,
    brute_force_colorings,
    figure_eight,
    table_knot,
    trefoil,
)

PRIME_KNOTS = ["3_1", "4_1", "5_1", "5_2"]


class TestFoxColorings:
    def test_unknot(self):
        assert fox_colorings(KnotDiagram.unknot(), 3) == 3

    def test_trefoil(self):
        assert fox_colorings(trefoil(), 3) == 9
        assert fox_colorings(trefoil(), 5) == 5

    def test_figure_eight(self):
        assert fox_colorings(figure_eight(), 3) == 3
        assert fox_colorings(figure_eight(), 5) == 25

    def test_gauss_trefoil(self):
        assert fox_colorings(parse_gauss(TREFOIL_GAUSS), 3) == 9

    @pytest.mark.parametrize("name", PRIME_KNOTS)
    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_gauss_code_gives_same_count(self, name: str, n: int):
        d = table_knot(name)
        assert fox_colorings(parse_gauss(d.to_gauss()), n) == fox_colorings(d, n)

    def test_three_twist_knot_sees_seven(self):
        assert fox_colorings(table_knot("5_2"), 7) == 49

    def test_composite_modulus(self):
        # trefoil colorings mod 9 are those mod 3 lifted
        assert fox_colorings(trefoil(), 9) == brute_force_colorings(trefoil(), 9)

    def test_modulus_too_small(self):
        with pytest.raises(ValueError):
            fox_colorings(trefoil(), 1)

    def test_matrix(self):
        assert coloring_matrix(trefoil()).to_rows() == [
            [2, -1, -1],
            [-1, 2, -1],
            [-1, -1, 2],
        ]

    @pytest.mark.parametrize("name", PRIME_KNOTS)
    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_matches_brute_force(self, name: str, n: int):
        d = table_knot(name)
        count = fox_colorings(d, n)
        assert count == brute_force_colorings(d, n)
        assert count % n == 0


class TestKnotDeterminant:
    @pytest.mark.parametrize(
        ("name", "expected"), [("3_1", 3), ("4_1", 5), ("5_1", 5), ("5_2", 7)]
    )
    def test_table_knots(self, name: str, expected: int):
        assert knot_determinant(table_knot(name)) == expected

    def test_unknot(self):
        assert knot_determinant(KnotDiagram.unknot()) == 1

    def test_same_from_gauss_code(self):
        d = figure_eight()
        assert knot_determinant(parse_gauss(d.to_gauss())) == 5
