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
"""Exact integer matrices and their Smith normal form.

Entries are plain Python ints, so there is no overflow to detect.
"""

from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    # Row-major
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], cols: int | None = None
    ) -> "IntMatrix":
        """Build from nested rows; `cols` is only needed for a matrix with no rows."""
        if cols is None:
            if not rows:
                raise ValueError("Column count required for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"Ragged row {list(r)}; expected {cols} entries")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(self[i, k] * other[k, j] for k in range(self.cols))
                for i in range(self.rows)
                for j in range(other.cols)
            ),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def determinant(self) -> int:
        """Fraction-free (Bareiss) elimination; every division is exact."""
        if self.rows != self.cols:
            raise ValueError(f"Determinant of non-square {self.shape} matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithNormalForm:
    """`u @ a @ v == d` with `u`, `v` unimodular and `d` diagonal.

    Nonzero diagonal entries are positive, come first, and each divides the next.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.d.diagonal()[: self.rank]


class _Reducer:
    """Mutable working state: row operations are mirrored on u, column ops on v."""

    def __init__(self, a: IntMatrix) -> None:
        self.m = a.rows
        self.n = a.cols
        self.d = a.to_rows()
        self.u = IntMatrix.identity(self.m).to_rows()
        self.v = IntMatrix.identity(self.n).to_rows()

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.d[i], self.d[j] = self.d[j], self.d[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for r in self.d:
                r[i], r[j] = r[j], r[i]
            for r in self.v:
                r[i], r[j] = r[j], r[i]

    def add_row(self, src: int, dst: int, q: int) -> None:
        """row[dst] += q * row[src]"""
        for k in range(self.n):
            self.d[dst][k] += q * self.d[src][k]
        for k in range(self.m):
            self.u[dst][k] += q * self.u[src][k]

    def add_col(self, src: int, dst: int, q: int) -> None:
        """col[dst] += q * col[src]"""
        for r in self.d:
            r[dst] += q * r[src]
        for r in self.v:
            r[dst] += q * r[src]

    def negate_row(self, i: int) -> None:
        self.d[i] = [-x for x in self.d[i]]
        self.u[i] = [-x for x in self.u[i]]

    def place_pivot(self, t: int) -> bool:
        """Move the smallest nonzero entry of the trailing submatrix to (t, t)."""
        best: tuple[int, int] | None = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.d[i][j]
                if x and (best is None or abs(x) < abs(self.d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return False
        self.swap_rows(t, best[0])
        self.swap_cols(t, best[1])
        return True

    def clear_cross(self, t: int) -> bool:
        """Euclidean step on row and column t; True when both are cleared."""
        p = self.d[t][t]
        for i in range(t + 1, self.m):
            if q := self.d[i][t] // p:
                self.add_row(t, i, -q)
        for j in range(t + 1, self.n):
            if q := self.d[t][j] // p:
                self.add_col(t, j, -q)
        return not any(self.d[i][t] for i in range(t + 1, self.m)) and not any(
            self.d[t][j] for j in range(t + 1, self.n)
        )

    def non_divisible_row(self, t: int) -> int | None:
        p = self.d[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.d[i][j] % p:
                    return i
        return None

    def run(self) -> int:
        rank = 0
        for t in range(min(self.m, self.n)):
            if not self.place_pivot(t):
                break
            while True:
                if not self.clear_cross(t):
                    # A remainder smaller than the pivot is left somewhere in the cross
                    self.place_pivot(t)
                    continue
                bad = self.non_divisible_row(t)
                if bad is None:
                    break
                self.add_row(bad, t, 1)
            if self.d[t][t] < 0:
                self.negate_row(t)
            rank += 1
        return rank


def smith_normal_form(a: IntMatrix) -> SmithNormalForm:
    r = _Reducer(a)
    rank = r.run()
    return SmithNormalForm(
        d=IntMatrix.from_rows(r.d, a.cols),
        u=IntMatrix.from_rows(r.u, a.rows),
        v=IntMatrix.from_rows(r.v, a.cols),
        rank=rank,
    )


def matrix_rank(a: IntMatrix) -> int:
    return smith_normal_form(a).rank


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(a).invariant_factors
