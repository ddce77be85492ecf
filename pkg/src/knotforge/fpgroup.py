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
"""Free-group words, finitely presented groups and their abelian invariants."""

import math
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .diagram import KnotDiagram
from .errors import MalformedSyntax
from .gh_logging import Logger
from .intmatrix import IntMatrix, invariant_factors

log = Logger(__name__)

Letter = tuple[int, int]  # (generator index >= 1, exponent +1/-1)


def generator_name(index: int) -> str:
    """1, 2, ..., 26 -> a, b, ..., z; beyond that g27, g28, ..."""
    if index < 1:
        raise ValueError(f"Generator indices start at 1, got {index}")
    if index <= 26:
        return chr(ord("a") + index - 1)
    return f"g{index}"


def generator_index(name: str) -> int:
    if re.fullmatch(r"g\d+", name) and int(name[1:]) > 26:
        return int(name[1:])
    if re.fullmatch(r"[a-z]", name):
        return ord(name) - ord("a") + 1
    raise ValueError(f"Not a generator name: '{name}'")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for g, e in letters:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construction reduces whatever it is given."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for g, e in self.letters:
            if g < 1 or e not in (1, -1):
                raise ValueError(f"Invalid letter ({g}, {e})")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def from_signed(cls, seq: Iterable[int]) -> "Word":
        """Signed generator indices: [1, -2] is a b^-1."""
        return cls(tuple((abs(x), 1 if x > 0 else -1) for x in seq))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return word_multiply(self, other)

    def __invert__(self) -> "Word":
        return word_invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else ~self
        return Word(base.letters * abs(k))

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, g: int) -> int:
        return sum(e for h, e in self.letters if h == g)

    def occurrences(self, g: int) -> int:
        return sum(1 for h, _ in self.letters if h == g)

    def syllables(self) -> list[tuple[int, int]]:
        """Runs of one generator collapsed to powers: a a b^-1 -> [(1, 2), (2, -1)]."""
        out: list[tuple[int, int]] = []
        for g, e in self.letters:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out

    def cyclically_equal(self, other: "Word") -> bool:
        """Equal up to cyclic permutation and inversion."""
        a = cyclic_reduce(self).letters
        n = len(a)
        for b in (cyclic_reduce(other), cyclic_reduce(~other)):
            if len(b) != n:
                continue
            doubled = b.letters * 2
            if any(doubled[i : i + n] == a for i in range(max(n, 1))):
                return True
        return False

    def to_text(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            generator_name(g) if k == 1 else f"{generator_name(g)}^{k}"
            for g, k in self.syllables()
        )

    def __str__(self) -> str:
        return self.to_text()


def word_multiply(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def word_invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.letters)))


def cyclic_reduce(w: Word) -> Word:
    letters = w.letters
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == (
        letters[end - 1][0],
        -letters[end - 1][1],
    ):
        start += 1
        end -= 1
    return Word(letters[start:end])


_WORD_TOKEN = re.compile(r"\s*(g\d+|[a-z])(?:\^(-?\d+))?\s*")


def parse_word(text: str) -> Word:
    """Parse `a b^-1`, `ab^-1`, `a^3` or `g27`; `1` is the empty word."""
    text = text.strip().replace("−", "-")
    if text in ("", "1"):
        return Word()
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise MalformedSyntax(f"Unparseable word near '{text[pos:][:20]}'")
        try:
            g = generator_index(m.group(1))
        except ValueError as e:
            raise MalformedSyntax(str(e)) from e
        k = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
        pos = m.end()
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.generator_count < 0:
            raise ValueError("Negative generator count")
        for r in self.relators:
            for g, _ in r:
                if g > self.generator_count:
                    raise ValueError(
                        f"Relator {r} uses generator {g} outside 1..{self.generator_count}"
                    )

    @classmethod
    def free(cls, rank: int) -> "Presentation":
        return cls(rank, ())

    @property
    def generator_names(self) -> list[str]:
        return [generator_name(i) for i in range(1, self.generator_count + 1)]

    def relator_matrix(self) -> IntMatrix:
        """Exponent sums; one row per relator, one column per generator."""
        return IntMatrix.from_rows(
            [
                [r.exponent_sum(g) for g in range(1, self.generator_count + 1)]
                for r in self.relators
            ],
            self.generator_count,
        )

    def to_text(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(r.to_text() for r in self.relators)
        return f"⟨{gens} | {rels}⟩"

    def to_structured(self) -> dict[str, object]:
        return {
            "generators": self.generator_names,
            "relators": [
                {
                    "letters": [g for g, _ in r],
                    "exponents": [e for _, e in r],
                }
                for r in self.relators
            ],
            "text": self.to_text(),
        }

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/t1 + ... + Z/tk with t1 | t2 | ... | tk and every ti >= 2."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("Negative rank")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"Torsion coefficients must be >= 2: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:], strict=False)):
            raise ValueError(f"Torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(0)

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank)

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> "AbelianGroup":
        """Direct sum of Z/n for the given n (0 meaning Z), brought to canonical form."""
        n = len(orders)
        diag = IntMatrix.from_rows(
            [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)], n
        )
        factors = invariant_factors(diag)
        return cls(n - len(factors), tuple(d for d in factors if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_text(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"

    def to_json(self) -> dict[str, object]:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        return self.to_text()


def abelianization(p: Presentation) -> AbelianGroup:
    factors = invariant_factors(p.relator_matrix())
    return AbelianGroup(
        rank=p.generator_count - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )


# ---------------------------------------------------------------------------
# Tietze simplification
# ---------------------------------------------------------------------------


def _drop_duplicates(relators: list[Word]) -> list[Word]:
    kept: list[Word] = []
    for r in relators:
        if r and not any(r.cyclically_equal(k) for k in kept):
            kept.append(r)
    return kept


def _eliminable(relators: list[Word]) -> tuple[int, int] | None:
    """(relator index, generator) for the shortest relator using some generator once."""
    for idx in sorted(range(len(relators)), key=lambda i: (len(relators[i]), i)):
        r = relators[idx]
        once = sorted(g for g in r.generators() if r.occurrences(g) == 1)
        if once:
            return idx, once[0]
    return None


def _solve_for(relator: Word, g: int) -> Word:
    """Rewrite relator = 1 as g = w, returning w."""
    letters = relator.letters
    pos = next(i for i, (h, _) in enumerate(letters) if h == g)
    rotated = letters[pos:] + letters[:pos]
    rest = Word(rotated[1:])
    # g^e * rest = 1
    return ~rest if rotated[0][1] == 1 else rest


def _substitute(w: Word, g: int, replacement: Word) -> Word:
    letters: list[Letter] = []
    for h, e in w:
        if h == g:
            letters.extend((replacement if e == 1 else ~replacement).letters)
        else:
            letters.append((h, e))
    # generators above g shift down to close the gap
    return Word(tuple((h - 1 if h > g else h, e) for h, e in letters))


def tietze_simplify(p: Presentation) -> Presentation:
    """Heuristic shrinking pass; preserves the group (hence its abelianization).

    Not a decision procedure: two presentations of one group may stay different.
    """
    gens = p.generator_count
    relators = [cyclic_reduce(r) for r in p.relators]
    while True:
        relators = _drop_duplicates(relators)
        pick = _eliminable(relators)
        if pick is None:
            break
        idx, g = pick
        replacement = _solve_for(relators.pop(idx), g)
        log.debug(f"Eliminating {generator_name(g)} = {replacement}")
        relators = [cyclic_reduce(_substitute(r, g, replacement)) for r in relators]
        gens -= 1
    return Presentation(gens, tuple(relators))


# ---------------------------------------------------------------------------
# Fox colorings
# ---------------------------------------------------------------------------


def coloring_matrix(d: KnotDiagram) -> IntMatrix:
    """One row per crossing: 2*over - under_in - under_out."""
    rows: list[list[int]] = []
    for c in d.crossings:
        row = [0] * d.arc_count
        row[c.over - 1] += 2
        row[c.under_in - 1] -= 1
        row[c.under_out - 1] -= 1
        rows.append(row)
    return IntMatrix.from_rows(rows, d.arc_count)


def fox_colorings(d: KnotDiagram, n: int) -> int:
    """Number of Fox n-colorings, i.e. solutions of the coloring system mod n.

    With invariant factors d1..dr of the coloring matrix the solution count is
    n^(arcs - r) * prod(gcd(di, n)); valid for composite n as well.
    """
    if n < 2:
        raise ValueError(f"Colorings need n >= 2, got {n}")
    factors = invariant_factors(coloring_matrix(d))
    return n ** (d.arc_count - len(factors)) * math.prod(math.gcd(x, n) for x in factors)


def knot_determinant(d: KnotDiagram) -> int:
    """|det| of the coloring matrix with its first row and column struck out."""
    rows = coloring_matrix(d).to_rows()[1:]
    minor = IntMatrix.from_rows([r[1:] for r in rows], d.arc_count - 1)
    return abs(minor.determinant())
