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
"""Combinatorial knot diagrams and the PD / signed Gauss code parsers.

PD convention: `X(i,j,k,l)` lists the four edge labels counterclockwise,
starting at the incoming under-strand `i`; `k` is the outgoing under-strand
and `(j, l)` is the over-strand. A crossing is positive when the over-strand
runs from `l` to `j`, i.e. left to right as seen from the incoming under-strand.
"""

import re
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .errors import (
    BadIncidence,
    DisconnectedUnderCycle,
    InvalidDiagram,
    MalformedSyntax,
    SignMismatch,
)
from .gh_logging import Logger

log = Logger(__name__)


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class KnotDiagram:
    """Arcs are numbered 1..arc_count; an arc runs from one under passage to the next."""

    arc_count: int
    crossings: tuple[Crossing, ...]

    def __post_init__(self) -> None:
        n = len(self.crossings)
        if n == 0:
            if self.arc_count != 1:
                raise InvalidDiagram(
                    f"A diagram without crossings has exactly one arc, not {self.arc_count}"
                )
            return

        if self.arc_count != n:
            raise InvalidDiagram(
                f"{n} crossings require {n} arcs, got arc_count={self.arc_count}"
            )

        arcs = range(1, n + 1)
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise InvalidDiagram(f"Crossing sign must be +1 or -1, got {c.sign}")
            for arc in (c.over, c.under_in, c.under_out):
                if arc not in arcs:
                    raise InvalidDiagram(f"Arc {arc} outside 1..{n}")

        if sorted(c.under_in for c in self.crossings) != list(arcs) or sorted(
            c.under_out for c in self.crossings
        ) != list(arcs):
            raise InvalidDiagram(
                "Every arc must end and start exactly one under passage"
            )

        successor = {c.under_in: c.under_out for c in self.crossings}
        seen = {1}
        arc = successor[1]
        while arc != 1:
            seen.add(arc)
            arc = successor[arc]
        if len(seen) != n:
            raise InvalidDiagram("Under passages do not form a single cycle")

    @classmethod
    def unknot(cls) -> "KnotDiagram":
        return cls(arc_count=1, crossings=())

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def to_gauss(self) -> str:
        """Signed Gauss code, walking the arcs along the under-passage cycle from arc 1.

        The diagram does not record in which order an arc passes over its
        crossings; crossing order is used, which leaves every invariant
        computed here unchanged.
        """
        if not self.crossings:
            return ""

        ending_at = {c.under_in: (idx, c) for idx, c in enumerate(self.crossings)}
        tokens: list[str] = []
        arc = 1
        for _ in range(self.arc_count):
            for idx, c in enumerate(self.crossings):
                if c.over == arc:
                    tokens.append(f"O{idx + 1}{_sign_char(c.sign)}")
            idx, c = ending_at[arc]
            tokens.append(f"U{idx + 1}{_sign_char(c.sign)}")
            arc = c.under_out
        return "".join(tokens)


def _sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


# ---------------------------------------------------------------------------
# PD codes
# ---------------------------------------------------------------------------

_PD_TUPLE = re.compile(
    r"X?\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]]"
)
_PD_FILLER = re.compile(r"^[\s,\[\]]*$")

# Slots within a PD tuple
_IN, _J, _OUT, _L = range(4)

Occurrence = tuple[int, int]  # (crossing index, slot)


def _tokenize_pd(text: str) -> list[tuple[int, int, int, int]]:
    tuples: list[tuple[int, int, int, int]] = []
    filler: list[str] = []
    pos = 0
    for m in _PD_TUPLE.finditer(text):
        filler.append(text[pos : m.start()])
        pos = m.end()
        labels = tuple(int(g) for g in m.groups())
        if any(x <= 0 for x in labels):
            raise MalformedSyntax(
                f"PD labels must be positive integers: '{m.group(0)}'"
            )
        tuples.append(labels)  # pyright: ignore[reportArgumentType]
    filler.append(text[pos:])
    # KnotInfo exports may start with a bare "PD" tag
    filler[0] = filler[0].strip().removeprefix("PD")

    for chunk in filler:
        if not _PD_FILLER.match(chunk):
            raise MalformedSyntax(f"Unparseable PD code near '{chunk.strip()[:20]}'")
    return tuples


class _OrientationSolver:
    """Works out which end of every edge label is the incoming one.

    Under-strands are oriented by the PD convention itself; over-strands follow
    from the edges they share with under passages. Label succession (x then the
    next larger label, cyclically) only decides over-strands nothing else pins down.
    """

    def __init__(self, tuples: list[tuple[int, int, int, int]]) -> None:
        self.tuples = tuples
        self.occurrences: dict[int, list[Occurrence]] = {}
        for idx, t in enumerate(tuples):
            for slot, label in enumerate(t):
                self.occurrences.setdefault(label, []).append((idx, slot))
        self.head: dict[int, Occurrence] = {}
        self.over_in: dict[int, int] = {}

        labels = sorted(self.occurrences)
        self.succ_label = {
            x: labels[(pos + 1) % len(labels)] for pos, x in enumerate(labels)
        }

    def _other(self, label: int, occ: Occurrence) -> Occurrence:
        a, b = self.occurrences[label]
        # Both ends may sit in the same slot pair only for degenerate loops
        return b if a == occ else a

    def _set_head(self, label: int, occ: Occurrence) -> None:
        known = self.head.get(label)
        if known is not None and known != occ:
            raise BadIncidence(
                f"Edge {label} would enter crossings at both of its ends"
            )
        self.head[label] = occ

    def _set_over_in(self, idx: int, slot: int) -> None:
        t = self.tuples[idx]
        out_slot = _L if slot == _J else _J
        if t[slot] == t[out_slot]:
            raise BadIncidence(f"Over-strand of crossing {idx + 1} closes on itself")
        self.over_in[idx] = slot
        self._set_head(t[slot], (idx, slot))
        self._set_head(t[out_slot], self._other(t[out_slot], (idx, out_slot)))

    def _deduce(self, idx: int) -> int | None:
        t = self.tuples[idx]
        for slot in (_J, _L):
            head = self.head.get(t[slot])
            if head is None:
                continue
            if head == (idx, slot):
                return slot
            return _L if slot == _J else _J
        return None

    def _by_succession(self, idx: int) -> int:
        t = self.tuples[idx]
        if self.succ_label[t[_J]] == t[_L]:
            return _J
        if self.succ_label[t[_L]] == t[_J]:
            return _L
        raise BadIncidence(
            f"Cannot orient the over-strand ({t[_J]}, {t[_L]}) of crossing {idx + 1}"
        )

    def solve(self) -> None:
        for idx, t in enumerate(self.tuples):
            if self._other(t[_IN], (idx, _IN))[1] == _IN:
                raise BadIncidence(f"Edge {t[_IN]} enters two under passages")
            if self._other(t[_OUT], (idx, _OUT))[1] == _OUT:
                raise BadIncidence(f"Edge {t[_OUT]} leaves two under passages")
            self._set_head(t[_IN], (idx, _IN))
            self._set_head(t[_OUT], self._other(t[_OUT], (idx, _OUT)))

        unresolved = list(range(len(self.tuples)))
        while unresolved:
            progress = False
            for idx in list(unresolved):
                slot = self._deduce(idx)
                if slot is not None:
                    self._set_over_in(idx, slot)
                    unresolved.remove(idx)
                    progress = True
            if not progress:
                idx = unresolved.pop(0)
                log.debug(f"Orienting over-strand of crossing {idx + 1} by label order")
                self._set_over_in(idx, self._by_succession(idx))

    def successors(self) -> dict[int, int]:
        succ: dict[int, int] = {}
        for idx, t in enumerate(self.tuples):
            over_in = self.over_in[idx]
            over_out = _L if over_in == _J else _J
            for a, b in ((t[_IN], t[_OUT]), (t[over_in], t[over_out])):
                if a in succ:
                    raise BadIncidence(f"Edge {a} continues in two directions")
                succ[a] = b
        return succ


def parse_pd(text: str) -> KnotDiagram:
    tuples = _tokenize_pd(text)
    if not tuples:
        return KnotDiagram.unknot()

    counts = Counter(label for t in tuples for label in t)
    if bad := sorted(label for label, c in counts.items() if c != 2):
        raise BadIncidence(
            f"Every PD label must appear exactly twice; offending labels: {bad}"
        )

    solver = _OrientationSolver(tuples)
    solver.solve()
    succ = solver.successors()

    strands = nx.DiGraph()
    strands.add_edges_from(succ.items())
    if (components := nx.number_weakly_connected_components(strands)) != 1:
        raise DisconnectedUnderCycle(
            f"PD code describes a {components}-component link, not a knot"
        )

    # Arcs: labels glued together where they run over a crossing
    over_graph = nx.Graph()
    over_graph.add_nodes_from(counts)
    for t in tuples:
        over_graph.add_edge(t[_J], t[_L])
    component_of: dict[int, int] = {}
    for cid, comp in enumerate(nx.connected_components(over_graph)):
        for label in comp:
            component_of[label] = cid
    if len(set(component_of.values())) != len(tuples):
        raise BadIncidence(
            f"{len(tuples)} crossings but {len(set(component_of.values()))} arcs"
        )

    # Canonical arc ids: order of first appearance walking from the smallest label
    arc_id: dict[int, int] = {}
    label = start = min(counts)
    while True:
        arc_id.setdefault(component_of[label], len(arc_id) + 1)
        label = succ[label]
        if label == start:
            break

    crossings = tuple(
        Crossing(
            over=arc_id[component_of[t[_J]]],
            under_in=arc_id[component_of[t[_IN]]],
            under_out=arc_id[component_of[t[_OUT]]],
            sign=1 if solver.over_in[idx] == _L else -1,
        )
        for idx, t in enumerate(tuples)
    )
    try:
        return KnotDiagram(arc_count=len(arc_id), crossings=crossings)
    except InvalidDiagram as e:
        raise BadIncidence(str(e)) from e


# ---------------------------------------------------------------------------
# Signed Gauss codes
# ---------------------------------------------------------------------------

_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")
_GAUSS_FILLER = re.compile(r"^[\s,]*$")


def _tokenize_gauss(text: str) -> list[tuple[str, int, int]]:
    text = text.replace("−", "-")
    tokens: list[tuple[str, int, int]] = []
    pos = 0
    for m in _GAUSS_TOKEN.finditer(text):
        if not _GAUSS_FILLER.match(text[pos : m.start()]):
            raise MalformedSyntax(
                f"Unparseable Gauss code near '{text[pos : m.start()].strip()[:20]}'"
            )
        pos = m.end()
        tokens.append((m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
    if not _GAUSS_FILLER.match(text[pos:]):
        raise MalformedSyntax(f"Unparseable Gauss code near '{text[pos:].strip()[:20]}'")
    return tokens


def parse_gauss(text: str) -> KnotDiagram:
    tokens = _tokenize_gauss(text)
    if not tokens:
        return KnotDiagram.unknot()

    visits: dict[int, dict[str, int]] = {}
    for kind, number, sign in tokens:
        seen = visits.setdefault(number, {})
        if kind in seen:
            raise BadIncidence(f"Crossing {number} is passed {kind} more than once")
        seen[kind] = sign

    for number, seen in sorted(visits.items()):
        if len(seen) != 2:
            missing = "U" if "O" in seen else "O"
            raise BadIncidence(f"Crossing {number} has no {missing} visit")
        if seen["O"] != seen["U"]:
            raise SignMismatch(f"Crossing {number} is signed inconsistently")

    n = len(visits)
    over: dict[int, int] = {}
    under: dict[int, tuple[int, int]] = {}
    passed = 0  # under passages so far; the walk starts on arc 1
    for kind, number, _sign in tokens:
        if kind == "O":
            over[number] = passed % n + 1
        else:
            under[number] = (passed % n + 1, (passed + 1) % n + 1)
            passed += 1

    crossings = tuple(
        Crossing(
            over=over[number],
            under_in=under[number][0],
            under_out=under[number][1],
            sign=seen["O"],
        )
        for number, seen in sorted(visits.items())
    )
    return KnotDiagram(arc_count=n, crossings=crossings)
