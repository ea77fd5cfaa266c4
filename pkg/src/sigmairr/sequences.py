"""Degree-sequence views, derived half-sum/half-difference sequences,
realizability tests, and canonical realizations.

A view keeps its entries in the order given; nothing auto-sorts, because
several published tables only recompute correctly in printed order.  Two
interpretation conventions exist:

* ``standard``: the entries are the degree multiset of a graph, so the
  order n is the entry count and m = sum(entries) / 2.
* ``paper-table``: the entries are a summary sequence; the order is
  n = sum(entries) and the object is treated as a tree, m = n - 1.

All derived arithmetic is exact (``fractions.Fraction``); floors and
ceilings downstream therefore never suffer float drift.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InputError
from .graphs import Graph


class Convention(str, Enum):
    STANDARD = "standard"
    PAPER_TABLE = "paper-table"


@dataclass(frozen=True)
class DegreeSequenceView:
    """A degree sequence plus the convention used to read n and m off it."""

    entries: tuple[int, ...]
    convention: Convention = Convention.STANDARD

    def __post_init__(self) -> None:
        if not self.entries:
            raise DomainError("degree sequence must be non-empty")
        for d in self.entries:
            if not isinstance(d, int) or d < 1:
                raise DomainError(f"degree entries must be integers >= 1, got {d!r}")
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def k(self) -> int:
        """Number of entries."""
        return len(self.entries)

    @property
    def n(self) -> int:
        if self.convention is Convention.PAPER_TABLE:
            return sum(self.entries)
        return self.k

    @property
    def m(self) -> Fraction:
        if self.convention is Convention.PAPER_TABLE:
            return Fraction(self.n - 1)
        return Fraction(sum(self.entries), 2)

    @property
    def max_entry(self) -> int:
        return max(self.entries)

    @property
    def min_entry(self) -> int:
        return min(self.entries)

    @property
    def mean_entry(self) -> Fraction:
        return Fraction(sum(self.entries), self.k)

    @property
    def cube_sum(self) -> int:
        return sum(d**3 for d in self.entries)

    def sorted_ascending(self) -> "DegreeSequenceView":
        return DegreeSequenceView(tuple(sorted(self.entries)), self.convention)

    def is_sorted_ascending(self) -> bool:
        return all(a <= b for a, b in zip(self.entries, self.entries[1:]))

    def is_sorted_descending(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    @classmethod
    def from_graph(cls, g: Graph, convention: Convention = Convention.STANDARD) -> "DegreeSequenceView":
        """View of a graph's degrees, sorted non-decreasing."""
        if g.vertex_count == 0:
            raise DomainError("cannot view an empty graph as a degree sequence")
        if min(g.degrees) < 1:
            raise DomainError("graph has an isolated vertex; degree entries must be >= 1")
        return cls(tuple(sorted(g.degrees)), convention)


@dataclass(frozen=True)
class DerivedSequences:
    """Half-differences t_i = (d_{i+1}-d_i)/2 and half-sums a_i = (d_{i+1}+d_i)/2."""

    half_diffs: tuple[Fraction, ...]
    half_sums: tuple[Fraction, ...]

    @property
    def max_half_diff(self) -> Fraction:
        return max(self.half_diffs)

    @property
    def max_half_sum(self) -> Fraction:
        return max(self.half_sums)

    @property
    def mean_half_diff(self) -> Fraction:
        return sum(self.half_diffs, Fraction(0)) / len(self.half_diffs)

    @property
    def mean_half_sum(self) -> Fraction:
        return sum(self.half_sums, Fraction(0)) / len(self.half_sums)

    @property
    def first_half_diff(self) -> Fraction:
        return self.half_diffs[0]

    @property
    def last_half_diff(self) -> Fraction:
        return self.half_diffs[-1]

    @property
    def first_half_sum(self) -> Fraction:
        return self.half_sums[0]

    @property
    def last_half_sum(self) -> Fraction:
        return self.half_sums[-1]


def derive(view: DegreeSequenceView) -> DerivedSequences:
    """Exact half-difference/half-sum sequences of consecutive entries."""
    if view.k < 2:
        raise DomainError("derived sequences need at least 2 entries")
    d = view.entries
    diffs = tuple(Fraction(d[i + 1] - d[i], 2) for i in range(view.k - 1))
    sums = tuple(Fraction(d[i + 1] + d[i], 2) for i in range(view.k - 1))
    return DerivedSequences(diffs, sums)


def reconstruct_degrees(derived: DerivedSequences) -> tuple[Fraction, ...]:
    """Invert derive(): a_i - t_i = d_i and a_i + t_i = d_{i+1}."""
    out = [derived.half_sums[0] - derived.half_diffs[0]]
    for t, a in zip(derived.half_diffs, derived.half_sums):
        out.append(a + t)
    return tuple(out)


# ---------------------------------------------------------------------------
# Realizability

def is_graphical(entries: Sequence[int]) -> bool:
    """Erdos-Gallai test: even sum and every prefix inequality."""
    if not entries:
        raise InputError("empty degree sequence")
    if any(d < 0 for d in entries):
        return False
    d = sorted(entries, reverse=True)
    k = len(d)
    if d[0] >= k:
        return False
    if sum(d) % 2 != 0:
        return False
    prefix = 0
    for j in range(1, k + 1):
        prefix += d[j - 1]
        tail = sum(min(d[i], j) for i in range(j, k))
        if prefix > j * (j - 1) + tail:
            return False
    return True


def is_tree_sequence(entries: Sequence[int]) -> bool:
    """Positive entries summing to 2(k - 1)."""
    if not entries:
        raise InputError("empty degree sequence")
    k = len(entries)
    return all(d >= 1 for d in entries) and sum(entries) == 2 * (k - 1)


def realize_tree(entries: Sequence[int]) -> Graph:
    """Realize a tree sequence as a caterpillar.

    Entries > 1 are sorted ascending onto a spine path (ids 0..p-1); the
    1-entries become leaves (ids p..k-1) attached greedily in spine order.
    The result's degree multiset equals the input multiset.
    """
    if not is_tree_sequence(entries):
        raise DomainError(
            f"not a tree sequence: need all entries >= 1 and sum == 2(k-1), got {tuple(entries)}"
        )
    k = len(entries)
    spine = sorted(d for d in entries if d > 1)
    p = len(spine)
    if p == 0:
        # Only (1, 1) has no spine: a single edge.
        return Graph(2, [(0, 1)])
    edges = [(i, i + 1) for i in range(p - 1)]
    next_leaf = p
    for i, d in enumerate(spine):
        if p == 1:
            spine_degree = 0
        elif i in (0, p - 1):
            spine_degree = 1
        else:
            spine_degree = 2
        for _ in range(d - spine_degree):
            edges.append((i, next_leaf))
            next_leaf += 1
    assert next_leaf == k, "leaf count mismatch in caterpillar construction"
    return Graph(k, edges)


def realize_graph_hakimi(entries: Sequence[int]) -> Graph:
    """Havel-Hakimi greedy realization of a graphical sequence."""
    if not is_graphical(entries):
        raise DomainError(f"not graphical (Erdos-Gallai fails): {tuple(entries)}")
    remaining = [(d, i) for i, d in enumerate(entries)]
    edges: list[tuple[int, int]] = []
    while True:
        remaining.sort(key=lambda pair: (-pair[0], pair[1]))
        d, v = remaining[0]
        if d == 0:
            break
        if d > len(remaining) - 1:
            raise DomainError("Havel-Hakimi step impossible; sequence not graphical")
        remaining[0] = (0, v)
        for idx in range(1, d + 1):
            dv, w = remaining[idx]
            if dv == 0:
                raise DomainError("Havel-Hakimi step impossible; sequence not graphical")
            remaining[idx] = (dv - 1, w)
            edges.append((v, w) if v < w else (w, v))
    return Graph(len(entries), edges)


# ---------------------------------------------------------------------------
# Random labeled trees

def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on n vertices via a seeded random Prufer word."""
    if n < 1:
        raise DomainError("random_tree requires n >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    word = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_prufer(word, n)


def tree_from_prufer(word: Sequence[int], n: int) -> Graph:
    """Decode a Prufer word of length n-2 over symbols 0..n-1."""
    if n < 2 or len(word) != n - 2:
        raise DomainError("Prufer word must have length n - 2 with n >= 2")
    degree = [1] * n
    for x in word:
        if not 0 <= x < n:
            raise DomainError(f"Prufer symbol {x} out of range")
        degree[x] += 1
    edges = []
    # ptr/leaf scan: always joins the smallest available leaf.
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in word:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1) if leaf < n - 1 else (n - 1, leaf))
    return Graph(n, edges)


def parse_sequence_literal(text: str) -> tuple[int, ...]:
    """Parse the CLI literal format: comma-separated integers, e.g. '3,5,7'."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or parts == [""]:
        raise InputError(f"empty sequence literal {text!r}")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise InputError(f"bad integer {p!r} in sequence literal {text!r}") from None
    return tuple(out)
