"""Isomorphism-free tree enumeration, extremal index search, and
bound-falsification campaigns.

Enumeration walks canonical rooted level sequences with the classic
successor rule (start from the path sequence 1,2,...,n; repeatedly locate
the last entry above 2 and re-copy the segment from its parent), then keeps
exactly the sequences that are the canonical center-rooted representation
of their underlying free tree:

* the root must be a center, which holds iff the two deepest principal
  subtrees differ in depth by at most one (readable off the level sequence
  in one pass), and
* for bicentral trees both center rootings appear in the stream, so only
  the lexicographically larger of the two canonical sequences is kept.

The stream is deterministic, one representative per isomorphism class, and
counts are validated in the test suite against independent labeled-tree
oracles.  Labeled Pruefer space (n^(n-2)) is never enumerated here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .bounds import BoundInput, BoundParams, BoundReport, evaluate_bound, expand_bound_id
from .errors import DomainError, InputError, ResourceLimitError
from .graphs import Graph, format_edge_list, is_tree
from .indices import albertson, sigma
from .sequences import is_tree_sequence, random_tree

DEFAULT_TREE_CAP = 18

OBJECTIVES: dict[str, Callable[[Graph], int]] = {
    "sigma": sigma,
    "albertson": albertson,
}


# ---------------------------------------------------------------------------
# Canonical rooted level sequences

def rooted_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical rooted level sequences on n vertices, reverse-lex order."""
    if n < 1:
        raise DomainError("need n >= 1")
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = n - 1
        while p >= 0 and levels[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        period = p - q
        for i in range(p, n):
            levels[i] = levels[i - period]


def levels_to_graph(levels: Sequence[int]) -> Graph:
    """Tree from a level sequence: parent of i is the last j < i one level up."""
    n = len(levels)
    edges = []
    stack: list[int] = []  # stack[d] = latest vertex at level d+1
    for i, lvl in enumerate(levels):
        del stack[lvl - 1:]
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(n, edges)


def _principal_depth_profile(levels: Sequence[int]) -> tuple[int, int, int]:
    """(deepest, second deepest, start of deepest segment) over the root's
    principal subtrees, in level units; second defaults to 1."""
    best1 = 1
    best2 = 1
    best1_start = -1
    seg_start = -1
    seg_max = 0
    for i in range(1, len(levels)):
        if levels[i] == 2:
            if seg_start >= 0:
                if seg_max > best1:
                    best2 = best1
                    best1 = seg_max
                    best1_start = seg_start
                elif seg_max > best2:
                    best2 = seg_max
            seg_start = i
            seg_max = 2
        elif levels[i] > seg_max:
            seg_max = levels[i]
    if seg_start >= 0:
        if seg_max > best1:
            best2 = best1
            best1 = seg_max
            best1_start = seg_start
        elif seg_max > best2:
            best2 = seg_max
    return best1, best2, best1_start


def _canonical_rooted_levels(adjacency: Sequence[Sequence[int]], root: int) -> tuple[int, ...]:
    """Canonical (lex-max) level sequence of the tree rooted at ``root``:
    subtree blocks sorted in non-increasing lexicographic order."""
    n = len(adjacency)
    parent = [-1] * n
    depth = [0] * n
    order = [root]
    depth[root] = 1
    for v in order:
        for w in adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
    blocks: dict[int, tuple[int, ...]] = {}
    for v in reversed(order):
        children = sorted(
            (blocks[w] for w in adjacency[v] if parent[w] == v),
            reverse=True,
        )
        block = [depth[v]]
        for child in children:
            block.extend(child)
        blocks[v] = tuple(block)
    return blocks[root]


def free_tree_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical center-rooted level sequences, one per free tree."""
    if n == 1:
        yield (1,)
        return
    for levels in rooted_level_sequences(n):
        deepest, second, deepest_start = _principal_depth_profile(levels)
        if deepest - second > 1:
            continue  # root is not a center
        if (deepest + second) % 2 == 1:
            # Bicentral: the other center is the top of the unique deepest
            # principal subtree; keep only the lex-larger center rooting.
            graph = levels_to_graph(levels)
            other = _canonical_rooted_levels(graph.adjacency(), deepest_start)
            if levels < other:
                continue
        yield levels


def enumerate_free_trees(
    n: int,
    max_order: int = DEFAULT_TREE_CAP,
    allow_over_cap: bool = False,
) -> Iterator[Graph]:
    """One tree per isomorphism class, in canonical order."""
    if n < 1:
        raise DomainError("enumerate_free_trees requires n >= 1")
    if n > max_order and not allow_over_cap:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration cap {max_order}; pass allow_over_cap=True to proceed"
        )
    for levels in free_tree_level_sequences(n):
        yield levels_to_graph(levels)


def tree_centers(g: Graph) -> tuple[int, ...]:
    """The one or two middle vertices, by leaf peeling."""
    n = g.vertex_count
    if n <= 2:
        return tuple(range(n))
    adj = [list(nbrs) for nbrs in g.adjacency()]
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
            degree[v] = 0
        layer = nxt
    return tuple(sorted(layer))


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Center-rooted canonical level sequence; equal iff trees are isomorphic."""
    if not is_tree(g):
        raise DomainError("canonical_form requires a tree")
    adjacency = g.adjacency()
    return max(_canonical_rooted_levels(adjacency, c) for c in tree_centers(g))


# ---------------------------------------------------------------------------
# Classes of trees and extremal search

@dataclass(frozen=True)
class TreeClass:
    """A finite, enumerable family of trees."""

    kind: str
    n: int
    degree_multiset: Optional[tuple[int, ...]] = None
    max_degree: Optional[int] = None

    @classmethod
    def all_trees(cls, n: int) -> "TreeClass":
        if n < 1:
            raise DomainError("all_trees requires n >= 1")
        return cls("all_trees", n)

    @classmethod
    def with_degree_multiset(cls, entries: Sequence[int]) -> "TreeClass":
        if not is_tree_sequence(entries):
            raise DomainError(f"{tuple(entries)} is not a tree sequence")
        return cls("degree_multiset", len(entries), degree_multiset=tuple(sorted(entries)))

    @classmethod
    def with_max_degree(cls, n: int, delta: int) -> "TreeClass":
        if n < 1:
            raise DomainError("with_max_degree requires n >= 1")
        if not 1 <= delta <= max(n - 1, 1):
            raise DomainError(f"max degree {delta} impossible for trees of order {n}")
        return cls("max_degree", n, max_degree=delta)

    def describe(self) -> str:
        if self.kind == "all_trees":
            return f"all trees of order {self.n}"
        if self.kind == "degree_multiset":
            return f"trees with degree multiset {self.degree_multiset}"
        return f"trees of order {self.n} with maximum degree {self.max_degree}"

    def contains(self, g: Graph) -> bool:
        if not is_tree(g) or g.vertex_count != self.n:
            return False
        if self.kind == "degree_multiset":
            return tuple(sorted(g.degrees)) == self.degree_multiset
        if self.kind == "max_degree":
            return max(g.degrees) == self.max_degree
        return True

    def members(self, max_order: int = DEFAULT_TREE_CAP, allow_over_cap: bool = False) -> Iterator[Graph]:
        for g in enumerate_free_trees(self.n, max_order, allow_over_cap):
            if self.contains(g):
                yield g


@dataclass(frozen=True)
class SearchResult:
    class_description: str
    objective: str
    direction: str
    optimum: int
    witness: Graph
    witness_encoding: tuple[int, ...]
    trees_examined: int
    duration_seconds: float

    def to_json_dict(self) -> dict:
        # duration omitted: output must be bit-identical across reruns
        return {
            "class": self.class_description,
            "objective": self.objective,
            "direction": self.direction,
            "optimum": self.optimum,
            "witness_encoding": list(self.witness_encoding),
            "witness_edges": [list(e) for e in self.witness.sorted_edges()],
            "witness_edge_list": format_edge_list(self.witness),
            "trees_examined": self.trees_examined,
        }


def extremal(
    tree_class: TreeClass,
    objective: str = "sigma",
    direction: str = "max",
    max_order: int = DEFAULT_TREE_CAP,
    allow_over_cap: bool = False,
) -> SearchResult:
    """Exact optimum over the class; ties keep the first tree in canonical order."""
    if objective not in OBJECTIVES:
        raise InputError(f"objective must be one of {sorted(OBJECTIVES)}")
    if direction not in ("max", "min"):
        raise InputError("direction must be 'max' or 'min'")
    fn = OBJECTIVES[objective]
    better = (lambda a, b: a > b) if direction == "max" else (lambda a, b: a < b)
    start = time.perf_counter()
    best: Optional[int] = None
    witness: Optional[Graph] = None
    examined = 0
    for g in tree_class.members(max_order, allow_over_cap):
        examined += 1
        value = fn(g)
        if best is None or better(value, best):
            best = value
            witness = g
    if witness is None:
        raise DomainError(f"empty class: {tree_class.describe()}")
    assert fn(witness) == best and tree_class.contains(witness)
    return SearchResult(
        class_description=tree_class.describe(),
        objective=objective,
        direction=direction,
        optimum=best,
        witness=witness,
        witness_encoding=canonical_form(witness),
        trees_examined=examined,
        duration_seconds=time.perf_counter() - start,
    )


def class_extremum_input(
    tree_class: TreeClass,
    objective: str,
    direction: str,
    params: BoundParams = BoundParams(),
    max_order: int = DEFAULT_TREE_CAP,
    allow_over_cap: bool = False,
) -> tuple[SearchResult, BoundInput]:
    """Extremal witness over a class, packaged for bound evaluation.

    This is the class-mode reading of the extremal-value claims: the claim
    is evaluated on the tree attaining the class extremum of the objective.
    """
    result = extremal(tree_class, objective, direction, max_order, allow_over_cap)
    binput = BoundInput.from_graph(
        result.witness,
        params,
        label=f"{direction} {objective} witness over {tree_class.describe()}",
    )
    return result, binput


# ---------------------------------------------------------------------------
# Falsification

@dataclass(frozen=True)
class ExhaustiveMode:
    n_max: int


@dataclass(frozen=True)
class RandomMode:
    n: int
    samples: int
    seed: int


@dataclass(frozen=True)
class Counterexample:
    bound_id: str
    graph: Graph
    report: BoundReport

    def to_json_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "n": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "edge_list": format_edge_list(self.graph),
            "report": self.report.to_json_dict(),
        }


def falsify(
    bound_id: str,
    mode: ExhaustiveMode | RandomMode,
    params: BoundParams = BoundParams(),
    max_order: int = DEFAULT_TREE_CAP,
    allow_over_cap: bool = False,
) -> list[Counterexample]:
    """Hunt for trees meeting a claim's hypotheses on which it evaluates false.

    Exhaustive mode covers every isomorphism class with 2 <= n <= n_max;
    random mode draws seeded labeled trees of a fixed order.  The returned
    list is deterministic for identical arguments.
    """
    bound_ids = expand_bound_id(bound_id)
    if isinstance(mode, ExhaustiveMode):
        if mode.n_max < 2:
            raise DomainError("exhaustive falsification needs n_max >= 2")
        trees: Iterator[Graph] = (
            g
            for n in range(2, mode.n_max + 1)
            for g in enumerate_free_trees(n, max_order, allow_over_cap)
        )
    else:
        if mode.n < 2:
            raise DomainError("random falsification needs n >= 2")
        if mode.samples < 1:
            raise DomainError("need at least one sample")
        rng = random.Random(mode.seed)
        seeds = [rng.randrange(2**63) for _ in range(mode.samples)]
        trees = (random_tree(mode.n, s) for s in seeds)

    found: list[Counterexample] = []
    for g in trees:
        binput = BoundInput.from_graph(g, params)
        for bid in bound_ids:
            report = evaluate_bound(bid, binput)
            if report.hypotheses_met and report.holds is False:
                found.append(Counterexample(bid, g, report))
    return found
