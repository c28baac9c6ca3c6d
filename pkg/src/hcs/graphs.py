"""Simple undirected graphs with exact rational counting.

Every vertex count and edge count in this package is tracked exactly
(arbitrary-precision integers and fractions), because the density
thresholds the algorithms compare against must never be blurred by
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1.

    Edges are stored as a frozenset of pairs (u, v) with u < v; the
    instance is immutable and safe to share between tasks.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range or not normalized")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return SimpleGraph(n, frozenset(_normalize_edge(u, v) for u, v in edges))

    @staticmethod
    def empty(n: int) -> "SimpleGraph":
        return SimpleGraph(n, frozenset())

    @staticmethod
    def complete(n: int) -> "SimpleGraph":
        return SimpleGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @staticmethod
    def cycle(n: int) -> "SimpleGraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "SimpleGraph":
        return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask over vertex ids."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.adjacency_masks[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        m = self.adjacency_masks[v]
        return frozenset(i for i in range(self.n) if m >> i & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


def average_degree(g: SimpleGraph) -> Fraction:
    """Exact average degree 2e/v."""
    if g.n == 0:
        raise ValueError("average degree of the empty vertex set is undefined")
    return Fraction(2 * g.edge_count, g.n)


@dataclass(frozen=True)
class TwoGraphView:
    """Counting view of a graph with every edge doubled and a loop per vertex.

    The doubled structure is never materialized; only its edge count
    2e + v matters, along with the normalized measures obtained by
    dividing vertex counts by k and edge counts by k^2.
    """

    base: SimpleGraph
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be a positive integer")

    @property
    def two_edge_count(self) -> int:
        return 2 * self.base.edge_count + self.base.n

    @property
    def vbar(self) -> Fraction:
        return Fraction(self.base.n, self.k)

    @property
    def ebar(self) -> Fraction:
        return Fraction(self.two_edge_count, self.k * self.k)


def two_graph_counts(g: SimpleGraph, k: int) -> TwoGraphView:
    """Doubled-edge accounting of g at normalization parameter k."""
    return TwoGraphView(g, k)


class InducedSubgraph(NamedTuple):
    """A relabeled induced subgraph together with its vertex map.

    ``vertices[i]`` is the original id of the new vertex i; the map is
    sorted ascending, so relabeling is order preserving.
    """

    graph: SimpleGraph
    vertices: tuple[int, ...]

    def to_original(self, new_id: int) -> int:
        return self.vertices[new_id]


def induced_subgraph(g: SimpleGraph, w: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by the vertex set w, relabeled to 0..|w|-1."""
    wset = set(w)
    for v in wset:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    order = tuple(sorted(wset))
    index = {v: i for i, v in enumerate(order)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in wset and v in wset
    )
    return InducedSubgraph(SimpleGraph(len(order), edges), order)


@dataclass(frozen=True)
class AnticliqueProfile:
    """Normalized sizes of pairwise disjoint edgeless induced parts."""

    sizes: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for s in self.sizes:
            if s < 0:
                raise ValueError("anticlique sizes must be non-negative")

    @staticmethod
    def of(*sizes) -> "AnticliqueProfile":
        return AnticliqueProfile(tuple(Fraction(s) for s in sizes))

    @property
    def square_sum(self) -> Fraction:
        return sum((s * s for s in self.sizes), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.sizes, Fraction(0))

    def fits_within(self, vbar) -> bool:
        """Whether the parts can live disjointly in a host of normalized size vbar."""
        return self.total() <= vbar


EMPTY_PROFILE = AnticliqueProfile(())


# --- serialization -----------------------------------------------------------

def graph_to_json_dict(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json_dict(data: dict) -> SimpleGraph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError("graph JSON must contain 'n' and 'edges'") from exc
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError(f"malformed edge entry: {e!r}")
        pairs.append((int(e[0]), int(e[1])))
    return SimpleGraph.from_edges(n, pairs)


def graph_to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
