"""Inductive construction of dense graphs without large highly connected subgraphs.

Level 0 is a complete graph on (1+sigma)k vertices. Each level glues two
copies of the previous graph along a k-vertex set drawn from a spread-out
vertex pool, so the result stays dense while every (k+1)-connected
subgraph remains confined to a single complete leaf of the gluing tree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .graphs import SimpleGraph, average_degree
from .extractor import scan_connected_subgraph

BRUTE_FORCE_VERTEX_CAP = 20


@dataclass(frozen=True)
class ExtremalGraph:
    """A constructed instance with the metadata needed to re-verify it.

    ``parts`` is the current spread-out pool: 2^level disjoint vertex
    sets totalling 2k vertices, sizes within one of each other, with no
    edges between distinct sets. ``glue_history[j]`` is the k-vertex set
    along which the two level-j copies were identified. Copy-one labels
    persist through later gluings, so entry j separates the subgraph
    induced by the first k + 2^(j+1)*sigma_k vertices (the level-(j+1)
    snapshot); for the last entry that snapshot is the whole graph.
    """

    graph: SimpleGraph
    k: int
    sigma_k: int
    level: int
    parts: tuple[tuple[int, ...], ...]
    glue_history: tuple[tuple[int, ...], ...]

    @property
    def sigma(self) -> Fraction:
        return Fraction(self.sigma_k, self.k)

    @property
    def leaf_size(self) -> int:
        return self.k + self.sigma_k


def _split_parts(
    parts: tuple[tuple[int, ...], ...], k: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Split each part into two halves so both sides total exactly k.

    Even positions go to the first side, odd to the second; then one
    element is flipped back in half of the odd-sized parts to balance
    the totals. Sizes within each side stay within one of each other.
    """
    odd = [i for i, p in enumerate(parts) if len(p) % 2 == 1]
    assert len(odd) % 2 == 0
    flips = set(odd[: len(odd) // 2])
    first: list[tuple[int, ...]] = []
    second: list[tuple[int, ...]] = []
    for i, p in enumerate(parts):
        y = list(p[0::2])
        z = list(p[1::2])
        if i in flips:
            z.append(y.pop())
        first.append(tuple(y))
        second.append(tuple(z))
    assert sum(len(p) for p in first) == k
    assert sum(len(p) for p in second) == k
    return first, second


def build_extremal(
    k: int, sigma_k: int, level: int, *, max_vertices: int = 100_000
) -> ExtremalGraph:
    """Build the level-``level`` instance for parameters k and sigma_k = sigma*k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if sigma_k < k:
        raise ValueError("needs sigma_k >= k (sigma >= 1)")
    if level < 0:
        raise ValueError("level must be non-negative")
    final_n = k + (1 << level) * sigma_k
    if final_n > max_vertices:
        raise ValueError(
            f"level {level} would need {final_n} vertices, above the cap {max_vertices}"
        )
    n = k + sigma_k
    edges = {(u, v) for u in range(n) for v in range(u + 1, n)}
    parts: tuple[tuple[int, ...], ...] = (tuple(range(2 * k)),)
    glue: list[tuple[int, ...]] = []
    for i in range(level):
        y_parts, z_parts = _split_parts(parts, k)
        y = tuple(sorted(v for p in y_parts for v in p))
        y_set = set(y)
        e_y = sum(1 for u, v in edges if u in y_set and v in y_set)
        # the gluing set must keep at most a 2^-i share of the complete edge count
        assert 2 * e_y * (1 << i) <= k * k - k
        others = sorted(set(range(n)) - y_set)
        remap = {v: v for v in y}
        remap.update({v: n + j for j, v in enumerate(others)})
        edges |= {
            (remap[u], remap[v]) if remap[u] < remap[v] else (remap[v], remap[u])
            for u, v in edges
        }
        parts = tuple(z_parts) + tuple(
            tuple(sorted(remap[v] for v in p)) for p in z_parts
        )
        glue.append(y)
        n = 2 * n - k
    return ExtremalGraph(
        SimpleGraph(n, frozenset(edges)), k, sigma_k, level, parts, tuple(glue)
    )


@dataclass(frozen=True)
class ExtremalReport:
    """Per-property verification outcome for a constructed instance."""

    vertex_count_ok: bool          # v - k = 2^level * sigma_k
    partition_ok: bool             # pool shape, balance, and no cross edges
    edge_bound_ok: bool
    edge_count: int
    edge_lower_bound: Fraction
    certificate_ok: bool           # gluing-tree certificate for the subgraph property
    brute_force_ok: Optional[bool]  # exhaustive check; None when too large
    average_degree: Fraction
    degree_target: Fraction        # delta * k - 2
    degree_target_met: bool

    @property
    def no_large_subgraph_ok(self) -> bool:
        if self.brute_force_ok is not None:
            return self.brute_force_ok
        return self.certificate_ok

    @property
    def edge_margin(self) -> Fraction:
        return Fraction(self.edge_count) - self.edge_lower_bound

    @property
    def passed(self) -> bool:
        return (
            self.vertex_count_ok
            and self.partition_ok
            and self.edge_bound_ok
            and self.no_large_subgraph_ok
        )


def _validate_structure(e: ExtremalGraph) -> None:
    n = e.graph.n
    if e.k < 1 or e.sigma_k < e.k or e.level < 0:
        raise ValueError("malformed parameters")
    if len(e.parts) != (1 << e.level):
        raise ValueError(f"expected {1 << e.level} pool parts, got {len(e.parts)}")
    seen: set[int] = set()
    for p in e.parts:
        for v in p:
            if not (0 <= v < n):
                raise ValueError(f"pool vertex {v} out of range")
            if v in seen:
                raise ValueError(f"pool vertex {v} repeated")
            seen.add(v)
    if len(seen) != 2 * e.k:
        raise ValueError(f"pool covers {len(seen)} vertices, expected {2 * e.k}")
    if len(e.glue_history) != e.level:
        raise ValueError("one gluing set per level is required")
    for j, y in enumerate(e.glue_history):
        if len(set(y)) != e.k:
            raise ValueError(f"gluing set {j} must have exactly {e.k} vertices")
        limit = e.k + (1 << j) * e.sigma_k
        if any(not (0 <= v < limit) for v in y):
            raise ValueError(f"gluing set {j} out of its level range")


def _check_partition(e: ExtremalGraph) -> bool:
    sizes = [len(p) for p in e.parts]
    if max(sizes) - min(sizes) > 1:
        return False
    masks = e.graph.adjacency_masks
    part_masks = []
    for p in e.parts:
        m = 0
        for v in p:
            m |= 1 << v
        part_masks.append(m)
    for i, p in enumerate(e.parts):
        others = 0
        for j, m in enumerate(part_masks):
            if j != i:
                others |= m
        for v in p:
            if masks[v] & others:
                return False
    return True


def _edge_lower_bound(e: ExtremalGraph) -> Fraction:
    def choose2(x: int) -> int:
        return x * (x - 1) // 2
    i = e.level
    return (1 << i) * (
        Fraction(choose2(e.leaf_size))
        - Fraction(2, 3) * (1 - Fraction(1, 4**i)) * choose2(e.k)
    )


def _copy_embedding(v_prev: int, y: tuple[int, ...]) -> list[int]:
    """Second-copy labels for level v_prev vertices glued along y."""
    y_set = set(y)
    others = [v for v in range(v_prev) if v not in y_set]
    image = [0] * v_prev
    for v in y:
        image[v] = v
    for j, v in enumerate(others):
        image[v] = v_prev + j
    return image


def _certificate_check(e: ExtremalGraph) -> bool:
    """Walk the gluing tree and verify each recorded separation on the graph.

    At every internal node the image of the gluing set must be a k-core
    separation of the node's induced subgraph; leaves must have exactly
    (1+sigma)k vertices. A (k+1)-connected subgraph cannot be split by a
    k-vertex core, so passing this walk confines any such subgraph to a
    leaf.
    """
    g = e.graph
    masks = g.adjacency_masks
    k = e.k

    def walk(level: int, phi: tuple[int, ...]) -> bool:
        if level == 0:
            return len(set(phi)) == e.leaf_size
        y = e.glue_history[level - 1]
        v_prev = k + (1 << (level - 1)) * e.sigma_k
        phi1 = phi[:v_prev]
        mu = _copy_embedding(v_prev, y)
        phi2 = tuple(phi[mu[x]] for x in range(v_prev))
        w = set(phi)
        w1, w2 = set(phi1), set(phi2)
        core = {phi[v] for v in y}
        if len(core) != k or (w1 | w2) != w or (w1 & w2) != core:
            return False
        if w1 == w or w2 == w:
            return False
        mask2 = 0
        for v in w2 - core:
            mask2 |= 1 << v
        for v in w1 - core:
            if masks[v] & mask2:
                return False
        return walk(level - 1, phi1) and walk(level - 1, phi2)

    return walk(e.level, tuple(range(g.n)))


def degree_rate_target(k: int, sigma_k: int) -> Fraction:
    """The average-degree target delta*k - 2 with delta = 2 + sigma + 1/(3 sigma)."""
    sigma = Fraction(sigma_k, k)
    delta = 2 + sigma + Fraction(1, 3) / sigma
    return delta * k - 2


def verify_extremal(e: ExtremalGraph) -> ExtremalReport:
    """Re-verify every claimed property of a constructed instance."""
    _validate_structure(e)
    g = e.graph
    vertex_ok = g.n - e.k == (1 << e.level) * e.sigma_k
    partition_ok = _check_partition(e)
    bound = _edge_lower_bound(e)
    edge_ok = Fraction(g.edge_count) >= bound
    certificate_ok = _certificate_check(e)
    brute: Optional[bool] = None
    if g.n <= BRUTE_FORCE_VERTEX_CAP:
        hit = scan_connected_subgraph(g, e.k, e.leaf_size + 1)
        brute = hit is None
    dbar = average_degree(g)
    target = degree_rate_target(e.k, e.sigma_k)
    return ExtremalReport(
        vertex_count_ok=vertex_ok,
        partition_ok=partition_ok,
        edge_bound_ok=edge_ok,
        edge_count=g.edge_count,
        edge_lower_bound=bound,
        certificate_ok=certificate_ok,
        brute_force_ok=brute,
        average_degree=dbar,
        degree_target=target,
        degree_target_met=dbar > target,
    )


def sharpness_rate(e: ExtremalGraph) -> tuple[Fraction, Fraction]:
    """The rate 2e/(v - k) against its guaranteed floor delta*k - 1 - 1/(3 sigma).

    Raises if the guarantee is violated, which would mean the
    construction lost edges somewhere.
    """
    sigma = e.sigma
    lhs = Fraction(2 * e.graph.edge_count, e.graph.n - e.k)
    delta = 2 + sigma + Fraction(1, 3) / sigma
    rhs = delta * e.k - 1 - Fraction(1, 3) / sigma
    if lhs < rhs:
        raise ArithmeticError(f"rate {lhs} fell below the guaranteed {rhs}")
    return lhs, rhs


def first_level_meeting_degree_target(
    k: int, sigma_k: int, max_level: int = 16
) -> Optional[int]:
    """Smallest level whose average degree exceeds delta*k - 2, if any.

    The threshold is met for all sufficiently large instances; this
    reports the empirical onset for the given parameters.
    """
    target = degree_rate_target(k, sigma_k)
    for level in range(max_level + 1):
        e = build_extremal(k, sigma_k, level, max_vertices=10**7)
        if average_degree(e.graph) > target:
            return level
    return None


def with_graph(e: ExtremalGraph, graph: SimpleGraph) -> ExtremalGraph:
    """The same metadata over a different graph (for mutation experiments)."""
    return replace(e, graph=graph)


# --- serialization --------------------------------------------------------------

def extremal_to_json_dict(e: ExtremalGraph) -> dict:
    from .graphs import graph_to_json_dict

    return {
        "graph": graph_to_json_dict(e.graph),
        "metadata": {
            "k": e.k,
            "sigma_k": e.sigma_k,
            "level": e.level,
            "parts": [list(p) for p in e.parts],
            "glue_history": [list(y) for y in e.glue_history],
        },
    }


def extremal_from_json_dict(data: dict) -> ExtremalGraph:
    from .graphs import graph_from_json_dict

    try:
        graph = graph_from_json_dict(data["graph"])
        meta = data["metadata"]
        e = ExtremalGraph(
            graph=graph,
            k=int(meta["k"]),
            sigma_k=int(meta["sigma_k"]),
            level=int(meta["level"]),
            parts=tuple(tuple(int(v) for v in p) for p in meta["parts"]),
            glue_history=tuple(tuple(int(v) for v in y) for y in meta["glue_history"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed extremal graph JSON") from exc
    _validate_structure(e)
    return e
