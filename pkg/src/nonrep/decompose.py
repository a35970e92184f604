"""Tree decompositions, tree-partitions and the treewidth colouring pipeline."""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .construct import compose_shadow, compose_shadow_walks, greedy_square_colouring
from .graph import Graph, Levelling
from .verify import validate_tree_partition

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple
    host_edges: tuple

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_json(self) -> dict:
        return {
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [list(e) for e in self.host_edges],
            "width": self.width,
        }


@dataclass(frozen=True)
class TreePartition:
    bags: tuple
    host_edges: tuple
    depths: tuple

    @property
    def max_bag(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def to_json(self) -> dict:
        return {
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [list(e) for e in self.host_edges],
            "depths": list(self.depths),
        }

    @classmethod
    def from_json(cls, data: dict) -> "TreePartition":
        return cls(
            tuple(tuple(b) for b in data["bags"]),
            tuple(tuple(e) for e in data.get("tree_edges", [])),
            tuple(data.get("depths", [])),
        )


def tree_decomposition(g: Graph) -> TreeDecomposition:
    """Min-fill elimination heuristic (networkx); width is an upper bound only."""
    from networkx.algorithms.approximation import treewidth_min_fill_in

    if g.n == 0:
        return TreeDecomposition((), ())
    nxg = g.to_networkx()
    nxg.remove_edges_from([(v, v) for v in g.loops])
    _, decomp = treewidth_min_fill_in(nxg)
    nodes = sorted(decomp.nodes, key=lambda b: sorted(b))
    index = {b: i for i, b in enumerate(nodes)}
    edges = tuple(sorted(tuple(sorted((index[a], index[b]))) for a, b in decomp.edges))
    return TreeDecomposition(tuple(frozenset(b) for b in nodes), edges)


def tree_partition(g: Graph) -> TreePartition:
    """BFS-layer tree-partition.

    Per component, BFS from its lowest-id vertex. For each layer i, every
    connected component C of the subgraph induced by layers >= i yields the
    bag ``C ∩ layer_i``; its parent is the bag of the component of layers
    >= i-1 containing C. Distinct bags at one depth are never adjacent.
    """
    bags: list[tuple] = []
    host: list[tuple[int, int]] = []
    depths: list[int] = []
    for comp in g.components():
        dist = g.bfs_distances(comp[0])
        top = max(dist[v] for v in comp)
        members = [comp]  # components of layers >= i, with their parent bag
        parents = [None]
        for i in range(top + 1):
            next_members, next_parents = [], []
            for block, parent in zip(members, parents):
                bag = tuple(sorted(v for v in block if dist[v] == i))
                idx = len(bags)
                bags.append(bag)
                depths.append(i)
                if parent is not None:
                    host.append((parent, idx))
                rest = {v for v in block if dist[v] > i}
                while rest:
                    s = min(rest)
                    part, queue = [], deque([s])
                    rest.discard(s)
                    while queue:
                        v = queue.popleft()
                        part.append(v)
                        for w in g.adj[v]:
                            if w in rest:
                                rest.discard(w)
                                queue.append(w)
                    next_members.append(sorted(part))
                    next_parents.append(idx)
            members, parents = next_members, next_parents
    return TreePartition(tuple(bags), tuple(host), tuple(depths))


def shadow_levelling(g: Graph, tp: TreePartition) -> tuple[Graph, Levelling]:
    """Complete every bag to a clique and level vertices by bag depth."""
    if not validate_tree_partition(g, tp):
        raise ValueError("invalid tree-partition")
    extra = []
    for bag in tp.bags:
        b = sorted(bag)
        extra += [(b[i], b[j]) for i in range(len(b)) for j in range(i + 1, len(b))]
    levels = [0] * g.n
    for bag, d in zip(tp.bags, tp.depths):
        for v in bag:
            levels[v] = d
    return g.with_edges(extra), Levelling(tuple(levels))


def bag_index_colouring(tp: TreePartition, n: int) -> list[int]:
    """Distinct colours 1..|bag| inside each bag, by increasing vertex id."""
    c = [0] * n
    for bag in tp.bags:
        for i, v in enumerate(sorted(bag)):
            c[v] = i + 1
    return c


def bag_size_target(k: int, delta: int) -> float:
    """Bag size every treewidth-k, max-degree-Δ graph is known to admit."""
    return 2.5 * (k + 1) * (3.5 * delta - 1)


def treewidth_colour_target(k: int, delta: int, mode: str = "path") -> float:
    bound = 4 * bag_size_target(k, delta)
    return bound if mode == "path" else bound * (delta ** 2 + 1)


@dataclass(frozen=True)
class TreewidthColouring:
    composite: object
    partition: TreePartition
    g_prime: Graph
    levelling: Levelling
    ell: int
    mode: str
    delta: int

    @property
    def colouring(self):
        return self.composite.colouring

    @property
    def colour_bound(self) -> int:
        """4ℓ for paths, 4ℓ(Δ²+1) for walks, with ℓ the measured bag bound."""
        return 4 * self.ell if self.mode == "path" else 4 * self.ell * (self.delta ** 2 + 1)


def treewidth_colouring(g: Graph, mode: str = "path", k: int | None = None) -> TreewidthColouring:
    """Tree-partition -> shadow-complete levelling -> product colouring.

    ``mode="path"`` pairs the level word with in-bag indices (at most 4ℓ
    colours); ``mode="walk"`` adds a greedy colouring of the square of ``g``
    as third coordinate (at most 4ℓ(Δ²+1) colours). If the treewidth ``k`` is
    known it is only used for the logged comparison with the general bound.
    """
    if mode not in ("path", "walk"):
        raise ValueError(f"unknown mode {mode!r}")
    if g.loops:
        raise ValueError("treewidth pipeline expects a loopless graph")
    tp = tree_partition(g)
    g2, levels = shadow_levelling(g, tp)
    per_level = bag_index_colouring(tp, g.n)
    if mode == "path":
        comp = compose_shadow(g2, levels, per_level, check=False)
    else:
        comp = compose_shadow_walks(g, g2, levels, per_level, greedy_square_colouring(g), check=False)
    delta = g.max_degree
    if k is not None and delta >= 1:
        log.info(
            "n=%d k=%d Δ=%d ℓ=%d (general bag bound %.1f) colours=%d (general bound %.1f)",
            g.n, k, delta, tp.max_bag, bag_size_target(k, delta), comp.num_colours,
            treewidth_colour_target(k, delta, mode),
        )
    return TreewidthColouring(comp, tp, g2, levels, tp.max_bag, mode, delta)
