"""Graphs, colourings and levellings, plus the graph families used throughout.

Vertices are always ``0..n-1``. Edges are stored as sorted pairs ``(u, v)``
with ``u < v``; self-loops live in a separate ``loops`` set so that the
looped path ``P+`` can be represented without turning everything into a
multigraph.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    loops: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
        for v in self.loops:
            if not 0 <= v < self.n:
                raise ValueError(f"bad loop at {v} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()) -> "Graph":
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"edge ({u}, {v}) is a loop; pass it via loops")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm), frozenset(int(v) for v in loops))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples, loops excluded."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def closed_steps(self) -> tuple[tuple[int, ...], ...]:
        """Vertices reachable in one walk step: neighbours, plus self when looped."""
        return tuple(
            tuple(sorted(self.adj[v] + ((v,) if v in self.loops else ())))
            for v in range(self.n)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + (1 if v in self.loops else 0)

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return u in self.loops
        return v in self.adj_sets[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and not self.loops and self.is_connected()

    def bfs_distances(self, root: int) -> list[int]:
        """Hop distance from ``root``; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        loops = [index[v] for v in self.loops if v in index]
        return Graph.from_edges(len(keep), edges, loops), keep

    def square(self) -> "Graph":
        """The graph joining every pair at distance at most two."""
        edges = set(self.edges)
        for v in range(self.n):
            for a, b in combinations(self.adj[v], 2):
                edges.add((a, b))
        return Graph(self.n, frozenset(edges))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + list(extra), self.loops)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        g.add_edges_from((v, v) for v in self.loops)
        return g

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()], "loops": sorted(self.loops)}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["n"]), data.get("edges", []), data.get("loops", []))


@dataclass(frozen=True)
class Colouring:
    """Total vertex colouring with positive integer colour ids."""

    colours: tuple

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        if any(c < 1 for c in self.colours):
            raise ValueError("colour ids must be positive integers")

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, i):
        return self.colours[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colours)

    @property
    def num_colours(self) -> int:
        return len(set(self.colours))

    def to_json(self) -> dict:
        return {"colours": list(self.colours)}

    @classmethod
    def from_json(cls, data: dict) -> "Colouring":
        return cls(tuple(data["colours"]))


@dataclass(frozen=True)
class Levelling:
    levels: tuple

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(x) for x in self.levels))

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, i):
        return self.levels[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.levels)

    def to_json(self) -> dict:
        return {"levels": list(self.levels)}

    @classmethod
    def from_json(cls, data: dict) -> "Levelling":
        return cls(tuple(data["levels"]))


@dataclass(frozen=True)
class SubdivisionResult:
    """Subdivided graph with its levelling.

    ``origin[h]`` is ``("vertex", i)`` for an original vertex, or
    ``("edge", i, j, k)`` for the k-th division vertex (1-based, counted from
    ``v_i``) on the edge ``v_i v_j``.
    """

    graph: Graph
    levelling: Levelling
    origin: tuple


# --- deterministic families -------------------------------------------------

def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0 (so K_{1,n-1})."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def gen_looped_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], range(n))


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_random_tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def gen_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    if n < 1:
        raise ValueError("graph needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def gen_random_partial_ktree(n: int, k: int, deg_cap: int | None = None, seed: int = 0):
    """Random subgraph of a random k-tree, with a width-<=k tree decomposition.

    Each new vertex picks a uniformly random k-clique of the underlying k-tree
    and joins to it; an edge is skipped if it would push either endpoint past
    ``deg_cap``. The decomposition is that of the full k-tree, which remains
    valid for every subgraph.
    """
    from .decompose import TreeDecomposition

    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if deg_cap is not None and deg_cap < 2 and n > 2:
        raise ValueError(f"deg_cap={deg_cap} is infeasible for n={n}")
    rng = random.Random(seed)
    deg = [0] * n
    edges = []

    def join(u, v):
        if deg_cap is None or (deg[u] < deg_cap and deg[v] < deg_cap):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1

    base = list(range(min(n, k + 1)))
    for u, v in combinations(base, 2):
        join(u, v)
    bags = [frozenset(base)]
    host_edges = []
    # (k-clique, index of a bag containing it)
    cliques = [(frozenset(c), 0) for c in combinations(base, k)] if len(base) == k + 1 else []
    for v in range(k + 1, n):
        clique, home = cliques[rng.randrange(len(cliques))]
        for u in sorted(clique):
            join(u, v)
        bags.append(clique | {v})
        host_edges.append((home, len(bags) - 1))
        for drop in clique:
            cliques.append(((clique - {drop}) | {v}, len(bags) - 1))
    return Graph.from_edges(n, edges), TreeDecomposition(tuple(bags), tuple(host_edges))


def build_subdivision(g: Graph, stretch: int = 1) -> SubdivisionResult:
    """Subdivide every edge v_i v_j (i < j) exactly stretch*(j-i)-1 times.

    Original vertex v_i gets level stretch*i and the division vertices of
    v_i v_j get the levels strictly between, in order, so every edge of the
    result joins consecutive levels. ``stretch=1`` is the plain j-i-1 rule;
    ``stretch=2`` leaves originals only on even levels, which is what the
    4-colouring in :func:`nonrep.construct.subdivision_colouring` relies on.
    """
    if stretch < 1:
        raise ValueError("stretch must be >= 1")
    if g.loops:
        raise ValueError("subdivision input must be loopless")
    if not g.is_connected():
        raise ValueError("subdivision input must be connected")
    levels = [stretch * i for i in range(g.n)]
    origin: list[tuple] = [("vertex", i) for i in range(g.n)]
    edges = []
    nxt = g.n
    for i, j in g.sorted_edges():
        prev = i
        for step in range(1, stretch * (j - i)):
            levels.append(stretch * i + step)
            origin.append(("edge", i, j, step))
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, j))
    h = Graph.from_edges(nxt, edges)
    return SubdivisionResult(h, Levelling(tuple(levels)), tuple(origin))


def gen_extremal(c: int, n: int) -> tuple[Graph, Colouring]:
    """K_{c-1} completely joined to an independent set of n-c+1 vertices."""
    if c < 2 or n < c - 1:
        raise ValueError("need c >= 2 and n >= c - 1")
    clique = range(c - 1)
    edges = list(combinations(clique, 2))
    edges += [(u, v) for v in range(c - 1, n) for u in clique]
    colours = [i + 1 for i in clique] + [c] * (n - c + 1)
    return Graph.from_edges(n, edges), Colouring(tuple(colours))


def gen_lex_product(m: int, p: int) -> tuple[Graph, Levelling]:
    """Path P_m lexicographically multiplied by K_p; vertex id = level * p + j."""
    if m < 1 or p < 1:
        raise ValueError("need m >= 1 and p >= 1")
    edges = []
    for lvl in range(m):
        block = range(lvl * p, (lvl + 1) * p)
        edges += combinations(block, 2)
        if lvl + 1 < m:
            edges += [(u, u2) for u in block for u2 in range((lvl + 1) * p, (lvl + 2) * p)]
    return Graph.from_edges(m * p, edges), Levelling(tuple(v // p for v in range(m * p)))


# --- serialization ----------------------------------------------------------

# Colour id k maps to PALETTE[(k - 1) % len(PALETTE)].
PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
)


def to_dot(g: Graph, colouring: Sequence[int] | None = None) -> str:
    lines = ["graph G {", "  node [style=filled];"]
    for v in range(g.n):
        if colouring is None:
            lines.append(f"  {v};")
        else:
            c = colouring[v]
            lines.append(f'  {v} [label="{v}:{c}", fillcolor="{PALETTE[(c - 1) % len(PALETTE)]}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    for v in sorted(g.loops):
        lines.append(f"  {v} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    """Canonical compact JSON for anything with ``to_json``."""
    data = obj.to_json() if hasattr(obj, "to_json") else obj
    return json.dumps(data, separators=(",", ":"))
