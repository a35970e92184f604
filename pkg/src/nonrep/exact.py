"""Exact π and σ for small graphs, and a sampler for short repetitive walks."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .graph import Colouring, Graph, gen_random_graph, gen_random_tree
from .verify import (
    _lockstep_square,
    check_walk_witness,
    find_repetitive_path,
    find_repetitive_walk,
    is_distance2,
)


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class ExactResult:
    value: int
    certificate: Colouring
    nodes_expanded: int

    def to_json(self) -> dict:
        return {"value": self.value, "colours": list(self.certificate), "nodes": self.nodes_expanded}


def clique_number(g: Graph) -> int:
    import networkx as nx

    if g.n == 0:
        return 0
    h = g.to_networkx()
    h.remove_edges_from([(v, v) for v in g.loops])
    return max(len(c) for c in nx.find_cliques(h))


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse of the smallest-last elimination order (ties to the lowest id)."""
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    elim = []
    for _ in range(g.n):
        v = min((d, v) for v, d in enumerate(deg) if alive[v])[1]
        alive[v] = False
        elim.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return elim[::-1]


def _search(g: Graph, lower: int, budget: int, accept) -> ExactResult:
    """Iterative deepening over k with canonical colour introduction.

    ``accept(colours, active, v)`` decides whether the partial colouring is
    still extendable after colouring ``v``.
    """
    n = g.n
    if n == 0:
        return ExactResult(0, Colouring(()), 0)
    order = degeneracy_order(g)
    nodes = 0
    for k in range(max(lower, 1), n + 1):
        colours = [0] * n
        active = [False] * n

        def place(i, used):
            nonlocal nodes
            if i == n:
                return True
            v = order[i]
            active[v] = True
            for c in range(1, min(used + 1, k) + 1):
                nodes += 1
                if budget and nodes > budget:
                    raise BudgetExceeded(nodes)
                colours[v] = c
                if accept(colours, active, v) and place(i + 1, max(used, c)):
                    return True
            colours[v] = 0
            active[v] = False
            return False

        if place(0, 0):
            return ExactResult(k, Colouring(tuple(colours)), nodes)
    raise AssertionError("n colours always suffice")


def exact_pi(g: Graph, budget: int = 1_000_000) -> ExactResult:
    """Minimum number of colours with no repetitively coloured path.

    Raises :class:`BudgetExceeded` rather than returning an unproven value.
    """
    def accept(colours, active, v):
        cv = colours[v]
        if any(active[w] and colours[w] == cv for w in g.adj[v]):
            return False
        found, _, _ = _lockstep_square(g.adj, colours, 0, active)
        return found is None

    res = _search(g, clique_number(g), budget, accept)
    if not find_repetitive_path(g, res.certificate).clean:
        raise AssertionError("exact_pi certificate failed the path oracle")
    return res


def exact_sigma(g: Graph, budget: int = 1_000_000) -> ExactResult:
    """Minimum number of colours whose only repetitively coloured walks are boring."""
    ball2 = []
    for v in range(g.n):
        near = set(g.adj[v])
        for w in g.adj[v]:
            near.update(g.adj[w])
        near.discard(v)
        ball2.append(sorted(near))

    def accept(colours, active, v):
        cv = colours[v]
        if any(active[w] and colours[w] == cv for w in ball2[v]):
            return False
        sub, keep = g.induced(u for u in range(g.n) if active[u])
        return find_repetitive_walk(sub, [colours[u] for u in keep]) is None

    lower = max(clique_number(g), max((len(a) + 1 for a in g.adj), default=1))
    res = _search(g, lower, budget, accept)
    if find_repetitive_walk(g, res.certificate) is not None:
        raise AssertionError("exact_sigma certificate failed the walk oracle")
    return res


# --- explorer -----------------------------------------------------------------

@dataclass
class ExplorerReport:
    seed: int
    params: dict
    samples: int = 0
    witnesses: list = field(default_factory=list)
    max_ratio: dict = field(default_factory=dict)

    def add(self, record: dict) -> None:
        self.witnesses.append(record)
        c = record["colours_used"]
        self.max_ratio[c] = max(self.max_ratio.get(c, 0.0), record["ratio"])

    def json_lines(self):
        yield json.dumps({"kind": "header", "seed": self.seed, **self.params})
        for rec in self.witnesses:
            yield json.dumps({"kind": "witness", **rec})
        yield json.dumps({
            "kind": "summary",
            "samples": self.samples,
            "witnesses": len(self.witnesses),
            "max_ratio": {str(k): v for k, v in sorted(self.max_ratio.items())},
        })


def random_distance2_colouring(g: Graph, colour_max: int, rng: random.Random) -> list[int]:
    """Random first-fit colouring of the square: random vertex order, random free colour.

    Falls back to the smallest colour above ``colour_max`` when the palette
    is exhausted around a vertex.
    """
    colours = [0] * g.n
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        taken = {colours[w] for w in g.adj[v]}
        for w in g.adj[v]:
            taken.update(colours[x] for x in g.adj[w] if x != v)
        free = [c for c in range(1, colour_max + 1) if c not in taken]
        if free:
            colours[v] = rng.choice(free)
        else:
            c = colour_max + 1
            while c in taken:
                c += 1
            colours[v] = c
    return colours


def sample_instance(rng: random.Random, n_max: int, colour_max: int, colouring_model: str = "uniform"):
    """One (graph, colouring) draw.

    Graph: with probability 1/2 an Erdős–Rényi graph G(n, p), p ~ U(0.2, 0.9),
    otherwise a random recursive tree; n ~ U{2..n_max}.
    """
    n = rng.randint(2, max(2, n_max))
    sub_seed = rng.randrange(2 ** 32)
    if rng.random() < 0.5:
        g = gen_random_graph(n, rng.uniform(0.2, 0.9), sub_seed)
    else:
        g = gen_random_tree(n, sub_seed)
    if colouring_model == "distance2":
        colours = random_distance2_colouring(g, colour_max, rng)
    elif colouring_model == "uniform":
        colours = [rng.randint(1, colour_max) for _ in range(n)]
    else:
        raise ValueError(f"unknown colouring model {colouring_model!r}")
    return g, colours


def explore_smallwalks(n_max: int, colour_max: int, samples: int, seed: int = 0,
                       filter_conjecture: bool = False, colouring_model: str = "uniform") -> ExplorerReport:
    """Sample coloured graphs and record minimum repetitive non-boring walks.

    With ``filter_conjecture`` only colourings that are path-nonrepetitive and
    distance-2 yet still admit such a walk are recorded. Every recorded walk is
    re-validated and checked against length <= 2·order².
    """
    if n_max < 1 or colour_max < 1 or samples < 0:
        raise ValueError("parameters must be positive")
    rng = random.Random(seed)
    report = ExplorerReport(seed, {
        "n_max": n_max, "colour_max": colour_max, "samples": samples,
        "filter_conjecture": filter_conjecture, "colouring_model": colouring_model,
        "graph_model": "G(n,p) p~U(0.2,0.9) or random recursive tree, n~U{2..n_max}",
    })
    for _ in range(samples):
        g, colours = sample_instance(rng, n_max, colour_max, colouring_model)
        report.samples += 1
        if filter_conjecture and not (is_distance2(g, colours) and find_repetitive_path(g, colours).clean):
            continue
        w = find_repetitive_walk(g, colours, minimize=True)
        if w is None:
            continue
        if not check_walk_witness(g, colours, w):
            raise AssertionError("explorer witness failed re-validation")
        if w.length > 2 * w.order ** 2:
            raise AssertionError(f"witness of length {w.length} and order {w.order} exceeds 2k^2")
        report.add({
            "graph": g.to_json(),
            "colours": colours,
            "colours_used": len(set(colours)),
            "t": w.t,
            "vertices": list(w.vertices),
            "length": w.length,
            "order": w.order,
            "ratio": w.length / w.order,
        })
    return report
