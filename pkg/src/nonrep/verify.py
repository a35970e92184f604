"""Ground-truth checks for colourings and for the structures used to build them.

The two repetition oracles:

* :func:`find_repetitive_path` searches simple paths exhaustively. It grows
  the two halves of a candidate square in lockstep, so a branch dies as soon
  as the halves disagree in colour. A node budget turns it into a tri-state
  answer.
* :func:`find_repetitive_walk` is exact for walks of any length. A walk
  ``v_1..v_2t`` is read as the sequence of pairs ``(v_i, v_{t+i})``, which is
  a walk in the product of the graph with itself restricted to colour-equal
  pairs, together with the link ``v_t ~ v_{t+1}``. The product relation is
  symmetric, so existence reduces to connected components of the product;
  witnesses come from breadth-first search.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class Status(enum.Enum):
    CLEAN = "clean"
    WITNESS = "witness"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class WalkWitness:
    vertices: tuple
    t: int

    kind = "walk"

    @property
    def order(self) -> int:
        return len(set(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"type": self.kind, "t": self.t, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class PathWitness(WalkWitness):
    kind = "path"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: PathWitness | None = None
    budget_spent: int = 0

    @property
    def clean(self) -> bool:
        return self.status is Status.CLEAN


class _BudgetExhausted(Exception):
    pass


def _colours(g: Graph, c: Sequence[int]) -> list[int]:
    if len(c) != g.n:
        raise ValueError(f"colouring has {len(c)} entries for {g.n} vertices")
    return list(c)


def is_proper(g: Graph, c: Sequence[int]) -> bool:
    col = _colours(g, c)
    return all(col[u] != col[v] for u, v in g.edges)


def is_distance2(g: Graph, c: Sequence[int]) -> bool:
    """True iff every closed neighbourhood is rainbow."""
    col = _colours(g, c)
    for v in range(g.n):
        seen = {col[v]}
        for w in g.adj[v]:
            if col[w] in seen:
                return False
            seen.add(col[w])
    return True


def is_star_colouring(g: Graph, c: Sequence[int]) -> bool:
    if not is_proper(g, c):
        return False
    col = list(c)
    for b, cc in g.edges:
        for x, y in ((b, cc), (cc, b)):
            ends_x = [a for a in g.adj[x] if a != y and col[a] == col[y]]
            if not ends_x:
                continue
            for d in g.adj[y]:
                if d != x and col[d] == col[x] and any(a != d for a in ends_x):
                    return False
    return True


# --- paths ------------------------------------------------------------------

def _by_colour(adj, col, active=None):
    out = []
    for v, nbrs in enumerate(adj):
        groups: dict[int, list[int]] = {}
        for w in nbrs:
            if active is None or active[w]:
                groups.setdefault(col[w], []).append(w)
        out.append(groups)
    return out


def _lockstep_square(adj, col, budget=0, active=None):
    """Search for a repetitively coloured path by growing both halves together.

    Returns ``(vertices, t)`` or ``None``; raises ``_BudgetExhausted`` once
    more than ``budget`` states were expanded (0 = unlimited). ``active``
    restricts the search to an induced subgraph.
    """
    n = len(adj)
    grouped = _by_colour(adj, col, active)
    adj_sets = [set(a) for a in adj]
    used = [False] * n
    first: list[int] = []
    second: list[int] = []
    spent = 0

    def extend():
        nonlocal spent
        spent += 1
        if budget and spent > budget:
            raise _BudgetExhausted(spent)
        x, y = first[-1], second[-1]
        if second[0] in adj_sets[x]:
            return True
        gy = grouped[y]
        for x2 in adj[x]:
            if used[x2] or (active is not None and not active[x2]):
                continue
            ys = gy.get(col[x2])
            if not ys:
                continue
            used[x2] = True
            first.append(x2)
            for y2 in ys:
                if used[y2]:
                    continue
                used[y2] = True
                second.append(y2)
                if extend():
                    return True
                second.pop()
                used[y2] = False
            first.pop()
            used[x2] = False
        return False

    starts = sorted(
        (x, y)
        for x in range(n)
        for y in range(n)
        if x != y and col[x] == col[y] and (active is None or (active[x] and active[y]))
    )
    for x, y in starts:
        used[x] = used[y] = True
        first.append(x)
        second.append(y)
        if extend():
            return tuple(first + second), len(first), spent
        first.pop()
        second.pop()
        used[x] = used[y] = False
    return None, 0, spent


def find_repetitive_path(g: Graph, c: Sequence[int], budget: int = 0) -> Verdict:
    """Exhaustive search for a path whose colour sequence is a square.

    ``budget`` caps the number of expanded search states (0 = unlimited);
    running out yields ``Status.UNKNOWN``.
    """
    col = _colours(g, c)
    try:
        found, t, spent = _lockstep_square(g.adj, col, budget)
    except _BudgetExhausted as exc:
        return Verdict(Status.UNKNOWN, None, exc.args[0])
    if found is None:
        return Verdict(Status.CLEAN, None, spent)
    return Verdict(Status.WITNESS, PathWitness(found, t), spent)


def find_repetitive_path_tree(t: Graph, c: Sequence[int]) -> Verdict:
    """Path oracle for trees: every path is the unique path between its ends."""
    if not t.is_tree():
        raise ValueError("input is not a tree")
    col = _colours(t, c)
    checked = 0
    for root in range(t.n):
        stack = [(root, -1, 0)]
        path: list[int] = []
        while stack:
            v, parent, depth = stack.pop()
            del path[depth:]
            path.append(v)
            checked += 1
            size = len(path)
            if size % 2 == 0:
                h = size // 2
                if all(col[path[i]] == col[path[i + h]] for i in range(h)):
                    return Verdict(Status.WITNESS, PathWitness(tuple(path), h), checked)
            for w in reversed(t.adj[v]):
                if w != parent:
                    stack.append((w, v, depth + 1))
    return Verdict(Status.CLEAN, None, checked)


# --- walks ------------------------------------------------------------------

def _product_components(g: Graph, col):
    """Label the connected components of the colour-equal product graph."""
    n = g.n
    steps = g.closed_steps
    grouped = _by_colour(steps, col)
    comp = {}
    comps = []  # (has_off_diagonal, firsts, seconds)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(col[v], []).append(v)
    for x in range(n):
        for y in classes[col[x]]:
            key = x * n + y
            if key in comp:
                continue
            idx = len(comps)
            comp[key] = idx
            has_off, firsts, seconds = False, set(), set()
            queue = [(x, y)]
            while queue:
                a, b = queue.pop()
                has_off = has_off or a != b
                firsts.add(a)
                seconds.add(b)
                gb = grouped[b]
                for a2 in steps[a]:
                    for b2 in gb.get(col[a2], ()):
                        k2 = a2 * n + b2
                        if k2 not in comp:
                            comp[k2] = idx
                            queue.append((a2, b2))
            comps.append((has_off, firsts, seconds))
    return comp, comps, grouped


def _successors(state, steps, grouped, col):
    x, y, s, f = state
    gy = grouped[y]
    for x2 in steps[x]:
        for y2 in gy.get(col[x2], ()):
            yield (x2, y2, s, f or x2 != y2)


def find_repetitive_walk(g: Graph, c: Sequence[int], minimize: bool = False) -> WalkWitness | None:
    """Return a non-boring repetitively coloured walk, or ``None`` if none exists.

    Exact for walks of every length; loops in ``g`` count as walk steps. With
    ``minimize`` the witness has minimum length and is the lexicographically
    smallest vertex sequence among those.
    """
    col = _colours(g, c)
    n = g.n
    steps = g.closed_steps
    comp, comps, grouped = _product_components(g, col)

    good_sources = []
    for s in range(n):
        for a in range(n):
            if col[a] != col[s]:
                continue
            has_off, firsts, _ = comps[comp[a * n + s]]
            if has_off and any(e in firsts for e in steps[s]):
                good_sources.append((a, s))
    if not good_sources:
        return None
    if minimize:
        return _minimal_witness(good_sources, steps, grouped, col)
    s = min(s for _, s in good_sources)
    return _minimal_witness([(a, s2) for a, s2 in good_sources if s2 == s], steps, grouped, col)


def _minimal_witness(sources, steps, grouped, col):
    step_sets = [set(st) for st in steps]

    def is_target(q):
        return q[3] and q[0] in step_sets[q[2]]

    layer = sorted({(a, s, s, a != s) for a, s in sources})
    seen = set(layer)
    layers = [layer]
    while not any(is_target(q) for q in layer):
        nxt = set()
        for q in layer:
            for q2 in _successors(q, steps, grouped, col):
                if q2 not in seen:
                    seen.add(q2)
                    nxt.add(q2)
        if not nxt:
            raise AssertionError("walk search lost its witness")
        layer = sorted(nxt)
        layers.append(layer)

    depth = len(layers) - 1

    def succ_in(q, allowed):
        return any(q2 in allowed for q2 in _successors(q, steps, grouped, col))

    feasible = [set() for _ in layers]
    feasible[depth] = {q for q in layers[depth] if is_target(q)}
    for j in range(depth - 1, -1, -1):
        feasible[j] = {q for q in layers[j] if succ_in(q, feasible[j + 1])}

    # first half: greedy smallest x at each position
    chosen = []
    cur = feasible[0]
    for j in range(depth + 1):
        if j:
            cur = {q2 for q in cur for q2 in _successors(q, steps, grouped, col) if q2 in feasible[j]}
        x = min(q[0] for q in cur)
        cur = {q for q in cur if q[0] == x}
        chosen.append(cur)
    for j in range(depth - 1, -1, -1):
        chosen[j] = {q for q in chosen[j] if succ_in(q, chosen[j + 1])}

    firsts, seconds = [], []
    cur = chosen[0]
    for j in range(depth + 1):
        if j:
            cur = {q2 for q in cur for q2 in _successors(q, steps, grouped, col) if q2 in chosen[j]}
        y = min(q[1] for q in cur)
        cur = {q for q in cur if q[1] == y}
        firsts.append(next(iter(cur))[0])
        seconds.append(y)
    return WalkWitness(tuple(firsts + seconds), depth + 1)


def check_walk_witness(g: Graph, c: Sequence[int], w: WalkWitness) -> bool:
    """Independent re-validation of a walk witness."""
    vs, t = w.vertices, w.t
    if t < 1 or len(vs) != 2 * t or any(not 0 <= v < g.n for v in vs):
        return False
    if any(not g.has_edge(vs[i], vs[i + 1]) for i in range(2 * t - 1)):
        return False
    if any(c[vs[i]] != c[vs[t + i]] for i in range(t)):
        return False
    return any(vs[i] != vs[t + i] for i in range(t))


def check_path_witness(g: Graph, c: Sequence[int], w: WalkWitness) -> bool:
    return len(set(w.vertices)) == len(w.vertices) and check_walk_witness(g, c, w)


# --- levellings and decompositions -----------------------------------------

def validate_levelling(g: Graph, levelling: Sequence[int]) -> bool:
    if len(levelling) != g.n:
        return False
    lv = list(levelling)
    return all(abs(lv[u] - lv[v]) <= 1 for u, v in g.edges)


def validate_shadow_complete(g: Graph, levelling: Sequence[int]) -> bool:
    """Every component of G[level > k] must see a clique at level k."""
    if not validate_levelling(g, levelling):
        return False
    lv = list(levelling)
    for k in sorted(set(lv)):
        above = [v for v in range(g.n) if lv[v] > k]
        seen = set()
        for s in above:
            if s in seen:
                continue
            seen.add(s)
            shadow = set()
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in g.adj[v]:
                    if lv[w] > k and w not in seen:
                        seen.add(w)
                        queue.append(w)
                    elif lv[w] == k:
                        shadow.add(w)
            shadow_list = sorted(shadow)
            for i, a in enumerate(shadow_list):
                for b in shadow_list[i + 1:]:
                    if b not in g.adj_sets[a]:
                        return False
    return True


def _is_forest(num_nodes: int, edges) -> bool:
    parent = list(range(num_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _check_bags(g: Graph, bags, host_edges):
    for bag in bags:
        for v in bag:
            if not 0 <= v < g.n:
                raise ValueError(f"bag vertex {v} out of range")
    for a, b in host_edges:
        if not (0 <= a < len(bags) and 0 <= b < len(bags)) or a == b:
            raise ValueError(f"bad host edge ({a}, {b})")


def validate_tree_partition(g: Graph, tp) -> bool:
    """Bags partition V and collapsing each bag leaves a forest.

    If ``tp`` carries host edges they must form a forest containing every
    quotient edge.
    """
    bags = [list(b) for b in tp.bags]
    host = [tuple(e) for e in getattr(tp, "host_edges", ())]
    _check_bags(g, bags, host)
    where = [-1] * g.n
    for i, bag in enumerate(bags):
        if not bag:
            return False
        for v in bag:
            if where[v] != -1:
                return False
            where[v] = i
    if -1 in where:
        return False
    quotient = {tuple(sorted((where[u], where[v]))) for u, v in g.edges if where[u] != where[v]}
    if not _is_forest(len(bags), quotient):
        return False
    if host:
        host_set = {tuple(sorted(e)) for e in host}
        if len(host_set) != len(host) or not _is_forest(len(bags), host_set):
            return False
        if not quotient <= host_set:
            return False
    return True


def validate_tree_decomposition(g: Graph, td) -> bool:
    bags = [set(b) for b in td.bags]
    host = [tuple(e) for e in td.host_edges]
    _check_bags(g, bags, host)
    if g.n and not bags:
        return False
    if not _is_forest(len(bags), host):
        return False
    covered = set().union(*bags) if bags else set()
    if covered != set(range(g.n)):
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in bags):
            return False
    nbrs: list[list[int]] = [[] for _ in bags]
    for a, b in host:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v in range(g.n):
        holders = [i for i, b in enumerate(bags) if v in b]
        reach = {holders[0]}
        stack = [holders[0]]
        while stack:
            i = stack.pop()
            for j in nbrs[i]:
                if j not in reach and v in bags[j]:
                    reach.add(j)
                    stack.append(j)
        if len(reach) != len(holders):
            return False
    return True
