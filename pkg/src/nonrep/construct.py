"""Explicit nonrepetitive colourings.

Product colourings (a level colour paired with per-level data) are flattened
mixed-radix: for factors ``(c1, c2, c3)`` with radices ``(r1, r2, r3)`` (each
radix is the factor's largest colour id) the flat id is
``1 + ((c1-1)*r2 + (c2-1))*r3 + (c3-1)``. Ids are therefore stable but not
necessarily contiguous; ``num_colours`` counts the ids actually used.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Colouring,
    Graph,
    SubdivisionResult,
    build_subdivision,
    gen_cycle,
    gen_extremal,
    gen_lex_product,
)
from .verify import (
    find_repetitive_path,
    find_repetitive_walk,
    validate_levelling,
    validate_shadow_complete,
)
from .words import kp_word, thue_word


@dataclass(frozen=True)
class CompositeColouring:
    factors: tuple
    radices: tuple
    colouring: Colouring

    @property
    def num_colours(self) -> int:
        return self.colouring.num_colours

    def to_json(self) -> dict:
        return {
            "colours": list(self.colouring),
            "factors": [list(f) for f in self.factors],
            "radices": list(self.radices),
        }


def compose(*factors: Sequence[int]) -> CompositeColouring:
    if not factors:
        raise ValueError("need at least one factor")
    n = len(factors[0])
    if any(len(f) != n for f in factors):
        raise ValueError("factor colourings differ in length")
    radices = tuple(max(f, default=1) for f in factors)
    flat = []
    for v in range(n):
        code = 0
        for f, r in zip(factors, radices):
            code = code * r + (f[v] - 1)
        flat.append(code + 1)
    return CompositeColouring(
        tuple(Colouring(tuple(f)) for f in factors), radices, Colouring(tuple(flat))
    )


def path_colouring_3(n: int) -> Colouring:
    if n < 1:
        raise ValueError("n must be positive")
    return Colouring(tuple(int(ch) for ch in thue_word(n)))


def plus_path_colouring_4(n: int, source: str | None = None) -> Colouring:
    """Walk-nonrepetitive 4-colouring of the looped path, from :func:`kp_word`."""
    if n < 1:
        raise ValueError("n must be positive")
    return Colouring(tuple(int(ch) for ch in kp_word(n, source)))


def levelling_colouring(g: Graph, levelling: Sequence[int]) -> Colouring:
    """Colour each vertex by the 4-letter word symbol at its (shifted) level.

    Any walk repetitively coloured by the result has its two halves on
    matching levels.
    """
    if not validate_levelling(g, levelling):
        raise ValueError("not a levelling of g")
    if g.n == 0:
        return Colouring(())
    lo = min(levelling)
    word = kp_word(max(levelling) - lo + 1)
    return Colouring(tuple(int(word[lv - lo]) for lv in levelling))


def _levels(levelling):
    out: dict[int, list[int]] = {}
    for v, lv in enumerate(levelling):
        out.setdefault(lv, []).append(v)
    return out


def _restrict(c, vertices):
    return [c[v] for v in vertices]


def compose_shadow(g: Graph, levelling: Sequence[int], per_level: Sequence[int],
                   check: bool = True) -> CompositeColouring:
    """Pair the level colouring with a colouring that is good on every level.

    ``per_level`` is one colouring of all of ``g`` whose restriction to each
    level must be path-nonrepetitive (checked when ``check`` is set).
    """
    if len(per_level) != g.n:
        raise ValueError("per-level colouring has the wrong length")
    if not validate_shadow_complete(g, levelling):
        raise ValueError("levelling is not shadow-complete")
    if check:
        for lv, vs in _levels(levelling).items():
            sub, _ = g.induced(vs)
            if not find_repetitive_path(sub, _restrict(per_level, vs)).clean:
                raise ValueError(f"per-level colouring repeats on a path in level {lv}")
    return compose(levelling_colouring(g, levelling), per_level)


def _separates_shared_neighbours(h: Graph, levelling, c3) -> bool:
    for u in range(h.n):
        seen = set()
        for w in h.closed_steps[u]:
            key = (levelling[w], c3[w])
            if key in seen:
                return False
            seen.add(key)
    return True


def compose_shadow_walks(h: Graph, g: Graph, levelling: Sequence[int], per_level: Sequence[int],
                         c3: Sequence[int], check: bool = True) -> CompositeColouring:
    """Triple colouring (level word, per-level colouring, c3) of ``h``.

    ``h`` must be a spanning subgraph of ``g``. ``c3`` must give distinct
    colours to any two same-level vertices with a common neighbour in ``h``;
    a proper colouring of the square of ``h`` always qualifies.
    """
    if h.n != g.n or not h.edges <= g.edges or not h.loops <= g.loops:
        raise ValueError("h must be a spanning subgraph of g")
    if len(per_level) != g.n or len(c3) != g.n:
        raise ValueError("colouring lengths do not match the graph")
    if not validate_shadow_complete(g, levelling):
        raise ValueError("levelling is not shadow-complete")
    if not _separates_shared_neighbours(h, levelling, c3):
        raise ValueError("c3 repeats on same-level vertices sharing a neighbour")
    if check:
        for lv, vs in _levels(levelling).items():
            sub, _ = g.induced(vs)
            if find_repetitive_walk(sub, _restrict(per_level, vs)) is not None:
                raise ValueError(f"per-level colouring repeats on a walk in level {lv}")
    return compose(levelling_colouring(g, levelling), per_level, c3)


def greedy_square_colouring(g: Graph, order: Sequence[int] | None = None) -> Colouring:
    """First-fit proper colouring of the square of ``g`` (at most Δ²+1 colours)."""
    colours = [0] * g.n
    for v in (range(g.n) if order is None else order):
        taken = set()
        for w in g.adj[v]:
            taken.add(colours[w])
            for x in g.adj[w]:
                taken.add(colours[x])
        c = 1
        while c in taken:
            c += 1
        colours[v] = c
    return Colouring(tuple(colours))


def _leaf_root(t: Graph) -> int:
    if not t.is_tree():
        raise ValueError("input is not a tree")
    return next((v for v in range(t.n) if t.degree(v) <= 1), 0)


def tree_pi_colouring(t: Graph) -> Colouring:
    """At most 4 colours: word symbol of the distance from the lowest-id leaf."""
    root = _leaf_root(t)
    levels = t.bfs_distances(root)
    return compose_shadow(t, levels, [1] * t.n, check=False).colouring


def tree_sigma_colouring(t: Graph) -> Colouring:
    """Walk-nonrepetitive colouring with at most 4·max(1, Δ-1) colours.

    Rooted at the lowest-id leaf; the third coordinate is the vertex's rank
    among its siblings, which is all the shadow argument needs on a tree.
    """
    root = _leaf_root(t)
    if t.n < 2:
        raise ValueError("tree needs at least 2 vertices")
    levels = t.bfs_distances(root)
    rank = [1] * t.n
    for v in range(t.n):
        children = [w for w in t.adj[v] if levels[w] == levels[v] + 1]
        for i, w in enumerate(children):
            rank[w] = i + 1
    return compose_shadow_walks(t, t, levels, [1] * t.n, rank, check=False).colouring


def _cycle_search(n: int, k: int, budget: int):
    """Backtracking for a k-colouring of C_n with no repetitively coloured arc.

    Vertex 0 gets colour 1 and new colours appear in increasing order.
    Returns ``(colours or None, nodes)``.
    """
    w = [0] * n
    nodes = 0

    def suffix_ok(i):
        for h in range(1, (i + 1) // 2 + 1):
            if all(w[i - 2 * h + 1 + j] == w[i - h + 1 + j] for j in range(h)):
                return False
        return True

    def closing_ok():
        for h in range(1, n // 2 + 1):
            for s in range(n - 2 * h + 1, n):
                if all(w[(s + j) % n] == w[(s + h + j) % n] for j in range(h)):
                    return False
        return True

    def place(i, used):
        nonlocal nodes
        nodes += 1
        if budget and nodes > budget:
            raise RuntimeError(f"cycle search for n={n}, k={k} exceeded {budget} nodes")
        if i == n:
            return closing_ok()
        for col in range(1, min(used + 1, k) + 1):
            w[i] = col
            if suffix_ok(i) and place(i + 1, max(used, col)):
                return True
        w[i] = 0
        return False

    w[0] = 1
    found = place(1, 1)
    return (list(w) if found else None), nodes


def cycle_pi_colouring(n: int, budget: int = 10_000_000) -> Colouring:
    """Fewest-colour path-nonrepetitive colouring of C_n found by search.

    Tries 3 colours, then 4, ... ; each attempt is capped at ``budget``
    search nodes. The result is re-checked with the path oracle.
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    for k in range(3, n + 1):
        colours, _ = _cycle_search(n, k, budget)
        if colours is not None:
            c = Colouring(tuple(colours))
            if not find_repetitive_path(gen_cycle(n), c).clean:
                raise AssertionError("cycle search produced a repetitive colouring")
            return c
    raise AssertionError("no colouring found")


def cycle_sigma5_colouring(n: int) -> Colouring:
    """Walk-nonrepetitive 5-colouring of C_n.

    Cut an arc of n-1 vertices with differently coloured ends out of the
    4-coloured path of 2n-4 vertices, close it with one extra vertex in
    colour 5 (vertex n-1 of the returned cycle).
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    word = kp_word(2 * n - 4)
    for i in range(n - 2):
        if word[i] != word[n + i - 2]:
            arc = word[i:n + i - 1]
            return Colouring(tuple(int(ch) for ch in arc) + (5,))
    raise AssertionError(f"no arc with distinct end colours for n={n}")


def subdivision_colouring(g: Graph, stretch: int = 2) -> tuple[SubdivisionResult, Colouring]:
    """Subdivide ``g`` and colour the result by level with at most 4 colours.

    With ``stretch=2`` the result is path-nonrepetitive: a repetitively
    coloured path must turn at two original vertices on adjacent levels,
    and originals only sit on even levels. With ``stretch=1`` such paths
    exist whenever v_a v_{a+1}, v_i v_{a+1} (i < a) and v_a v_j (j > a+1)
    are all edges, e.g. in K_4.
    """
    res = build_subdivision(g, stretch)
    return res, levelling_colouring(res.graph, res.levelling)


def extremal_colouring(c: int, n: int) -> Colouring:
    return gen_extremal(c, n)[1]


def sigma_lex_colouring(m: int, p: int) -> Colouring:
    """Level word paired with in-level index on P_m[K_p]; at most 4p colours."""
    g, levels = gen_lex_product(m, p)
    index = [v % p + 1 for v in range(g.n)]
    return compose(levelling_colouring(g, levels), index).colouring


__all__ = [
    "CompositeColouring",
    "compose",
    "compose_shadow",
    "compose_shadow_walks",
    "cycle_pi_colouring",
    "cycle_sigma5_colouring",
    "extremal_colouring",
    "greedy_square_colouring",
    "levelling_colouring",
    "path_colouring_3",
    "plus_path_colouring_4",
    "sigma_lex_colouring",
    "subdivision_colouring",
    "tree_pi_colouring",
    "tree_sigma_colouring",
]
