"""Exact odd-colorability by backtracking, a brute-force oracle, and Brooks-case coloring."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import Coloring, is_odd_coloring, is_proper
from .graph import Graph
from .mad import BudgetExceeded


@dataclass
class SolveOutcome:
    colorable: bool
    witness: Coloring | None
    nodes_explored: int

    def __post_init__(self) -> None:
        if self.colorable != (self.witness is not None):
            raise ValueError("witness must be present exactly when colorable")


class PreconditionViolated(ValueError):
    pass


def find_odd_coloring(g: Graph, c: int, budget: int | None = None) -> SolveOutcome:
    """Decide whether ``g`` has an odd ``c``-coloring.

    Vertices are branched in order of descending degree (ties by id).  Two
    prunings keep the search sound: properness, and a parity check that fires
    when a vertex's last neighbour is colored.  Colors are also tried in
    first-use order, since permuting colors maps odd colorings to odd
    colorings.  ``budget`` bounds the number of search nodes; exceeding it
    raises :class:`BudgetExceeded`.
    """
    if c < 1:
        raise ValueError("palette size must be positive")
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = g.adj
    colors: list[int | None] = [None] * n
    counts = [[0] * (c + 1) for _ in range(n)]
    odd = [0] * n  # number of colors with odd multiplicity among colored neighbours
    done = [0] * n  # colored neighbours
    deg = [len(a) for a in adj]
    nodes = 0

    def place(v: int, k: int) -> bool:
        colors[v] = k
        ok = True
        for w in adj[v]:
            counts[w][k] += 1
            odd[w] += 1 if counts[w][k] % 2 else -1
            done[w] += 1
            if done[w] == deg[w] and odd[w] == 0:
                ok = False
        return ok

    def unplace(v: int, k: int) -> None:
        colors[v] = None
        for w in adj[v]:
            counts[w][k] -= 1
            odd[w] += 1 if counts[w][k] % 2 else -1
            done[w] -= 1

    def search(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        if i == n:
            return True
        v = order[i]
        taken = {colors[w] for w in adj[v]}
        for k in range(1, min(c, used + 1) + 1):
            if k in taken:
                continue
            if place(v, k) and search(i + 1, max(used, k)):
                return True
            unplace(v, k)
        return False

    if not search(0, 0):
        return SolveOutcome(False, None, nodes)
    witness = Coloring(c, list(colors))
    if not is_odd_coloring(g, witness):
        raise AssertionError("solver produced an invalid odd coloring")
    return SolveOutcome(True, witness, nodes)


def chi_odd(g: Graph, budget: int | None = None) -> int | None:
    """Odd chromatic number: the least ``c`` admitting an odd ``c``-coloring.

    Giving every vertex its own color always works, so the search stops at
    ``max(n, 1)``.
    """
    for c in range(1, max(g.n, 1) + 1):
        if find_odd_coloring(g, c, budget).colorable:
            return c
    return None


def brute_force_odd_colorable(
    g: Graph, c: int, max_assignments: int = 4**10, chunk: int = 1 << 16
) -> SolveOutcome:
    """Enumerate all ``c^n`` total assignments in lexicographic order.

    Vertex 0 is the most significant digit.  Returns the first odd coloring
    found.  Independent of :func:`find_odd_coloring`; used as its oracle.
    """
    n = g.n
    total = c**n
    if total > max_assignments:
        raise BudgetExceeded(f"{c}^{n} assignments exceed the limit {max_assignments}")
    if n == 0:
        return SolveOutcome(True, Coloring(c, []), 1)
    edges = list(g.edges())
    place = c ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        a = (idx[:, None] // place[None, :]) % c + 1  # shape (chunk, n)
        ok = np.ones(len(idx), dtype=bool)
        for u, v in edges:
            ok &= a[:, u] != a[:, v]
        for v in range(n):
            nb = list(g.adj[v])
            if not nb:
                continue
            has_odd = np.zeros(len(idx), dtype=bool)
            for k in range(1, c + 1):
                cnt = (a[:, nb] == k).sum(axis=1)
                has_odd |= cnt % 2 == 1
            ok &= has_odd
        hits = np.flatnonzero(ok)
        if hits.size:
            row = a[hits[0]]
            return SolveOutcome(True, Coloring(c, [int(x) for x in row]), int(start + hits[0]) + 1)
    return SolveOutcome(False, None, total)


def proper_color_guaranteed(g: Graph, c: int) -> Coloring:
    """Proper ``c``-coloring of a connected graph satisfying Brooks' hypotheses.

    Brooks' theorem guarantees a coloring exists; it is found by exact
    backtracking that branches on the most saturated uncolored vertex.
    """
    if c < 1:
        raise PreconditionViolated("palette size must be positive")
    if not g.is_connected():
        raise PreconditionViolated("graph must be connected")
    if g.max_degree() > c:
        raise PreconditionViolated(f"maximum degree {g.max_degree()} exceeds {c}")
    if g.n == c + 1 and g.m == g.n * (g.n - 1) // 2:
        raise PreconditionViolated(f"graph is the complete graph K_{c + 1}")
    if c == 2 and g.n >= 3 and g.m == g.n and g.n % 2 == 1:
        raise PreconditionViolated("odd cycle is not 2-colorable")
    n = g.n
    colors: list[int | None] = [None] * n
    seen: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] is None:
                k = (len(seen[v]), g.degree(v), -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def search(left: int) -> bool:
        if left == 0:
            return True
        v = pick()
        for k in range(1, c + 1):
            if k in seen[v]:
                continue
            colors[v] = k
            touched = [w for w in g.adj[v] if k not in seen[w]]
            for w in touched:
                seen[w].add(k)
            if search(left - 1):
                return True
            for w in touched:
                seen[w].discard(k)
            colors[v] = None
        return False

    if not search(n):
        raise AssertionError("Brooks' theorem violated; precondition checks are wrong")
    col = Coloring(c, list(colors))
    assert is_proper(g, col)
    return col
