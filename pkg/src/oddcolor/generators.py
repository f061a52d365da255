"""Named graphs from the odd-coloring literature and random sparse instances."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from .graph import Graph, find_induced_c5


class GenerationExhausted(RuntimeError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivide(g: Graph) -> Graph:
    """Replace every edge by a path of length two.

    The subdivision vertex of the ``i``-th edge (in ``g.edges()`` order) gets
    id ``g.n + i``.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        w = g.n + i
        edges += [(u, w), (w, v)]
    return Graph(g.n + g.m, edges)


def kstar(c: int) -> Graph:
    """``K*_c``: the complete graph on ``c`` vertices with every edge subdivided once.

    Branch vertices keep ids ``0..c-1``.
    """
    if c < 3:
        raise ValueError("kstar needs c >= 3")
    return subdivide(complete(c))


def hk(k: int) -> Graph:
    """``k`` five-cycles glued at a single hub.

    The hub is vertex 0; cycle ``i`` is ``0, 4i+1, 4i+2, 4i+3, 4i+4``.
    """
    if k < 1:
        raise ValueError("hk needs k >= 1")
    edges = []
    for i in range(k):
        a, b, c, d = 4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4
        edges += [(0, a), (a, b), (b, c), (c, d), (d, 0)]
    return Graph(4 * k + 1, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# Concentric drawing: outer pentagon 0..4 (radius 3), a 10-cycle 5..14
# (radius 2, even positions under the outer vertices), inner pentagon 15..19
# (radius 1, under the odd ring positions).  Straight lines do not cross.
def dodecahedron_coordinates() -> list[tuple[float, float]]:
    def polar(r: float, deg: float) -> tuple[float, float]:
        return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))

    coords = [polar(3, 72 * i) for i in range(5)]
    coords += [polar(2, 36 * j) for j in range(10)]
    coords += [polar(1, 72 * i + 36) for i in range(5)]
    return coords


def dodecahedron() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(5 + j, 5 + (j + 1) % 10) for j in range(10)]
    edges += [(6 + 2 * i, 15 + i) for i in range(5)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Graph(20, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform-ish random ``d``-regular graph (Steger-Wormald via networkx)."""
    import networkx as nx

    h = nx.random_regular_graph(d, n, seed=seed)
    return Graph(n, h.edges())


def random_sparse(
    n: int,
    mad_cap: Fraction,
    forbid_induced_c5: bool = False,
    seed: int = 0,
    max_tries: int = 50,
) -> Graph:
    """Connected random graph with ``mad < mad_cap`` (and no induced 5-cycle if asked).

    A random recursive tree is grown first, then random non-edges are added
    one at a time and kept only if both conditions still hold.  The number of
    extra edges aimed for is drawn uniformly up to the edge budget implied by
    ``mad_cap``.  Whole attempts are retried ``max_tries`` times before giving
    up with :class:`GenerationExhausted`.
    """
    from .mad import density_decision

    if n < 1:
        raise ValueError("n must be positive")
    mad_cap = Fraction(mad_cap)
    if mad_cap <= 0:
        raise ValueError("mad_cap must be positive")
    rng = random.Random(seed)

    def acceptable(g: Graph) -> bool:
        if density_decision(g, mad_cap) is not None:
            return False
        return not (forbid_induced_c5 and find_induced_c5(g) is not None)

    for _ in range(max_tries):
        edges = [(rng.randrange(i), i) for i in range(1, n)]
        g = Graph(n, edges)
        if not acceptable(g):
            continue
        budget = math.floor(mad_cap * n / 2) - (n - 1)
        target = rng.randint(0, max(budget, 0))
        present = set(edges)
        added = 0
        for _ in range(4 * target + 10):
            if added >= target or len(present) == n * (n - 1) // 2:
                break
            u, v = sorted(rng.sample(range(n), 2))
            if (u, v) in present:
                continue
            trial = Graph(n, list(present) + [(u, v)])
            if acceptable(trial):
                present.add((u, v))
                g = trial
                added += 1
        return g
    raise GenerationExhausted(
        f"no connected graph on {n} vertices with mad < {mad_cap} after {max_tries} tries"
    )


NAMED = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete": complete,
    "kstar": kstar,
    "hk": hk,
    "petersen": petersen,
    "dodecahedron": dodecahedron,
}


def named(name: str, param: int | None = None) -> Graph:
    """Look up a named graph; parametrised families need ``param``."""
    try:
        make = NAMED[name]
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(NAMED)}") from None
    if name in ("petersen", "dodecahedron"):
        if param is not None:
            raise ValueError(f"{name} takes no parameter")
        return make()
    if param is None:
        raise ValueError(f"{name} needs an integer parameter")
    return make(param)
