"""The key-lemma configuration (``2d(v) <= n2(v) + ne(v) + c - 1``) and its recipe.

The center of a configuration only has to be *generally easy*: positive
degree and either odd degree or a 2-neighbour.  Neighbour counts still use
the strict notion of an easy vertex (a 3+-vertex), so ``n2 + ne <= d``.
"""

from __future__ import annotations

from ..coloring import Coloring, odd_colors
from ..graph import Graph, classify_easy, is_easy
from .steps import Painter, RecipeStuck, ReductionStep

ONE_VERTEX_KINDS = ("one_vertex", "rc5_i", "struc_i")
KEYLEM_KINDS = ("keylem", "struc_ii", "struc_iii", "struc_iv")


def generally_easy(g: Graph, v: int) -> bool:
    d = g.degree(v)
    return d > 0 and (d % 2 == 1 or any(g.degree(w) == 2 for w in g.adj[v]))


def one_vertex_step(g: Graph, v: int, kind: str = "one_vertex") -> ReductionStep:
    return ReductionStep(kind, frozenset([v]), {"v": v, "u": g.adj[v][0]})


def keylem_step(g: Graph, v: int, kind: str = "keylem") -> ReductionStep:
    n2 = [w for w in g.adj[v] if g.degree(w) == 2]
    return ReductionStep(kind, frozenset([v, *n2]), {"v": v})


def find_one_vertex(g: Graph) -> int | None:
    return next((v for v in range(g.n) if g.degree(v) == 1), None)


def keylem_violated(g: Graph, v: int, c: int) -> bool:
    if g.degree(v) < 2 or not generally_easy(g, v):
        return False
    info = classify_easy(g, v)
    return 2 * g.degree(v) <= info.n2 + info.ne + c - 1


def keylem_find(g: Graph, c: int) -> ReductionStep | None:
    """A 1-vertex, else the least generally-easy vertex violating the key inequality."""
    if c < 5:
        raise ValueError("the key lemma needs c >= 5")
    v = find_one_vertex(g)
    if v is not None:
        return one_vertex_step(g, v)
    for v in range(g.n):
        if keylem_violated(g, v, c):
            return keylem_step(g, v)
    return None


def extend_one_vertex(g: Graph, step: ReductionStep, partial: Coloring) -> Coloring:
    v, u = step.anchors["v"], step.anchors["u"]
    p = Painter(g, partial, step.deletion_set)
    p.avoid(v, [p[u], p.odd(u)])
    return p.coloring()


def keylem_extend(g: Graph, c: int, step: ReductionStep, partial: Coloring) -> Coloring:
    """Extend an odd coloring of ``g - S`` across a key-lemma configuration.

    Color the center avoiding the colors of its 3+-neighbours and of the far
    ends of its 2-neighbours, plus the odd colors of its non-easy
    3+-neighbours; then color each 2-neighbour greedily; finally, for each
    easy neighbour left without an odd color, recolor one of its
    2-neighbours.
    """
    if partial.c != c:
        raise ValueError("palette size mismatch")
    if step.kind in ONE_VERTEX_KINDS:
        return extend_one_vertex(g, step, partial)
    if step.kind not in KEYLEM_KINDS:
        raise ValueError(f"not a key-lemma step: {step.kind}")
    v = step.anchors["v"]
    p = Painter(g, partial, step.deletion_set)
    n2 = [w for w in g.adj[v] if g.degree(w) == 2]
    big = [w for w in g.adj[v] if g.degree(w) >= 3]
    easy = [w for w in big if is_easy(g, w)]
    far = {x for u in n2 for x in g.adj[u] if x != v}
    forbidden = [p[x] for x in far | set(big)]
    forbidden += [p.odd(w) for w in big if w not in easy]
    p.avoid(v, forbidden)
    for u in n2:
        p.greedy(u)
    for u in easy:
        if odd_colors(g, p.col, u):
            continue
        twos = [x for x in g.adj[u] if g.degree(x) == 2]
        if not twos:
            raise RecipeStuck(f"easy neighbour {u} lost its odd color and has no 2-neighbour")
        x = twos[0]
        p.uncolor(x)
        p.greedy(x)
    return p.coloring()


def struc_find(g: Graph) -> ReductionStep | None:
    """First of the four planar girth-5 configurations, scanned (i) to (iv).

    (i) a 1-vertex; (ii) two adjacent 2-vertices; (iii) a 3-vertex with a
    2-neighbour or an easy neighbour; (iv) an easy 4-vertex with two easy
    neighbours.  Each is a key-lemma configuration for ``c = 6``.
    """
    v = find_one_vertex(g)
    if v is not None:
        return one_vertex_step(g, v, "struc_i")
    for v in range(g.n):
        if g.degree(v) == 2 and any(g.degree(w) == 2 for w in g.adj[v]):
            return keylem_step(g, v, "struc_ii")
    for v in range(g.n):
        if g.degree(v) == 3:
            info = classify_easy(g, v)
            if info.n2 or info.ne:
                return keylem_step(g, v, "struc_iii")
    for v in range(g.n):
        if g.degree(v) == 4 and is_easy(g, v) and classify_easy(g, v).ne >= 2:
            return keylem_step(g, v, "struc_iv")
    return None
