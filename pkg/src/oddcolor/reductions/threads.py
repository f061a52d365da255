"""Thread configurations around a 4+-vertex for odd 4-coloring.

Neighbour ``u_i`` of ``v`` is a 2-vertex with far neighbour ``x_i``; ``u_i x_i``
is a 2-thread when ``x_i`` is also a 2-vertex, with ``y_i`` beyond it.
Roles that do not exist for an index are stored as ``None`` in the anchor
tuples.
"""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, _other
from .steps import DistinctnessViolated, Painter, ParityPreconditionViolated, ReductionStep


def _arms(g: Graph, v: int):
    """For each neighbour ``u`` of ``v``: ``(u, x, y)`` with ``None`` where undefined."""
    out = []
    for u in g.adj[v]:
        x = y = None
        if g.degree(u) == 2:
            x = _other(g, u, v)
            if g.degree(x) == 2 and v not in g.adj[x]:
                y = _other(g, x, u)
        out.append((u, x, y))
    return out


def _distinct(*groups) -> bool:
    seen = [w for grp in groups for w in grp if w is not None]
    return len(seen) == len(set(seen))


def _thread_i_at(g: Graph, v: int) -> ReductionStep | None:
    d = g.degree(v)
    if d < 4 or any(g.degree(u) != 2 for u in g.adj[v]):
        return None
    arms = _arms(g, v)
    threads = [a for a in arms if a[2] is not None]
    if len(threads) < d - 1:
        return None
    others = [a for a in arms if a[2] is None]
    first = others[0] if others else arms[0]
    rest = [a for a in arms if a is not first]
    us = [first[0]] + [a[0] for a in rest]
    xs = [first[1]] + [a[1] for a in rest]
    ys = [None] + [a[2] for a in rest]
    s = frozenset([v, *us, *xs[1:]])
    anchors = {"v": v, "u": tuple(us), "x": tuple(xs), "y": tuple(ys)}
    return ReductionStep("thread_i", s, anchors)


def _thread_i_side_ok(g: Graph, step: ReductionStep) -> bool:
    a, s = step.anchors, step.deletion_set
    if not _distinct([a["v"]], a["u"], a["x"]):
        return False
    if not any(w not in s for w in g.adj[a["x"][0]]):
        return False
    return not any(y in s for y in a["y"][1:])


def _thread_ii_at(g: Graph, v: int) -> ReductionStep | None:
    d = g.degree(v)
    if d < 4 or d % 2 or any(g.degree(u) < 2 for u in g.adj[v]):
        return None
    arms = _arms(g, v)
    start = next((a for a in arms if a[2] is not None and g.degree(a[2]) == 2), None)
    if start is None:
        return None
    u1, x1, y1 = start
    z1 = _other(g, y1, x1)
    rest = [a for a in arms if a is not start]
    big = [a[0] for a in rest if g.degree(a[0]) >= 3]
    threads = [a for a in rest if a[2] is not None]
    if len(threads) < d - 3 + min(len(big), 1):
        return None
    plain = [a for a in rest if g.degree(a[0]) == 2 and a[2] is None]
    ordered = threads + plain + [(w, None, None) for w in big]
    us = [u1] + [a[0] for a in ordered]
    xs = [x1] + [a[1] for a in ordered]
    ys = [y1] + [a[2] for a in ordered]
    s = frozenset([v, u1, x1, y1, *(a[0] for a in threads + plain), *(a[1] for a in threads)])
    anchors = {"v": v, "u": tuple(us), "x": tuple(xs), "y": tuple(ys), "z1": z1}
    return ReductionStep("thread_ii", s, anchors)


def _thread_ii_side_ok(g: Graph, step: ReductionStep) -> bool:
    a, s = step.anchors, step.deletion_set
    v, us, xs, ys, z1 = a["v"], a["u"], a["x"], a["y"], a["z1"]
    thread = [i for i in range(1, len(us)) if ys[i] is not None]
    plain = [i for i in range(1, len(us)) if g.degree(us[i]) == 2 and ys[i] is None]
    if not _distinct([v], us, [xs[0]] + [xs[i] for i in thread], [ys[0]]):
        return False
    if z1 in s or z1 in g.adj[v]:
        return False
    if any(ys[i] in s for i in thread):
        return False
    return not any(xs[i] in s for i in plain)


_SIDE_OK = {"thread_i": _thread_i_side_ok, "thread_ii": _thread_ii_side_ok}


def thread_find(g: Graph, strict: bool = False) -> ReductionStep | None:
    """Least 4+-vertex violating the thread bound (i); failing that, bound (ii).

    ``strict`` skips configurations whose roles coincide or overlap the
    deletion set in a way the recipe cannot handle (possible only in graphs
    with induced 5-cycles or other short cycles through threads).
    """
    for finder in (_thread_i_at, _thread_ii_at):
        for v in range(g.n):
            step = finder(g, v)
            if step is not None and (not strict or _SIDE_OK[step.kind](g, step)):
                return step
    return None


def _extend_thread_i(p: Painter, a: dict) -> None:
    v, us, xs, ys = a["v"], a["u"], a["x"], a["y"]
    x1 = xs[0]
    k = p.odd(x1)
    if k is None:
        raise DistinctnessViolated(f"{x1} has no colored neighbour")
    p.put(v, k)
    for x, y in zip(xs[1:], ys[1:]):
        p.avoid(x, [p[y], p.odd(y), p[v]])
    for u, x, y in zip(us[1:], xs[1:], ys[1:]):
        p.avoid(u, [p[x], p[y], p[v]])
    p.avoid(us[0], [p[v], p.odd(v), p[x1]])


def _extend_thread_ii(p: Painter, a: dict) -> None:
    v, us, xs, ys, z1 = a["v"], a["u"], a["x"], a["y"], a["z1"]
    g = p.g
    if g.degree(v) % 2:
        raise ParityPreconditionViolated(f"center {v} has odd degree")
    u1, x1, y1 = us[0], xs[0], ys[0]
    forbid_x: list[int | None] = []
    for u, x in zip(us[1:], xs[1:]):
        if g.degree(u) >= 3:
            forbid_x += [p[u], p.odd(u)]
        elif p[x] is not None:
            forbid_x.append(p[x])
    oz = p.odd(z1)
    alpha = oz if oz is not None else p[z1]
    if oz is None:
        p.avoid(y1, forbid_x + [p[z1]])
    p.avoid(v, forbid_x + [alpha])
    for u, x, y in zip(us[1:], xs[1:], ys[1:]):
        if y is not None:
            p.avoid(x, [p[y], p.odd(y), p[v]])
    for u, x in zip(us[1:], xs[1:]):
        if g.degree(u) == 2:
            p.avoid(u, [p[v], p[x], p.odd(x)])
    if p[y1] is None:
        p.avoid(u1, [p[v], p.odd(v), p.odd(z1)])
        p.avoid(y1, [p[z1], p.odd(z1), p[u1]])
        k = p.odd(z1)
        if k is None or k in (p[u1], p[y1]):
            raise DistinctnessViolated("odd color of z1 is not free for x1")
        p.put(x1, k)
    else:
        p.avoid(u1, [p[v], p.odd(v)])
        p.avoid(x1, [p[u1], p[v], p[z1]])


def thread_extend(g: Graph, step: ReductionStep, partial: Coloring, c: int = 4) -> Coloring:
    if partial.c != c:
        raise ValueError("palette size mismatch")
    if step.kind not in _SIDE_OK:
        raise ValueError(f"not a thread step: {step.kind}")
    if not _SIDE_OK[step.kind](g, step):
        raise DistinctnessViolated(f"roles of the {step.kind} configuration coincide")
    p = Painter(g, partial, step.deletion_set)
    if step.kind == "thread_i":
        _extend_thread_i(p, step.anchors)
    else:
        _extend_thread_ii(p, step.anchors)
    return p.coloring()
