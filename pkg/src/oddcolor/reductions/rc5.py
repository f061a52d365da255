"""Reducible configurations for odd 4-coloring sparse graphs without induced 5-cycles.

By default the detectors report configurations exactly as defined.  Some
recipes also need their outside anchors to be distinct and to lie outside
the deletion set, which holds automatically in graphs without induced
5-cycles once earlier configurations are gone.  With ``strict=True`` the
detectors check these side conditions themselves, so every returned step
can be extended in any graph; the pipelines use this mode.
"""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, _other
from .keylem import extend_one_vertex, find_one_vertex, one_vertex_step
from .steps import DistinctnessViolated, Painter, ReductionStep


def find_short_cycle(g: Graph) -> ReductionStep | None:
    """A 3- or 4-cycle whose vertices other than one (``u1``) are 2-vertices."""
    for ell in (3, 4):
        for u1 in range(g.n):
            for a in g.adj[u1]:
                if g.degree(a) != 2:
                    continue
                cyc = [u1, a]
                while len(cyc) < ell:
                    nxt = _other(g, cyc[-1], cyc[-2])
                    if nxt in cyc or g.degree(nxt) != 2:
                        break
                    cyc.append(nxt)
                if len(cyc) == ell and _other(g, cyc[-1], cyc[-2]) == u1:
                    return ReductionStep("rc5_ii", frozenset(cyc[1:]), {"cycle": tuple(cyc)})
    return None


def find_four_thread(g: Graph, strict: bool = False) -> ReductionStep | None:
    """Four consecutive 2-vertices ``v1..v4`` with outer neighbours ``u1`` and ``u2``.

    ``strict`` also asks for ``u1 != u2``, so the six vertices are distinct.
    """
    for v1 in range(g.n):
        if g.degree(v1) != 2:
            continue
        for v2 in g.adj[v1]:
            vs = [v1, v2]
            while len(vs) < 4 and g.degree(vs[-1]) == 2:
                nxt = _other(g, vs[-1], vs[-2])
                if nxt in vs:
                    break
                vs.append(nxt)
            if len(vs) < 4 or g.degree(vs[-1]) != 2:
                continue
            u1 = _other(g, v1, v2)
            u2 = _other(g, vs[3], vs[2])
            if u1 in vs or u2 in vs or (strict and u1 == u2):
                continue
            anchors = {"u1": u1, "v": tuple(vs), "u2": u2}
            return ReductionStep("rc5_iii", frozenset(vs), anchors)
    return None


def find_odd_vertex_two_thread(g: Graph, strict: bool = False) -> ReductionStep | None:
    """Vertex ``u1`` of odd degree followed by a 2-thread ``v1 v2`` ending at ``u2``
    (``strict``: ``u2 != u1``)."""
    for u1 in range(g.n):
        if g.degree(u1) % 2 == 0:
            continue
        for v1 in g.adj[u1]:
            if g.degree(v1) != 2:
                continue
            v2 = _other(g, v1, u1)
            if g.degree(v2) != 2:
                continue
            u2 = _other(g, v2, v1)
            if strict and u2 == u1:
                continue
            anchors = {"u1": u1, "v1": v1, "v2": v2, "u2": u2}
            return ReductionStep("rc5_iv", frozenset([v1, v2]), anchors)
    return None


def find_three_vertex_all_twos(g: Graph, strict: bool = False) -> ReductionStep | None:
    """A 3-vertex with only 2-neighbours (``strict``: far ends outside the configuration)."""
    for v in range(g.n):
        if g.degree(v) != 3 or any(g.degree(u) != 2 for u in g.adj[v]):
            continue
        us = g.adj[v]
        far = tuple(_other(g, u, v) for u in us)
        if strict and any(w in us for w in far):
            continue
        anchors = {"v": v, "u": us, "far": far}
        return ReductionStep("rc5_v", frozenset([v, *us]), anchors)
    return None


def rc5_find(g: Graph, strict: bool = False) -> ReductionStep | None:
    """First configuration in scan order (i) 1-vertex, (ii) short cycle, (iii) 4-thread,
    (iv) odd vertex on a 2-thread, (v) 3-vertex with only 2-neighbours."""
    v = find_one_vertex(g)
    if v is not None:
        return one_vertex_step(g, v, "rc5_i")
    step = find_short_cycle(g)
    if step is not None:
        return step
    for finder in (find_four_thread, find_odd_vertex_two_thread, find_three_vertex_all_twos):
        step = finder(g, strict)
        if step is not None:
            return step
    return None


def rc5_extend(g: Graph, step: ReductionStep, partial: Coloring, c: int = 4) -> Coloring:
    if partial.c != c:
        raise ValueError("palette size mismatch")
    kind = step.kind
    if kind in ("rc5_i", "one_vertex"):
        return extend_one_vertex(g, step, partial)
    p = Painter(g, partial, step.deletion_set)
    a = step.anchors
    if kind == "rc5_ii":
        cyc = a["cycle"]
        ell = len(cyc)
        order = [1, 3, 2] if ell == 4 else [1, 2]
        for i in order:
            prev, nxt = cyc[i - 1], cyc[(i + 1) % ell]
            p.avoid(cyc[i], [p[prev], p.odd(prev), p[nxt], p.odd(nxt)])
    elif kind == "rc5_iii":
        u1, u2 = a["u1"], a["u2"]
        v1, v2, v3, v4 = a["v"]
        if len({u1, u2, v1, v2, v3, v4}) != 6:
            raise DistinctnessViolated("4-thread anchors coincide")
        side1 = {k for k in (p[u1], p.odd(u1)) if k is not None}
        side2 = {k for k in (p[u2], p.odd(u2)) if k is not None}
        if side1 & side2:
            shared = p.avoid(v1, side1 | side2)
            p.put(v4, shared)
        else:
            p.put(v1, p[u2])
            p.put(v4, p[u1])
        p.greedy(v2)
        p.greedy(v3)
    elif kind == "rc5_iv":
        u1, v1, v2, u2 = a["u1"], a["v1"], a["v2"], a["u2"]
        if u1 == u2:
            raise DistinctnessViolated("2-thread closes a triangle")
        p.avoid(v2, [p[u2], p.odd(u2), p[u1]])
        p.avoid(v1, [p[v2], p[u2], p[u1]])
    elif kind == "rc5_v":
        v = a["v"]
        if set(a["far"]) & set(a["u"]):
            raise DistinctnessViolated("two neighbours of the 3-vertex are adjacent")
        p.avoid(v, [p[w] for w in a["far"]])
        for u, w in zip(a["u"], a["far"]):
            p.avoid(u, [p[w], p.odd(w), p[v]])
    else:
        raise ValueError(f"not an rc5 step: {kind}")
    return p.coloring()
