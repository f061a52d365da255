"""End-to-end constructive colorers built from the reductions.

Each pipeline deletes configurations until none is left, colors what
remains, and then replays the extension recipes in reverse order.  Deleted
vertices keep their ids (they become isolated), so every intermediate graph
lives on the same vertex set as the input.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..coloring import Coloring, is_odd_coloring
from ..graph import ContractionError, Graph, contract_threads, find_induced_c5, girth
from ..mad import density_decision, mad_exact
from ..solver import find_odd_coloring, proper_color_guaranteed
from .keylem import KEYLEM_KINDS, ONE_VERTEX_KINDS, extend_one_vertex, keylem_extend, keylem_find, struc_find
from .rc5 import rc5_extend, rc5_find
from .steps import Painter, PipelineTrace, ReductionStep
from .threads import thread_extend, thread_find


class OutsideHypothesisWarning(UserWarning):
    """Input lies outside the class the pipeline is guaranteed to handle."""


@dataclass
class PipelineResult:
    coloring: Coloring | None
    trace: PipelineTrace
    refusal: frozenset[int] | None = None

    @property
    def used_fallback(self) -> bool:
        return self.trace.base_case == "fallback_exact_solver"


def extend(g: Graph, step: ReductionStep, partial: Coloring) -> Coloring:
    """Dispatch to the extension recipe for ``step.kind``."""
    c = partial.c
    if step.kind in ONE_VERTEX_KINDS:
        return extend_one_vertex(g, step, partial)
    if step.kind in KEYLEM_KINDS:
        return keylem_extend(g, c, step, partial)
    if step.kind.startswith("rc5_"):
        return rc5_extend(g, step, partial, c)
    if step.kind.startswith("thread_"):
        return thread_extend(g, step, partial, c)
    raise ValueError(f"no recipe for {step.kind}")


def replay_deletions(g: Graph, steps: list[ReductionStep]) -> Graph:
    for step in steps:
        g = g.delete_vertices(step.deletion_set)
    return g


def _reduce(g: Graph, finders: list[Callable[[Graph], ReductionStep | None]]):
    graphs = [g]
    steps: list[ReductionStep] = []
    while True:
        cur = graphs[-1]
        step = None
        for find in finders:
            step = find(cur)
            if step is not None:
                break
        if step is None:
            return steps, graphs
        steps.append(step)
        graphs.append(cur.delete_vertices(step.deletion_set))


def _deleted(steps: list[ReductionStep]) -> set[int]:
    return {v for s in steps for v in s.deletion_set}


def _unwind(graphs: list[Graph], steps: list[ReductionStep], base: Coloring) -> Coloring:
    col = base
    for i in range(len(steps) - 1, -1, -1):
        col = extend(graphs[i], steps[i], col)
    return col


def _edgeless_base(g: Graph, c: int, gone: set[int]) -> Coloring:
    return Coloring(c, [None if v in gone else 1 for v in range(g.n)])


def _fallback(base: Graph, c: int, gone: set[int], why: str) -> Coloring | None:
    warnings.warn(f"no reducible configuration left ({why}); using the exact solver", OutsideHypothesisWarning, stacklevel=3)
    out = find_odd_coloring(base, c)
    if not out.colorable:
        return None
    return Coloring(c, [None if v in gone else k for v, k in enumerate(out.witness.colors)])


def _finish(g: Graph, graphs, steps, trace: PipelineTrace, base: Coloring | None) -> PipelineResult:
    if base is None:
        return PipelineResult(None, trace)
    col = _unwind(graphs, steps, base)
    if not is_odd_coloring(g, col):
        raise AssertionError("pipeline produced an invalid odd coloring")
    return PipelineResult(col, trace)


def _color_subdivided_regular(g: Graph, c: int, gone: set[int]) -> tuple[Coloring | None, frozenset[int] | None] | None:
    """Brooks on the contracted base, then the 2-vertices greedily.

    Returns ``None`` when ``g`` is not (up to isolated vertices) a graph with
    every edge subdivided once over a c-regular base.  A component whose base
    is ``K_{c+1}`` yields a refusal: the vertex set of its ``K*_{c+1}``.
    """
    try:
        con = contract_threads(g)
    except ContractionError:
        return None
    base = con.base
    if base.m == 0 or any(base.degree(i) not in (0, c) for i in range(base.n)):
        return None
    if any(len(con.thread_of_edge.get(e, ())) != 1 for e in base.edges()):
        return None
    col = _edgeless_base(g, c, gone)
    for comp in base.components():
        if len(comp) == 1:
            continue
        sub, order = base.induced_subgraph(comp)
        if sub.n == c + 1 and sub.m == sub.n * (sub.n - 1) // 2:
            ends = [con.vertex_map[i] for i in order]
            inside = set(comp)
            mids = [con.thread_of_edge[e][0] for e in base.edges() if e[0] in inside]
            return None, frozenset(ends + mids)
        proper = proper_color_guaranteed(sub, c)
        for i, b in enumerate(order):
            col[con.vertex_map[b]] = proper[i]
    p = Painter(g, col)
    twos = sorted(v for path in con.thread_of_edge.values() for v in path)
    for v in twos:
        p.uncolor(v)
    for v in twos:
        p.greedy(v)
    return p.coloring(), None


def pipeline_sparse(g: Graph, c: int) -> PipelineResult:
    """Odd c-coloring (c >= 7) of a graph with mad at most 4c/(c+2), or a K*_{c+1} refusal."""
    if c < 7:
        raise ValueError("pipeline_sparse needs c >= 7")
    if g.n and mad_exact(g).value > Fraction(4 * c, c + 2):
        warnings.warn(f"mad exceeds 4c/(c+2) for c={c}", OutsideHypothesisWarning, stacklevel=2)
    steps, graphs = _reduce(g, [lambda h: keylem_find(h, c)])
    cur = graphs[-1]
    gone = _deleted(steps)
    trace = PipelineTrace(steps, "empty", cur)
    if cur.m == 0:
        return _finish(g, graphs, steps, trace, _edgeless_base(g, c, gone))
    shaped = _color_subdivided_regular(cur, c, gone)
    if shaped is not None:
        trace.base_case = "subdivision_of_regular"
        base, refusal = shaped
        if refusal is not None:
            return PipelineResult(None, trace, refusal)
        return _finish(g, graphs, steps, trace, base)
    trace.base_case = "fallback_exact_solver"
    return _finish(g, graphs, steps, trace, _fallback(cur, c, gone, "unexpected fixpoint shape"))


def pipeline_planar6(g: Graph) -> PipelineResult:
    """Odd 6-coloring of a planar graph of girth at least 5."""
    gi = girth(g)
    if gi is not None and gi < 5:
        warnings.warn(f"girth {gi} is below 5", OutsideHypothesisWarning, stacklevel=2)
    steps, graphs = _reduce(g, [struc_find, lambda h: keylem_find(h, 6)])
    cur = graphs[-1]
    gone = _deleted(steps)
    trace = PipelineTrace(steps, "empty", cur)
    if cur.m == 0:
        return _finish(g, graphs, steps, trace, _edgeless_base(g, 6, gone))
    trace.base_case = "fallback_exact_solver"
    return _finish(g, graphs, steps, trace, _fallback(cur, 6, gone, "not planar of girth 5?"))


def pipeline_sparse4(g: Graph) -> PipelineResult:
    """Odd 4-coloring of a graph with mad below 22/9 and no induced 5-cycle."""
    if g.n and density_decision(g, Fraction(22, 9)) is not None:
        warnings.warn("mad is at least 22/9", OutsideHypothesisWarning, stacklevel=2)
    if find_induced_c5(g) is not None:
        warnings.warn("graph has an induced 5-cycle", OutsideHypothesisWarning, stacklevel=2)
    steps, graphs = _reduce(g, [lambda h: rc5_find(h, strict=True), lambda h: thread_find(h, strict=True)])
    cur = graphs[-1]
    gone = _deleted(steps)
    trace = PipelineTrace(steps, "empty", cur)
    if cur.m == 0:
        return _finish(g, graphs, steps, trace, _edgeless_base(g, 4, gone))
    trace.base_case = "fallback_exact_solver"
    return _finish(g, graphs, steps, trace, _fallback(cur, 4, gone, "outside the sparse class"))
