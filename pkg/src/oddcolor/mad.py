"""Exact maximum average degree via minimum cuts.

All arithmetic is on integers and :class:`fractions.Fraction`; nothing here
touches floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MadCertificate:
    value: Fraction
    witness: frozenset[int]


def density(g: Graph, vertices) -> Fraction:
    """``2|E(G[S])| / |S|`` for a nonempty vertex set ``S``."""
    s = set(vertices)
    if not s:
        raise ValueError("density of an empty set is undefined")
    inside = sum(1 for u, v in g.edges() if u in s and v in s)
    return Fraction(2 * inside, len(s))


class _FlowNetwork:
    """Dinic max-flow on integer capacities."""

    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[u] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.size
            while True:
                pushed = self._augment(s, t, level, it)
                if not pushed:
                    break
                total += pushed
        return total

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS along the level graph; returns the bottleneck pushed
        stack = [s]
        edges: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                pushed = min(self.cap[e] for e in edges)
                for e in edges:
                    self.cap[e] -= pushed
                    self.cap[e ^ 1] += pushed
                return pushed
            advanced = False
            while it[u] < len(self.head[u]):
                e = self.head[u][it[u]]
                v = self.to[e]
                if self.cap[e] > 0 and level[v] == level[u] + 1:
                    stack.append(v)
                    edges.append(e)
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                stack.pop()
                if edges:
                    edges.pop()
                    it[stack[-1]] += 1
        return 0

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def _positive_closure(g: Graph, p: int, q: int) -> frozenset[int] | None:
    """Vertex set ``S`` maximising ``2q|E(S)| - p|S|`` if that maximum is positive.

    Selection network: source -> edge node (capacity ``2q``), edge node ->
    both endpoints (unbounded), vertex -> sink (capacity ``p``).  Choosing an
    edge forces its endpoints, so a closed set is a vertex set together with
    edges it spans, and its weight is ``2q|E| - p|V|``.  The best closure has
    weight ``2qm - mincut``; its vertices are the source side of a minimum cut.
    """
    n, m = g.n, g.m
    src, sink = n + m, n + m + 1
    net = _FlowNetwork(n + m + 2)
    unbounded = 2 * q * m + 1
    for i, (u, v) in enumerate(g.edges()):
        node = n + i
        net.add_edge(src, node, 2 * q)
        net.add_edge(node, u, unbounded)
        net.add_edge(node, v, unbounded)
    for v in range(n):
        net.add_edge(v, sink, p)
    cut = net.max_flow(src, sink)
    if cut >= 2 * q * m:
        return None
    side = net.source_side(src)
    return frozenset(v for v in range(n) if v in side)


def density_decision(g: Graph, t) -> frozenset[int] | None:
    """A nonempty ``S`` with ``2|E(G[S])|/|S| >= t``, or ``None`` if none exists.

    Densities of vertex sets are ``2a/b`` with ``b <= n``; any of them below
    ``t = p/q`` is at most ``t - 1/(qn)``.  So ``density >= t`` is the same
    as ``density > t - 1/(2qn)``, which the strict closure test decides.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    t = Fraction(t)
    if t <= 0:
        return frozenset(range(g.n))
    p, q = t.numerator, t.denominator
    # t' = (2pn - 1) / (2qn)
    s = _positive_closure(g, 2 * p * g.n - 1, 2 * q * g.n)
    if s is None:
        return None
    assert s and density(g, s) >= t
    return s


def _candidates(g: Graph) -> list[Fraction]:
    vals = {Fraction(0)}
    for b in range(1, g.n + 1):
        for a in range(0, min(g.m, b * (b - 1) // 2) + 1):
            vals.add(Fraction(2 * a, b))
    return sorted(vals)


def mad_exact(g: Graph) -> MadCertificate:
    """Maximum average degree with a witness vertex set attaining it.

    Binary search over the finite set of achievable values ``2a/b``; the
    decision oracle is monotone in the threshold.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.m == 0:
        return MadCertificate(Fraction(0), frozenset([0]))
    cands = _candidates(g)
    lo, hi = 0, len(cands) - 1  # cands[lo] is feasible
    best = frozenset(range(g.n))
    while lo < hi:
        mid = (lo + hi + 1) // 2
        s = density_decision(g, cands[mid])
        if s is None:
            hi = mid - 1
        else:
            lo, best = mid, s
    # cands[lo + 1] is infeasible, so the witness density is exactly cands[lo]
    value = density(g, best)
    assert value == cands[lo]
    return MadCertificate(value, best)


def mad_brute(g: Graph, max_n: int = 16) -> MadCertificate:
    """Exhaustive maximum over all nonempty vertex subsets."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > max_n:
        raise BudgetExceeded(f"mad_brute enumerates 2^{g.n} subsets; limit is n <= {max_n}")
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges()]
    best_val, best_mask = Fraction(-1), 0
    for mask in range(1, 1 << g.n):
        inside = sum(1 for em in edge_masks if em & mask == em)
        val = Fraction(2 * inside, bin(mask).count("1"))
        if val > best_val:
            best_val, best_mask = val, mask
    witness = frozenset(v for v in range(g.n) if best_mask >> v & 1)
    return MadCertificate(best_val, witness)
