"""Simple undirected graphs on dense integer vertex ids, plus structural queries.

Vertices are ``0..n-1``.  A :class:`Graph` is immutable; every operation that
"changes" a graph returns a new one.  Deleting vertices keeps the id space
intact: deleted vertices stay behind as isolated placeholders, which lets
reduction steps refer to the same ids before and after a deletion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Base class for edge-list parse errors."""


class MalformedLineError(GraphFormatError):
    pass


class VertexOutOfRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class ContractionError(ValueError):
    """Raised when threads cannot be suppressed into a simple base graph."""


class ThreadCycleError(ContractionError):
    pass


class MultiEdgeError(ContractionError):
    pass


class Graph:
    """Immutable simple graph with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "m", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._adjsets = tuple(frozenset(s) for s in nbrs)
        self.m = sum(len(s) for s in nbrs) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, ascending."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def delete_vertices(self, removed: Iterable[int]) -> Graph:
        """``G - S`` with ids preserved: vertices in ``removed`` become isolated."""
        gone = set(removed)
        return Graph(self.n, ((u, v) for u, v in self.edges() if u not in gone and v not in gone))

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Relabelled induced subgraph and the list mapping new ids to old ones."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(order), edges), order

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedLineError("missing header line 'n m'")
    no, header = lines[0]
    n, m = _two_ints(no, header)
    if n < 0 or m < 0:
        raise MalformedLineError(f"line {no}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise MalformedLineError(f"header announces {m} edges, found {len(body)} edge lines")
    seen: set[tuple[int, int]] = set()
    edges = []
    for no, line in body:
        u, v = _two_ints(no, line)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"line {no}: vertex out of range 0..{n - 1}: {line!r}")
        if u == v:
            raise SelfLoopError(f"line {no}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"line {no}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _two_ints(no: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLineError(f"line {no}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(f"line {no}: expected two integers, got {line!r}") from None


def format_graph(g: Graph) -> str:
    """Canonical edge list: header then sorted ``u v`` lines with ``u < v``."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- structural queries ------------------------------------------------------


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests.

    One BFS per root; every non-tree edge ``(u, w)`` closes a walk of length
    ``dist[u] + dist[w] + 1`` through the root, and the minimum over all roots
    is attained by a shortest cycle.
    """
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def find_induced_c5(g: Graph) -> tuple[int, ...] | None:
    """Lexicographically least induced 5-cycle ``(a, b, c, d, e)`` in cycle order.

    ``a`` is the smallest vertex of the cycle and ``b < e``.
    """
    adj = g._adjsets
    for a in range(g.n):
        for b in g.adj[a]:
            if b < a:
                continue
            for c in g.adj[b]:
                if c <= a or c in adj[a]:
                    continue
                for d in g.adj[c]:
                    if d <= a or d in adj[a] or d in adj[b]:
                        continue
                    for e in g.adj[d]:
                        if e <= b or e not in adj[a] or e in adj[b] or e in adj[c]:
                            continue
                        return (a, b, c, d, e)
    return None


@dataclass(frozen=True)
class ThreadWitness:
    path: tuple[int, ...]
    endpoints_attach: tuple[int, ...]


def find_k_thread(g: Graph, k: int) -> ThreadWitness | None:
    """A path of ``k`` degree-2 vertices, lexicographically least, or ``None``."""
    if k < 1:
        raise ValueError("k must be positive")
    for start in range(g.n):
        if g.degree(start) != 2:
            continue
        for first in g.adj[start]:
            path = [start]
            prev, cur = start, first
            while len(path) < k and g.degree(cur) == 2 and cur not in path:
                path.append(cur)
                prev, cur = cur, _other(g, cur, prev)
            if len(path) == k:
                return ThreadWitness(tuple(path), _attachments(g, path))
    return None


def _other(g: Graph, v: int, u: int) -> int:
    """The neighbour of the 2-vertex ``v`` that is not ``u``."""
    a, b = g.adj[v]
    return b if a == u else a


def _attachments(g: Graph, path: Sequence[int]) -> tuple[int, ...]:
    inside = set(path)
    ends = [path[0]] if len(path) == 1 else [path[0], path[-1]]
    out = []
    for end in ends:
        out.extend(w for w in g.adj[end] if w not in inside)
    return tuple(out)


@dataclass(frozen=True)
class EasyInfo:
    is_easy: bool
    n2: int
    ne: int


def is_easy(g: Graph, v: int) -> bool:
    """A 3+-vertex with odd degree or a 2-neighbour."""
    d = g.degree(v)
    if d < 3:
        return False
    return d % 2 == 1 or any(g.degree(w) == 2 for w in g.adj[v])


def classify_easy(g: Graph, v: int) -> EasyInfo:
    n2 = sum(1 for w in g.adj[v] if g.degree(w) == 2)
    ne = sum(1 for w in g.adj[v] if is_easy(g, w))
    return EasyInfo(is_easy(g, v), n2, ne)


def maximal_threads(g: Graph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Maximal paths of 2-vertices with the (up to two) vertices they hang from.

    Cycles made entirely of 2-vertices are reported with an empty attachment
    tuple.  Each thread is listed once, oriented from its smallest end.
    """
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen or g.degree(s) != 2:
            continue
        a, b = g.adj[s]
        left, left_end = _walk_thread(g, s, a)
        if left_end == s:
            cycle = [s] + left
            seen.update(cycle)
            out.append((tuple(cycle), ()))
            continue
        right, right_end = _walk_thread(g, s, b)
        path = left[::-1] + [s] + right
        seen.update(path)
        ends = (left_end, right_end)
        if path[-1] < path[0]:
            path.reverse()
            ends = (right_end, left_end)
        out.append((tuple(path), ends))
    return out


def _walk_thread(g: Graph, s: int, first: int) -> tuple[list[int], int]:
    """2-vertices met walking from ``s`` through ``first``, and where the walk stops."""
    path = []
    prev, cur = s, first
    while cur != s and g.degree(cur) == 2:
        path.append(cur)
        prev, cur = cur, _other(g, cur, prev)
    return path, cur


def close_map(g: Graph) -> dict[int, frozenset[int]]:
    """Sponsor relation: each 3+-vertex mapped to its close 2-vertices.

    Only vertices with at least one close 2-vertex appear.
    """
    close: dict[int, set[int]] = {}
    for path, ends in maximal_threads(g):
        for end in ends:
            if g.degree(end) >= 3:
                close.setdefault(end, set()).update(path)
    return {v: frozenset(s) for v, s in sorted(close.items())}


@dataclass(frozen=True)
class Contraction:
    base: Graph
    vertex_map: tuple[int, ...]
    thread_of_edge: dict[tuple[int, int], tuple[int, ...]]


def contract_threads(g: Graph) -> Contraction:
    """Suppress every 2-vertex, replacing each maximal thread by one edge.

    The base graph is relabelled onto the non-2-vertices in increasing order;
    ``vertex_map[i]`` is the original id of base vertex ``i``.  Suppressed
    paths are keyed by base edge and listed from the lower endpoint.
    """
    if any(d == 1 for d in g.degrees()):
        raise ContractionError("graph has a 1-vertex")
    keep = [v for v in range(g.n) if g.degree(v) != 2]
    index = {v: i for i, v in enumerate(keep)}
    edges: set[tuple[int, int]] = set()
    threads: dict[tuple[int, int], tuple[int, ...]] = {}

    def add(a: int, b: int, path: tuple[int, ...]) -> None:
        if a == b:
            raise MultiEdgeError(f"thread {path} would become a loop at {a}")
        key = (min(index[a], index[b]), max(index[a], index[b]))
        if key in edges:
            raise MultiEdgeError(f"parallel edges between {a} and {b}")
        edges.add(key)
        if path:
            threads[key] = path if index[a] < index[b] else tuple(reversed(path))

    for u, v in g.edges():
        if g.degree(u) != 2 and g.degree(v) != 2:
            add(u, v, ())
    for path, ends in maximal_threads(g):
        if not ends:
            raise ThreadCycleError(f"cycle of 2-vertices {path}")
        add(ends[0], ends[1], path)
    return Contraction(Graph(len(keep), edges), tuple(keep), threads)
