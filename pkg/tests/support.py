"""Shared helpers for the test-suite: random instance families and an
independent structural checker for reduction steps."""

from __future__ import annotations

import random

import networkx as nx

from oddcolor.coloring import Coloring, is_odd_coloring
from oddcolor.graph import Graph
from oddcolor.reductions import extend
from oddcolor.solver import find_odd_coloring


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n_max: int = 14) -> Graph:
    """Random forest-plus-chords skeleton whose edges are subdivided 0-3 times."""
    n = rng.randint(3, n_max)
    edges = set()
    for v in range(1, n):
        if rng.random() < 0.85:
            edges.add((rng.randrange(v), v))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    nxt, out = n, []
    for a, b in sorted(edges):
        k = rng.choice([0, 0, 1, 2, 3])
        chain = [a, *range(nxt, nxt + k), b]
        nxt += k
        out += list(zip(chain, chain[1:]))
    return Graph(nxt, out)


def random_spider(rng: random.Random) -> Graph:
    """A hub of degree 4-6 with arms of 1-3 subdivision vertices into a random core."""
    core = random_graph(rng, 8)
    d = rng.randint(4, 6)
    hub = core.n
    edges = list(core.edges())
    nxt = hub + 1
    for _ in range(d):
        k = rng.choice([1, 2, 2, 3])
        chain = [hub, *range(nxt, nxt + k), rng.randrange(core.n)]
        nxt += k
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def random_dense(rng: random.Random, n_max: int = 11) -> Graph:
    """Minimum degree at least 2, moderately dense: home of key-lemma configurations."""
    n = rng.randint(4, n_max)
    p = rng.uniform(0.25, 0.6)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    for v in range(n):
        while sum(1 for e in edges if v in e) < 2:
            w = rng.choice([x for x in range(n) if x != v])
            edges.add((min(v, w), max(v, w)))
    g = Graph(n, edges)
    if rng.random() < 0.5:
        # subdivide a few edges to create 2-vertices
        es = list(g.edges())
        pick = set(rng.sample(range(len(es)), k=min(len(es), rng.randint(1, 4))))
        out, nxt = [], n
        for i, (a, b) in enumerate(es):
            if i in pick:
                out += [(a, nxt), (nxt, b)]
                nxt += 1
            else:
                out.append((a, b))
        g = Graph(nxt, out)
    return g


def check_extension(g: Graph, step, c: int, budget: int = 500_000) -> bool | None:
    """Solve ``g - S`` exactly, extend, verify.  ``None`` if ``g - S`` has no odd c-coloring."""
    rest = g.delete_vertices(step.deletion_set)
    sol = find_odd_coloring(rest, c, budget=budget)
    if not sol.colorable:
        return None
    partial = Coloring(c, [None if v in step.deletion_set else k for v, k in enumerate(sol.witness.colors)])
    return is_odd_coloring(g, extend(g, step, partial))


# -- independent structural checker ------------------------------------------


def _deg(h: nx.Graph, v) -> int:
    return h.degree(v)


def _is_easy_strict(h: nx.Graph, v) -> bool:
    d = h.degree(v)
    return d >= 3 and (d % 2 == 1 or any(h.degree(w) == 2 for w in h[v]))


def _twos(h: nx.Graph, v) -> set:
    return {w for w in h[v] if h.degree(w) == 2}


def _far(h: nx.Graph, u, v):
    (x,) = [w for w in h[u] if w != v]
    return x


def _thread_count(h: nx.Graph, v, skip=()) -> int:
    """Neighbours ``u`` of ``v`` starting a 2-thread ``u x`` (x a 2-vertex not adjacent to v)."""
    n = 0
    for u in h[v]:
        if u in skip or h.degree(u) != 2:
            continue
        x = _far(h, u, v)
        if h.degree(x) == 2 and not h.has_edge(x, v):
            n += 1
    return n


def validate_step(g: Graph, step, c: int | None = None) -> None:
    """Raise ``AssertionError`` unless ``step`` matches its structural definition."""
    h = to_nx(g)
    S, a, kind = set(step.deletion_set), step.anchors, step.kind
    assert S and all(0 <= v < g.n for v in S)
    if kind in ("one_vertex", "rc5_i", "struc_i"):
        v = a["v"]
        assert h.degree(v) == 1 and S == {v} and h.has_edge(v, a["u"])
    elif kind in ("keylem", "struc_ii", "struc_iii", "struc_iv"):
        v = a["v"]
        d = h.degree(v)
        assert d >= 1 and (d % 2 == 1 or _twos(h, v))
        assert S == {v} | _twos(h, v)
        n2 = len(_twos(h, v))
        ne = sum(1 for w in h[v] if _is_easy_strict(h, w))
        if kind == "keylem":
            assert c is not None and 2 * d <= n2 + ne + c - 1
        elif kind == "struc_ii":
            assert d == 2 and n2 >= 1
        elif kind == "struc_iii":
            assert d == 3 and (n2 or ne)
        else:
            assert d == 4 and _is_easy_strict(h, v) and ne >= 2
    elif kind == "rc5_ii":
        cyc = a["cycle"]
        assert len(cyc) in (3, 4) and len(set(cyc)) == len(cyc)
        assert all(h.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        assert all(h.degree(w) == 2 for w in cyc[1:]) and S == set(cyc[1:])
    elif kind == "rc5_iii":
        # u1 == u2 is allowed: the 4-thread then closes a 5-cycle
        walk = [a["u1"], *a["v"], a["u2"]]
        assert len(set(a["v"])) == 4 and not {a["u1"], a["u2"]} & set(a["v"])
        assert all(h.has_edge(x, y) for x, y in zip(walk, walk[1:]))
        assert all(h.degree(w) == 2 for w in a["v"]) and S == set(a["v"])
    elif kind == "rc5_iv":
        walk = [a["u1"], a["v1"], a["v2"], a["u2"]]
        assert len(set(walk[:3])) == 3 and a["u2"] not in (a["v1"], a["v2"])
        assert all(h.has_edge(x, y) for x, y in zip(walk, walk[1:]))
        assert h.degree(a["u1"]) % 2 == 1 and h.degree(a["v1"]) == h.degree(a["v2"]) == 2
        assert S == {a["v1"], a["v2"]}
    elif kind == "rc5_v":
        v = a["v"]
        assert h.degree(v) == 3 and all(h.degree(u) == 2 for u in h[v])
        assert S == {v} | set(h[v])
        assert [_far(h, u, v) for u in a["u"]] == list(a["far"])
    elif kind == "thread_i":
        v = a["v"]
        d = h.degree(v)
        assert d >= 4 and all(h.degree(u) == 2 for u in h[v])
        assert _thread_count(h, v) >= d - 1
        assert set(a["u"]) == set(h[v])
        assert S == {v} | set(h[v]) | set(a["x"][1:])
        for u, x in zip(a["u"], a["x"]):
            assert x == _far(h, u, v)
    elif kind == "thread_ii":
        v = a["v"]
        d = h.degree(v)
        u1, x1, y1 = a["u"][0], a["x"][0], a["y"][0]
        assert d >= 4 and d % 2 == 0
        assert h.has_edge(v, u1) and h.has_edge(u1, x1) and h.has_edge(x1, y1)
        assert h.degree(u1) == h.degree(x1) == h.degree(y1) == 2
        assert a["z1"] == _far(h, y1, x1)
        n3 = sum(1 for w in h[v] if h.degree(w) >= 3)
        assert _thread_count(h, v, skip={u1}) >= d - 3 + min(n3, 1)
        thread_x = set()
        for u in h[v]:
            if h.degree(u) == 2:
                x = _far(h, u, v)
                if h.degree(x) == 2 and not h.has_edge(x, v):
                    thread_x.add(x)
        assert S == {v, y1} | _twos(h, v) | thread_x
    else:
        raise AssertionError(f"unknown kind {kind}")


# -- seeded instance families per configuration kind -------------------------


def plant_short_cycle(rng: random.Random, g: Graph) -> Graph:
    """Hang a 3- or 4-cycle of new 2-vertices off a random vertex of ``g``."""
    ell = rng.choice([3, 4])
    u = rng.randrange(g.n)
    new = list(range(g.n, g.n + ell - 1))
    ring = [u, *new, u]
    return Graph(g.n + ell - 1, list(g.edges()) + list(zip(ring, ring[1:])))


def _strict_thread(which: str):
    from oddcolor.reductions import threads

    at = threads._thread_i_at if which == "thread_i" else threads._thread_ii_at

    def find(g: Graph):
        for v in range(g.n):
            step = at(g, v)
            if step is not None and threads._SIDE_OK[which](g, step):
                return step
        return None

    return find


def instance_source(kind: str):
    """``(make_graph, find_step)`` for a kind; ``find_step`` may return ``None``."""
    from oddcolor.reductions import keylem_find, rc5, rc5_find

    if kind == "one_vertex":
        return random_graph, lambda g: keylem_find(g, 5)
    if kind.startswith("keylem"):
        c = int(kind.split("_c")[1])
        return random_dense, lambda g: keylem_find(g, c)
    if kind == "rc5_i":
        return random_graph, rc5_find
    if kind == "rc5_ii":
        return lambda rng: plant_short_cycle(rng, random_graph(rng, 10)), rc5.find_short_cycle
    if kind == "rc5_iii":
        return random_graph, lambda g: rc5.find_four_thread(g, True)
    if kind == "rc5_iv":
        return random_graph, lambda g: rc5.find_odd_vertex_two_thread(g, True)
    if kind == "rc5_v":
        return random_graph, lambda g: rc5.find_three_vertex_all_twos(g, True)
    if kind in ("thread_i", "thread_ii"):
        return random_spider, _strict_thread(kind)
    raise KeyError(kind)


SOUNDNESS_KINDS = (
    "one_vertex",
    "keylem_c5",
    "keylem_c6",
    "keylem_c7",
    "keylem_c8",
    "rc5_i",
    "rc5_ii",
    "rc5_iii",
    "rc5_iv",
    "rc5_v",
    "thread_i",
    "thread_ii",
)


def soundness_run(kind: str, count: int, seed: int, max_graphs: int = 200_000):
    """Extend ``count`` seeded instances of ``kind``; returns ``(passed, failed, skipped)``.

    Instances whose remainder has no odd coloring are skipped (nothing to extend).
    """
    make, find = instance_source(kind)
    want = kind.split("_c")[0]
    c = int(kind.split("_c")[1]) if kind.startswith("keylem") else (5 if kind == "one_vertex" else 4)
    rng = random.Random(seed)
    passed = failed = skipped = 0
    for _ in range(max_graphs):
        if passed + failed >= count:
            break
        g = make(rng)
        step = find(g)
        if step is None or step.kind != want:
            continue
        ok = check_extension(g, step, c)
        if ok is None:
            skipped += 1
        elif ok:
            passed += 1
        else:
            failed += 1
    return passed, failed, skipped
