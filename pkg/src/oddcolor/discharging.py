"""Discharging audits on concrete graphs, with exact rational charges.

Three systems are implemented:

* ``audit_sec3``: vertex charge ``d(v)``; every 4+-vertex sends
  ``(c-2)/(c+2)`` to each 2-neighbour; threshold ``4c/(c+2)``.
* ``audit_sec4``: plane graphs of girth at least 5; vertex charge
  ``d(v) - 6``, face charge ``2d(f) - 6``, five face-to-vertex rules.
* ``audit_sec5``: vertex charge ``d(v)``; every 3+-vertex sends ``2/9`` to
  each close 2-vertex; threshold ``22/9``.

Plane embeddings are rotation systems.  Rotations are read as
counterclockwise neighbour orders, and faces are traced with the rule: from
dart ``(u, v)`` move to ``(v, w)`` where ``w`` follows ``u`` in the rotation
at ``v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .graph import Graph, close_map, girth, is_easy

Element = Union[int, str]


class EmbeddingError(ValueError):
    pass


class EulerViolated(EmbeddingError):
    pass


class GirthViolated(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    rotation: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> None:
        if len(self.rotation) != g.n:
            raise EmbeddingError(f"rotation lists {len(self.rotation)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)) or set(rot) != set(g.adj[v]):
                raise EmbeddingError(f"rotation at {v} is not a cyclic order of its neighbours")


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    def corners(self):
        """Triples ``(x, v, z)`` of consecutive walk vertices, one per occurrence of ``v``."""
        b, k = self.boundary, len(self.boundary)
        return [(b[i - 1], b[i], b[(i + 1) % k]) for i in range(k)]


def parse_embedding(text: str, n: int | None = None) -> Embedding:
    """Read lines ``v: n1 n2 ...``; blank lines and ``#`` comments are skipped."""
    rows: dict[int, tuple[int, ...]] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        try:
            v = int(head)
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError:
            raise EmbeddingError(f"line {no}: expected 'v: n1 n2 ...', got {raw!r}") from None
        if not sep or v in rows or v < 0:
            raise EmbeddingError(f"line {no}: bad or repeated vertex entry {raw!r}")
        rows[v] = nbrs
    size = n if n is not None else (max(rows) + 1 if rows else 0)
    if any(v >= size for v in rows):
        raise EmbeddingError("vertex id out of range")
    return Embedding(tuple(rows.get(v, ()) for v in range(size)))


def format_embedding(emb: Embedding) -> str:
    return "".join(f"{v}:" + "".join(f" {w}" for w in rot) + "\n" for v, rot in enumerate(emb.rotation))


def embedding_from_coordinates(g: Graph, coords: Sequence[tuple[float, float]]) -> Embedding:
    """Counterclockwise neighbour order of a straight-line drawing."""

    def angle(v: int, w: int) -> float:
        return math.atan2(coords[w][1] - coords[v][1], coords[w][0] - coords[v][0])

    return Embedding(tuple(tuple(sorted(g.adj[v], key=lambda w: angle(v, w))) for v in range(g.n)))


def cycle_embedding(n: int) -> Embedding:
    return Embedding(tuple(((i - 1) % n, (i + 1) % n) for i in range(n)))


def hk_embedding(k: int) -> Embedding:
    """The petals of ``hk(k)`` side by side around the hub."""
    hub = tuple(w for i in range(k) for w in (4 * i + 1, 4 * i + 4))
    rot = [hub]
    for i in range(k):
        ring = [0, 4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4, 0]
        rot += [(ring[j - 1], ring[j + 1]) for j in range(1, 5)]
    return Embedding(tuple(rot))


def named_embedding(name: str, param: int | None = None) -> Embedding:
    """A plane embedding of a named generator graph, where one is built in."""
    from . import generators as gen

    if name == "cycle":
        return cycle_embedding(param)
    if name == "hk":
        return hk_embedding(param)
    if name == "dodecahedron":
        return embedding_from_coordinates(gen.dodecahedron(), gen.dodecahedron_coordinates())
    if name in ("path", "star"):
        g = gen.named(name, param)
        if name == "path":
            coords = [(float(i), 0.0) for i in range(g.n)]
        else:
            coords = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / param), math.sin(2 * math.pi * i / param)) for i in range(param)]
        return embedding_from_coordinates(g, coords)
    if name == "complete" and param is not None and param <= 4:
        pts = [(0.0, 0.0), (4.0, 0.0), (2.0, 3.0), (2.0, 1.0)][:param]
        return embedding_from_coordinates(gen.complete(param), pts)
    raise EmbeddingError(f"no built-in plane embedding for {name!r}")


def faces(g: Graph, emb: Embedding) -> list[Face]:
    """Face boundary walks of a connected plane graph, checked against Euler's formula."""
    emb.validate(g)
    if not g.is_connected():
        raise EmbeddingError("face tracing needs a connected graph")
    if g.m == 0:
        found = [Face(())] if g.n else []
    else:
        pos = [{w: i for i, w in enumerate(rot)} for rot in emb.rotation]
        used: set[tuple[int, int]] = set()
        found = []
        for u, v in sorted([(a, b) for a, b in g.edges()] + [(b, a) for a, b in g.edges()]):
            if (u, v) in used:
                continue
            walk = []
            dart = (u, v)
            while dart not in used:
                used.add(dart)
                a, b = dart
                walk.append(a)
                rot = emb.rotation[b]
                dart = (b, rot[(pos[b][a] + 1) % len(rot)])
            if dart != (u, v):
                raise EmbeddingError("face walk did not close on its first dart")
            found.append(Face(tuple(walk)))
    if g.n - g.m + len(found) != 2 and g.n:
        raise EulerViolated(f"n - m + f = {g.n} - {g.m} + {len(found)} != 2; embedding is not plane")
    return found


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str


@dataclass
class ChargeReport:
    initial: dict[Element, Fraction]
    final: dict[Element, Fraction] = field(default_factory=dict)
    transfers: list[Transfer] = field(default_factory=list)
    threshold: Fraction | None = None
    faces: list[Face] = field(default_factory=list)

    def send(self, source: Element, target: Element, amount: Fraction, rule: str) -> None:
        if amount:
            self.transfers.append(Transfer(source, target, Fraction(amount), rule))

    def settle(self) -> ChargeReport:
        final = dict(self.initial)
        for t in self.transfers:
            final[t.source] -= t.amount
            final[t.target] += t.amount
        self.final = final
        return self

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    @property
    def deficient(self) -> list[int]:
        """Vertices whose final charge is below the threshold."""
        if self.threshold is None:
            return []
        return [z for z, q in self.final.items() if isinstance(z, int) and q < self.threshold]

    def to_text(self) -> str:
        out = []
        for z in self.initial:
            out.append(f"charge {z} initial={self.initial[z]} final={self.final[z]}")
        for t in self.transfers:
            out.append(f"transfer {t.source} -> {t.target} amount={t.amount} rule={t.rule}")
        out.append(f"total_initial {self.total_initial}")
        out.append(f"total_final {self.total_final}")
        if self.threshold is not None:
            out.append(f"threshold {self.threshold}")
            out.append("deficient " + ",".join(map(str, self.deficient)))
        return "\n".join(out) + "\n"


def audit_sec3(g: Graph, c: int) -> ChargeReport:
    if c < 7:
        raise ValueError("this discharging system is for c >= 7")
    rep = ChargeReport({v: Fraction(g.degree(v)) for v in range(g.n)}, threshold=Fraction(4 * c, c + 2))
    share = Fraction(c - 2, c + 2)
    for v in range(g.n):
        if g.degree(v) >= 4:
            for w in g.adj[v]:
                if g.degree(w) == 2:
                    rep.send(v, w, share, "R1")
    return rep.settle()


def audit_sec5(g: Graph) -> ChargeReport:
    rep = ChargeReport({v: Fraction(g.degree(v)) for v in range(g.n)}, threshold=Fraction(22, 9))
    for v, close in close_map(g).items():
        for w in sorted(close):
            rep.send(v, w, Fraction(2, 9), "R1")
    return rep.settle()


def face_kind(g: Graph, f: Face) -> str:
    """``bad`` or ``good`` for 5-faces (with / without a 2-vertex), ``big`` for 6+-faces."""
    if f.degree == 5:
        return "bad" if any(g.degree(v) == 2 for v in f.boundary) else "good"
    return "big" if f.degree >= 6 else "small"


def audit_sec4(g: Graph, emb: Embedding) -> ChargeReport:
    """Face and vertex charges of a connected plane graph of girth at least 5.

    Face rules apply once per occurrence of a vertex on the boundary walk;
    the "exactly one 2-vertex" test of the bad-face rule counts distinct
    vertices.
    """
    gi = girth(g)
    if gi is not None and gi < 5:
        raise GirthViolated(f"girth is {gi}, need at least 5")
    fs = faces(g, emb)
    half = Fraction(1, 2)
    initial: dict[Element, Fraction] = {v: Fraction(g.degree(v) - 6) for v in range(g.n)}
    for i, f in enumerate(fs):
        initial[f"f{i}"] = Fraction(2 * f.degree - 6)
    rep = ChargeReport(initial, faces=fs)
    deg = g.degree
    for i, f in enumerate(fs):
        name = f"f{i}"
        kind = face_kind(g, f)
        twos = {v for v in f.boundary if deg(v) == 2}
        for x, v, z in f.corners():
            d = deg(v)
            if d == 2:
                rep.send(name, v, Fraction(2), "R1")
            elif d == 3:
                rep.send(name, v, Fraction(1), "R2")
            elif d >= 4:
                if kind == "bad" and len(twos) == 1 and (deg(x) >= 4 or deg(z) >= 4):
                    rep.send(name, v, half, "R3")
                elif kind == "good":
                    rep.send(name, v, Fraction(1) if d == 4 and is_easy(g, v) else half, "R4")
                elif kind == "big":
                    others = {x, z} - {w for w in g.adj[v] if deg(w) == 2}
                    rep.send(name, v, half * len(others), "R5")
    return rep.settle()
