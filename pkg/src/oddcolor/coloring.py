"""Partial colorings and the odd-coloring checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph


class ColoringFormatError(ValueError):
    pass


@dataclass
class Coloring:
    """Assignment of colors ``1..c`` to some of the vertices of a graph.

    ``colors[v]`` is ``None`` while ``v`` is uncolored.
    """

    c: int
    colors: list[int | None] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("palette size must be positive")
        for v, col in enumerate(self.colors):
            if col is not None and not 1 <= col <= self.c:
                raise ValueError(f"vertex {v}: color {col} outside 1..{self.c}")

    @classmethod
    def empty(cls, n: int, c: int) -> Coloring:
        return cls(c, [None] * n)

    @classmethod
    def of(cls, c: int, colors: Sequence[int | None]) -> Coloring:
        return cls(c, list(colors))

    def __getitem__(self, v: int) -> int | None:
        return self.colors[v]

    def __setitem__(self, v: int, col: int | None) -> None:
        if col is not None and not 1 <= col <= self.c:
            raise ValueError(f"color {col} outside 1..{self.c}")
        self.colors[v] = col

    def __len__(self) -> int:
        return len(self.colors)

    def copy(self) -> Coloring:
        return Coloring(self.c, list(self.colors))

    def is_total(self) -> bool:
        return all(col is not None for col in self.colors)

    def uncolored(self) -> list[int]:
        return [v for v, col in enumerate(self.colors) if col is None]


def is_proper(g: Graph, col: Coloring) -> bool:
    """No edge with both ends colored alike; uncolored ends are ignored."""
    cs = col.colors
    return all(cs[u] is None or cs[u] != cs[v] for u, v in g.edges())


def odd_colors(g: Graph, col: Coloring, v: int) -> set[int]:
    """Colors appearing an odd number of times on the colored neighbours of ``v``."""
    counts = Counter(col.colors[w] for w in g.adj[v] if col.colors[w] is not None)
    return {k for k, cnt in counts.items() if cnt % 2}


def pick_odd_color(g: Graph, col: Coloring, v: int) -> int | None:
    """Smallest odd color of ``v``, or ``None`` if it has none."""
    odd = odd_colors(g, col, v)
    return min(odd) if odd else None


def is_odd_coloring(g: Graph, col: Coloring) -> bool:
    """Total, proper, and every vertex of positive degree has an odd color."""
    if len(col) != g.n or not col.is_total() or not is_proper(g, col):
        return False
    return all(g.degree(v) == 0 or odd_colors(g, col, v) for v in range(g.n))


# -- text format -------------------------------------------------------------


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    """Parse ``c`` followed by lines ``v color`` (``v -`` for uncolored)."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ColoringFormatError("missing palette-size line")
    try:
        c = int(lines[0])
    except ValueError:
        raise ColoringFormatError(f"bad palette size {lines[0]!r}") from None
    entries: dict[int, int | None] = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ColoringFormatError(f"expected 'v color', got {line!r}")
        try:
            v = int(parts[0])
            col = None if parts[1] == "-" else int(parts[1])
        except ValueError:
            raise ColoringFormatError(f"expected 'v color', got {line!r}") from None
        if v in entries:
            raise ColoringFormatError(f"vertex {v} listed twice")
        entries[v] = col
    size = len(entries) if n is None else n
    if sorted(entries) != list(range(size)):
        raise ColoringFormatError(f"expected exactly the vertices 0..{size - 1}")
    try:
        return Coloring(c, [entries[v] for v in range(size)])
    except ValueError as exc:
        raise ColoringFormatError(str(exc)) from None


def format_coloring(col: Coloring) -> str:
    out = [str(col.c)]
    out.extend(f"{v} {'-' if k is None else k}" for v, k in enumerate(col.colors))
    return "\n".join(out) + "\n"
