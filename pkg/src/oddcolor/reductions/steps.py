"""Reduction-step records and the bookkeeping shared by all extension recipes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..coloring import Coloring, odd_colors
from ..graph import Graph

KINDS = (
    "one_vertex",
    "keylem",
    "struc_i",
    "struc_ii",
    "struc_iii",
    "struc_iv",
    "rc5_i",
    "rc5_ii",
    "rc5_iii",
    "rc5_iv",
    "rc5_v",
    "thread_i",
    "thread_ii",
)


class RecipeStuck(RuntimeError):
    """An extension recipe ran out of colors: its preconditions did not hold."""


class DistinctnessViolated(RecipeStuck):
    pass


class ParityPreconditionViolated(RecipeStuck):
    pass


@dataclass(frozen=True)
class ReductionStep:
    """One reducible configuration: what to delete and the roles the recipe needs.

    ``anchors`` maps role names (``v``, ``u1``, ``x`` ...) to vertex ids or
    tuples of ids; ``None`` marks a role that does not exist for that index.
    """

    kind: str
    deletion_set: frozenset[int]
    anchors: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")
        if not self.deletion_set:
            raise ValueError("deletion set must be nonempty")

    def describe(self) -> str:
        parts = [f"kind={self.kind}", "S=" + ",".join(map(str, sorted(self.deletion_set)))]
        for role, val in self.anchors.items():
            if isinstance(val, tuple):
                val = ",".join("-" if x is None else str(x) for x in val)
            parts.append(f"{role}={val}")
        return " ".join(parts)


@dataclass
class PipelineTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    base_case: str = "empty"
    base_graph: Graph | None = None

    def to_text(self) -> str:
        out = [f"step {i} {s.describe()}" for i, s in enumerate(self.steps)]
        out.append(f"base_case {self.base_case}")
        return "\n".join(out) + "\n"


class Painter:
    """Mutable working copy of a partial coloring, as the recipes manipulate it.

    ``odd(w)`` plays the role of the fixed odd color of ``w``: the first
    query picks the smallest odd color, and later queries return the same
    color for as long as it stays odd.  Recipes always avoid ``odd(w)`` when
    coloring a neighbour of ``w``, so a chosen odd color normally survives.
    """

    def __init__(self, g: Graph, partial: Coloring, clear: Iterable[int] = ()):
        if len(partial) != g.n:
            raise ValueError("coloring size does not match the graph")
        self.g = g
        self.col = partial.copy()
        for v in clear:
            self.col[v] = None
        self._odd: dict[int, int] = {}

    @property
    def c(self) -> int:
        return self.col.c

    def __getitem__(self, v: int | None) -> int | None:
        return None if v is None else self.col[v]

    def odd(self, w: int | None) -> int | None:
        if w is None:
            return None
        current = odd_colors(self.g, self.col, w)
        kept = self._odd.get(w)
        if kept in current:
            return kept
        if not current:
            self._odd.pop(w, None)
            return None
        self._odd[w] = min(current)
        return self._odd[w]

    def avoid(self, v: int, forbidden: Iterable[int | None]) -> int:
        """Give ``v`` the smallest color outside ``forbidden`` (``None`` entries ignored)."""
        banned = {k for k in forbidden if k is not None}
        for k in range(1, self.c + 1):
            if k not in banned:
                self.col[v] = k
                return k
        raise RecipeStuck(f"no color left for vertex {v}: {sorted(banned)} all forbidden")

    def greedy(self, v: int) -> int:
        """Color avoiding ``phi(N(v)) | phi_o(N(v))``, which keeps every neighbour odd."""
        nb = self.g.adj[v]
        return self.avoid(v, [self[w] for w in nb] + [self.odd(w) for w in nb])

    def put(self, v: int, k: int) -> None:
        self.col[v] = k

    def uncolor(self, v: int) -> None:
        self.col[v] = None

    def coloring(self) -> Coloring:
        return self.col.copy()
