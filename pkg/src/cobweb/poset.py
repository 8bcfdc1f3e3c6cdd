"""Finite cobweb subposets P_n.

Level ``s`` is an antichain of ``F_s`` vertices ``<j, s>`` (``1 <= j <= F_s``)
and every vertex of level ``s`` lies below every vertex of every higher
level.  Vertices are virtual: only the level sizes are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Tuple

from .errors import DomainError, RangeError, ResourceError
from .sequence import SequenceSpec, render, values

__all__ = ["Vertex", "CobwebPoset", "build", "export_dot", "DEFAULT_MAX_VERTICES"]

DEFAULT_MAX_VERTICES = 10_000


class Vertex(NamedTuple):
    level: int
    position: int

    def __str__(self):
        return f"<{self.position},{self.level}>"


@dataclass(frozen=True)
class CobwebPoset:
    spec: SequenceSpec
    n: int
    level_sizes: Tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.level_sizes) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} level sizes, got {len(self.level_sizes)}")
        if self.level_sizes[0] != 1:
            raise DomainError(f"level 0 must hold exactly one vertex, got {self.level_sizes[0]}")
        for s, size in enumerate(self.level_sizes):
            if size < 1:
                raise DomainError(f"level {s} of {render(self.spec)} is empty")

    @property
    def vertex_count(self) -> int:
        return sum(self.level_sizes)

    @property
    def length(self) -> int:
        return self.n

    @property
    def bottom(self) -> Vertex:
        return Vertex(0, 1)

    def check(self, x: Vertex) -> Vertex:
        level, position = x
        if not 0 <= level <= self.n:
            raise RangeError(f"vertex {x} has level outside 0..{self.n}")
        if not 1 <= position <= self.level_sizes[level]:
            raise RangeError(f"vertex {x} has position outside 1..{self.level_sizes[level]}")
        return Vertex(level, position)

    def rank(self, x: Vertex) -> int:
        return self.check(x).level

    def level(self, s: int) -> Iterator[Vertex]:
        if not 0 <= s <= self.n:
            raise RangeError(f"level {s} outside 0..{self.n}")
        return (Vertex(s, j) for j in range(1, self.level_sizes[s] + 1))

    def vertices(self) -> Iterator[Vertex]:
        """All vertices, levels ascending then positions ascending."""
        for s in range(self.n + 1):
            yield from self.level(s)

    def less_than(self, x: Vertex, y: Vertex, *, strict: bool = False) -> bool:
        """``x <= y`` (or ``x < y`` with ``strict=True``).

        Distinct vertices on the same level are incomparable.
        """
        x, y = self.check(x), self.check(y)
        if strict:
            return x.level < y.level
        return x.level < y.level or x == y

    def covers(self, x: Vertex, y: Vertex) -> bool:
        """True iff ``y`` covers ``x``, i.e. y sits on the next level up."""
        x, y = self.check(x), self.check(y)
        return y.level == x.level + 1

    def cover_pairs(self) -> Iterator[Tuple[Vertex, Vertex]]:
        for s in range(self.n):
            for x in self.level(s):
                for y in self.level(s + 1):
                    yield x, y

    def cover_count(self) -> int:
        sizes = self.level_sizes
        return sum(sizes[s] * sizes[s + 1] for s in range(self.n))

    def strict_down_set_size(self, x: Vertex) -> int:
        """Size of ``{z : z < x}``."""
        return sum(self.level_sizes[: self.rank(x)])


def build(spec: SequenceSpec, n: int) -> CobwebPoset:
    """Materialize P_n (levels 0..n) for ``spec``."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return CobwebPoset(spec, n, tuple(values(spec, n)))


def _node(v: Vertex) -> str:
    return f"v_{v.level}_{v.position}"


def export_dot(p: CobwebPoset, max_vertices: int = DEFAULT_MAX_VERTICES) -> str:
    """Render the Hasse diagram as Graphviz DOT.

    Nodes are named ``v_<level>_<position>``, one ``rank=same`` group per level,
    arcs point upward.  Output is byte-deterministic.
    """
    if p.vertex_count > max_vertices:
        raise ResourceError(
            f"P_{p.n} of {render(p.spec)} has {p.vertex_count} vertices, over the cap of {max_vertices}",
            cap=max_vertices,
            required=p.vertex_count,
        )
    lines = [
        "digraph cobweb {",
        f'  label="P_{p.n} for {render(p.spec)}";',
        "  rankdir=BT;",
        "  node [shape=circle];",
    ]
    for s in range(p.n + 1):
        nodes = " ".join(f'{_node(v)} [label="{v.position},{v.level}"];' for v in p.level(s))
        lines.append(f"  {{ rank=same; {nodes} }}")
    for x, y in p.cover_pairs():
        lines.append(f"  {_node(x)} -> {_node(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
