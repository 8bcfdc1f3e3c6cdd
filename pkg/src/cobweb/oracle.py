"""Brute-force Möbius function, Whitney numbers and characteristic polynomial.

Nothing here uses a closed form.  Values come from the defining recursion

    mu(x, x) = 1,    mu(x, y) = -sum(mu(x, z) for x <= z < y)

evaluated in two ways:

* rank-aggregated: every level between x and y contributes ``F_s * mu_s``.
  Cheap, exact, but leans on rank-uniformity of mu.
* vertex-wise: every vertex is materialized and the sum runs over the order
  predicate itself.  Used on small posets to certify the aggregated tier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import DomainError, InconsistencyError, ResourceError
from .polynomial import IntPolynomial
from .poset import CobwebPoset, Vertex

__all__ = [
    "DEFAULT_MAX_INTERVAL",
    "MobiusTable",
    "WhitneyTable",
    "interval_size",
    "mobius_bruteforce",
    "mobius_vertexwise",
    "mobius_matrix",
    "mobius_table_bruteforce",
    "whitney_bruteforce",
    "charpoly_bruteforce",
]

DEFAULT_MAX_INTERVAL = 10**6

# vertex-exact certification is run automatically below these bounds
VERTEXWISE_MAX_N = 6
VERTEXWISE_MAX_LEVEL = 4


@dataclass(frozen=True)
class MobiusTable:
    poset_n: int
    mu_by_rank: Tuple[int, ...]
    raw: Optional[Dict[Vertex, int]] = None


@dataclass(frozen=True)
class WhitneyTable:
    n: int
    first_kind: Tuple[int, ...]
    second_kind: Tuple[int, ...]


def interval_size(p: CobwebPoset, x: Vertex, y: Vertex) -> int:
    """Number of elements of the closed interval ``[x, y]`` (0 if x is not <= y)."""
    if not p.less_than(x, y):
        return 0
    if x == y:
        return 1
    return 2 + sum(p.level_sizes[x.level + 1 : y.level])


def _check_cap(size: int, cap: int, what: str):
    if size > cap:
        raise ResourceError(f"{what} has {size} elements, over the cap of {cap}", cap=cap, required=size)


@lru_cache(maxsize=1024)
def _mu_along_levels(sizes: Tuple[int, ...]) -> Tuple[int, ...]:
    """mu(x, z) for z on each successive level above x.

    ``sizes[d]`` is the size of the d-th level above x's level (``sizes[0]`` is
    ignored: only x itself lies in [x, z] on its own level).
    """
    mu = [1]
    running = 1  # sum of mu(x, w) over all w strictly below the current level
    for d in range(1, len(sizes)):
        mu.append(-running)
        running += sizes[d] * mu[d]
    return tuple(mu)


def mobius_bruteforce(p: CobwebPoset, x: Vertex, y: Vertex, max_interval: int = DEFAULT_MAX_INTERVAL) -> int:
    """Exact ``mu(x, y)`` by the defining recursion over rank aggregates."""
    x, y = p.check(x), p.check(y)
    if not p.less_than(x, y):
        raise DomainError(f"mu({x}, {y}) undefined: {x} is not <= {y}")
    _check_cap(interval_size(p, x, y), max_interval, f"interval [{x}, {y}]")
    return _mu_along_levels(p.level_sizes[x.level : y.level + 1])[y.level - x.level]


def mobius_vertexwise(p: CobwebPoset, x: Optional[Vertex] = None) -> Dict[Vertex, int]:
    """``mu(x, y)`` for every ``y >= x`` (x defaults to the bottom), per vertex.

    Quadratic in the vertex count; the sum runs over the order predicate,
    never over level arithmetic.
    """
    x = p.bottom if x is None else p.check(x)
    up = [v for v in p.vertices() if p.less_than(x, v)]
    mu: Dict[Vertex, int] = {}
    for y in up:  # vertices() is a linear extension
        if y == x:
            mu[y] = 1
        else:
            mu[y] = -sum(m for z, m in mu.items() if p.less_than(z, y, strict=True))
    return mu


def mobius_matrix(p: CobwebPoset) -> Dict[Tuple[Vertex, Vertex], int]:
    """Full ``mu(x, y)`` over all comparable pairs.  Cubic; small posets only."""
    out = {}
    for x in p.vertices():
        for y, m in mobius_vertexwise(p, x).items():
            out[x, y] = m
    return out


def _small(p: CobwebPoset) -> bool:
    return p.n <= VERTEXWISE_MAX_N and max(p.level_sizes) <= VERTEXWISE_MAX_LEVEL


def mobius_table_bruteforce(
    p: CobwebPoset, max_interval: int = DEFAULT_MAX_INTERVAL, vertexwise: Optional[bool] = None
) -> MobiusTable:
    """``mu(0, x)`` for one representative per rank.

    With ``vertexwise`` (default: only for small posets) every vertex is also
    computed individually and rank-uniformity is checked exactly; a violation
    raises :class:`InconsistencyError`.
    """
    top = Vertex(p.n, 1)
    _check_cap(interval_size(p, p.bottom, top), max_interval, f"interval [0, {top}]")
    mu_by_rank = _mu_along_levels(p.level_sizes)
    raw = None
    if vertexwise if vertexwise is not None else _small(p):
        raw = mobius_vertexwise(p)
        for v, m in raw.items():
            if m != mu_by_rank[v.level]:
                raise InconsistencyError(
                    f"mu(0, {v}) = {m} differs from rank-{v.level} aggregate {mu_by_rank[v.level]}"
                )
    return MobiusTable(p.n, mu_by_rank, raw)


def whitney_bruteforce(p: CobwebPoset, max_interval: int = DEFAULT_MAX_INTERVAL, table: Optional[MobiusTable] = None) -> WhitneyTable:
    """Whitney numbers of both kinds by summing/counting over each rank."""
    table = table or mobius_table_bruteforce(p, max_interval)
    if table.raw is not None:
        first = [0] * (p.n + 1)
        second = [0] * (p.n + 1)
        for v, m in table.raw.items():
            first[v.level] += m
            second[v.level] += 1
    else:
        first = [size * m for size, m in zip(p.level_sizes, table.mu_by_rank)]
        second = list(p.level_sizes)
    return WhitneyTable(p.n, tuple(first), tuple(second))


def charpoly_bruteforce(p: CobwebPoset, max_interval: int = DEFAULT_MAX_INTERVAL) -> IntPolynomial:
    """``sum(mu(0, x) * t**(n - r(x)))`` over all vertices."""
    w = whitney_bruteforce(p, max_interval).first_kind
    return IntPolynomial(w[::-1])
