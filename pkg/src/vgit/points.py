"""Ordered points on P^1 with one weighted point.

Configurations of ``n + 1`` points are recorded only by which points
coincide, since (semi)stability for the linearization ``O(t, 1, ..., 1)``
depends on nothing else: a configuration is semistable iff every cluster has
mass at most half the total mass, where index 0 weighs ``t`` and the others
weigh 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator


class Stability(str, enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"

    @property
    def semistable(self) -> bool:
        return self is not Stability.UNSTABLE


@dataclass(frozen=True)
class Configuration:
    n: int
    clusters: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n <= 2:
            raise ValueError("need n > 2")
        clusters = tuple(sorted((frozenset(c) for c in self.clusters), key=lambda c: sorted(c)))
        if any(not c for c in clusters):
            raise ValueError("clusters must be nonempty")
        seen: set[int] = set()
        for c in clusters:
            if seen & c:
                raise ValueError("clusters must be disjoint")
            seen |= c
        if seen != set(range(self.n + 1)):
            raise ValueError(f"clusters must cover 0..{self.n}")
        object.__setattr__(self, "clusters", clusters)

    @classmethod
    def of(cls, n: int, *clusters: Iterable[int]) -> "Configuration":
        """Build from the listed clusters; unlisted indices become singletons."""
        given = [frozenset(c) for c in clusters]
        used = set().union(*given) if given else set()
        rest = [frozenset({i}) for i in range(n + 1) if i not in used]
        return cls(n, tuple(given + rest))

    def mass(self, cluster: frozenset[int], t: Fraction) -> Fraction:
        return (t if 0 in cluster else 0) + len(cluster - {0})

    def permuted(self, perm: dict[int, int]) -> "Configuration":
        return Configuration(self.n, tuple(frozenset(perm.get(i, i) for i in c) for c in self.clusters))


def is_semistable(c: Configuration, t) -> Stability:
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    half = (t + c.n) / 2
    worst = max(c.mass(cl, t) for cl in c.clusters)
    if worst > half:
        return Stability.UNSTABLE
    if worst == half:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.STABLE


def walls_points(n: int) -> list[Fraction]:
    """Walls ``t0 = n - 2m > 0``, descending."""
    if n <= 2:
        raise ValueError("need n > 2")
    return [Fraction(n - 2 * m) for m in range(n // 2 + 1) if n - 2 * m > 0]


def chambers_points(n: int) -> list[tuple[Fraction, Fraction | None]]:
    """Open intervals between consecutive walls, from the top (unbounded) one down to 0."""
    walls = walls_points(n)
    bounds = [None] + walls + [Fraction(0)]
    return [(bounds[i + 1], bounds[i]) for i in range(len(bounds) - 1)]


@dataclass(frozen=True)
class WallDataPoints:
    n: int
    m: int
    t0: Fraction
    component_count: int
    normal_weights: tuple[int, ...]
    fiber_plus_dim: int  # fibre of X^+ mod G(+) over X^0 mod G(0)
    fiber_minus_dim: int
    stabilizer: str = "k*"

    @property
    def fibers(self) -> tuple[int, int]:
        """``(m - 1, n - m - 2)``: projective dimensions of the minus/plus fibres."""
        return (self.fiber_minus_dim, self.fiber_plus_dim)

    @property
    def minus_side_empty(self) -> bool:
        return self.fiber_minus_dim < 0


def wall_geometry(n: int, m: int) -> WallDataPoints:
    if n <= 2:
        raise ValueError("need n > 2")
    if not (0 <= m and 2 * m < n):
        raise ValueError(f"m={m} does not give a wall for n={n}")
    return WallDataPoints(
        n=n,
        m=m,
        t0=Fraction(n - 2 * m),
        component_count=comb(n, m),
        normal_weights=(-1,) * m + (1,) * (n - m - 1),
        fiber_plus_dim=n - m - 2,
        fiber_minus_dim=m - 1,
    )


def in_wall_zero_locus(c: Configuration, m: int) -> bool:
    """Two clusters, the one holding point 0 having exactly ``m + 1`` members."""
    if len(c.clusters) != 2:
        return False
    heavy = next(cl for cl in c.clusters if 0 in cl)
    return len(heavy) == m + 1


def wall_zero_patterns(n: int, m: int) -> list[Configuration]:
    """All ``C(n, m)`` configurations in ``X^0`` at the wall ``t0 = n - 2m``."""
    from itertools import combinations

    out = []
    for chosen in combinations(range(1, n + 1), m):
        a = frozenset((0,) + chosen)
        out.append(Configuration(n, (a, frozenset(range(n + 1)) - a)))
    return out


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def all_configurations(n: int) -> Iterator[Configuration]:
    for part in set_partitions(list(range(n + 1))):
        yield Configuration(n, tuple(frozenset(b) for b in part))
