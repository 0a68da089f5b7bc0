"""Fixed and (semi)stable loci of k*-actions, limits, and wall-crossing data.

A closed locus is recorded by the set of generators (coordinates, for a
polynomial ring) forced to vanish. For a semigroup ring this is the locus of
the monomial ideal those generators span: every monomial of negative weight
is divisible by a generator of negative weight, so ``<R_i : i < 0>`` is
generated by such generators.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class LimitError(ValueError):
    pass


@dataclass(frozen=True)
class CoordinateLocus:
    """``V(x_i : i in zero_set)``; the empty zero set is all of ``X``."""

    zero_set: frozenset[int]
    ambient: int

    def contains(self, support: Iterable[int]) -> bool:
        """A point with the given support (nonzero coordinates) lies here."""
        return self.zero_set.isdisjoint(support)

    @property
    def codim(self) -> int:
        return len(self.zero_set)

    def __and__(self, other: "CoordinateLocus") -> "CoordinateLocus":
        return CoordinateLocus(self.zero_set | other.zero_set, self.ambient)


@dataclass(frozen=True)
class OpenLocus:
    """``X`` minus the union of ``removed``."""

    removed: tuple[CoordinateLocus, ...]
    ambient: int

    def contains(self, support: Iterable[int]) -> bool:
        support = frozenset(support)
        return not any(c.contains(support) for c in self.removed)

    def key(self) -> frozenset:
        # minimal zero sets determine the union of coordinate subspaces
        sets = {c.zero_set for c in self.removed}
        return frozenset(s for s in sets if not any(t < s for t in sets))

    def __and__(self, other: "OpenLocus") -> "OpenLocus":
        return OpenLocus(self.removed + other.removed, self.ambient)

    def __eq__(self, other):
        return isinstance(other, OpenLocus) and self.ambient == other.ambient and self.key() == other.key()

    def __hash__(self):
        return hash((self.key(), self.ambient))


def fixed_loci(weights: Sequence[int]) -> tuple[CoordinateLocus, CoordinateLocus, CoordinateLocus]:
    """``(X^+, X^-, X^0)``: negative, positive, and all nonzero weights vanish respectively."""
    r = len(weights)
    plus = CoordinateLocus(frozenset(i for i, w in enumerate(weights) if w < 0), r)
    minus = CoordinateLocus(frozenset(i for i, w in enumerate(weights) if w > 0), r)
    zero = CoordinateLocus(frozenset(i for i, w in enumerate(weights) if w != 0), r)
    return plus, minus, zero


@dataclass(frozen=True)
class SemistableLoci:
    ss_zero: OpenLocus
    s_zero: OpenLocus
    ss_plus: OpenLocus
    ss_minus: OpenLocus

    @property
    def s_plus(self) -> OpenLocus:
        return self.ss_plus

    @property
    def s_minus(self) -> OpenLocus:
        return self.ss_minus


def semistable_loci(weights: Sequence[int]) -> SemistableLoci:
    plus, minus, _ = fixed_loci(weights)
    r = len(weights)
    loci = SemistableLoci(
        ss_zero=OpenLocus((), r),
        s_zero=OpenLocus((plus, minus), r),
        ss_plus=OpenLocus((minus,), r),
        ss_minus=OpenLocus((plus,), r),
    )
    assert loci.ss_plus & loci.ss_minus == loci.s_zero
    return loci


def limit_point(support: Iterable[int], weights: Sequence[int], direction: str) -> frozenset[int]:
    """Support of ``lim λ^{±1} · x`` as ``λ -> 0``."""
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    support = frozenset(support)
    sgn = 1 if direction == "+" else -1
    bad = sorted(i for i in support if sgn * weights[i] < 0)
    if bad:
        raise LimitError(f"limit does not exist: coordinates {bad} diverge")
    return frozenset(i for i in support if weights[i] == 0)


@dataclass(frozen=True)
class WeightedProjectiveSpace:
    weights: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @property
    def is_empty(self) -> bool:
        return not self.weights

    @property
    def is_projective_space(self) -> bool:
        return len(set(self.weights)) <= 1

    def __str__(self):
        if not self.weights:
            return "P^-1 (empty)"
        if self.is_projective_space:
            return f"P^{self.dim}"
        return self.weighted()

    def weighted(self) -> str:
        """Weighted notation, with the plain projective space appended when they agree."""
        if not self.weights:
            return "P^-1 (empty)"
        text = "P(" + ",".join(map(str, self.weights)) + ")"
        return f"{text} = P^{self.dim}" if self.is_projective_space else text


@dataclass(frozen=True)
class CrossingReport:
    codim_plus: int
    codim_minus: int
    flip: bool
    weights_plus: tuple[int, ...]
    weights_minus: tuple[int, ...]
    fiber_plus: WeightedProjectiveSpace
    fiber_minus: WeightedProjectiveSpace
    quasi_free: int | None
    degenerate: bool = False
    plus_empty: bool = False
    minus_empty: bool = False
    summary: str = ""


def classify_crossing(weights: Sequence[int]) -> CrossingReport:
    """Crossing data for the linear action with the given coordinate weights."""
    pos = tuple(sorted(w for w in weights if w > 0))
    neg = tuple(sorted((w for w in weights if w < 0), reverse=True))
    degenerate = not pos and not neg
    codim_plus, codim_minus = len(neg), len(pos)
    fiber_plus = WeightedProjectiveSpace(pos)
    fiber_minus = WeightedProjectiveSpace(tuple(-w for w in neg))
    magnitudes = Counter(abs(w) for w in pos + neg)
    quasi_free = next(iter(magnitudes)) if len(magnitudes) == 1 else None
    plus_empty, minus_empty = not pos, not neg
    if degenerate:
        summary = "trivial action: all three quotients equal X"
    elif minus_empty:
        summary = f"X mod - is empty; X mod + -> X mod 0 is the fibration with fibre {fiber_plus.weighted()}"
    elif plus_empty:
        summary = f"X mod + is empty; X mod - -> X mod 0 is the fibration with fibre {fiber_minus.weighted()}"
    else:
        kind = "flip" if codim_plus >= 2 and codim_minus >= 2 else "divisorial (not a flip)"
        summary = f"{kind}: fibres {fiber_plus} over X^0 on the + side, {fiber_minus} on the - side"
    return CrossingReport(
        codim_plus=codim_plus,
        codim_minus=codim_minus,
        flip=codim_plus >= 2 and codim_minus >= 2,
        weights_plus=pos,
        weights_minus=neg,
        fiber_plus=fiber_plus,
        fiber_minus=fiber_minus,
        quasi_free=None if degenerate else quasi_free,
        degenerate=degenerate,
        plus_empty=plus_empty,
        minus_empty=minus_empty,
        summary=summary,
    )
