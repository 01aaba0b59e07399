"""Weight schemes and continued-fraction expansion of path census series.

A weight scheme assigns to every step of a colored Motzkin path a marker
polynomial: ``down(h)`` is the total weight of a down step falling from
height h, and the level weight at height h splits into fixed, upper-bounce
and lower-bounce parts.  Summing the product of step weights over all paths
of length n gives the census polynomial of the permutation class the scheme
describes, and that generating function is exactly the continued fraction

    1 / (1 - level(0) z - down(1) z^2 / (1 - level(1) z - down(2) z^2 / ...))

Schemes with ``elevated=True`` count paths whose interior stays strictly
above height 0 (plus the single length-1 level path), and expand as

    level(0) z + down(1) z^2 / (1 - level(1) z - down(2) z^2 / ...)

Evaluation is bottom-up at finite depth; a tail level deeper than half the
truncation order cannot influence the kept coefficients, so the result is
exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .polys import MultiPoly
from .series import Series


def default_depth(order: int) -> int:
    """Deepest level that can affect coefficients up to z**order."""
    return (order + 1) // 2


def _level_tail(
    dee: Callable[[int], object],
    ell: Callable[[int], object],
    order: int,
    ring: str,
    lo: int,
    hi: int,
) -> Series:
    """The tail fraction anchored at level lo, using levels lo..hi."""
    one = Series.one(ring, order)
    tail: Series | None = None
    for m in range(hi, lo - 1, -1):
        denom = one - one.scale(ell(m)).shift(1)
        if tail is not None:
            denom = denom - tail.scale(dee(m + 1)).shift(2)
        tail = denom.recip()
    assert tail is not None
    return tail


def jfraction_series(
    dee: Callable[[int], object],
    ell: Callable[[int], object],
    order: int,
    ring: str = "poly",
    depth: int | None = None,
) -> Series:
    """Grounded-path census series from level weights ell and fall weights dee."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if depth is None:
        depth = default_depth(order)
    return _level_tail(dee, ell, order, ring, 0, depth)


def kfraction_series(
    dee: Callable[[int], object],
    ell: Callable[[int], object],
    order: int,
    ring: str = "poly",
    depth: int | None = None,
) -> Series:
    """Elevated-path census series (interior strictly above the axis)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if depth is None:
        depth = default_depth(order)
    out = Series.one(ring, order).scale(ell(0)).shift(1)
    if depth >= 1:
        tail = _level_tail(dee, ell, order, ring, 1, depth)
        out = out + tail.scale(dee(1)).shift(2)
    return out


@dataclass(frozen=True)
class WeightScheme:
    """Step weights for one permutation class, split by step role."""

    name: str
    down: Callable[[int], MultiPoly]
    level_fixed: Callable[[int], MultiPoly]
    level_upper: Callable[[int], MultiPoly]
    level_lower: Callable[[int], MultiPoly]
    elevated: bool = False
    marks: frozenset = field(default_factory=frozenset)

    def level(self, h: int) -> MultiPoly:
        return self.level_fixed(h) + self.level_upper(h) + self.level_lower(h)

    def series(self, order: int, depth: int | None = None) -> Series:
        """Census polynomials c_0..c_order as a poly-ring series."""
        fn = kfraction_series if self.elevated else jfraction_series
        return fn(self.down, self.level, order, "poly", depth)

    def counts(self, order: int) -> list[int]:
        """Plain cardinalities: every marker evaluated at 1."""
        return [c.value_at_ones() for c in self.series(order).coeffs]
