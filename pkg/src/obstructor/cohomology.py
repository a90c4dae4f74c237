"""Dimensions of H^0 and H^1 for line bundles and split bundles on curves.

Genus 0 and genus 1 are handled exactly.  In genus >= 2 the special range
``0 <= d <= 2g - 2`` depends on the actual line bundle, not just its degree,
so there we only return bounds: Riemann-Roch below and Clifford above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .bundles import Curve, LineBundleClass, SplitBundle, Triviality, canonical_bundle, tensor_lines


class DimsKind(enum.Enum):
    EXACT = "Exact"
    INTERVAL = "Interval"


Range = tuple[int, int]


@dataclass(frozen=True)
class CohomologyDims:
    """``(h0, h1)`` as closed integer ranges plus the Euler characteristic.

    An exact result has degenerate ranges.  Every admissible pair satisfies
    ``h0 - h1 == chi``, so the two ranges always have the same width.
    """

    h0_range: Range
    h1_range: Range
    chi: int

    def __post_init__(self):
        (a, b), (c, d) = self.h0_range, self.h1_range
        if not (0 <= a <= b and 0 <= c <= d):
            raise ValueError(f"invalid ranges h0={self.h0_range} h1={self.h1_range}")
        if a - c != self.chi or b - d != self.chi:
            raise ValueError(f"ranges h0={self.h0_range} h1={self.h1_range} violate chi={self.chi}")

    @classmethod
    def exact(cls, h0: int, h1: int) -> "CohomologyDims":
        return cls((h0, h0), (h1, h1), h0 - h1)

    @classmethod
    def from_h0_bounds(cls, lo: int, hi: int, chi: int) -> "CohomologyDims":
        return cls((lo, hi), (lo - chi, hi - chi), chi)

    @property
    def kind(self) -> DimsKind:
        return DimsKind.EXACT if self.h0_range[0] == self.h0_range[1] else DimsKind.INTERVAL

    @property
    def is_exact(self) -> bool:
        return self.kind is DimsKind.EXACT

    @property
    def h0(self) -> int:
        if not self.is_exact:
            raise ValueError(f"h0 is only known to lie in {list(self.h0_range)}")
        return self.h0_range[0]

    @property
    def h1(self) -> int:
        if not self.is_exact:
            raise ValueError(f"h1 is only known to lie in {list(self.h1_range)}")
        return self.h1_range[0]

    def __add__(self, other: "CohomologyDims") -> "CohomologyDims":
        return CohomologyDims(
            (self.h0_range[0] + other.h0_range[0], self.h0_range[1] + other.h0_range[1]),
            (self.h1_range[0] + other.h1_range[0], self.h1_range[1] + other.h1_range[1]),
            self.chi + other.chi,
        )

    def __str__(self) -> str:
        if self.is_exact:
            return f"h0={self.h0} h1={self.h1}"
        return f"h0 in {list(self.h0_range)} h1 in {list(self.h1_range)}"


def line_cohomology(L: LineBundleClass, curve: Curve) -> CohomologyDims:
    d, g = L.degree, curve.genus
    chi = d - g + 1
    if g == 0:
        return CohomologyDims.exact(max(0, d + 1), max(0, -d - 1))
    if d < 0:
        return CohomologyDims.exact(0, -chi)
    if d > 2 * g - 2:
        return CohomologyDims.exact(chi, 0)
    if d == 0 and L.triviality is Triviality.TRIVIAL:
        return CohomologyDims.exact(1, g)
    if g == 1:
        # here d == 0 and the bundle is not known to be trivial
        if L.triviality is Triviality.NONTRIVIAL:
            return CohomologyDims.exact(0, 0)
        return CohomologyDims.from_h0_bounds(0, 1, 0)
    return CohomologyDims.from_h0_bounds(max(0, chi), d // 2 + 1, chi)


def bundle_cohomology(E: SplitBundle | Iterable[LineBundleClass], curve: Curve) -> CohomologyDims:
    total = CohomologyDims.exact(0, 0)
    for L in E:
        total = total + line_cohomology(L, curve)
    return total


def serre_dual(L: LineBundleClass, curve: Curve) -> LineBundleClass:
    """``K (x) L^-1``: its ``h0`` is ``h1(L)`` and vice versa."""
    return tensor_lines((canonical_bundle(curve), L.dual())).on(curve)


def riemann_roch(L: LineBundleClass, curve: Curve) -> int:
    return L.degree + curve.euler_offset
