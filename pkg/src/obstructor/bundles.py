"""Split vector bundles on compact Riemann surfaces, up to isomorphism.

A split bundle is recorded as a multiset of line-bundle classes.  Only the
degree and a coarse triviality marker are tracked; summand order carries no
meaning, so bundles are stored sorted and compare as multisets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class Triviality(enum.Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "NonTrivial"
    UNKNOWN = "Unknown"

    @classmethod
    def parse(cls, text: str) -> "Triviality":
        key = text.strip().lower()
        for member in cls:
            if key in (member.value.lower(), member.name.lower(), member.value[0].lower()):
                return member
        raise ValueError(f"unknown triviality marker {text!r}")


_ORDER = {Triviality.TRIVIAL: 0, Triviality.NONTRIVIAL: 1, Triviality.UNKNOWN: 2}


@dataclass(frozen=True)
class Curve:
    """Compact Riemann surface, known only through its genus."""

    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")

    @property
    def euler_offset(self) -> int:
        """``1 - g``, the constant term of Riemann-Roch."""
        return 1 - self.genus


P1 = Curve(0)


@dataclass(frozen=True)
class LineBundleClass:
    """Isomorphism-class data of a line bundle: degree plus triviality marker.

    A nonzero degree always forces ``NONTRIVIAL``.  A degree-zero class built
    without a marker is ``UNKNOWN``; use :meth:`on` to normalise against a
    curve (on P^1 every degree-zero bundle is trivial).
    """

    degree: int
    triviality: Triviality = Triviality.UNKNOWN

    def __post_init__(self):
        if not isinstance(self.degree, int):
            raise TypeError(f"degree must be an int, got {self.degree!r}")
        if isinstance(self.triviality, str):
            object.__setattr__(self, "triviality", Triviality.parse(self.triviality))
        if self.degree != 0:
            object.__setattr__(self, "triviality", Triviality.NONTRIVIAL)

    @classmethod
    def trivial(cls) -> "LineBundleClass":
        return cls(0, Triviality.TRIVIAL)

    @property
    def is_trivial(self) -> bool:
        return self.triviality is Triviality.TRIVIAL

    def on(self, curve: Curve) -> "LineBundleClass":
        if curve.genus == 0 and self.degree == 0:
            return LineBundleClass.trivial()
        return self

    def dual(self) -> "LineBundleClass":
        return LineBundleClass(-self.degree, self.triviality)

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, _ORDER[self.triviality])

    def __str__(self) -> str:
        if self.degree == 0 and self.triviality is not Triviality.NONTRIVIAL:
            return "O" if self.is_trivial else "L0?"
        if self.degree == 0:
            return "L0"
        return f"L({self.degree})"


def tensor_lines(factors: Iterable[LineBundleClass]) -> LineBundleClass:
    """Tensor product of line-bundle classes.

    Trivial factors act as the unit.  A single remaining factor is returned
    unchanged; two or more non-trivial factors of total degree zero give an
    ``UNKNOWN`` class because their product may or may not be trivial.
    """
    rest = [f for f in factors if not f.is_trivial]
    if not rest:
        return LineBundleClass.trivial()
    if len(rest) == 1:
        return rest[0]
    return LineBundleClass(sum(f.degree for f in rest), Triviality.UNKNOWN)


def _as_line(item: "LineBundleClass | int") -> LineBundleClass:
    if isinstance(item, LineBundleClass):
        return item
    if isinstance(item, int):
        return LineBundleClass(item)
    raise TypeError(f"expected LineBundleClass or int, got {type(item).__name__}")


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of line bundles, stored as a sorted tuple of summands."""

    components: tuple[LineBundleClass, ...]

    def __init__(self, components: Iterable["LineBundleClass | int"]):
        comps = tuple(sorted((_as_line(c) for c in components), key=LineBundleClass.sort_key))
        if not comps:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_degrees(cls, degrees: Sequence[int], trivialities: Sequence[Triviality | str] | None = None):
        if trivialities is None:
            return cls(LineBundleClass(d) for d in degrees)
        if len(trivialities) != len(degrees):
            raise ValueError("one triviality marker per degree is required")
        return cls(LineBundleClass(d, t) for d, t in zip(degrees, trivialities))

    @classmethod
    def balanced(cls, rank: int, degree: int) -> "SplitBundle":
        return cls([degree] * rank)

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self.components)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    def is_balanced(self) -> bool:
        return len(set(self.degrees)) == 1

    def on(self, curve: Curve) -> "SplitBundle":
        return SplitBundle(c.on(curve) for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self) -> str:
        return " + ".join(str(c) for c in self.components)


def exterior_power(E: SplitBundle, k: int) -> SplitBundle:
    """``k``-th exterior power; one summand per ``k``-subset of summands of ``E``.

    ``k = 0`` gives the trivial line bundle.
    """
    if not isinstance(k, int) or k < 0 or k > E.rank:
        raise ValueError(f"exterior power degree must lie in [0, {E.rank}], got {k!r}")
    if k == 0:
        return SplitBundle([LineBundleClass.trivial()])
    return SplitBundle(tensor_lines(sub) for sub in combinations(E.components, k))


def tensor(E: SplitBundle, F: SplitBundle) -> SplitBundle:
    return SplitBundle(tensor_lines((a, b)) for a in E for b in F)


def dual(E: SplitBundle) -> SplitBundle:
    return SplitBundle(c.dual() for c in E)


def direct_sum(*bundles: SplitBundle) -> SplitBundle:
    return SplitBundle(c for b in bundles for c in b)


def tangent_bundle(curve: Curve) -> LineBundleClass:
    if curve.genus == 1:
        return LineBundleClass.trivial()
    return LineBundleClass(2 - 2 * curve.genus)


def canonical_bundle(curve: Curve) -> LineBundleClass:
    return tangent_bundle(curve).dual()


@dataclass(frozen=True)
class Model:
    """A curve together with a split bundle on it.

    The bundle is normalised against the curve on construction, so on P^1 all
    degree-zero summands are marked trivial.
    """

    curve: Curve
    bundle: SplitBundle

    def __post_init__(self):
        object.__setattr__(self, "bundle", self.bundle.on(self.curve))

    @classmethod
    def on_p1(cls, degrees: Sequence[int]) -> "Model":
        return cls(P1, SplitBundle(degrees))

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.bundle.degrees
