"""Obstruction sheaves, obstruction spaces and the good-model classifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Any

from .bundles import Model, SplitBundle, dual, exterior_power, tangent_bundle, tensor
from .cohomology import CohomologyDims, bundle_cohomology


class Status(enum.Enum):
    GOOD = "Good"
    SUPPORTS_EXOTIC = "SupportsExotic"
    INCONCLUSIVE = "Inconclusive"


class Rule(str, enum.Enum):
    """Tags for the criteria the classifier can apply, lettered (a)-(e)."""

    P1_RANK3 = "(a) P1 rank 3"
    P1_BALANCED = "(b) P1 balanced"
    VANISHING = "(c) section vanishing"
    NONNEG_LOW_DEGREE = "(d) nonnegative low degree"
    GENUS1_I = "(e-i) genus 1, deg = h0"
    GENUS1_II = "(e-ii) genus 1, deg = -h1"
    NONE = "none"

    @property
    def letter(self) -> str:
        return self.value[1:self.value.index(")")] if self is not Rule.NONE else "f"


def obstruction_sheaf(model: Model, k: int) -> SplitBundle:
    """``wedge^k E (x) T`` for even ``k``, ``E* (x) wedge^k E`` for odd ``k``."""
    q = model.rank
    if not isinstance(k, int) or not 2 <= k <= q:
        raise ValueError(f"obstruction sheaves are defined for 2 <= k <= {q}, got {k!r}")
    E = model.bundle
    if k % 2 == 0:
        sheaf = tensor(exterior_power(E, k), SplitBundle([tangent_bundle(model.curve)]))
    else:
        sheaf = tensor(dual(E), exterior_power(E, k))
    return sheaf.on(model.curve)


@dataclass(frozen=True)
class ObstructionLevel:
    k: int
    sheaf: SplitBundle
    dims: CohomologyDims

    @property
    def sections(self) -> tuple[int, int]:
        """Range for ``h^0(Q^(k))``."""
        return self.dims.h0_range

    @property
    def space(self) -> tuple[int, int]:
        """Range for ``h^1(Q^(k))``, the dimension of the obstruction space."""
        return self.dims.h1_range


@dataclass(frozen=True)
class ObstructionReport:
    model: Model
    levels: tuple[ObstructionLevel, ...]
    notes: tuple[str, ...] = ()

    def level(self, k: int) -> ObstructionLevel:
        for lvl in self.levels:
            if lvl.k == k:
                return lvl
        raise KeyError(f"no obstruction level k={k}")

    @property
    def ks(self) -> list[int]:
        return [lvl.k for lvl in self.levels]


def obstruction_report(model: Model) -> ObstructionReport:
    q = model.rank
    if q < 2:
        raise ValueError("a rank-1 model has no obstruction sheaves")
    levels = []
    for k in range(2, q + 1):
        sheaf = obstruction_sheaf(model, k)
        levels.append(ObstructionLevel(k, sheaf, bundle_cohomology(sheaf, model.curve)))
    notes = []
    if model.bundle.is_balanced():
        for k in range(3, q + 1, 2):
            if k != q:
                notes.append(
                    f"k={k}: E* (x) wedge^k E has q*C(q,k) = {q * comb(q, k)} summands of degree "
                    f"{(k - 1) * model.degrees[0]}; the balanced-bundle display lists k*C(q,k) = {k * comb(q, k)}"
                )
    return ObstructionReport(model, tuple(levels), tuple(notes))


def sufficient_vanishing_range(model: Model | int) -> list[int]:
    """Levels ``k`` at which ``h^0(Q^(k)) = 0`` is required to rule out exotic atlases.

    The top level ``k = q`` is never needed since G^(q+1) is trivial.  The
    range starts at 2 because at rank 3 exotic atlases come from
    H^0(Q^(2)).
    """
    q = model if isinstance(model, int) else model.rank
    if q < 2:
        raise ValueError("rank must be at least 2")
    return list(range(2, q))


@dataclass(frozen=True)
class GoodnessVerdict:
    status: Status
    rule: Rule
    witness: Any = None
    supporting: tuple[Rule, ...] = ()
    failed: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.status.value} ({self.rule.value})"


def _check_vanishing(model: Model, report: ObstructionReport) -> tuple[bool, str | None]:
    for k in sufficient_vanishing_range(model):
        dims = report.level(k).dims
        if not dims.is_exact:
            return False, f"{Rule.VANISHING.value}: h0(Q^({k})) only known in {list(dims.h0_range)}"
        if dims.h0 != 0:
            return False, f"{Rule.VANISHING.value}: h0(Q^({k})) = {dims.h0}"
    return True, None


def _check_nonneg_low_degree(model: Model) -> tuple[bool, str | None]:
    g = model.genus
    if model.rank != 3:
        return False, f"{Rule.NONNEG_LOW_DEGREE.value}: rank {model.rank} != 3"
    if min(model.degrees) < 0:
        return False, f"{Rule.NONNEG_LOW_DEGREE.value}: negative summand"
    if model.bundle.degree >= 3 * g - 3:
        return False, f"{Rule.NONNEG_LOW_DEGREE.value}: deg E = {model.bundle.degree} >= 3g-3 = {3 * g - 3}"
    return True, None


def _check_genus_one(model: Model, report: ObstructionReport) -> tuple[Rule | None, str | None]:
    if model.genus != 1 or model.rank != 3:
        return None, f"{Rule.GENUS1_I.value}: needs genus 1 and rank 3"
    lvl = report.level(2)
    if not lvl.dims.is_exact:
        return None, f"{Rule.GENUS1_I.value}: h0(Q^(2)) only known in {list(lvl.dims.h0_range)}"
    deg = lvl.sheaf.degree
    if deg == lvl.dims.h0:
        return Rule.GENUS1_I, None
    if deg == -lvl.dims.h1:
        return Rule.GENUS1_II, None
    return None, f"{Rule.GENUS1_I.value}: deg Q^(2) = {deg}, h0 = {lvl.dims.h0}, h1 = {lvl.dims.h1}"


def classify(model: Model, with_witness: bool = True) -> GoodnessVerdict:
    """Decide goodness from the available criteria; ``Inconclusive`` if none applies.

    Order: the P^1 theorems (rank 3, then balanced), then the named
    sufficient conditions for positive genus, then the general vanishing
    criterion.  Any other criterion that also proves goodness is listed in
    ``supporting``.  A criterion whose hypotheses involve interval-valued
    cohomology is never applied.
    """
    q = model.rank
    if q < 2:
        return GoodnessVerdict(Status.GOOD, Rule.VANISHING, failed=("rank 1: no obstruction levels",))
    report = obstruction_report(model)

    if model.genus == 0 and q == 3:
        if all(d == -1 for d in model.degrees):
            witness = None
            if with_witness:
                from .exotic import find_witness
                witness = find_witness(model)
            return GoodnessVerdict(Status.SUPPORTS_EXOTIC, Rule.P1_RANK3, witness=witness)
        return GoodnessVerdict(Status.GOOD, Rule.P1_RANK3, supporting=_supporting(model, report, Rule.P1_RANK3))
    if model.genus == 0 and model.bundle.is_balanced():
        d = model.degrees[0]
        if d == -1:
            return GoodnessVerdict(Status.SUPPORTS_EXOTIC, Rule.P1_BALANCED)
        if d < -1:
            return GoodnessVerdict(Status.GOOD, Rule.P1_BALANCED,
                                   supporting=_supporting(model, report, Rule.P1_BALANCED))

    failed = []
    ok, why = _check_nonneg_low_degree(model)
    if ok:
        return GoodnessVerdict(Status.GOOD, Rule.NONNEG_LOW_DEGREE,
                               supporting=_supporting(model, report, Rule.NONNEG_LOW_DEGREE))
    failed.append(why)
    rule, why = _check_genus_one(model, report)
    if rule is not None:
        return GoodnessVerdict(Status.GOOD, rule, supporting=_supporting(model, report, rule))
    failed.append(why)
    ok, why = _check_vanishing(model, report)
    if ok:
        return GoodnessVerdict(Status.GOOD, Rule.VANISHING)
    failed.append(why)
    if model.genus == 0:
        failed.append(f"{Rule.P1_BALANCED.value}: needs a balanced bundle of degree <= -1")
    return GoodnessVerdict(Status.INCONCLUSIVE, Rule.NONE, failed=tuple(failed))


def _supporting(model: Model, report: ObstructionReport, chosen: Rule) -> tuple[Rule, ...]:
    extra = []
    if chosen is not Rule.NONNEG_LOW_DEGREE and _check_nonneg_low_degree(model)[0]:
        extra.append(Rule.NONNEG_LOW_DEGREE)
    if chosen not in (Rule.GENUS1_I, Rule.GENUS1_II):
        rule, _ = _check_genus_one(model, report)
        if rule is not None:
            extra.append(rule)
    if _check_vanishing(model, report)[0]:
        extra.append(Rule.VANISHING)
    return tuple(extra)


def balanced_h0_profile(q: int, d: int) -> list[int]:
    """``h^0(Q^(k))`` for ``k = 2..q`` on P^1 with ``E = O(d)^q``."""
    model = Model.on_p1([d] * q)
    return [lvl.dims.h0 for lvl in obstruction_report(model).levels]
