"""Explicit Green's group cocycles for rank-3 split bundles on P^1.

Odd generators are indexed 0, 1, 2.  An element of G^(2) on a chart is
written ``exp(D)`` with

    D = sum_{a<b} X_ab(x) theta_a theta_b d/dx  +  sum_a Y_a(x) theta_0 theta_1 theta_2 d/dtheta_a

where ``x`` is the chart coordinate and the odd generators are those of the
same chart.  At rank 3, ``D**2`` vanishes on generators, so ``exp(D) = 1 + D``.
The ``X`` part is the Q^(2) = wedge^2 E (x) T layer and the ``Y`` part is
the Q^(3) = E* (x) wedge^3 E layer.

All gluing follows :func:`obstructor.cech.transition_convention`:
``w = 1/z``, ``theta0_a = z**(-d_a) theta1_a`` and ``d/dz = -w**2 d/dw``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .bundles import Model
from .cech import CechClass, reduce_class
from .laurent import LaurentPoly, Scalar
from .superalgebra import SuperAutomorphism, SuperFunction, apply_derivation, to_chart

RANK = 3
PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2))
TOP: tuple[int, ...] = (0, 1, 2)

Degrees = tuple[int, int, int]


def _degrees(model: "Model | Sequence[int]") -> Degrees:
    if isinstance(model, Model):
        if model.genus != 0:
            raise ValueError("explicit cocycles are only available on P^1")
        degrees = model.degrees
    else:
        degrees = tuple(int(d) for d in model)
    if len(degrees) != RANK:
        raise ValueError(f"explicit cocycles are implemented for rank 3 only, got rank {len(degrees)}")
    return degrees  # type: ignore[return-value]


def complement(pair: tuple[int, int]) -> int:
    return ({0, 1, 2} - set(pair)).pop()


def q2_degree(degrees: Sequence[int], pair: tuple[int, int]) -> int:
    """Degree of the summand of wedge^2 E (x) T indexed by ``pair``."""
    a, b = pair
    return degrees[a] + degrees[b] + 2


def q3_degree(degrees: Sequence[int], a: int) -> int:
    """Degree of the summand ``theta_0 theta_1 theta_2 d/dtheta_a`` of E* (x) wedge^3 E."""
    return sum(degrees) - degrees[a]


def _poly(p: "LaurentPoly | Scalar | Mapping[int, Scalar] | None") -> LaurentPoly:
    if p is None:
        return LaurentPoly.zero()
    if isinstance(p, LaurentPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return LaurentPoly.constant(p)
    return LaurentPoly(p)


def _triple(data, keys) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    if data is None:
        return (LaurentPoly.zero(),) * 3  # type: ignore[return-value]
    if isinstance(data, Mapping):
        unknown = set(data) - set(keys)
        if unknown:
            raise KeyError(f"unknown components {sorted(unknown)}")
        return tuple(_poly(data.get(k)) for k in keys)  # type: ignore[return-value]
    data = tuple(data)
    if len(data) != 3:
        raise ValueError("expected three components")
    return tuple(_poly(p) for p in data)  # type: ignore[return-value]


@dataclass(frozen=True)
class TruncatedAutomorphism:
    """Chart-local element ``exp(D)`` of G^(2) at rank 3.

    ``deg2[i]`` is the coefficient of ``theta_a theta_b d/dx`` for
    ``(a, b) = PAIRS[i]``; ``deg3[a]`` is the coefficient of
    ``theta_0 theta_1 theta_2 d/dtheta_a``.
    """

    chart: int
    deg2: tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    deg3: tuple[LaurentPoly, LaurentPoly, LaurentPoly]

    def __init__(self, chart: int, deg2=None, deg3=None):
        if chart not in (0, 1):
            raise ValueError(f"chart must be 0 or 1, got {chart!r}")
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "deg2", _triple(deg2, PAIRS))
        object.__setattr__(self, "deg3", _triple(deg3, TOP))

    @classmethod
    def identity(cls, chart: int = 0) -> "TruncatedAutomorphism":
        return cls(chart)

    # -- structure --------------------------------------------------------

    def is_identity(self) -> bool:
        return not any(self.deg2) and not any(self.deg3)

    @property
    def level(self) -> int:
        """Largest ``k`` with this element in G^(k); 4 means the identity."""
        if any(self.deg2):
            return 2
        if any(self.deg3):
            return 3
        return 4

    def in_green_group(self, k: int) -> bool:
        return self.level >= k

    def project(self, k: int) -> tuple[LaurentPoly, ...]:
        """Image in Q^(k) for an element of G^(k) (``k`` in {2, 3})."""
        if not self.in_green_group(k):
            raise ValueError(f"element is not in G^({k})")
        if k == 2:
            return self.deg2
        if k == 3:
            return self.deg3
        raise ValueError("rank-3 obstruction sheaves exist only for k = 2, 3")

    # -- action on superfunctions ----------------------------------------

    def derivation_values(self) -> tuple[SuperFunction, tuple[SuperFunction, ...]]:
        x_val = SuperFunction(RANK, {pair: c for pair, c in zip(PAIRS, self.deg2)})
        theta_vals = tuple(SuperFunction(RANK, {TOP: c}) for c in self.deg3)
        return x_val, theta_vals

    def derivation(self, f: SuperFunction) -> SuperFunction:
        x_val, theta_vals = self.derivation_values()
        return apply_derivation(f, x_val, theta_vals)

    def to_generic(self) -> SuperAutomorphism:
        x_val, theta_vals = self.derivation_values()
        x_img = SuperFunction.coordinate(RANK) + x_val
        theta_imgs = tuple(SuperFunction.generator(RANK, a) + theta_vals[a] for a in TOP)
        return SuperAutomorphism(self.chart, x_img, theta_imgs)

    @classmethod
    def from_generic(cls, aut: SuperAutomorphism) -> "TruncatedAutomorphism":
        """Read off graded components; raises if ``aut`` is not in G^(2)."""
        if aut.rank != RANK:
            raise ValueError("rank mismatch")
        rest = aut.x_image - SuperFunction.coordinate(RANK)
        if rest.degrees() - {2}:
            raise ValueError(f"coordinate image moves outside wedge^2: {aut.x_image}")
        deg3 = []
        for a in TOP:
            diff = aut.theta_images[a] - SuperFunction.generator(RANK, a)
            if diff.degrees() - {3}:
                raise ValueError(f"image of theta_{a} moves outside wedge^3: {aut.theta_images[a]}")
            deg3.append(diff.coefficient(TOP))
        return cls(aut.chart, tuple(rest.coefficient(p) for p in PAIRS), tuple(deg3))

    def __call__(self, f: SuperFunction) -> SuperFunction:
        return self.to_generic()(f)

    def __neg__(self) -> "TruncatedAutomorphism":
        return TruncatedAutomorphism(self.chart, tuple(-c for c in self.deg2), tuple(-c for c in self.deg3))

    def __str__(self) -> str:
        parts = [f"({c})t{a + 1}t{b + 1}d" for (a, b), c in zip(PAIRS, self.deg2) if c]
        parts += [f"({c})t1t2t3d/dt{a + 1}" for a, c in zip(TOP, self.deg3) if c]
        return f"exp[{' + '.join(parts) or '0'}]@U{self.chart}"


def compose(f: TruncatedAutomorphism, g: TruncatedAutomorphism) -> TruncatedAutomorphism:
    """``f o g``, computed by substituting generator images.

    With a fixed chart frame both layers simply add: the cross terms land in
    wedge^4 = 0.  The substitution is still done in full so the result is
    checked rather than assumed.
    """
    if f.chart != g.chart:
        raise ValueError(f"cannot compose elements on charts {f.chart} and {g.chart}")
    return TruncatedAutomorphism.from_generic(f.to_generic() @ g.to_generic())


def invert(f: TruncatedAutomorphism) -> TruncatedAutomorphism:
    """``exp(-D)``; inverse because ``D**2 = 0`` on generators."""
    return -f


# -- sections of the obstruction sheaves ---------------------------------


def q2_chart1_from_chart0(degrees: Sequence[int], pair: tuple[int, int], c0: LaurentPoly) -> LaurentPoly:
    """Chart-1 coefficient of the same vector field ``c0(z) theta0_a theta0_b d/dz``.

    ``theta0_a theta0_b d/dz = -w**(d_a + d_b + 2) theta1_a theta1_b d/dw``
    modulo odd derivations, so ``c1(w) = -w**D c0(1/w)``.
    """
    return -(c0.reflect().shift(q2_degree(degrees, pair)))


def q3_chart1_from_chart0(degrees: Sequence[int], a: int, c0: LaurentPoly) -> LaurentPoly:
    """``theta0_012 d/dtheta0_a = z**(-D) theta1_012 d/dtheta1_a`` with ``D = q3_degree``."""
    return c0.reflect().shift(q3_degree(degrees, a))


@dataclass(frozen=True)
class SectionQ2:
    """Section of wedge^2 E (x) T over the two charts, one coefficient per pair."""

    degrees: Degrees
    chart0: tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    chart1: tuple[LaurentPoly, LaurentPoly, LaurentPoly]

    def __init__(self, degrees, chart0, chart1):
        object.__setattr__(self, "degrees", _degrees(degrees))
        object.__setattr__(self, "chart0", _triple(chart0, PAIRS))
        object.__setattr__(self, "chart1", _triple(chart1, PAIRS))

    @classmethod
    def from_chart0(cls, degrees, coeffs) -> "SectionQ2":
        degrees = _degrees(degrees)
        c0 = _triple(coeffs, PAIRS)
        c1 = tuple(q2_chart1_from_chart0(degrees, p, c) for p, c in zip(PAIRS, c0))
        return cls(degrees, c0, c1)

    def transition_residual(self) -> tuple[LaurentPoly, ...]:
        return tuple(c1 - q2_chart1_from_chart0(self.degrees, p, c0)
                     for p, c0, c1 in zip(PAIRS, self.chart0, self.chart1))

    def is_holomorphic(self) -> bool:
        return all((c.min_exponent() or 0) >= 0 for c in self.chart0 + self.chart1)

    def is_global(self) -> bool:
        return self.is_holomorphic() and not any(self.transition_residual())

    def is_zero(self) -> bool:
        return not any(self.chart0) and not any(self.chart1)

    def __add__(self, other: "SectionQ2") -> "SectionQ2":
        return SectionQ2(self.degrees, tuple(a + b for a, b in zip(self.chart0, other.chart0)),
                         tuple(a + b for a, b in zip(self.chart1, other.chart1)))

    def __mul__(self, c: Scalar) -> "SectionQ2":
        return SectionQ2(self.degrees, tuple(p * c for p in self.chart0), tuple(p * c for p in self.chart1))

    __rmul__ = __mul__

    def lift(self, chart: int) -> TruncatedAutomorphism:
        """Lift to G^(2): act by the vector field on the chart coordinate, fix the chart frame."""
        return TruncatedAutomorphism(chart, self.chart0 if chart == 0 else self.chart1)

    def label(self) -> str:
        parts = [f"({c})*t{a + 1}t{b + 1}*d/dz" for (a, b), c in zip(PAIRS, self.chart0) if c]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class SectionQ3:
    """Local or global section of E* (x) wedge^3 E, one coefficient per ``a``."""

    degrees: Degrees
    chart0: tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    chart1: tuple[LaurentPoly, LaurentPoly, LaurentPoly]

    def __init__(self, degrees, chart0=None, chart1=None):
        object.__setattr__(self, "degrees", _degrees(degrees))
        object.__setattr__(self, "chart0", _triple(chart0, TOP))
        object.__setattr__(self, "chart1", _triple(chart1, TOP))

    @classmethod
    def from_chart0(cls, degrees, coeffs) -> "SectionQ3":
        degrees = _degrees(degrees)
        c0 = _triple(coeffs, TOP)
        return cls(degrees, c0, tuple(q3_chart1_from_chart0(degrees, a, c) for a, c in zip(TOP, c0)))

    def transition_residual(self) -> tuple[LaurentPoly, ...]:
        return tuple(c1 - q3_chart1_from_chart0(self.degrees, a, c0)
                     for a, c0, c1 in zip(TOP, self.chart0, self.chart1))

    def is_global(self) -> bool:
        holo = all((c.min_exponent() or 0) >= 0 for c in self.chart0 + self.chart1)
        return holo and not any(self.transition_residual())

    def local(self, chart: int) -> TruncatedAutomorphism:
        return TruncatedAutomorphism(chart, deg3=self.chart0 if chart == 0 else self.chart1)


def q2_global_basis(model: "Model | Sequence[int]") -> list[SectionQ2]:
    """Monomial basis ``z**j theta_a theta_b d/dz`` of H^0(wedge^2 E (x) T)."""
    degrees = _degrees(model)
    basis = []
    for i, pair in enumerate(PAIRS):
        for j in range(q2_degree(degrees, pair) + 1):
            coeffs = [None, None, None]
            coeffs[i] = LaurentPoly.monomial(j)
            basis.append(SectionQ2.from_chart0(degrees, coeffs))
    return basis


# -- the boundary map ----------------------------------------------------


class NonGlobalSectionError(ValueError):
    """The chart data of a Q^(2) section does not glue."""

    def __init__(self, residual):
        self.residual = residual
        shown = ", ".join(f"t{a + 1}t{b + 1}: {r}" for (a, b), r in zip(PAIRS, residual))
        super().__init__(f"section is not global; transition residual {shown}")


def atlas_cocycle(model: "Model | Sequence[int]", phi: SectionQ2,
                  perturbation: SectionQ3 | None = None) -> TruncatedAutomorphism:
    """Overlap cocycle ``rho_0 o rho_1^-1`` written in chart-0 generators.

    ``rho_i`` is the lift of ``phi`` on chart ``i``.  A ``perturbation``
    multiplies each lift by the given local G^(3) elements, which must not
    change the resulting class.
    """
    degrees = _degrees(model)
    if phi.degrees != degrees:
        raise ValueError(f"section was built for degrees {phi.degrees}, model has {degrees}")
    rho0, rho1 = phi.lift(0), phi.lift(1)
    if perturbation is not None:
        rho0 = compose(rho0, perturbation.local(0))
        rho1 = compose(rho1, perturbation.local(1))
    rho1_inv = to_chart(invert(rho1).to_generic(), 0, degrees)
    return TruncatedAutomorphism.from_generic(rho0.to_generic() @ rho1_inv)


def primary_obstruction(model: "Model | Sequence[int]", cocycle: TruncatedAutomorphism,
                        window: int | None = None) -> tuple[CechClass, ...]:
    """Classes of the Q^(2) layer of an overlap cocycle, one per pair."""
    degrees = _degrees(model)
    return tuple(reduce_class(q2_degree(degrees, p), c, window) for p, c in zip(PAIRS, cocycle.deg2))


def level3_class(model: "Model | Sequence[int]", cocycle: TruncatedAutomorphism,
                 window: int | None = None) -> tuple[CechClass, ...]:
    """Classes of a G^(3)-valued overlap cocycle, via G^(3) = Q^(3) at rank 3."""
    degrees = _degrees(model)
    if not cocycle.in_green_group(3):
        raise ValueError("cocycle has a nonzero Q^(2) layer; it is not G^(3)-valued")
    return tuple(reduce_class(q3_degree(degrees, a), c, window) for a, c in zip(TOP, cocycle.deg3))


def boundary_alpha(model: "Model | Sequence[int]", phi: SectionQ2,
                   window: int | None = None, perturbation: SectionQ3 | None = None) -> tuple[CechClass, ...]:
    """Image of a global section of Q^(2) under the connecting map into H^1(Q^(3)).

    Returns one :class:`CechClass` per summand ``theta_0 theta_1 theta_2 d/dtheta_a``.
    """
    degrees = _degrees(model)
    if phi.degrees != degrees:
        raise ValueError(f"section was built for degrees {phi.degrees}, model has {degrees}")
    residual = phi.transition_residual()
    if any(residual) or not phi.is_holomorphic():
        raise NonGlobalSectionError(residual)
    nu = atlas_cocycle(degrees, phi, perturbation)
    if any(nu.deg2):
        raise ArithmeticError(f"lifts of a global section failed to agree modulo G^(3): {nu}")
    return level3_class(degrees, nu, window)


def alpha_matrix(model: "Model | Sequence[int]", basis: Iterable[SectionQ2] | None = None,
                 window: int | None = None) -> list[list[Fraction]]:
    """Rows: H^1(Q^(3)) coordinates of ``boundary_alpha`` on each basis section."""
    degrees = _degrees(model)
    basis = q2_global_basis(degrees) if basis is None else list(basis)
    rows = []
    for phi in basis:
        rows.append([c for cls in boundary_alpha(degrees, phi, window) for c in cls.coordinates])
    return rows


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    M = DomainMatrix([[QQ(c.numerator, c.denominator) for c in map(Fraction, r)] for r in rows],
                     (len(rows), len(rows[0])), QQ)
    return M.rank()


def alpha_rank(model: "Model | Sequence[int]", window: int | None = None) -> int:
    return rational_rank(alpha_matrix(model, window=window))


def find_witness(model: "Model | Sequence[int]", window: int | None = None):
    """First basis section with a nonzero boundary class, with that class; else ``None``."""
    degrees = _degrees(model)
    for phi in q2_global_basis(degrees):
        classes = boundary_alpha(degrees, phi, window)
        if any(not c.is_zero for c in classes):
            return phi, classes
    return None


def exotic_by_construction(model: "Model | Sequence[int]", window: int | None = None) -> bool:
    """Whether some global section of Q^(2) has a nonzero boundary class."""
    return find_witness(model, window) is not None


def verify_witness(model: "Model | Sequence[int]", phi: SectionQ2, classes: Sequence[CechClass]) -> bool:
    """Recompute ``boundary_alpha(phi)`` and compare with a reported class triple."""
    fresh = boundary_alpha(model, phi)
    return (any(not c.is_zero for c in fresh)
            and [c.coordinates for c in fresh] == [c.coordinates for c in classes])


# -- scalar automorphisms of E -------------------------------------------

CocycleLike = Union[TruncatedAutomorphism, CechClass, Sequence[CechClass]]


def scale_star(lam: Scalar, x: CocycleLike, k: int | None = None):
    """Action of ``lam * 1_E``.

    On an overlap cocycle this is conjugation by ``theta_a -> lam theta_a``
    (coordinates fixed).  On classes it multiplies by ``lam**k``.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("scaling factor must be nonzero")
    if isinstance(x, TruncatedAutomorphism):
        s = SuperAutomorphism.scaling([lam] * RANK, x.chart)
        s_inv = SuperAutomorphism.scaling([1 / lam] * RANK, x.chart)
        return TruncatedAutomorphism.from_generic(s @ x.to_generic() @ s_inv)
    if k is None:
        raise ValueError("the weight k is required when scaling classes")
    if isinstance(x, CechClass):
        return x.scaled(lam ** k)
    return tuple(c.scaled(lam ** k) for c in x)


def split_image_cocycle(model: "Model | Sequence[int]", psi: Sequence[Scalar]) -> TruncatedAutomorphism:
    """``delta(psi)_01 = psi~_0 o psi~_1^-1`` for a constant diagonal automorphism of E.

    The lift ``psi~_i`` scales the chart-``i`` odd generators by the diagonal
    entries and fixes the coordinate.
    """
    degrees = _degrees(model)
    psi = [Fraction(p) for p in psi]
    if len(psi) != RANK:
        raise ValueError("need one diagonal entry per summand")
    if any(p == 0 for p in psi):
        raise ValueError(f"diagonal automorphism {psi} is singular")
    lift0 = SuperAutomorphism.scaling(psi, 0)
    lift1_inv = to_chart(SuperAutomorphism.scaling([1 / p for p in psi], 1), 0, degrees)
    return TruncatedAutomorphism.from_generic(lift0 @ lift1_inv)


def split_image_obstruction(model: "Model | Sequence[int]", psi: Sequence[Scalar],
                            window: int | None = None) -> tuple[CechClass, ...]:
    """Primary obstruction of ``delta(psi)``; always zero."""
    return primary_obstruction(model, split_image_cocycle(model, psi), window)
