"""Local superfunctions ``sum c_S(x) theta_S`` on one chart of a split model.

A superfunction on a chart of ``(P^1, E)`` is an element of the exterior
algebra over the Laurent ring ``Q[x, 1/x]`` on odd generators
``theta_0, ..., theta_{q-1}``.  Algebra automorphisms are given by the images
of the even coordinate and of each odd generator, and are applied by
substitution.  This is enough to compose automorphisms, invert the simple
ones, and transport them between the two charts of P^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Sequence, Union

from .laurent import LaurentPoly, Scalar

Monomial = tuple[int, ...]


def _merge_sign(S: Monomial, T: Monomial) -> int:
    """Sign of reordering ``theta_S theta_T`` into increasing order (0 if they overlap)."""
    if set(S) & set(T):
        return 0
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


class SuperFunction:
    """Immutable element of ``Lambda[theta_0..theta_{q-1}]`` over Laurent polynomials."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Monomial, LaurentPoly] | Iterable = ()):
        self.rank = rank
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, LaurentPoly] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if list(mono) != sorted(set(mono)) or any(i < 0 or i >= rank for i in mono):
                raise ValueError(f"invalid odd monomial {mono} for rank {rank}")
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.constant(coeff)
            acc[mono] = acc.get(mono, LaurentPoly.zero()) + coeff
        self._terms = {m: c for m, c in sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])) if c}

    # -- constructors -----------------------------------------------------

    @classmethod
    def scalar(cls, rank: int, c: "LaurentPoly | Scalar") -> "SuperFunction":
        return cls(rank, {(): c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)})

    @classmethod
    def coordinate(cls, rank: int) -> "SuperFunction":
        return cls(rank, {(): LaurentPoly.monomial(1)})

    @classmethod
    def generator(cls, rank: int, i: int) -> "SuperFunction":
        return cls(rank, {(i,): LaurentPoly.constant(1)})

    @classmethod
    def term(cls, rank: int, mono: Sequence[int], coeff: "LaurentPoly | Scalar") -> "SuperFunction":
        """``coeff * theta_{m0} theta_{m1} ...`` in the given (possibly unsorted) order."""
        sign = 1
        order = list(mono)
        # bubble sort keeps track of the permutation sign
        for i in range(len(order)):
            for j in range(len(order) - 1 - i):
                if order[j] > order[j + 1]:
                    order[j], order[j + 1] = order[j + 1], order[j]
                    sign = -sign
        if len(set(order)) != len(order):
            return cls(rank)
        coeff = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.constant(coeff)
        return cls(rank, {tuple(order): coeff * sign})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, LaurentPoly]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> LaurentPoly:
        return self._terms.get(tuple(mono), LaurentPoly.zero())

    @property
    def body(self) -> LaurentPoly:
        return self.coefficient(())

    def soul(self) -> "SuperFunction":
        return SuperFunction(self.rank, {m: c for m, c in self._terms.items() if m})

    def degrees(self) -> set[int]:
        """Exterior degrees that occur with nonzero coefficient."""
        return {len(m) for m in self._terms}

    def graded_part(self, k: int) -> "SuperFunction":
        return SuperFunction(self.rank, {m: c for m, c in self._terms.items() if len(m) == k})

    def is_even(self) -> bool:
        return all(len(m) % 2 == 0 for m in self._terms)

    def is_odd(self) -> bool:
        return all(len(m) % 2 == 1 for m in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "SuperFunction") -> None:
        if other.rank != self.rank:
            raise ValueError("superfunctions over different ranks")

    def __add__(self, other: "SuperFunction | LaurentPoly | Scalar") -> "SuperFunction":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = SuperFunction.scalar(self.rank, other)
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, LaurentPoly.zero()) + c
        return SuperFunction(self.rank, acc)

    def __neg__(self) -> "SuperFunction":
        return SuperFunction(self.rank, {m: -c for m, c in self._terms.items()})

    __radd__ = __add__

    def __sub__(self, other: "SuperFunction | LaurentPoly | Scalar") -> "SuperFunction":
        return self + (-other)

    def __mul__(self, other: "SuperFunction | LaurentPoly | Scalar") -> "SuperFunction":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return SuperFunction(self.rank, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, SuperFunction):
            return NotImplemented
        self._check(other)
        acc: dict[Monomial, LaurentPoly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                sign = _merge_sign(m1, m2)
                if not sign:
                    continue
                m = tuple(sorted(m1 + m2))
                prod = c1 * c2
                acc[m] = acc.get(m, LaurentPoly.zero()) + (prod if sign > 0 else -prod)
        return SuperFunction(self.rank, acc)

    def __rmul__(self, other: "LaurentPoly | Scalar") -> "SuperFunction":
        return self * other

    def __pow__(self, n: int) -> "SuperFunction":
        """Integer power; negative powers need an invertible monomial body."""
        if n >= 0:
            result = SuperFunction.scalar(self.rank, 1)
            for _ in range(n):
                result = result * self
            return result
        return self.unit_power(n)

    def unit_power(self, n: int) -> "SuperFunction":
        """``self**n`` for an even element whose body is a Laurent monomial.

        Expands ``(b + s)**n = sum_j C(n, j) b**(n-j) s**j`` with generalised
        binomial coefficients; the sum stops because the soul ``s`` is
        nilpotent.
        """
        if not self.is_even():
            raise ValueError("only even superfunctions have well-defined powers here")
        body = self.body
        if not body.is_monomial():
            raise ValueError(f"body {body} is not invertible in the Laurent ring")
        soul = self.soul()
        result = SuperFunction(self.rank)
        soul_power = SuperFunction.scalar(self.rank, 1)
        j = 0
        while soul_power:
            coeff = _gen_binomial(n, j)
            result = result + soul_power * (body ** (n - j) * coeff)
            soul_power = soul_power * soul
            j += 1
        return result

    def derivative(self) -> "SuperFunction":
        """Derivative of every coefficient in the even coordinate (odd generators fixed)."""
        return SuperFunction(self.rank, {m: c.derivative() for m, c in self._terms.items()})

    # -- substitution -----------------------------------------------------

    def substitute(self, x_image: "SuperFunction", theta_images: Sequence["SuperFunction"]) -> "SuperFunction":
        """Apply the algebra map ``x -> x_image``, ``theta_i -> theta_images[i]``.

        The target may have a different rank from ``self``.
        """
        if len(theta_images) != self.rank:
            raise ValueError(f"need {self.rank} odd images, got {len(theta_images)}")
        target = x_image.rank
        powers: dict[int, SuperFunction] = {}

        def power(e: int) -> SuperFunction:
            if e not in powers:
                powers[e] = x_image.unit_power(e) if e < 0 else x_image ** e
            return powers[e]

        result = SuperFunction(target)
        for mono, coeff in self._terms.items():
            value = SuperFunction(target)
            for e, c in coeff:
                value = value + power(e) * c
            for i in mono:
                value = value * theta_images[i]
            result = result + value
        return result

    # -- comparison / display --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperFunction):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"SuperFunction({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            theta = "".join(f"t{i + 1}" for i in m)
            parts.append(f"({c}){theta}" if theta else f"({c})")
        return " + ".join(parts)


def _gen_binomial(n: int, j: int) -> Fraction:
    if n >= 0:
        return Fraction(comb(n, j)) if j <= n else Fraction(0)
    num = Fraction(1)
    for i in range(j):
        num *= n - i
    return num / _factorial(j)


def _factorial(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


@dataclass(frozen=True)
class SuperAutomorphism:
    """Even algebra automorphism of one chart, given on generators.

    ``chart`` is 0 (coordinate ``z``) or 1 (coordinate ``w = 1/z``).  Applying
    the automorphism to ``f`` substitutes the images into ``f``.
    """

    chart: int
    x_image: SuperFunction
    theta_images: tuple[SuperFunction, ...]

    def __post_init__(self):
        if self.chart not in (0, 1):
            raise ValueError(f"chart must be 0 or 1, got {self.chart!r}")
        object.__setattr__(self, "theta_images", tuple(self.theta_images))
        if len(self.theta_images) != self.x_image.rank:
            raise ValueError("number of odd images must equal the rank")
        if not self.x_image.is_even() or not all(t.is_odd() for t in self.theta_images):
            raise ValueError("automorphisms must preserve the Z/2 grading")
        if not self.x_image.body.is_monomial():
            raise ValueError("the reduced map of the even coordinate must be invertible")

    @property
    def rank(self) -> int:
        return self.x_image.rank

    @classmethod
    def identity(cls, rank: int, chart: int = 0) -> "SuperAutomorphism":
        return cls(chart, SuperFunction.coordinate(rank),
                   tuple(SuperFunction.generator(rank, i) for i in range(rank)))

    @classmethod
    def scaling(cls, factors: Sequence[Scalar], chart: int = 0) -> "SuperAutomorphism":
        """``theta_i -> factors[i] * theta_i`` with the coordinate fixed."""
        rank = len(factors)
        if any(Fraction(f) == 0 for f in factors):
            raise ValueError("scaling factors must be nonzero")
        return cls(chart, SuperFunction.coordinate(rank),
                   tuple(SuperFunction.generator(rank, i) * Fraction(f) for i, f in enumerate(factors)))

    def __call__(self, f: SuperFunction) -> SuperFunction:
        return f.substitute(self.x_image, self.theta_images)

    def __matmul__(self, other: "SuperAutomorphism") -> "SuperAutomorphism":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self == SuperAutomorphism.identity(self.rank, self.chart)


def compose(f: SuperAutomorphism, g: SuperAutomorphism) -> SuperAutomorphism:
    """``f o g``: first apply ``g``, then ``f``."""
    if f.chart != g.chart:
        raise ValueError(f"cannot compose automorphisms of charts {f.chart} and {g.chart}")
    return SuperAutomorphism(f.chart, f(g.x_image), tuple(f(t) for t in g.theta_images))


def chart_generators(degrees: Sequence[int], source: int) -> tuple[SuperFunction, tuple[SuperFunction, ...]]:
    """Generators of chart ``1 - source`` written in the generators of ``source``.

    With ``theta0_a = z**(-d_a) theta1_a`` and ``w = 1/z``:
    from chart 0, ``w = z**-1`` and ``theta1_a = z**d_a theta0_a``;
    from chart 1, ``z = w**-1`` and ``theta0_a = w**d_a theta1_a``.
    Both directions have the same shape because the cover is symmetric.
    """
    rank = len(degrees)
    x = SuperFunction.scalar(rank, LaurentPoly.monomial(-1))
    thetas = tuple(SuperFunction.term(rank, (a,), LaurentPoly.monomial(d)) for a, d in enumerate(degrees))
    return x, thetas


def to_chart(aut: SuperAutomorphism, target: int, degrees: Sequence[int]) -> SuperAutomorphism:
    """Express an automorphism over the overlap in the generators of ``target``."""
    if aut.chart == target:
        return aut
    source = aut.chart
    # target generators written in source generators
    tx, tthetas = chart_generators(degrees, source)
    # source generators written in target generators
    sx, sthetas = chart_generators(degrees, target)
    x_img = aut(tx).substitute(sx, sthetas)
    theta_imgs = tuple(aut(t).substitute(sx, sthetas) for t in tthetas)
    return SuperAutomorphism(target, x_img, theta_imgs)


def apply_derivation(f: SuperFunction, x_value: SuperFunction,
                     theta_values: Sequence[SuperFunction]) -> SuperFunction:
    """Apply the even derivation with ``D(x) = x_value`` and ``D(theta_i) = theta_values[i]``."""
    rank = f.rank
    result = SuperFunction(rank)
    for mono, coeff in f.terms.items():
        factors = [SuperFunction.generator(rank, i) for i in mono]
        prod = SuperFunction.scalar(rank, 1)
        for fac in factors:
            prod = prod * fac
        result = result + x_value * prod * coeff.derivative()
        for pos in range(len(factors)):
            term = SuperFunction.scalar(rank, coeff)
            for j, fac in enumerate(factors):
                term = term * (theta_values[mono[j]] if j == pos else fac)
            result = result + term
    return result


def exp_derivation(f: SuperFunction, derivation: Callable[[SuperFunction], SuperFunction]) -> SuperFunction:
    """``sum_n D^n f / n!`` evaluated until the terms vanish."""
    total = f
    term = f
    n = 1
    while True:
        term = derivation(term) * Fraction(1, n)
        if term.is_zero():
            return total
        total = total + term
        n += 1
        if n > 4 * f.rank + 8:
            raise ArithmeticError("derivation is not nilpotent on this element")
