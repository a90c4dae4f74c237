"""Sparse Laurent polynomials in one variable with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    """Immutable finite sum ``sum c_e x**e`` with ``c_e`` rational.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their coefficient maps are equal.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if not isinstance(e, int):
                raise TypeError(f"exponent must be an int, got {e!r}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def exponents(self) -> list[int]:
        return list(self._coeffs)

    def min_exponent(self) -> int | None:
        return next(iter(self._coeffs), None)

    def max_exponent(self) -> int | None:
        return next(reversed(self._coeffs), None) if self._coeffs else None

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def leading_term(self) -> tuple[int, Fraction]:
        if len(self._coeffs) != 1:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self._coeffs.items()))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _coerce(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in the Laurent ring")
            e, c = self.leading_term()
            return LaurentPoly({e * n: Fraction(1) / c ** (-n)})
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self._coeffs.items() if e != 0})

    def reflect(self) -> "LaurentPoly":
        """Substitute ``x -> 1/x``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._coeffs.items()), Fraction(0))

    # -- comparison / display --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_laurent(self)


def _coerce(value: "LaurentPoly | Scalar") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial")


def format_laurent(p: LaurentPoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in reversed(list(p)):
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if mono and c == 1:
            term = mono
        elif mono and c == -1:
            term = f"-{mono}"
        elif mono:
            term = f"{c}*{mono}"
        else:
            term = str(c)
        parts.append(term)
    return " + ".join(parts).replace("+ -", "- ")


_ZERO = LaurentPoly()
