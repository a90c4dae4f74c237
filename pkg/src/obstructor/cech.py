"""Cech cohomology of O(d) on P^1 for the standard two-chart cover.

Conventions (fixed everywhere in the package):

* ``U0`` has coordinate ``z``, ``U1`` has coordinate ``w = 1/z``.
* ``O(d)`` has frames ``e0`` on ``U0`` and ``e1`` on ``U1`` with
  ``e0 = z**(-d) * e1`` on the overlap.
* Overlap sections are written in the chart-0 frame as Laurent polynomials
  in ``z``.  A chart-1 section ``q(w) e1`` restricts to ``z**d q(1/z) e0``.

So the coboundary of ``(p(z) e0, q(w) e1)`` is ``p(z) - z**d q(1/z)``.  Its
image is spanned by ``z**e`` with ``e >= 0`` or ``e <= d``; the monomials
``z**-1, ..., z**(d+1)`` form the canonical basis of H^1.

The dimension count in :func:`cech_dims` is done by exact rank computation
on a truncated exponent window, independently of any closed formula.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .laurent import LaurentPoly

DEFAULT_WINDOW = 64
WINDOW_ENV = "OBSTRUCTOR_WINDOW"

LaurentSection = LaurentPoly


class WindowError(ValueError):
    """An exponent or degree does not fit the configured Laurent window."""


def default_window() -> int:
    raw = os.environ.get(WINDOW_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_WINDOW
    try:
        value = int(raw)
    except ValueError:
        raise WindowError(f"{WINDOW_ENV}={raw!r} is not an integer") from None
    if value < 2:
        raise WindowError(f"{WINDOW_ENV} must be at least 2, got {value}")
    return value


def _resolve(window: int | None) -> int:
    return default_window() if window is None else window


def transition_convention(d: int) -> str:
    """Human-readable statement of the gluing convention for ``O(d)``."""
    return (
        f"P1 cover U0(z), U1(w=1/z); O({d}): e0 = z^({-d}) e1 on U01; "
        f"chart-0 sections p(z) e0 with p spanned by z^0..z^{d} when d >= 0; "
        f"cocycles written in the e0 frame; coboundary(p, q) = p(z) - z^({d}) q(1/z); "
        f"H^1 basis z^-1..z^({d + 1}); tangent frame d/dz = -w^2 d/dw; "
        f"odd generators theta0_a = z^(-d_a) theta1_a"
    )


def convention_fingerprint() -> str:
    """Short stable hash of the conventions, used to tag reports."""
    text = "\n".join(transition_convention(d) for d in (-2, -1, 0, 1, 2))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _check_degree(d: int, window: int) -> None:
    if abs(d) + 2 > window:
        raise WindowError(f"degree {d} needs a window of at least {abs(d) + 2}, have {window}")


def coboundary_matrix(d: int, window: int | None = None) -> tuple[DomainMatrix, list[int], list[tuple[int, int]]]:
    """Matrix of ``C0 -> C1`` truncated to exponents ``[-window, window]``.

    Rows are indexed by overlap exponents.  Columns are chart-0 monomials
    ``z**j`` (``0 <= j <= window``) followed by chart-1 monomials ``w**m``
    whose restriction ``z**(d-m)`` still lies in the window.
    """
    window = _resolve(window)
    _check_degree(d, window)
    rows = list(range(-window, window + 1))
    row_of = {e: i for i, e in enumerate(rows)}
    cols: list[tuple[int, int]] = [(0, j) for j in range(0, window + 1)]
    cols += [(1, m) for m in range(max(0, d - window), d + window + 1)]
    data: dict[int, dict[int, object]] = {}
    for c, (chart, m) in enumerate(cols):
        if chart == 0:
            e, coeff = m, QQ(1)
        else:
            e, coeff = d - m, QQ(-1)
        data.setdefault(row_of[e], {})[c] = coeff
    M = DomainMatrix.from_dod(data, (len(rows), len(cols)), QQ)
    return M, rows, cols


def cech_dims(d: int, window: int | None = None) -> tuple[int, int]:
    """``(h0, h1)`` of ``O(d)`` as kernel and cokernel dimensions of the coboundary."""
    window = _resolve(window)
    M, rows, cols = coboundary_matrix(d, window)
    rank = M.rank()
    return len(cols) - rank, len(rows) - rank


def h1_basis_exponents(d: int) -> list[int]:
    """Exponents of the canonical H^1 basis, in order ``-1, -2, ..., d+1``."""
    return list(range(-1, d, -1))


def h0_basis_exponents(d: int) -> list[int]:
    return list(range(0, d + 1))


@dataclass(frozen=True)
class CechClass:
    """A class in H^1(P^1, O(d)) with its canonical coordinates."""

    bundle_degree: int
    representative: LaurentPoly
    coordinates: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coordinates) != max(0, -self.bundle_degree - 1):
            raise ValueError("coordinate vector does not match h^1(O(d))")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coordinates)

    def canonical(self) -> LaurentPoly:
        return LaurentPoly(zip(h1_basis_exponents(self.bundle_degree), self.coordinates))

    def scaled(self, factor) -> "CechClass":
        factor = Fraction(factor)
        return CechClass(self.bundle_degree, self.representative * factor,
                         tuple(c * factor for c in self.coordinates))

    def __add__(self, other: "CechClass") -> "CechClass":
        if other.bundle_degree != self.bundle_degree:
            raise ValueError("cannot add classes of different line bundles")
        return CechClass(self.bundle_degree, self.representative + other.representative,
                         tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __str__(self) -> str:
        coords = ", ".join(str(c) for c in self.coordinates)
        return f"[O({self.bundle_degree}): ({coords})]"


def reduce_class(d: int, cocycle: LaurentPoly, window: int | None = None) -> CechClass:
    """Project an overlap section of ``O(d)`` onto the canonical H^1 basis.

    Monomials ``z**e`` with ``e >= 0`` come from chart 0 and those with
    ``e <= d`` from chart 1; whatever remains is the class.
    """
    window = _resolve(window)
    _check_degree(d, window)
    if not isinstance(cocycle, LaurentPoly):
        cocycle = LaurentPoly(cocycle)
    bad = [e for e in cocycle.exponents() if abs(e) > window]
    if bad:
        raise WindowError(f"cocycle exponents {bad} fall outside [-{window}, {window}]")
    coords = tuple(cocycle[e] for e in h1_basis_exponents(d))
    return CechClass(d, cocycle, coords)


def split_cocycle(d: int, cocycle: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Write ``cocycle = p(z) - z**d q(1/z) + r`` with ``r`` canonical.

    Returns ``(p, q, r)`` with ``p`` a polynomial in ``z`` and ``q`` a
    polynomial in ``w``.  Monomials that could belong to either chart
    (``0 <= e <= d``) are assigned to chart 0.
    """
    p = LaurentPoly((e, c) for e, c in cocycle if e >= 0)
    q = LaurentPoly((d - e, -c) for e, c in cocycle if e < 0 and e <= d)
    r = LaurentPoly((e, c) for e, c in cocycle if d < e < 0)
    return p, q, r


def is_coboundary(d: int, cocycle: LaurentPoly) -> bool:
    return reduce_class(d, cocycle, window=max(_span(cocycle), abs(d) + 2)).is_zero


def _span(p: LaurentPoly) -> int:
    return max((abs(e) for e in p.exponents()), default=0)


def oracle_listing(d: int, window: int | None = None) -> dict:
    """Dimensions from the rank computation plus the canonical bases."""
    h0, h1 = cech_dims(d, window)
    return {
        "degree": d,
        "h0": h0,
        "h1": h1,
        "h0_basis": [_mono(e) for e in h0_basis_exponents(d)],
        "h1_basis": [_mono(e) for e in h1_basis_exponents(d)],
    }


def _mono(e: int) -> str:
    return "1" if e == 0 else ("z" if e == 1 else f"z^{e}")


def classes_matrix(classes: Iterable[CechClass]) -> list[list[Fraction]]:
    return [list(c.coordinates) for c in classes]
