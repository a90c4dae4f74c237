from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from obstructor.cech import (
    DEFAULT_WINDOW, WINDOW_ENV, CechClass, WindowError, cech_dims, coboundary_matrix,
    convention_fingerprint, default_window, h1_basis_exponents, is_coboundary, oracle_listing,
    reduce_class, split_cocycle,
)
from obstructor.laurent import LaurentPoly

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cocycles = st.dictionaries(st.integers(-10, 10), small, max_size=6).map(LaurentPoly)


def solve_coordinates(d, cocycle):
    """Independent oracle: solve cocycle = basis combination + p(z) - z^d q(1/z)."""
    span = max([abs(e) for e in cocycle.exponents()] + [abs(d) + 2])
    exps = list(range(-span, span + 1))
    cols = [[1 if x == e else 0 for x in exps] for e in h1_basis_exponents(d)]
    cols += [[1 if x == j else 0 for x in exps] for j in range(0, span + 1)]
    cols += [[-1 if x == d - m else 0 for x in exps] for m in range(0, span + d + 1) if abs(d - m) <= span]
    A = sympy.Matrix(cols).T
    b = sympy.Matrix([sympy.Rational(cocycle[x].numerator, cocycle[x].denominator) for x in exps])
    sol, params = A.gauss_jordan_solve(b)
    sol = sol.subs({p: 0 for p in params})
    n = len(h1_basis_exponents(d))
    return tuple(Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in sol[:n])


@pytest.mark.parametrize("d,expected", [(3, (4, 0)), (-2, (0, 1)), (-1, (0, 0)), (0, (1, 0)), (-5, (0, 4))])
def test_dims_examples(d, expected):
    assert cech_dims(d) == expected


def test_bott_equivalence_range():
    for d in range(-12, 13):
        assert cech_dims(d) == (max(0, d + 1), max(0, -d - 1))


def test_dims_stable_in_window():
    for w in (16, 40):
        assert cech_dims(-7, w) == cech_dims(-7)


def test_reduce_examples():
    # z^-1 generates H^1(O(-2)); z^-2 is already a coboundary there
    assert reduce_class(-2, LaurentPoly.monomial(-1)).coordinates == (1,)
    assert reduce_class(-2, LaurentPoly.monomial(-2)).is_zero
    c = reduce_class(-4, LaurentPoly({-1: 2, -3: 5, 4: 1, -9: 7}))
    assert c.coordinates == (2, 0, 5)
    assert reduce_class(1, LaurentPoly({-1: 1})).coordinates == ()


@settings(max_examples=60, deadline=None)
@given(st.integers(-6, 3), cocycles)
def test_reduce_matches_linear_solve(d, c):
    assert reduce_class(d, c).coordinates == solve_coordinates(d, c)


@given(st.integers(-8, 4), cocycles)
def test_reduce_idempotent(d, c):
    once = reduce_class(d, c)
    again = reduce_class(d, once.canonical())
    assert again.coordinates == once.coordinates


@given(st.integers(-8, 4), cocycles, cocycles, small)
def test_reduce_linear(d, a, b, lam):
    lhs = reduce_class(d, a * lam + b)
    rhs = reduce_class(d, a).scaled(lam) + reduce_class(d, b)
    assert lhs.coordinates == rhs.coordinates


@given(st.integers(-8, 4), cocycles)
def test_split_reconstructs(d, c):
    p, q, r = split_cocycle(d, c)
    back = p - LaurentPoly({d - m: v for m, v in q}) + r
    assert back == c
    assert all(e >= 0 for e in p.exponents()) and all(m >= 0 for m in q.exponents())
    assert is_coboundary(d, c) == r.is_zero()


def test_coboundary_image_is_zero():
    d = -4
    p = LaurentPoly({0: 3, 5: 1})
    q = LaurentPoly({0: 1, 2: -2})
    cob = p - LaurentPoly({d - m: v for m, v in q})
    assert is_coboundary(d, cob)


def test_window_errors(monkeypatch):
    with pytest.raises(WindowError):
        cech_dims(10, window=8)
    with pytest.raises(WindowError):
        reduce_class(-2, LaurentPoly.monomial(-30), window=16)
    monkeypatch.setenv(WINDOW_ENV, "12")
    assert default_window() == 12
    monkeypatch.setenv(WINDOW_ENV, "zero")
    with pytest.raises(WindowError):
        default_window()
    monkeypatch.delenv(WINDOW_ENV)
    assert default_window() == DEFAULT_WINDOW


def test_class_shape_checked():
    with pytest.raises(ValueError):
        CechClass(-3, LaurentPoly(), (Fraction(1),))
    with pytest.raises(ValueError):
        CechClass(-3, LaurentPoly(), (1, 0)) + CechClass(-4, LaurentPoly(), (0, 0, 0))


def test_matrix_shape():
    M, rows, cols = coboundary_matrix(-2, 10)
    assert M.shape == (len(rows), len(cols)) == (21, 11 + 9)


@pytest.mark.parametrize("d,h0,h1,h1_basis", [(-2, 0, 1, ["z^-1"]), (0, 1, 0, []), (5, 6, 0, [])])
def test_oracle_listing(d, h0, h1, h1_basis):
    out = oracle_listing(d)
    assert (out["h0"], out["h1"], out["h1_basis"]) == (h0, h1, h1_basis)
    assert len(out["h0_basis"]) == h0


def test_fingerprint_stable():
    assert convention_fingerprint() == convention_fingerprint()
    assert len(convention_fingerprint()) == 16
