"""Resolutions, Hilbert polynomials, and family matching for determinantal data."""

import math
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from hilbdim.determinantal import (
    DegreeMatrix,
    HilbertPoly,
    chi_poly,
    degree_genus,
    en_resolution,
    hilbert_function,
    hilbert_polynomial,
    match_family,
)
from hilbdim.errors import NonIntegralError
from hilbdim.families import del_pezzo3, hqf, invariant_set, scroll_p2

P1_DERIVED = HilbertPoly((1, Fraction(11, 6), Fraction(5, 2), Fraction(5, 3)))
P2 = HilbertPoly((1, Fraction(10, 3), 1, Fraction(5, 3)))
P3 = HilbertPoly((1, Fraction(7, 3), Fraction(5, 2), Fraction(7, 6)))

M1 = DegreeMatrix((0, 0, 0), (1, 1, 1, 1, 1), 6)
M2 = DegreeMatrix((0, 0), (1, 1, 1, 3), 6)
M3 = DegreeMatrix((0, 0), (1, 1, 1, 2), 6)


def test_degree_matrix_validation():
    assert M1.t == 3 and M1.c == 3
    assert DegreeMatrix((0,), (3,), 6).c == 1
    with pytest.raises(ValueError):
        DegreeMatrix((0, 0), (1,), 6)  # fewer targets than sources
    with pytest.raises(ValueError):
        DegreeMatrix((1,), (1, 1), 6)  # degree-zero entries
    with pytest.raises(ValueError):
        DegreeMatrix((0,), (1, 2), 0)


def test_en_resolution_terms():
    assert en_resolution(M1) == [
        (1, ((-3, 10),)),
        (2, ((-4, 15),)),
        (3, ((-5, 6),)),
    ]
    assert en_resolution(M3) == [
        (1, ((-2, 3), (-3, 3))),
        (2, ((-3, 2), (-4, 6))),
        (3, ((-5, 3),)),
    ]
    assert en_resolution(DegreeMatrix((0,), (3,), 6)) == [(1, ((-3, 1),))]
    # twisted sources shift every term by the source degree bookkeeping
    assert en_resolution(DegreeMatrix((-1,), (2,), 4)) == [(1, ((-3, 1),))]


def test_hilbert_polynomials():
    assert hilbert_polynomial(M3) == P3
    assert hilbert_polynomial(M2) == P2
    assert hilbert_polynomial(M1) == P1_DERIVED


def test_hypersurface_polynomial():
    cubic = hilbert_polynomial(DegreeMatrix((0,), (3,), 6))
    for s in range(0, 9):
        assert cubic(s) == math.comb(s + 6, 6) - math.comb(s + 3, 6)


def test_hilbert_function_values():
    assert hilbert_function(M3, 1) == 7
    assert hilbert_function(M1, 0) == 1
    assert hilbert_function(M2, 2) == 25
    with pytest.raises(ValueError):
        hilbert_function(M3, -1)


def _sweep_matrices():
    out = []
    for t in range(1, 4):
        for c in range(1, 4):
            width = t + c - 1
            for degrees in combinations_with_replacement((1, 2, 3), width):
                out.append(DegreeMatrix((0,) * t, degrees, 6))
    return out


def test_polynomial_degree_is_ambient_minus_codim():
    for m in _sweep_matrices():
        p = hilbert_polynomial(m)
        assert p.degree == m.N - m.c, f"degree drop at {m}"
        assert p.leading > 0


def test_function_eventually_agrees_with_polynomial():
    for m in _sweep_matrices()[::7]:
        p = hilbert_polynomial(m)
        start = max(
            -twist for _, terms in en_resolution(m) for twist, _ in terms
        )
        for s in range(start, start + 4):
            assert hilbert_function(m, s) == p(s)


def test_linear_normality_of_examples():
    for m in (M1, M2, M3):
        assert hilbert_polynomial(m)(1) == m.N + 1


def test_degree_genus():
    assert degree_genus(P3) == (7, 3)
    assert degree_genus(P2) == (10, 9)
    assert degree_genus(P1_DERIVED) == (10, 6)
    with pytest.raises(NonIntegralError):
        degree_genus(HilbertPoly((1, 0, 0)))  # not a cubic
    with pytest.raises(NonIntegralError):
        degree_genus(HilbertPoly((0, 0, 0, Fraction(1, 4))))


def test_chi_poly_matches_riemann_roch():
    assert chi_poly(invariant_set(scroll_p2(6, 5, 15))) == P1_DERIVED
    assert chi_poly(invariant_set(hqf(7, 3, 6))) == P3
    assert chi_poly(invariant_set(del_pezzo3(10, 9, 6, 3))) == P2


def test_match_family_examples():
    rep = match_family(M3, hqf(7, 3, 6))
    assert rep.passed and rep.polynomial_match and rep.degree_genus_match
    assert (rep.dim_computed, rep.dim_published) == (64, 64)

    rep = match_family(M2, del_pezzo3(10, 9, 6, 3))
    assert rep.passed
    assert (rep.dim_computed, rep.dim_published) == (114, 114)
    assert any("transposed" in note for note in rep.notes)

    rep = match_family(M1, scroll_p2(6, 5, 15))
    assert rep.passed
    assert (rep.dim_computed, rep.dim_published) == (72, 72)
    assert any("disagrees with the resolution computation" in note for note in rep.notes)


def test_match_family_unknown_data():
    rep = match_family(DegreeMatrix((0, 0), (1, 1, 2, 2), 6), scroll_p2(6, 4, 9))
    assert rep.dim_published is None and rep.dim_match is None
    assert any("no published locus dimension" in note for note in rep.notes)


def test_poly_str_and_call():
    assert str(P3) == "7/6*t^3 + 5/2*t^2 + 7/3*t + 1"
    assert P3(2) == Fraction(25)
    assert HilbertPoly((0, 0)).degree == -1
