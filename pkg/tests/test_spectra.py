import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affsig.designs import DesignParams, build_affine_geometry, is_admissible
from affsig.exact_linalg import IntPolynomial, Signature, char_poly, det_exact, inertia
from affsig.spectra import (StructuredDetParams, det_c0_closed_form, factor_coefficients,
                            lemma1_closed_form, lemma1_matrix, signature_from_factors,
                            structured_entries, theorem1_signature, theorem2_charpoly,
                            verify_design)

from conftest import corpus_entry, gauss_det

X = IntPolynomial.x()


def const(c):
    return IntPolynomial((c,))


# x^5 (x+6)^3 (x^2 - 18x - 24), the AG(2,2) characteristic polynomial
AG22_CHARPOLY = X ** 5 * (X + const(6)) ** 3 * IntPolynomial((-24, -18, 1))


def test_ag22_charpoly_against_determinants():
    _, _, _, D = corpus_entry("AG(2,2)")
    size = len(D)
    for t in range(-5, 6):
        tid = [[(t if i == j else 0) - D[i][j] for j in range(size)] for i in range(size)]
        assert gauss_det(tid) == AG22_CHARPOLY(t)
    assert char_poly(D) == AG22_CHARPOLY
    assert theorem2_charpoly(2, 1) == AG22_CHARPOLY


# --- structured determinant --------------------------------------------------

def test_lemma1_trivial_cases():
    assert lemma1_closed_form(StructuredDetParams(1, 1, 7, 3, 5)) == 7
    assert lemma1_closed_form(StructuredDetParams(2, 1, 0, 0, 1)) == -1
    assert det_exact(lemma1_matrix(StructuredDetParams(2, 1, 0, 0, 1))) == -1


def test_lemma1_matrix_layout():
    m = lemma1_matrix(StructuredDetParams(2, 2, 1, 2, 3))
    assert m == [[1, 2, 3, 3], [2, 1, 3, 3], [3, 3, 1, 2], [3, 3, 2, 1]]


def test_lemma1_r3_m2_random():
    rng = random.Random(7)
    for _ in range(10):
        a, b, g = (Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3))
        p = StructuredDetParams(3, 2, a, b, g)
        assert lemma1_closed_form(p) == gauss_det(lemma1_matrix(p))


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@settings(max_examples=80)
@given(st.integers(1, 4), st.integers(1, 4), rationals, rationals, rationals)
def test_lemma1_property(r, m, a, b, g):
    p = StructuredDetParams(r, m, a, b, g)
    assert lemma1_closed_form(p) == gauss_det(lemma1_matrix(p))


def test_structured_params_validation():
    with pytest.raises(ValueError):
        StructuredDetParams(0, 1, 1, 1, 1)


# --- factor coefficients -------------------------------------------------------

def test_factors_2_1():
    f = factor_coefficients(2, 1)
    assert (f.linear_root, f.linear_mult) == (0, 2)
    assert f.quad1 == IntPolynomial((0, 6, 1)) and f.quad1_mult == 3
    assert (f.e1, f.e0) == (18, 24)


def test_factors_3_1():
    f = factor_coefficients(3, 1)
    assert (f.linear_root, f.linear_mult) == (2, 3)
    assert f.quad1 == IntPolynomial((-4, 6, 1)) and f.quad1_mult == 8
    # sympy factorization of the AG(2,3) distance matrix gives x^2 - 42x - 172
    assert (f.e1, f.e0) == (42, 172)


def test_factors_reject_inadmissible():
    with pytest.raises(ValueError):
        factor_coefficients(3, 2)


def admissible_grid(n_max=12, mu_max=12):
    return [(n, mu) for n in range(2, n_max + 1) for mu in range(1, mu_max + 1)
            if is_admissible(n, mu)]


@pytest.mark.parametrize("n,mu", admissible_grid())
def test_factor_sweep(n, mu):
    f = factor_coefficients(n, mu)
    p = DesignParams.from_n_mu(n, mu)
    assert f.e0 > 0
    assert f.degree == p.v + p.b
    assert signature_from_factors(n, mu).dim == p.v + p.b
    # sum of squared eigenvalues from the factors; a monic x^2 + bx + c has
    # r1^2 + r2^2 = b^2 - 2c
    c1 = f.quad1.coeffs[0]
    squares = (f.linear_mult * f.linear_root ** 2 + f.quad1_mult * (36 - 2 * c1)
               + f.e1 ** 2 + 2 * f.e0)
    assert squares == _trace_d_squared(p)


def _small(c):
    p = DesignParams.from_n_mu(*c)
    return p.v + p.b <= 200


@pytest.mark.parametrize("n,mu", [c for c in admissible_grid() if _small(c)])
def test_expanded_charpoly(n, mu):
    p = DesignParams.from_n_mu(n, mu)
    poly = theorem2_charpoly(n, mu)
    assert poly.degree == p.v + p.b and poly.coeffs[-1] == 1
    assert poly.coeffs[-2] == 0  # trace(D) = 0
    assert -2 * poly.coeffs[-3] == _trace_d_squared(p)


def _trace_d_squared(p):
    """Entrywise square sum of the block distance matrix, counted by hand."""
    v, b, r, n = p.v, p.b, p.r, p.n
    points = v * (v - 1) * 4
    cross = 2 * v * (r * 1 + (b - r) * 9)
    blocks = b * ((n - 1) * 16 + (b - n) * 4)
    return points + cross + blocks


# --- signatures ------------------------------------------------------------------

def test_theorem1_printed():
    assert theorem1_signature(2, 1) == Signature(1, 4, 5)
    assert theorem1_signature(2, 3) == Signature(12, 11, 10)
    assert theorem1_signature(3, 1) == Signature(12, 9, 0)


def test_signature_from_factors_examples():
    assert signature_from_factors(2, 1) == Signature(1, 4, 5)
    assert signature_from_factors(3, 1) == Signature(12, 9, 0)
    assert signature_from_factors(2, 2) == Signature(8, 8, 6)


@pytest.mark.parametrize("n,mu", [c for c in admissible_grid() if c[0] >= 3])
def test_printed_matches_factors_off_n2(n, mu):
    assert theorem1_signature(n, mu) == signature_from_factors(n, mu)


@pytest.mark.parametrize("mu", range(2, 13))
def test_printed_middle_case_off_by_one(mu):
    printed = theorem1_signature(2, mu)
    derived = signature_from_factors(2, mu)
    p = DesignParams.from_n_mu(2, mu)
    assert derived == Signature(4 * mu, 4 * mu, 4 * mu - 2)
    assert derived.dim == p.v + p.b == printed.dim + 1


def test_corpus_signatures(corpus_design):
    name, d, p, N, D = corpus_design
    assert inertia(D) == signature_from_factors(p.n, p.mu)


# --- Schur pieces and verification ------------------------------------------------

def test_det_c0_formula():
    assert det_c0_closed_form(0, 4) == -48
    assert det_c0_closed_form(2, 4) == -256


def test_structured_entries_identities():
    p = DesignParams.from_n_mu(3, 1)
    for x in (0, 1, 3, Fraction(1, 2)):
        s = structured_entries(p, x)
        x = Fraction(x)
        assert s.alpha - s.beta == x + 4 - Fraction(12) / (x + 2)
        assert s.alpha + (s.m - 1) * s.beta - s.m * s.gamma == x - 2
        f = factor_coefficients(3, 1)
        first = s.alpha + (s.m - 1) * s.beta + s.m * (s.r - 1) * s.gamma
        assert first * (x - 2 * p.v + 2) == x * x - f.e1 * x - f.e0


def test_verify_ag22():
    r = verify_design(build_affine_geometry(2, 2))
    assert r.passed, r.failures()
    assert r.computed_signature == Signature(1, 4, 5)
    assert r.charpoly_equal


def test_verify_ag23():
    r = verify_design(build_affine_geometry(2, 3))
    assert r.passed, r.failures()
    assert r.computed_signature == Signature(12, 9, 0)


def test_verify_sylvester8_flags_printed_signature():
    d = corpus_entry("Sylvester-8")[0]
    r = verify_design(d)
    assert r.charpoly_equal
    assert r.computed_signature == r.factor_signature == Signature(8, 8, 6)
    assert r.printed_signature == Signature(8, 7, 6)
    assert set(r.failures()) == {"inertia == theorem 1 (printed)",
                                 "theorem 1 (printed) sums to v+b"}
    data = r.to_dict()
    assert data["signature"]["computed"] == [8, 8, 6]
    assert all(isinstance(c, str) for c in data["charpoly"]["computed"])
    assert data["passed"] is False
