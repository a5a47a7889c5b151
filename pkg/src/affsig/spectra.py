"""Closed-form spectra of affine design incidence graphs and the harness that
checks them against exact computation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from affsig.designs import Design, DesignParams, incidence_identities, incidence_matrix, validate_affine
from affsig.distance import (DistanceStratification, bfs_distances,
                             closed_form_distance_matrix, diameter, incidence_graph,
                             strata_by_recursion, stratification_identities)
from affsig.exact_linalg import (IntPolynomial, Matrix, Signature, char_poly, det_exact,
                                 ident, inertia, kron, madd, msub, ones, scale, schur_complement,
                                 schur_complement_det, submatrix, to_fractions, trace)

X = IntPolynomial.x()


# ---------------------------------------------------------------------------
# Structured determinant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuredDetParams:
    """r x r grid of m x m blocks: alpha on the diagonal, beta elsewhere in
    diagonal blocks, gamma in every off-diagonal block."""

    r: int
    m: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        if self.r < 1 or self.m < 1:
            raise ValueError("r and m must be positive")


def lemma1_matrix(p: StructuredDetParams) -> Matrix:
    I, J = ident, ones
    return madd(madd(scale(Fraction(p.alpha), kron(I(p.r), I(p.m))),
                     scale(Fraction(p.beta), kron(I(p.r), msub(J(p.m), I(p.m))))),
                scale(Fraction(p.gamma), kron(msub(J(p.r), I(p.r)), J(p.m))))


def lemma1_closed_form(p: StructuredDetParams) -> Fraction:
    a, b, g = Fraction(p.alpha), Fraction(p.beta), Fraction(p.gamma)
    r, m = p.r, p.m
    return ((a + (m - 1) * b + m * (r - 1) * g)
            * (a + (m - 1) * b - m * g) ** (r - 1)
            * (a - b) ** (r * (m - 1)))


def structured_entries(p: DesignParams, x) -> StructuredDetParams:
    """alpha, beta, gamma of ``C2 - C1^t C0^{-1} C1`` at a rational x."""
    x = Fraction(x)
    v, k, mu = p.v, p.k, p.mu
    den = (x + 2) * (x - 2 * v + 2)
    common = (8 * k * k + 9 * v * x + 18 * v - 12 * k * x - 24 * k) / den
    return StructuredDetParams(
        r=p.r, m=p.n,
        alpha=x - 4 * k / (x + 2) - common,
        beta=-(4 + common),
        gamma=-(2 + 4 * mu / (x + 2) + common),
    )


# ---------------------------------------------------------------------------
# Characteristic polynomial factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Theorem2Factors:
    """``(x - linear_root)^(r-1) (x^2 + 6x + c1)^(v-1) (x^2 - e1 x - e0)``."""

    n: int
    mu: int
    linear_root: int
    linear_mult: int
    quad1: IntPolynomial
    quad1_mult: int
    e1: int
    e0: int

    @property
    def quad2(self) -> IntPolynomial:
        return IntPolynomial((-self.e0, -self.e1, 1))

    @property
    def degree(self) -> int:
        return self.linear_mult + 2 * self.quad1_mult + 2


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{what} = {num}/{den} is not an integer")
    return q


def factor_coefficients(n: int, mu: int) -> Theorem2Factors:
    p = DesignParams.from_n_mu(n, mu)
    e1 = _exact_div(2 * (2 * n**3 * mu - mu * n**2 + n**2 - 5 * n + 3), n - 1, "e1")
    e0 = _exact_div((mu * n**2 - 1)
                    * (5 * n**3 * mu - 12 * mu * n**2 + 4 * mu * n - 4 * n**2 + 16 * n - 8),
                    n - 1, "e0")
    if e0 <= 0:
        raise ArithmeticError(f"e0 = {e0} <= 0 at (n, mu) = ({n}, {mu})")
    f = Theorem2Factors(n=n, mu=mu, linear_root=2 * n - 4, linear_mult=p.r - 1,
                        quad1=IntPolynomial((8 - 4 * n * mu, 6, 1)), quad1_mult=p.v - 1,
                        e1=e1, e0=e0)
    assert f.degree == p.v + p.b
    return f


def theorem2_charpoly(n: int, mu: int) -> IntPolynomial:
    f = factor_coefficients(n, mu)
    lin = X - IntPolynomial((f.linear_root,))
    return lin ** f.linear_mult * f.quad1 ** f.quad1_mult * f.quad2


def theorem1_signature(n: int, mu: int) -> Signature:
    """The signature exactly as printed in the published statement."""
    if (n, mu) == (2, 1):
        return Signature(1, 4, 5)
    if n == 2:
        return Signature(4 * mu, 4 * mu - 1, 4 * mu - 2)
    p = DesignParams.from_n_mu(n, mu)
    return Signature(p.b, p.v, 0)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _monic_quadratic_signs(b: int, c: int) -> tuple[int, int, int]:
    """Root signs of x^2 + b x + c, which must have real roots."""
    if b * b - 4 * c < 0:
        raise ArithmeticError(f"x^2 + {b}x + {c} has complex roots")
    if c < 0:
        return (1, 1, 0)
    if c == 0:
        s = _sign(-b)
        return ((s > 0), (s < 0), 1 + (s == 0))
    s = _sign(-b)  # both roots share the sign of their sum -b
    return (2 * (s > 0), 2 * (s < 0), 0)


def signature_from_factors(n: int, mu: int) -> Signature:
    """Signature read off the factored characteristic polynomial."""
    f = factor_coefficients(n, mu)
    plus = minus = zero = 0
    s = _sign(f.linear_root)
    plus += f.linear_mult * (s > 0)
    minus += f.linear_mult * (s < 0)
    zero += f.linear_mult * (s == 0)
    q1 = _monic_quadratic_signs(f.quad1.coeffs[1], f.quad1.coeffs[0])
    plus += f.quad1_mult * q1[0]
    minus += f.quad1_mult * q1[1]
    zero += f.quad1_mult * q1[2]
    q2 = _monic_quadratic_signs(-f.e1, -f.e0)
    plus, minus, zero = plus + q2[0], minus + q2[1], zero + q2[2]
    sig = Signature(plus, minus, zero)
    assert sig.dim == f.degree
    return sig


# ---------------------------------------------------------------------------
# Schur blocks of xI - D
# ---------------------------------------------------------------------------

def schur_blocks(d: Matrix, v: int, x) -> tuple[Matrix, Matrix, Matrix]:
    """C0, C1, C2 of ``xI - D`` split after the v point rows."""
    size = len(d)
    xi_d = msub(scale(Fraction(x), ident(size)), to_fractions(d))
    pts, blks = range(v), range(v, size)
    return submatrix(xi_d, pts, pts), submatrix(xi_d, pts, blks), submatrix(xi_d, blks, blks)


def det_c0_closed_form(x, v: int) -> Fraction:
    x = Fraction(x)
    return (x - 2 * v + 2) * (x + 2) ** (v - 1)


def quadratic_factor_at(p: DesignParams, x) -> Fraction:
    """The first Lemma 1 factor ``alpha + (m-1) beta + m (r-1) gamma`` in
    closed form: (x^2 - e1 x - e0) / (x - 2v + 2)."""
    x = Fraction(x)
    f = factor_coefficients(p.n, p.mu)
    return (x * x - f.e1 * x - f.e0) / (x - 2 * p.v + 2)


# ---------------------------------------------------------------------------
# End-to-end verification
# ---------------------------------------------------------------------------

EVAL_POINTS = (0, 1, 3)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class VerificationReport:
    params: DesignParams
    computed_signature: Signature
    factor_signature: Signature
    printed_signature: Signature
    computed_charpoly: IntPolynomial
    theorem_charpoly: IntPolynomial
    checks: list[Check] = field(default_factory=list)

    @property
    def charpoly_equal(self) -> bool:
        return self.computed_charpoly == self.theorem_charpoly

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "signature": {
                "computed": list(self.computed_signature.as_tuple()),
                "from_factors": list(self.factor_signature.as_tuple()),
                "theorem1_printed": list(self.printed_signature.as_tuple()),
            },
            "charpoly": {
                "computed": self.computed_charpoly.to_json(),
                "theorem2": self.theorem_charpoly.to_json(),
                "equal": self.charpoly_equal,
            },
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_design(d: Design, eval_points=EVAL_POINTS) -> VerificationReport:
    """Run every exact check on a design. Mismatches go into the report;
    only a design that fails the affine axioms raises."""
    p = validate_affine(d)
    checks: list[Check] = []
    N = incidence_matrix(d)

    for name, ok in incidence_identities(N, p).items():
        checks.append(Check(f"incidence: {name}", ok))

    D = bfs_distances(N)
    closed = closed_form_distance_matrix(p, N)
    checks.append(Check("distance: BFS == closed form", D == closed))
    strata = strata_by_recursion(incidence_graph(N))
    for name, ok in stratification_identities(strata, N, p).items():
        checks.append(Check(f"distance: {name}", ok))
    checks.append(Check("distance: recursion == BFS",
                        DistanceStratification(tuple(strata)).distance_matrix() == D))
    checks.append(Check("distance: diameter == 4", diameter(D) == 4))
    checks.append(Check("distance: trace(D) == 0", trace(D) == 0))

    computed = char_poly(D)
    theorem = theorem2_charpoly(p.n, p.mu)
    checks.append(Check("charpoly(D) == theorem 2", computed == theorem))

    sig = inertia(D)
    from_factors = signature_from_factors(p.n, p.mu)
    printed = theorem1_signature(p.n, p.mu)
    size = p.v + p.b
    checks.append(Check("inertia sums to v+b", sig.dim == size))
    checks.append(Check("inertia == signature from factors", sig == from_factors,
                        f"computed {sig}, from factors {from_factors}"))
    checks.append(Check("inertia == theorem 1 (printed)", sig == printed,
                        f"computed {sig}, printed {printed}"))
    checks.append(Check("theorem 1 (printed) sums to v+b", printed.dim == size,
                        f"{printed} sums to {printed.dim}, v+b = {size}"))

    for x in eval_points:
        checks.extend(_schur_checks(D, p, x))
    return VerificationReport(p, sig, from_factors, printed, computed, theorem, checks)


def _schur_checks(D: Matrix, p: DesignParams, x) -> list[Check]:
    c0, c1, c2 = schur_blocks(D, p.v, x)
    full = det_exact(msub(scale(Fraction(x), ident(len(D))), to_fractions(D)))
    via_schur = schur_complement_det(c0, c1, c2)
    out = [
        Check(f"x={x}: det(xI - D) == det C0 * det(Schur)", full == via_schur,
              f"{full} vs {via_schur}"),
        Check(f"x={x}: det C0 closed form", det_exact(c0) == det_c0_closed_form(x, p.v)),
    ]
    sp = structured_entries(p, x)
    schur = schur_complement(c0, c1, c2)
    out.append(Check(f"x={x}: Schur complement has the structured block form",
                     schur == lemma1_matrix(sp)))
    out.append(Check(f"x={x}: lemma 1 closed form == det(Schur)",
                     lemma1_closed_form(sp) == det_exact(schur)))
    xf = Fraction(x)
    out.append(Check(f"x={x}: alpha - beta == x + 4 - 4 n mu / (x + 2)",
                     sp.alpha - sp.beta == xf + 4 - Fraction(4 * p.n * p.mu) / (xf + 2)))
    out.append(Check(f"x={x}: alpha + (m-1) beta - m gamma == x - 2n + 4",
                     sp.alpha + (sp.m - 1) * sp.beta - sp.m * sp.gamma == xf - 2 * p.n + 4))
    out.append(Check(f"x={x}: alpha + (m-1) beta + m (r-1) gamma closed form",
                     sp.alpha + (sp.m - 1) * sp.beta + sp.m * (sp.r - 1) * sp.gamma
                     == quadratic_factor_at(p, x)))
    return out
