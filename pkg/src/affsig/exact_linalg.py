"""Exact dense linear algebra over the integers and rationals.

Matrices are plain lists of rows holding ``int`` or ``fractions.Fraction``.
Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

Number = Union[int, Fraction]
Matrix = list  # list[list[Number]]


# ---------------------------------------------------------------------------
# Builders and elementwise helpers
# ---------------------------------------------------------------------------

def zeros(s: int, t: int | None = None) -> Matrix:
    t = s if t is None else t
    return [[0] * t for _ in range(s)]


def ones(s: int, t: int | None = None) -> Matrix:
    t = s if t is None else t
    return [[1] * t for _ in range(s)]


def ident(s: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(s)] for i in range(s)]


def diag(values: Sequence[Number]) -> Matrix:
    m = zeros(len(values))
    for i, a in enumerate(values):
        m[i][i] = a
    return m


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: the (i, j) block of the result is ``a[i][j] * b``."""
    (s1, t1), (s2, t2) = shape(a), shape(b)
    out = zeros(s1 * s2, t1 * t2)
    for i in range(s1):
        for j in range(t1):
            aij = a[i][j]
            if aij == 0:
                continue
            for k in range(s2):
                row = out[i * s2 + k]
                bk = b[k]
                for l in range(t2):
                    row[j * t2 + l] = aij * bk[l]
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c: Number, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def block(rows: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of conformal blocks."""
    out = []
    for brow in rows:
        height = len(brow[0])
        for i in range(height):
            line = []
            for blk in brow:
                line.extend(blk[i])
            out.append(line)
    return out


def submatrix(a: Matrix, rows: range, cols: range) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def is_symmetric(a: Matrix) -> bool:
    n, m = shape(a)
    return n == m and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def trace(a: Matrix) -> Number:
    return sum(a[i][i] for i in range(len(a)))


def to_fractions(a: Matrix) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


# ---------------------------------------------------------------------------
# Determinants and inverses
# ---------------------------------------------------------------------------

def _bareiss(a: Matrix) -> int:
    m = [list(row) for row in a]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def det_exact(a: Matrix) -> Number:
    """Exact determinant.

    Integer input goes through fraction-free Bareiss elimination (every
    division is exact); anything containing a ``Fraction`` is scaled to an
    integer matrix by the common denominator of each row first.
    """
    n, m = shape(a)
    if n != m:
        raise ValueError(f"determinant of non-square {n}x{m} matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        return _bareiss(a)
    scaled, denom = [], 1
    for row in a:
        row = [Fraction(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scaled.append([int(x * lcm) for x in row])
        denom *= lcm
    return Fraction(_bareiss(scaled), denom)


def inverse_exact(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals. Raises on singular input."""
    n, m = shape(a)
    if n != m:
        raise ValueError("inverse of non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        rc = aug[c]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], rc)]
    return [row[n:] for row in aug]


def schur_complement(c0: Matrix, c1: Matrix, c2: Matrix) -> Matrix:
    """``C2 - C1^t C0^{-1} C1`` over the rationals."""
    inv = inverse_exact(c0)
    c1t = transpose(c1)
    return msub(to_fractions(c2), matmul(matmul(c1t, inv), c1))


def schur_complement_det(c0: Matrix, c1: Matrix, c2: Matrix) -> Fraction:
    """Determinant of ``[[C0, C1], [C1^t, C2]]`` computed as
    ``det C0 * det(C2 - C1^t C0^{-1} C1)``."""
    (s0, t0), (s1, t1), (s2, t2) = shape(c0), shape(c1), shape(c2)
    if s0 != t0 or s1 != s0 or s2 != t2 or t1 != s2:
        raise ValueError("blocks are not conformal")
    d0 = det_exact(c0)
    if d0 == 0:
        raise ZeroDivisionError("C0 is singular")
    return Fraction(d0) * Fraction(det_exact(schur_complement(c0, c1, c2)))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate integer polynomial, coefficients in ascending degree.

    The zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        c = _trim(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: Number) -> Number:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                              for i in range(n)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        result, base = IntPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls([int(s) for s in data])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            terms.append(f"{coef}{mono}" if mono else coef)
        s = " ".join(terms)
        return s[1:] if s.startswith("+") else s


def _primitive(coeffs: Sequence[Fraction]) -> list[int]:
    """Scale a rational coefficient list by a positive constant so it
    becomes a primitive integer list. Signs of values are preserved."""
    c = _trim(coeffs)
    if not c:
        return []
    den = 1
    for x in c:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    ints = [int(Fraction(x) * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def _divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Polynomial division over Q on ascending coefficient lists."""
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a = list(_trim(a))
    return list(_trim(q)), a


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        _, r = _divmod(x, y)
        x, y = y, _primitive(r)
    x = _primitive(x)
    if x and x[-1] < 0:
        x = [-c for c in x]
    return IntPolynomial(x)


def poly_exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    q, r = _divmod(a.coeffs, b.coeffs)
    if r or any(Fraction(c).denominator != 1 for c in q):
        raise ValueError("division is not exact over the integers")
    return IntPolynomial([int(c) for c in q])


# ---------------------------------------------------------------------------
# Characteristic polynomial, Sturm sequences, inertia
# ---------------------------------------------------------------------------

def char_poly(m: Matrix) -> IntPolynomial:
    """``det(xI - m)`` for a square integer matrix (Berkowitz; division free)."""
    n, k = shape(m)
    if n != k:
        raise ValueError("characteristic polynomial of non-square matrix")
    if n == 0:
        return IntPolynomial((1,))
    # descending-degree coefficients of the leading r x r principal minor
    c = [1, -m[0][0]]
    for r in range(1, n):
        row = m[r][:r]
        vec = [m[i][r] for i in range(r)]
        t = [1, -m[r][r]]
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(m[i][j] * vec[j] for j in range(r)) for i in range(r)]
        c = [sum(t[i - j] * c[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
             for i in range(r + 2)]
    return IntPolynomial(reversed(c))


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``p``; each remainder is rescaled by a positive
    constant to keep coefficients primitive."""
    if p.is_zero:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while not seq[-1].is_zero:
        _, r = _divmod(seq[-2].coeffs, seq[-1].coeffs)
        seq.append(IntPolynomial(_primitive([-x for x in r])))
    return seq[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: IntPolynomial, t) -> int:
    if t == float("inf"):
        return _sign(p.coeffs[-1])
    if t == float("-inf"):
        return _sign(p.coeffs[-1]) * (-1) ** p.degree
    return _sign(p(t))


def _variations(seq: list[IntPolynomial], t) -> int:
    signs = [s for s in (_sign_at(p, t) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


NEG_INF = float("-inf")
POS_INF = float("inf")


def sturm_count(p: IntPolynomial, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of ``p`` in the open interval (lo, hi).

    Finite endpoints must be rationals. The infinities are only compared
    against, never used in arithmetic.
    """
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    if not lo < hi:
        return 0
    # divide out rational endpoints that are roots so neither endpoint is a root
    for end in (lo, hi):
        if end in (NEG_INF, POS_INF):
            continue
        end = Fraction(end)
        lin = IntPolynomial((-end.numerator, end.denominator))
        while p(end) == 0:
            p = poly_exact_div(p, lin)
    if p.degree < 1:
        return 0
    seq = sturm_sequence(p)
    lo_v = lo if lo in (NEG_INF, POS_INF) else Fraction(lo)
    hi_v = hi if hi in (NEG_INF, POS_INF) else Fraction(hi)
    return _variations(seq, lo_v) - _variations(seq, hi_v)


@dataclass(frozen=True)
class Signature:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    def __str__(self) -> str:
        return str(self.as_tuple())


def root_signs(p: IntPolynomial) -> Signature:
    """Positive, negative and zero root counts of a real-rooted polynomial,
    with multiplicity.

    The zero count is the number of trailing zero coefficients. The rest
    come from the multiplicity strata ``p, gcd(p, p'), gcd of that with its
    derivative, ...``: a root of multiplicity ``m`` is a distinct root of the
    first ``m`` strata, so summing distinct counts over strata recovers
    multiplicities.
    """
    if p.is_zero:
        raise ValueError("root signs of the zero polynomial")
    n_zero = next(i for i, c in enumerate(p.coeffs) if c != 0)
    g = IntPolynomial(p.coeffs[n_zero:])
    n_plus = n_minus = 0
    while g.degree > 0:
        n_plus += sturm_count(g, 0, POS_INF)
        n_minus += sturm_count(g, NEG_INF, 0)
        g = poly_gcd(g, g.derivative())
    sig = Signature(n_plus, n_minus, n_zero)
    if sig.dim != p.degree:
        raise ValueError(f"polynomial of degree {p.degree} is not real-rooted")
    return sig


def inertia(m: Matrix) -> Signature:
    """Exact signature (n+, n-, n0) of a symmetric integer matrix."""
    if not is_symmetric(m):
        raise ValueError("inertia requires a symmetric matrix")
    return root_signs(char_poly(m))
