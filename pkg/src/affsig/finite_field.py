"""Arithmetic in GF(p^k), just enough to enumerate affine geometries.

Elements are little-endian coefficient tuples of polynomials over GF(p)
reduced modulo a fixed monic irreducible polynomial of degree k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_FIELD_SIZE = 2 ** 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if (c == 1 and mono) else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) with ``modulus`` given as k+1 ascending coefficients, monic."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    def element(self, *coeffs: int) -> FieldElement:
        """Build an element from its low-order coefficients (zero padded)."""
        if len(coeffs) > self.k:
            raise ValueError(f"element has more than {self.k} coefficients")
        c = [x % self.p for x in coeffs] + [0] * (self.k - len(coeffs))
        return FieldElement(tuple(c))

    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.k)

    def one(self) -> FieldElement:
        return self.element(1)


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = [x % p for x in a]
    k = len(mod) - 1
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i]
        if c:
            for j in range(k + 1):
                a[i - k + j] = (a[i - k + j] - c * mod[j]) % p
    return a[:k] + [0] * (k - len(a))


def _has_factor(poly: tuple[int, ...], p: int) -> bool:
    """True if the monic ``poly`` has a monic factor of degree 1..deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = low + (1,)
            if not any(_poly_mod(list(poly), div, p)):
                return True
    return False


def make_field(p: int, k: int) -> FieldSpec:
    """GF(p^k) using the lexicographically smallest monic irreducible
    modulus, coefficients compared from the constant term upward."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"bad degree {k}")
    if p ** k > MAX_FIELD_SIZE:
        raise ValueError(f"field of size {p}^{k} exceeds {MAX_FIELD_SIZE}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=k):
        if low[0] == 0:
            continue  # divisible by x
        cand = low + (1,)
        if not _has_factor(cand, p):
            return FieldSpec(p, k, cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def is_irreducible(f: FieldSpec) -> bool:
    return f.k == 1 or not _has_factor(f.modulus, f.p)


def add(a: FieldElement, b: FieldElement, f: FieldSpec) -> FieldElement:
    return FieldElement(tuple((x + y) % f.p for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: FieldElement, b: FieldElement, f: FieldSpec) -> FieldElement:
    return FieldElement(tuple((x - y) % f.p for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: FieldElement, f: FieldSpec) -> FieldElement:
    return FieldElement(tuple(-x % f.p for x in a.coeffs))


def mul(a: FieldElement, b: FieldElement, f: FieldSpec) -> FieldElement:
    prod = [0] * (2 * f.k - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    return FieldElement(tuple(_poly_mod(prod, f.modulus, f.p)))


def power(a: FieldElement, e: int, f: FieldSpec) -> FieldElement:
    result = f.one()
    while e:
        if e & 1:
            result = mul(result, a, f)
        a = mul(a, a, f)
        e >>= 1
    return result


def inv(a: FieldElement, f: FieldSpec) -> FieldElement:
    if a.is_zero():
        raise ZeroDivisionError("division by zero")
    # a^(q-2) is the inverse in a field of order q
    return power(a, f.q - 2, f)


def elements(f: FieldSpec) -> list[FieldElement]:
    """All q elements in base-p counting order of the coefficient vector
    (constant term varies fastest), so 0 comes first and 1 second."""
    return [from_index(i, f) for i in range(f.q)]


def from_index(i: int, f: FieldSpec) -> FieldElement:
    digits = []
    for _ in range(f.k):
        i, d = divmod(i, f.p)
        digits.append(d)
    return FieldElement(tuple(digits))


def to_index(a: FieldElement, f: FieldSpec) -> int:
    i = 0
    for c in reversed(a.coeffs):
        i = i * f.p + c
    return i
