"""Affine resolvable designs: constructors, validation and incidence matrices."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

from affsig import finite_field as ff
from affsig.exact_linalg import Matrix, kron, ident, ones, msub, matmul, transpose, scale, madd


class DesignError(ValueError):
    """A design failed one of the affine axioms.

    ``code`` is one of ``malformed``, ``not-2-design``, ``not-resolvable``,
    ``not-affine`` or ``parameter-mismatch``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[tuple[int, ...], ...]
    parallel_classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        object.__setattr__(self, "parallel_classes",
                           tuple(tuple(c) for c in self.parallel_classes))
        self._check_structure()

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        return len(self.parallel_classes)

    def _check_structure(self):
        if self.v < 1:
            raise DesignError("malformed", "design needs at least one point")
        for j, blk in enumerate(self.blocks):
            if list(blk) != sorted(set(blk)):
                raise DesignError("malformed", f"block {j} is not strictly ascending")
            if blk and (blk[0] < 0 or blk[-1] >= self.v):
                raise DesignError("malformed", f"block {j} has a point outside [0, {self.v})")
        seen = sorted(j for cls in self.parallel_classes for j in cls)
        if seen != list(range(self.b)):
            raise DesignError("not-resolvable",
                              "parallel classes do not partition the block set")
        for c, cls in enumerate(self.parallel_classes):
            pts = sorted(p for j in cls for p in self.blocks[j])
            if pts != list(range(self.v)):
                raise DesignError("not-resolvable",
                                  f"parallel class {c} does not partition the points")

    def canonical(self) -> "Design":
        """Same design with blocks renumbered in parallel-class order."""
        order = [j for cls in self.parallel_classes for j in cls]
        blocks = [self.blocks[j] for j in order]
        classes, i = [], 0
        for cls in self.parallel_classes:
            classes.append(tuple(range(i, i + len(cls))))
            i += len(cls)
        return Design(self.v, tuple(blocks), tuple(classes))

    def to_json(self) -> str:
        d = self.canonical()
        return json.dumps({"v": d.v,
                           "blocks": [list(b) for b in d.blocks],
                           "parallel_classes": [list(c) for c in d.parallel_classes]})

    @classmethod
    def from_json(cls, text: str) -> "Design":
        try:
            data = json.loads(text)
            v = data["v"]
            blocks = data["blocks"]
            classes = data["parallel_classes"]
        except (ValueError, KeyError, TypeError) as exc:
            raise DesignError("malformed", f"bad design JSON: {exc}") from None
        if not (isinstance(v, int)
                and all(isinstance(p, int) for blk in blocks for p in blk)
                and all(isinstance(j, int) for c in classes for j in c)):
            raise DesignError("malformed", "design JSON must contain integers only")
        return cls(v, blocks, classes)

    def save(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "Design":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise DesignError("malformed", f"cannot read {path}: {exc.strerror}") from None
        return cls.from_json(text)


@dataclass(frozen=True)
class DesignParams:
    v: int
    b: int
    r: int
    k: int
    lam: int
    n: int
    mu: int

    @classmethod
    def from_n_mu(cls, n: int, mu: int) -> "DesignParams":
        """Parameters of an AD(n, mu); raises unless every quotient is exact."""
        if n < 2 or mu < 1:
            raise DesignError("parameter-mismatch", f"need n >= 2, mu >= 1, got ({n}, {mu})")
        if (n * mu - 1) % (n - 1) or (n * n * mu - 1) % (n - 1):
            raise DesignError("parameter-mismatch",
                              f"(n, mu) = ({n}, {mu}) gives non-integral lambda or r")
        v = n * n * mu
        r = (v - 1) // (n - 1)
        return cls(v=v, b=v + r - 1, r=r, k=n * mu, lam=(n * mu - 1) // (n - 1), n=n, mu=mu)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.v, self.b, self.r, self.k, self.lam, self.n, self.mu)

    def to_dict(self) -> dict:
        return {"v": self.v, "b": self.b, "r": self.r, "k": self.k,
                "lambda": self.lam, "n": self.n, "mu": self.mu}


def is_admissible(n: int, mu: int) -> bool:
    try:
        DesignParams.from_n_mu(n, mu)
    except DesignError:
        return False
    return True


# ---------------------------------------------------------------------------
# Affine geometries
# ---------------------------------------------------------------------------

def build_affine_geometry(m: int, p: int, k: int = 1) -> Design:
    """Points and hyperplanes of AG(m, p^k).

    One parallel class per normalized nonzero functional ``a`` (first
    nonzero coordinate 1); its blocks are the cosets ``{x : a.x = c}``.
    """
    if m < 2:
        raise DesignError("malformed", f"AG(m, q) needs m >= 2, got m = {m}")
    f = ff.make_field(p, k)
    q = f.q
    if q ** m > 4096:
        raise DesignError("malformed", f"AG({m},{q}) has more than 4096 points")
    els = ff.elements(f)
    # index-level tables; the field is small (q <= 64)
    add_t = [[ff.to_index(ff.add(a, b, f), f) for b in els] for a in els]
    mul_t = [[ff.to_index(ff.mul(a, b, f), f) for b in els] for a in els]

    points = list(itertools.product(range(q), repeat=m))
    functionals = [a for a in itertools.product(range(q), repeat=m)
                   if any(a) and a[next(i for i, c in enumerate(a) if c)] == 1]
    blocks, classes = [], []
    for a in functionals:
        cosets: list[list[int]] = [[] for _ in range(q)]
        for idx, x in enumerate(points):
            s = 0
            for ai, xi in zip(a, x):
                s = add_t[s][mul_t[ai][xi]]
            cosets[s].append(idx)
        classes.append(tuple(range(len(blocks), len(blocks) + q)))
        blocks.extend(tuple(c) for c in cosets)
    return Design(len(points), tuple(blocks), tuple(classes))


# ---------------------------------------------------------------------------
# Hadamard matrices and their affine designs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HadamardMatrix:
    order: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        h = [list(r) for r in self.entries]
        if len(h) != self.order or any(len(r) != self.order for r in h):
            raise ValueError("Hadamard matrix has wrong shape")
        if any(x not in (1, -1) for r in h for x in r):
            raise ValueError("Hadamard matrix entries must be +-1")
        if matmul(h, transpose(h)) != scale(self.order, ident(self.order)):
            raise ValueError("H H^t != order * I")

    @property
    def is_normalized(self) -> bool:
        return (all(x == 1 for x in self.entries[0])
                and all(row[0] == 1 for row in self.entries))


def _normalize(h: Matrix) -> Matrix:
    h = [[x * row[0] for x in row] for row in h]
    first = h[0]
    return [[x * s for x, s in zip(row, first)] for row in h]


def build_hadamard_sylvester(t: int) -> HadamardMatrix:
    if t < 0 or 2 ** t > 256:
        raise ValueError(f"Sylvester order 2^{t} out of range [1, 256]")
    h = [[1]]
    for _ in range(t):
        h = [row + row for row in h] + [row + [-x for x in row] for row in h]
    return HadamardMatrix(len(h), tuple(tuple(r) for r in h))


def legendre(a: int, q: int) -> int:
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def build_hadamard_paley(q: int) -> HadamardMatrix:
    """Paley-I: ``H = I + S`` with ``S`` the skew core bordered by ones,
    then normalized."""
    if not ff.is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 4 != 3:
        raise ValueError(f"Paley-I inapplicable: {q} is not 3 mod 4")
    if q + 1 > 256:
        raise ValueError(f"Paley order {q + 1} exceeds 256")
    s = [[0] + [1] * q]
    for i in range(q):
        s.append([-1] + [legendre(j - i, q) for j in range(q)])
    h = madd(ident(q + 1), s)
    h = _normalize(h)
    return HadamardMatrix(q + 1, tuple(tuple(r) for r in h))


def hadamard_to_affine_design(h: HadamardMatrix) -> Design:
    """AD(2, mu) from a normalized Hadamard matrix of order 4 mu: each
    non-constant column gives a class {+1 rows, -1 rows}."""
    if h.order < 4:
        raise DesignError("malformed", f"Hadamard order {h.order} is too small (need >= 4)")
    if not h.is_normalized:
        raise DesignError("malformed", "Hadamard matrix is not normalized")
    blocks, classes = [], []
    for j in range(1, h.order):
        plus = tuple(i for i in range(h.order) if h.entries[i][j] == 1)
        minus = tuple(i for i in range(h.order) if h.entries[i][j] == -1)
        classes.append((len(blocks), len(blocks) + 1))
        blocks.extend([plus, minus])
    return Design(h.order, tuple(blocks), tuple(classes))


# ---------------------------------------------------------------------------
# Validation and incidence
# ---------------------------------------------------------------------------

def validate_affine(d: Design) -> DesignParams:
    """Check the affine resolvable axioms from scratch and return the
    parameters inferred from the block structure (n = v/k, mu = k/n)."""
    d._check_structure()
    sizes = {len(b) for b in d.blocks}
    if len(sizes) != 1:
        raise DesignError("not-2-design", f"block sizes vary: {sorted(sizes)}")
    k = sizes.pop()
    if not 0 < k < d.v:
        raise DesignError("not-2-design", f"trivial block size {k}")

    cover = [[0] * d.v for _ in range(d.v)]
    for blk in d.blocks:
        for a, b in itertools.combinations(blk, 2):
            cover[a][b] += 1
    lams = {cover[a][b] for a in range(d.v) for b in range(a + 1, d.v)}
    if len(lams) != 1:
        raise DesignError("not-2-design", f"pair coverage is not constant: {sorted(lams)}")
    lam = lams.pop()

    class_of = {j: c for c, cls in enumerate(d.parallel_classes) for j in cls}
    sets = [set(b) for b in d.blocks]
    mus = set()
    for i, j in itertools.combinations(range(d.b), 2):
        if class_of[i] != class_of[j]:
            mus.add(len(sets[i] & sets[j]))
    if len(mus) != 1:
        raise DesignError("not-affine",
                          f"non-parallel intersections are not constant: {sorted(mus)}")
    mu = mus.pop()

    if d.v % k or k % (d.v // k):
        raise DesignError("parameter-mismatch", f"v = {d.v}, k = {k} do not give integral n, mu")
    n = d.v // k
    if n < 2 or k // n != mu:
        raise DesignError("parameter-mismatch",
                          f"intersection size {mu} != k/n = {k}/{n}")
    try:
        expected = DesignParams.from_n_mu(n, mu)
    except DesignError as exc:
        raise DesignError("parameter-mismatch", str(exc)) from None
    got = DesignParams(v=d.v, b=d.b, r=d.r, k=k, lam=lam, n=n, mu=mu)
    if got != expected:
        raise DesignError("parameter-mismatch", f"found {got.as_tuple()}, "
                                                f"expected {expected.as_tuple()}")
    if any(len(c) != n for c in d.parallel_classes):
        raise DesignError("parameter-mismatch", f"parallel classes are not all of size {n}")
    if got.r * (n - 1) != got.v - 1 or got.b != got.v + got.r - 1:
        raise DesignError("parameter-mismatch", "r(n-1) = v-1 or b = v+r-1 fails")
    return got


def incidence_matrix(d: Design) -> Matrix:
    """v x b 0/1 matrix with columns in parallel-class order."""
    order = [j for cls in d.parallel_classes for j in cls]
    n = [[0] * d.b for _ in range(d.v)]
    for col, j in enumerate(order):
        for p in d.blocks[j]:
            n[p][col] = 1
    return n


def incidence_identities(N: Matrix, p: DesignParams) -> dict[str, bool]:
    """Exact matrix identities every affine design's incidence matrix obeys."""
    v, b = p.v, p.b
    Nt = transpose(N)
    J = ones
    return {
        "N N^t = r I + lambda (J - I)":
            matmul(N, Nt) == madd(scale(p.r, ident(v)), scale(p.lam, msub(J(v), ident(v)))),
        "N^t N = k I_r x I_n + mu (J_r - I_r) x J_n":
            matmul(Nt, N) == madd(scale(p.k, kron(ident(p.r), ident(p.n))),
                                  scale(p.mu, kron(msub(J(p.r), ident(p.r)), J(p.n)))),
        "J_v N = k J_{v,b}": matmul(J(v), N) == scale(p.k, J(v, b)),
        "N^t J_v = k J_{b,v}": matmul(Nt, J(v)) == scale(p.k, J(b, v)),
        "N J_b = r J_{v,b}": matmul(N, J(b)) == scale(p.r, J(v, b)),
        "J_b N^t = r J_{b,v}": matmul(J(b), Nt) == scale(p.r, J(b, v)),
    }
