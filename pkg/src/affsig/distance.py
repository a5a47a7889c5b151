"""Distances in the point/block incidence graph.

Vertices are ordered points first (0..v-1), then blocks (v..v+b-1) in
parallel-class order. The same matrix is produced three ways: BFS, the
matrix recursion ``A_i = [A A_{i-1} > 0] minus earlier strata``, and the
closed block formula.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from affsig.designs import DesignParams
from affsig.exact_linalg import (Matrix, block, ident, kron, madd, matmul, msub,
                                 ones, scale, transpose, zeros)


class DistanceError(ValueError):
    pass


def incidence_graph(N: Matrix) -> Matrix:
    """Adjacency matrix ``[[O, N], [N^t, O]]``."""
    v, b = len(N), len(N[0])
    return block([[zeros(v), N], [transpose(N), zeros(b)]])


def bfs_distances(N: Matrix, max_distance: int | None = None) -> Matrix:
    v, b = len(N), len(N[0])
    nbrs: list[list[int]] = [[] for _ in range(v + b)]
    for p in range(v):
        for j in range(b):
            if N[p][j]:
                nbrs[p].append(v + j)
                nbrs[v + j].append(p)
    size = v + b
    dist = []
    for s in range(size):
        row = [-1] * size
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if row[w] < 0:
                    row[w] = row[u] + 1
                    queue.append(w)
        if min(row) < 0:
            raise DistanceError("infinite distance: incidence graph is disconnected")
        if max_distance is not None and max(row) > max_distance:
            raise DistanceError(f"distance {max(row)} exceeds {max_distance}")
        dist.append(row)
    return dist


@dataclass(frozen=True)
class DistanceStratification:
    a: tuple  # A_0..A_diam as 0/1 matrices

    @property
    def diameter(self) -> int:
        return len(self.a) - 1

    def distance_matrix(self) -> Matrix:
        size = len(self.a[0])
        d = zeros(size)
        for i, ai in enumerate(self.a):
            d = madd(d, scale(i, ai))
        return d


def strata_by_recursion(adj: Matrix) -> list[Matrix]:
    size = len(adj)
    reached = ident(size)
    a = [ident(size), adj]
    reached = madd(reached, adj)
    while True:
        prod = matmul(adj, a[-1])
        nxt = [[1 if prod[i][j] and not reached[i][j] else 0 for j in range(size)]
               for i in range(size)]
        if not any(any(row) for row in nxt):
            break
        a.append(nxt)
        reached = madd(reached, nxt)
    if any(0 in row for row in reached):
        raise DistanceError("infinite distance: incidence graph is disconnected")
    return a


def stratification_identities(a: list[Matrix], N: Matrix, p: DesignParams) -> dict[str, bool]:
    """The closed forms for A_2, A_3, A_4 and the products A A_2, A A_3."""
    v, b, r, n, k, lam, mu = p.v, p.b, p.r, p.n, p.k, p.lam, p.mu
    Nt = transpose(N)
    I, J = ident, ones
    Jr_Ir = msub(J(r), I(r))
    A = a[1]
    out = {"diameter = 4": len(a) == 5}
    if len(a) != 5:
        return out
    out["A_0 = I"] = a[0] == I(v + b)
    out["sum A_i = J"] = _sum(a) == J(v + b)
    out["A^2 = diag(N N^t, N^t N)"] = matmul(A, A) == block([
        [madd(scale(r, I(v)), scale(lam, msub(J(v), I(v)))), zeros(v, b)],
        [zeros(b, v), madd(scale(k, kron(I(r), I(n))), scale(mu, kron(Jr_Ir, J(n))))]])
    out["A_2 = diag(J - I, (J_r - I_r) x J_n)"] = a[2] == block([
        [msub(J(v), I(v)), zeros(v, b)], [zeros(b, v), kron(Jr_Ir, J(n))]])
    out["A A_2 = offdiag((r-1) J, k J - N^t)"] = matmul(A, a[2]) == block([
        [zeros(v), scale(r - 1, J(v, b))], [msub(scale(k, J(b, v)), Nt), zeros(b)]])
    out["A_3 = offdiag(J - N, J - N^t)"] = a[3] == block([
        [zeros(v), msub(J(v, b), N)], [msub(J(b, v), Nt), zeros(b)]])
    out["A A_3 = diag((r-lambda)(J - I), k I x (J - I) + (k-mu)(J - I) x J)"] = \
        matmul(A, a[3]) == block([
            [scale(r - lam, msub(J(v), I(v))), zeros(v, b)],
            [zeros(b, v), madd(scale(k, kron(I(r), msub(J(n), I(n)))),
                               scale(k - mu, kron(Jr_Ir, J(n))))]])
    out["A_4 = diag(O, I_r x (J_n - I_n))"] = a[4] == block([
        [zeros(v), zeros(v, b)], [zeros(b, v), kron(I(r), msub(J(n), I(n)))]])
    return out


def _sum(mats: list[Matrix]) -> Matrix:
    acc = mats[0]
    for m in mats[1:]:
        acc = madd(acc, m)
    return acc


def stratify(N: Matrix, p: DesignParams) -> DistanceStratification:
    """Distance-i matrices A_0..A_4 by recursion on powers of the adjacency
    matrix; raises ``DistanceError`` naming the first failed identity."""
    a = strata_by_recursion(incidence_graph(N))
    for name, ok in stratification_identities(a, N, p).items():
        if not ok:
            raise DistanceError(f"identity failed: {name}")
    return DistanceStratification(tuple(a))


def closed_form_distance_matrix(p: DesignParams, N: Matrix) -> Matrix:
    v, b, r, n = p.v, p.b, p.r, p.n
    I, J = ident, ones
    lower_right = madd(scale(2, kron(msub(J(r), I(r)), J(n))),
                       scale(4, kron(I(r), msub(J(n), I(n)))))
    return block([
        [scale(2, msub(J(v), I(v))), msub(scale(3, J(v, b)), scale(2, N))],
        [msub(scale(3, J(b, v)), scale(2, transpose(N))), lower_right],
    ])


def diameter(d: Matrix) -> int:
    return max(max(row) for row in d)


def to_csv(d: Matrix) -> str:
    return "".join(",".join(str(x) for x in row) + "\n" for row in d)
