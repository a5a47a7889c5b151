from fractions import Fraction
from functools import lru_cache

import pytest

from affsig.designs import (build_affine_geometry, build_hadamard_paley,
                            build_hadamard_sylvester, hadamard_to_affine_design,
                            incidence_matrix, validate_affine)
from affsig.distance import bfs_distances

CORPUS = {
    "AG(2,2)": lambda: build_affine_geometry(2, 2),
    "AG(2,3)": lambda: build_affine_geometry(2, 3),
    "AG(3,2)": lambda: build_affine_geometry(3, 2),
    "AG(2,4)": lambda: build_affine_geometry(2, 2, 2),
    "AG(2,5)": lambda: build_affine_geometry(2, 5),
    "Sylvester-8": lambda: hadamard_to_affine_design(build_hadamard_sylvester(3)),
    "Paley-12": lambda: hadamard_to_affine_design(build_hadamard_paley(11)),
}


@lru_cache(maxsize=None)
def corpus_entry(name):
    """(design, params, incidence matrix, BFS distance matrix), built once."""
    d = CORPUS[name]()
    p = validate_affine(d)
    N = incidence_matrix(d)
    return d, p, N, bfs_distances(N)


@pytest.fixture(params=sorted(CORPUS))
def corpus_design(request):
    return (request.param,) + corpus_entry(request.param)


# independent oracles shared by several test modules

def gauss_det(a):
    """Plain rational Gaussian elimination with row swaps."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def congruence_inertia(a):
    """Inertia by symmetric rational congruence (Sylvester's law)."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                       None)
            if off is None:
                break
            i, j = off
            # row_i += row_j, col_i += col_j makes m[i][i] = 2 m[i][j] != 0
            m[i] = [x + y for x, y in zip(m[i], m[j])]
            for row in m:
                row[i] += row[j]
            piv = i
        m[k], m[piv] = m[piv], m[k]
        for row in m:
            row[k], row[piv] = row[piv], row[k]
        d = m[k][k]
        pos += d > 0
        neg += d < 0
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
        for i in range(k + 1, n):
            m[k][i] = m[i][k] = Fraction(0)
        k += 1
    return pos, neg, n - pos - neg


_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: "
                                    f"{title} ({secs:.2f}s)")
