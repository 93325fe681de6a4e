import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from kgraph_homology.linalg import (AbelianGroup, ComplexError, SparseIntMatrix, determinant,
                                    homology_of_pair, homology_of_pair_mod, snf)


# -- independent oracles -------------------------------------------------------

def frac_det(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    n, det = len(M), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return int(det)


def rational_rank(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        p = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def invariant_factors(rows):
    """d_i = D_i / D_(i-1), D_i the gcd of all i x i minors."""
    if not rows or not rows[0]:
        return []
    m, n = len(rows), len(rows[0])
    D, out = [1], []
    for i in range(1, min(m, n) + 1):
        g = 0
        for rs in itertools.combinations(range(m), i):
            for cs in itertools.combinations(range(n), i):
                g = gcd(g, frac_det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        D.append(g)
        out.append(g // D[-2])
    return out


def unimodular_pair(n, rng, steps=12):
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Q = [r[:] for r in P]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-2, 2)
        for r in range(n):          # P <- P (I + q E_ij): column j += q column i
            P[r][j] += q * P[r][i]
        Q[i] = [a - q * b for a, b in zip(Q[i], Q[j])]   # Q <- (I - q E_ij) Q
    return P, Q


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def random_complex(rng, c=None):
    """A, B with A B = 0, built in a hidden basis and conjugated."""
    c = c or rng.randint(1, 5)
    s = rng.randint(0, c)
    a_rows, b_cols = rng.randint(1, 4), rng.randint(1, 4)
    B0 = [[rng.randint(-3, 3) if i < s else 0 for _ in range(b_cols)] for i in range(c)]
    A0 = [[rng.randint(-3, 3) if j >= s else 0 for j in range(c)] for _ in range(a_rows)]
    P, Q = unimodular_pair(c, rng)
    return matmul(A0, Q), matmul(P, B0)


def brute_mod_homology(A, B, m):
    """Counts of x with d x = 0 in ker A / im B over Z/m, for each d | m."""
    c = len(B)
    vecs = list(itertools.product(range(m), repeat=c))
    ker = [v for v in vecs if all(sum(a * x for a, x in zip(row, v)) % m == 0 for row in A)]
    im = {tuple(sum(B[i][j] * y[j] for j in range(len(B[0]))) % m for i in range(c))
          for y in itertools.product(range(m), repeat=len(B[0]))}
    counts = {}
    for d in (d for d in range(1, m + 1) if m % d == 0):
        counts[d] = sum(1 for v in ker if tuple(d * x % m for x in v) in im) // len(im)
    return counts


def killed_counts(G: AbelianGroup, m):
    out = {}
    for d in (d for d in range(1, m + 1) if m % d == 0):
        n = d ** G.free_rank
        for t in G.torsion:
            n *= gcd(d, t)
        out[d] = n
    return out


# -- tests ---------------------------------------------------------------------

def test_doc_examples():
    assert snf(SparseIntMatrix.from_rows([[6, 0], [0, 4]])).diagonal == [2, 12]
    assert homology_of_pair(SparseIntMatrix.zeros(1, 1),
                            SparseIntMatrix.from_rows([[2]])) == AbelianGroup(0, (2,))


@pytest.mark.parametrize("seed", range(200))
def test_snf_against_minors(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
    res = snf(SparseIntMatrix.from_rows(rows), inverses=True)
    assert [d for d in res.diagonal if d] == invariant_factors(rows)
    assert res.rank == rational_rank(rows)
    U, V, D = res.U.to_rows(), res.V.to_rows(), res.D.to_rows()
    assert matmul(matmul(U, rows), V) == D
    assert abs(frac_det(U)) == 1 and abs(frac_det(V)) == 1
    assert matmul(U, res.U_inv.to_rows()) == SparseIntMatrix.identity(m).to_rows()
    assert matmul(V, res.V_inv.to_rows()) == SparseIntMatrix.identity(n).to_rows()


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30), st.integers(0, 2 ** 32))
def test_snf_factorization_large(m, n, seed):
    rng = random.Random(seed)
    rows = [[rng.choice([0, 0, 0, 1, -1, 2, 5]) for _ in range(n)] for _ in range(m)]
    res = snf(SparseIntMatrix.from_rows(rows))
    D = res.D.to_rows()
    assert matmul(matmul(res.U.to_rows(), rows), res.V.to_rows()) == D
    diag = res.diagonal
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == rational_rank(rows)


@pytest.mark.parametrize("seed", range(80))
def test_integral_homology_oracle(seed):
    rng = random.Random(1000 + seed)
    A, B = random_complex(rng)
    H = homology_of_pair(SparseIntMatrix.from_rows(A), SparseIntMatrix.from_rows(B))
    c = len(B)
    assert H.free_rank == c - rational_rank(A) - rational_rank(B)
    assert list(H.torsion) == [d for d in invariant_factors(B) if d > 1]


@pytest.mark.parametrize("seed", range(40))
@pytest.mark.parametrize("m", [2, 3, 4])
def test_mod_homology_brute_force(seed, m):
    rng = random.Random(5000 + seed)
    A, B = random_complex(rng, c=rng.randint(1, 3))
    H = homology_of_pair_mod(SparseIntMatrix.from_rows(A), SparseIntMatrix.from_rows(B), m)
    assert H.free_rank == 0
    assert killed_counts(H, m) == brute_mod_homology(A, B, m)


def test_noncomplex_is_rejected():
    A = SparseIntMatrix.from_rows([[1, 0]])
    B = SparseIntMatrix.from_rows([[1], [0]])
    with pytest.raises(ComplexError) as err:
        homology_of_pair(A, B)
    assert err.value.column == 0
    # zero only mod 2
    B2 = SparseIntMatrix.from_rows([[2], [1]])
    homology_of_pair_mod(A, B2, 2)
    with pytest.raises(ComplexError):
        homology_of_pair(A, B2)


@pytest.mark.parametrize("seed", range(30))
def test_determinant(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
    assert determinant(SparseIntMatrix.from_rows(rows)) == frac_det(rows)


def test_abelian_group_canonical_form():
    assert AbelianGroup.from_cyclic(0, [2, 3]) == AbelianGroup(0, (6,))
    assert AbelianGroup.from_cyclic(1, [4, 6, 1, 0]) == AbelianGroup(2, (2, 12))
    assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianGroup()) == "0"
    G = AbelianGroup(1, (4,))
    assert G.hom_to_cyclic(6) == AbelianGroup(0, (2, 6))
    assert G.ext_to_cyclic(6) == AbelianGroup(0, (2,))


def test_sparse_basics():
    A = SparseIntMatrix.from_rows([[1, 2], [0, 3]])
    assert A.transpose().to_rows() == [[1, 0], [2, 3]]
    assert (A @ SparseIntMatrix.identity(2)).to_rows() == A.to_rows()
    assert A.is_zero(1) and not A.is_zero()
    assert A.hstack(SparseIntMatrix.identity(2)).cols == 4
    with pytest.raises(IndexError):
        SparseIntMatrix(1, 1, {(1, 0): 1})
