"""Exact integer matrices, Smith normal form and abelian group invariants.

Everything is plain Python ints; nothing here ever touches floating point.

>>> snf(SparseIntMatrix.from_rows([[6, 0], [0, 4]])).diagonal
[2, 12]
>>> homology_of_pair(SparseIntMatrix.zeros(1, 1), SparseIntMatrix.from_rows([[2]]))
AbelianGroup(free_rank=0, torsion=(2,))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ComplexError(ValueError):
    """Raised when a pair of boundary matrices does not compose to zero."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


@dataclass
class SparseIntMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), x in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
            if x:
                clean[i, j] = int(x)
        self.entries = clean

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseIntMatrix:
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> SparseIntMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> SparseIntMatrix:
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), ncols, {(i, j): x for i, r in enumerate(rows) for j, x in enumerate(r) if x})

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def transpose(self) -> SparseIntMatrix:
        return SparseIntMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self.entries.items()})

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (i, j), x in other.entries.items():
            by_row.setdefault(i, []).append((j, x))
        out: dict[tuple[int, int], int] = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + x * y
        return SparseIntMatrix(self.rows, other.cols, out)

    def is_zero(self, modulus: int | None = None) -> bool:
        if modulus is None:
            return not self.entries
        return all(x % modulus == 0 for x in self.entries.values())

    def first_nonzero_column(self, modulus: int | None = None) -> int | None:
        cols = [j for (_, j), x in self.entries.items() if (x if modulus is None else x % modulus)]
        return min(cols) if cols else None

    def hstack(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        ent = dict(self.entries)
        ent.update({(i, j + self.cols): x for (i, j), x in other.entries.items()})
        return SparseIntMatrix(self.rows, self.cols + other.cols, ent)

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass
class SnfResult:
    """D = U A V with U, V unimodular; ``U_inv``/``V_inv`` when requested."""

    U: SparseIntMatrix
    D: SparseIntMatrix
    V: SparseIntMatrix
    U_inv: SparseIntMatrix | None = None
    V_inv: SparseIntMatrix | None = None

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


class _Reducer:
    """Dense in-place SNF with optional tracking of U, V and their inverses."""

    def __init__(self, a: list[list[int]], rows: int, cols: int, inverses: bool):
        self.a, self.rows, self.cols = a, rows, cols
        self.U, self.V = _identity_rows(rows), _identity_rows(cols)
        self.Ui = _identity_rows(rows) if inverses else None
        self.Vi = _identity_rows(cols) if inverses else None

    def row_add(self, i: int, s: int, q: int) -> None:
        # row_i += q * row_s
        for M in (self.a, self.U):
            ri, rs = M[i], M[s]
            for c in range(len(ri)):
                if rs[c]:
                    ri[c] += q * rs[c]
        if self.Ui is not None:
            for r in self.Ui:
                r[s] -= q * r[i]

    def col_add(self, j: int, s: int, q: int) -> None:
        # col_j += q * col_s
        for M in (self.a, self.V):
            for r in M:
                if r[s]:
                    r[j] += q * r[s]
        if self.Vi is not None:
            rj, rs = self.Vi[j], self.Vi[s]
            for c in range(len(rs)):
                if rj[c]:
                    rs[c] -= q * rj[c]

    def row_swap(self, i: int, s: int) -> None:
        if i == s:
            return
        for M in (self.a, self.U):
            M[i], M[s] = M[s], M[i]
        if self.Ui is not None:
            for r in self.Ui:
                r[i], r[s] = r[s], r[i]

    def col_swap(self, j: int, s: int) -> None:
        if j == s:
            return
        for M in (self.a, self.V):
            for r in M:
                r[j], r[s] = r[s], r[j]
        if self.Vi is not None:
            self.Vi[j], self.Vi[s] = self.Vi[s], self.Vi[j]

    def row_neg(self, i: int) -> None:
        for M in (self.a, self.U):
            M[i] = [-x for x in M[i]]
        if self.Ui is not None:
            for r in self.Ui:
                r[i] = -r[i]

    def pivot(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                x = self.a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return None if best is None else best[1:]

    def run(self) -> None:
        a = self.a
        t = 0
        while t < min(self.rows, self.cols):
            p = self.pivot(t)
            if p is None:
                break
            self.row_swap(t, p[0])
            self.col_swap(t, p[1])
            while True:
                piv = a[t][t]
                for i in range(t + 1, self.rows):
                    if a[i][t]:
                        self.row_add(i, t, -(a[i][t] // piv))
                for j in range(t + 1, self.cols):
                    if a[t][j]:
                        self.col_add(j, t, -(a[t][j] // piv))
                rest = [(abs(a[i][t]), i, t) for i in range(t + 1, self.rows) if a[i][t]]
                rest += [(abs(a[t][j]), t, j) for j in range(t + 1, self.cols) if a[t][j]]
                if rest:
                    _, i, j = min(rest)
                    self.row_swap(t, i)
                    self.col_swap(t, j)
                    continue
                bad = next(((i, j) for i in range(t + 1, self.rows) for j in range(t + 1, self.cols)
                            if a[i][j] % piv), None)
                if bad is None:
                    break
                self.row_add(t, bad[0], 1)
            if a[t][t] < 0:
                self.row_neg(t)
            t += 1


def snf(A: SparseIntMatrix, inverses: bool = False) -> SnfResult:
    """Smith normal form with transforms.

    Pivots are chosen by smallest magnitude, ties broken by (row, col), so
    the output depends only on A.
    """
    red = _Reducer(A.to_rows(), A.rows, A.cols, inverses)
    red.run()
    mk = SparseIntMatrix.from_rows
    return SnfResult(mk(red.U, A.rows), mk(red.a, A.cols), mk(red.V, A.cols),
                     mk(red.Ui, A.rows) if inverses else None,
                     mk(red.Vi, A.cols) if inverses else None)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus cyclic factors Z/d_1 + ... with d_1 | d_2 | ..."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @classmethod
    def from_cyclic(cls, free_rank: int, orders: Iterable[int]) -> AbelianGroup:
        """Canonical form of Z^r + sum Z/n_i; orders of 0 count as free, 1 vanish."""
        orders = list(orders)
        free_rank += sum(1 for n in orders if n == 0)
        finite = [abs(n) for n in orders if abs(n) > 1]
        if not finite:
            return cls(free_rank, ())
        m = len(finite)
        diag = snf(SparseIntMatrix(m, m, {(i, i): n for i, n in enumerate(finite)})).diagonal
        return cls(free_rank, tuple(d for d in diag if d > 1))

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_cyclic(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    def hom_to_cyclic(self, m: int) -> AbelianGroup:
        """Hom(G, Z/m)."""
        from math import gcd
        return AbelianGroup.from_cyclic(0, [m] * self.free_rank + [gcd(d, m) for d in self.torsion])

    def ext_to_cyclic(self, m: int) -> AbelianGroup:
        """Ext(G, Z/m); free summands contribute nothing."""
        from math import gcd
        return AbelianGroup.from_cyclic(0, [gcd(d, m) for d in self.torsion])


def _check_pair(A: SparseIntMatrix, B: SparseIntMatrix, modulus: int | None) -> None:
    if A.cols != B.rows:
        raise ValueError(f"cannot compose {A.rows}x{A.cols} with {B.rows}x{B.cols}")
    col = (A @ B).first_nonzero_column(modulus)
    if col is not None:
        where = "" if modulus is None else f" mod {modulus}"
        raise ComplexError(f"boundary composite is nonzero{where} in column {col}", col)


def homology_of_pair(A: SparseIntMatrix, B: SparseIntMatrix) -> AbelianGroup:
    """ker A / im B over Z, where A follows B."""
    _check_pair(A, B, None)
    c = A.cols
    res = snf(A, inverses=True)
    r = res.rank
    # coordinates of im B in the kernel basis given by the last columns of V
    Y = res.V_inv @ B
    sub = SparseIntMatrix(c - r, B.cols, {(i - r, j): x for (i, j), x in Y.entries.items() if i >= r})
    diag = snf(sub).diagonal
    rank_b = sum(1 for x in diag if x)
    return AbelianGroup.from_cyclic((c - r) - rank_b, [x for x in diag if x > 1])


def homology_of_pair_mod(A: SparseIntMatrix, B: SparseIntMatrix, m: int) -> AbelianGroup:
    """ker(A mod m) / im(B mod m), using only integer Smith forms.

    The mod-m kernel lifts to the lattice L = {x : Ax in mZ^r}, which is the
    projection of ker [A | mI]. The image lifts to M = im B + mZ^c. Both are
    full-rank lattices and the answer is L / M.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    _check_pair(A, B, m)
    c, r = A.cols, A.rows
    stacked = A.hstack(SparseIntMatrix(r, r, {(i, i): m for i in range(r)}))
    st = snf(stacked)
    kernel_cols = range(st.rank, stacked.cols)
    S = SparseIntMatrix(c, len(kernel_cols), {(i, jj): st.V[i, j]
                                               for jj, j in enumerate(kernel_cols) for i in range(c)})
    # basis of L: U_S^{-1} diag(d); coordinates of x in L are diag(1/d) U_S x
    sl = snf(S)
    d = sl.diagonal
    if len(d) < c or any(x == 0 for x in d[:c]):
        raise ArithmeticError("mod-m kernel lattice is not of full rank")
    gens = B.hstack(SparseIntMatrix(c, c, {(i, i): m for i in range(c)}))
    coords = sl.U @ gens
    ent = {}
    for (i, j), x in coords.entries.items():
        q, rem = divmod(x, d[i])
        if rem:
            raise ArithmeticError("image lattice is not contained in the kernel lattice")
        ent[i, j] = q
    diag = snf(SparseIntMatrix(c, gens.cols, ent)).diagonal
    return AbelianGroup.from_cyclic(0, [x for x in diag if x > 1])


def determinant(A: SparseIntMatrix) -> int:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    M = A.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1
