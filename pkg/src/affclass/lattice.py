"""Exact integer linear algebra.

Smith and Hermite normal forms over Python ints, cokernels of integer
matrices as finitely generated abelian groups, and bases of sublattices of
Z^n. Everything here is pure: functions take immutable matrices and return
new values.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entry count does not match %d x %d" % (self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch("columns of unequal length")
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntegerMatrix.from_columns(self.entries, rows=self.cols)

    def to_lists(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch("cannot multiply %dx%d by %dx%d"
                                        % (self.rows, self.cols, other.rows, other.cols))
            ocols = other.columns()
            return IntegerMatrix(self.rows, other.cols, tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries))
        return self.apply(other)

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector of length %d for %d columns" % (len(v), self.cols))
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)


@dataclass(frozen=True)
class SmithForm:
    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    rank: int

    @property
    def diagonal(self):
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + sum of Z/invariant_factors[i]."""

    free_rank: int
    invariant_factors: tuple = ()

    def __post_init__(self):
        facs = tuple(int(x) for x in self.invariant_factors)
        if any(f <= 1 for f in facs):
            raise ValueError("invariant factors must exceed 1")
        if any(b % a for a, b in zip(facs, facs[1:])):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "invariant_factors", facs)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_torsion(self):
        return self.free_rank == 0

    @property
    def order(self):
        """Order of the group, None if infinite."""
        if self.free_rank:
            return None
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def free_part(self):
        return AbelianGroup(self.free_rank)

    def __str__(self):
        parts = ["Z^%d" % self.free_rank if self.free_rank > 1 else "Z"] if self.free_rank else []
        parts += ["Z/%d" % f for f in self.invariant_factors]
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors),
                "text": str(self)}


def _as_matrix(A):
    if isinstance(A, IntegerMatrix):
        return A
    return IntegerMatrix.from_rows(A)


def smith_normal_form(A) -> SmithForm:
    """Smith normal form with unimodular transforms, U @ A @ V == D.

    Pivot choice: smallest nonzero absolute value in the remaining block,
    ties broken by lowest (row, column).
    """
    A = _as_matrix(A)
    m, n = A.rows, A.cols
    M = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    # V is stored transposed so column operations are row operations on Vt.
    Vt = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        M[i], M[k] = M[k], M[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in M:
            r[j], r[k] = r[k], r[j]
        Vt[j], Vt[k] = Vt[k], Vt[j]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for r in M:
                r[dst] += q * r[src]
            Vt[dst] = [a + q * b for a, b in zip(Vt[dst], Vt[src])]

    def smallest(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = abs(M[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        return best

    rank = 0
    for t in range(min(m, n)):
        found = smallest(t)
        if found is None:
            break
        _, i, j = found
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            p = M[t][t]
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
            # move a smaller remainder into the pivot position
            cand = [(abs(M[i][t]), i, 0) for i in range(t + 1, m) if M[i][t]]
            cand += [(abs(M[t][j]), 0, j) for j in range(t + 1, n) if M[t][j]]
            if cand:
                _, i, j = min(cand, key=lambda c: (c[0], c[2] != 0, c[1], c[2]))
                if i:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                changed = True
            else:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if M[i][j] % p), None)
                if bad is not None:
                    add_row(t, bad[0], 1)
                    changed = True
            if not changed:
                break
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        rank += 1

    V = [[Vt[j][i] for j in range(n)] for i in range(n)]
    return SmithForm(IntegerMatrix.from_rows(U, m), IntegerMatrix.from_rows(M, n),
                     IntegerMatrix.from_rows(V, n), rank)


def invariant_factors(A):
    """Nonzero diagonal of the Smith form (1s included)."""
    S = smith_normal_form(A)
    return S.diagonal[:S.rank]


def cokernel(A) -> AbelianGroup:
    """Z^rows / column image of A."""
    A = _as_matrix(A)
    S = smith_normal_form(A)
    facs = tuple(d for d in S.diagonal[:S.rank] if d != 1)
    return AbelianGroup(A.rows - S.rank, facs)


def class_of(A, v):
    """Coordinates of v in Z^rows / image(A).

    Returns ``(free_part, torsion_part)``: free coordinates, and residues
    modulo each invariant factor > 1 (in the order of ``cokernel(A)``).
    Both are zero exactly when v lies in the image of A.
    """
    A = _as_matrix(A)
    if len(v) != A.rows:
        raise DimensionMismatch("vector length %d, matrix has %d rows" % (len(v), A.rows))
    S = smith_normal_form(A)
    w = S.U.apply(tuple(v))
    diag = S.diagonal
    torsion = tuple(w[i] % diag[i] for i in range(S.rank) if diag[i] != 1)
    return tuple(w[S.rank:]), torsion


def in_image(A, v):
    free, tors = class_of(A, v)
    return not any(free) and not any(tors)


def hermite_normal_form(A) -> IntegerMatrix:
    """Row-style Hermite normal form: echelon, positive pivots, reduced above.

    Zero rows are dropped, so the result is a basis of the row lattice.
    """
    A = _as_matrix(A)
    M = [list(r) for r in A.entries]
    n = A.cols
    out = []
    pivots = []
    for j in range(n):
        live = [r for r in M if r[j]]
        rest = [r for r in M if not r[j]]
        if not live:
            continue
        # gcd-reduce the column by repeated division
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[j]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[j] // piv[j]
                r = [a - q * b for a, b in zip(r, piv)]
                (nxt if r[j] else rest).append(r)
            live = nxt
        piv = live[0]
        if piv[j] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        pivots.append(j)
        M = rest
    for k in range(len(out)):
        j = pivots[k]
        for i in range(k):
            q = out[i][j] // out[k][j]
            if q:
                out[i] = [a - q * b for a, b in zip(out[i], out[k])]
    return IntegerMatrix.from_rows(out, n)


def sublattice_basis(vectors: Sequence[Sequence[int]], dim=None) -> IntegerMatrix:
    """Basis (as matrix columns) of the lattice spanned by ``vectors``."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if dim is None:
        if not vectors:
            return IntegerMatrix.zeros(0, 0)
        dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise DimensionMismatch("vectors of unequal length")
    H = hermite_normal_form(IntegerMatrix.from_rows(vectors, dim))
    return IntegerMatrix.from_columns(H.entries, rows=dim)


def lattice_coordinates(basis: IntegerMatrix, v):
    """Integer x with basis @ x == v; raises ValueError if v is not in the lattice."""
    if len(v) != basis.rows:
        raise DimensionMismatch("vector length %d, ambient dimension %d" % (len(v), basis.rows))
    x = solve_rational(basis, v)
    if x is None or any(c.denominator != 1 for c in x):
        raise ValueError("vector %r is not in the lattice" % (tuple(v),))
    return tuple(int(c) for c in x)


def solve_rational(A: IntegerMatrix, b):
    """Unique rational solution of A x = b for full column rank A, or None."""
    m, n = A.rows, A.cols
    M = [[Fraction(a) for a in r] + [Fraction(bi)] for r, bi in zip(A.entries, b)]
    piv_cols = []
    r = 0
    for j in range(n):
        p = next((i for i in range(r, m) if M[i][j]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][j]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][j]:
                f = M[i][j]
                M[i] = [a - f * c for a, c in zip(M[i], M[r])]
        piv_cols.append(j)
        r += 1
    if r < n or any(M[i][n] for i in range(r, m)):
        return None
    return [M[k][n] for k in range(n)]


def rank(A) -> int:
    A = _as_matrix(A)
    return hermite_normal_form(A).rows


def determinant(A) -> int:
    """Bareiss fraction-free determinant."""
    A = _as_matrix(A)
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.rows
    M = [list(r) for r in A.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def primitive(v):
    """v divided by the gcd of its entries (zero vector unchanged)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)
