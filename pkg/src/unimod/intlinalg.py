"""Exact linear algebra over the integers.

Everything here works on arbitrary-precision Python ints; no floats anywhere.
The workhorses are a fraction-free Bareiss determinant, a row Hermite normal
form with unimodular transform (which yields exact rank and *saturated*
integer kernels), adjugate-based unimodular solves, and a streaming minor
enumerator.  All outputs are deterministic; kernel bases are canonicalized to
a unique Hermite-reduced form with positive leading entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionError, PreconditionError, RankError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major in one flat tuple."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        """Build from an iterable of row iterables (validates rectangularity)."""
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            c = len(rows[0])
            if any(len(r) != c for r in rows):
                raise DimensionError("ragged rows")
        else:
            c = 0
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), c, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, r, c):
        return cls(r, c, (0,) * (r * c))

    def row(self, i):
        c = self.cols
        return self.entries[i * c:(i + 1) * c]

    def col(self, j):
        c = self.cols
        return tuple(self.entries[i * c + j] for i in range(self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def submatrix(self, row_idx, col_idx):
        row_idx = tuple(row_idx)
        col_idx = tuple(col_idx)
        return IntMatrix(len(row_idx), len(col_idx),
                         tuple(self[i, j] for i in row_idx for j in col_idx))

    def take_rows(self, row_idx):
        return IntMatrix.from_rows([self.row(i) for i in row_idx])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.cols
        orows = other.row_list()
        out = []
        for i in range(self.rows):
            a = self.row(i)
            acc = [0] * ocols
            for k, aik in enumerate(a):
                if aik:
                    brow = orows[k]
                    for j in range(ocols):
                        acc[j] += aik * brow[j]
            out.extend(acc)
        return IntMatrix(self.rows, ocols, tuple(out))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_lists()})"


def matvec(m, v):
    """m @ v for a plain tuple/list vector; returns a tuple."""
    v = tuple(v)
    if m.cols != len(v):
        raise DimensionError("matvec shape mismatch")
    return tuple(sum(m[i, j] * v[j] for j in range(m.cols)) for i in range(m.rows))


def vecmat(v, m):
    """v @ m (row vector times matrix); returns a tuple."""
    v = tuple(v)
    if m.rows != len(v):
        raise DimensionError("vecmat shape mismatch")
    return tuple(sum(v[i] * m[i, j] for i in range(m.rows)) for j in range(m.cols))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


# ---------------------------------------------------------------------------
# determinant


def _det_dense(a):
    """Bareiss fraction-free elimination on a list-of-lists; destroys `a`."""
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    sign = 1
    prev = 1
    for k in range(n - 1):
        # pivot: smallest nonzero absolute value in column k at or below row k
        piv = -1
        best = 0
        for i in range(k, n):
            v = a[i][k]
            if v != 0 and (piv < 0 or abs(v) < best):
                piv, best = i, abs(v)
        if piv < 0:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri = a[i]
            rk = a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's determinant identity
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def determinant(m):
    """Exact determinant of a square IntMatrix (0x0 gives 1)."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    return _det_dense(m.to_lists())


# ---------------------------------------------------------------------------
# Hermite form, rank, kernels


def _addmul_row(mat, i, j, q):
    """mat[i] += q * mat[j] in place."""
    ri, rj = mat[i], mat[j]
    for t in range(len(ri)):
        ri[t] += q * rj[t]


def hermite_form(m, transform=False):
    """Row Hermite normal form.

    Returns (h, u, rank) where h is the canonical upper-echelon form of m
    (positive pivots, entries above each pivot reduced into [0, pivot),
    zero rows at the bottom) and, when ``transform`` is set, u is a
    unimodular matrix with u @ m == h.  The nonzero rows of h are the
    canonical basis of the group generated by the rows of m.
    """
    r, c = m.rows, m.cols
    h = m.to_lists()
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)] if transform else None
    piv = 0
    for col in range(c):
        if piv == r:
            break
        while True:
            nz = [i for i in range(piv, r) if h[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][col]), i))
            if i0 != piv:
                h[piv], h[i0] = h[i0], h[piv]
                if u is not None:
                    u[piv], u[i0] = u[i0], u[piv]
            if h[piv][col] < 0:
                h[piv] = [-x for x in h[piv]]
                if u is not None:
                    u[piv] = [-x for x in u[piv]]
            p = h[piv][col]
            for i in range(piv + 1, r):
                if h[i][col] != 0:
                    q = h[i][col] // p
                    if q:
                        _addmul_row(h, i, piv, -q)
                        if u is not None:
                            _addmul_row(u, i, piv, -q)
            if all(h[i][col] == 0 for i in range(piv + 1, r)):
                break
        if piv < r and h[piv][col] != 0:
            p = h[piv][col]
            for i in range(piv):
                q = h[i][col] // p
                if q:
                    _addmul_row(h, i, piv, -q)
                    if u is not None:
                        _addmul_row(u, i, piv, -q)
            piv += 1
    hmat = IntMatrix.from_rows(h)
    umat = IntMatrix.from_rows(u) if transform else None
    return hmat, umat, piv


def rank(m):
    """Exact rank over the rationals (= rank over Z)."""
    _, _, rk = hermite_form(m)
    return rk


def kernel_basis(m):
    """Canonical basis of the saturated left kernel {z in Z^rows : z @ m = 0}.

    The rows of the unimodular transform that land on zero rows of the
    Hermite form span the kernel saturatedly; a second Hermite pass makes
    the output unique (leading entries positive, reduced echelon).
    Returns a tuple of integer tuples.
    """
    h, u, rk = hermite_form(m, transform=True)
    k = m.rows - rk
    if k == 0:
        return ()
    ker = u.take_rows(range(rk, m.rows))
    canon, _, crk = hermite_form(ker)
    assert crk == k, "kernel rows must be independent"
    return tuple(canon.row(i) for i in range(k))


# ---------------------------------------------------------------------------
# minors, adjugate, unimodular solve


def square_minors(m, k):
    """Stream all k x k minors in lexicographic (row-set, col-set) order."""
    if k < 1 or k > min(m.rows, m.cols):
        raise DimensionError(f"minor size {k} out of range for {m.rows}x{m.cols}")
    rows = m.row_list()
    for rs in combinations(range(m.rows), k):
        picked = [rows[i] for i in rs]
        for cs in combinations(range(m.cols), k):
            yield _det_dense([[pr[j] for j in cs] for pr in picked])


def adjugate(m):
    """Adjugate matrix: m @ adjugate(m) == adjugate(m) @ m == det(m) * I."""
    if m.rows != m.cols:
        raise DimensionError("adjugate of non-square matrix")
    n = m.rows
    if n == 0:
        return m
    if n == 1:
        return IntMatrix(1, 1, (1,))
    rows = m.row_list()
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            # adjugate = transpose of the cofactor matrix
            out[j][i] = (-1) ** (i + j) * _det_dense(sub)
    return IntMatrix.from_rows(out)


def expand_over_rows(b, v):
    """Coefficients x with sum_i x_i * row_i(b) = v, as (numerators, denominator).

    b must be square and nonsingular.  The exact solution is
    v @ adjugate(b) / det(b); callers decide what to do when the division
    is not integral.  Returns (tuple_of_ints, det) with det != 0.
    """
    d = determinant(b)
    if d == 0:
        raise RankError("singular matrix where a base was required")
    return vecmat(v, adjugate(b)), d


def solve_unimodular(b, v):
    """For |det(b)| = 1, the unique integer x with sum_i x_i * row_i(b) = v."""
    if b.rows != b.cols:
        raise DimensionError("solve_unimodular needs a square matrix")
    d = determinant(b)
    if d not in (1, -1):
        raise PreconditionError(f"matrix determinant is {d}, not +-1")
    num = vecmat(v, adjugate(b))
    return tuple(x * d for x in num)  # divide by d = multiply, since d is +-1
