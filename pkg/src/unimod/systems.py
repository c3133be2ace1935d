"""Unimodular systems of integer linear forms.

A system is stored as an N x n integer matrix whose rows are the forms
written in the coordinates of a distinguished base: the first (in row order)
maximal linearly independent subset of the input rows.  Construction
re-expands every row over that base with exact integer arithmetic and then
certifies total unimodularity (every square minor in {0, 1, -1}), which is
equivalent to all maximal independent row subsets generating the same group.

Operations: complexity (= number of bases = det of the Gram matrix), base
enumeration, direct sums, splitting off unit summands, Gale duality, and
signed isomorphism / automorphism search with exact invariant pruning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import (CapError, NotUnimodularError, PreconditionError,
                     RankError)
from .intlinalg import (IntMatrix, _det_dense, adjugate, determinant, rank,
                        vecmat)

DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class UnimodularSystem:
    """An N-row, rank-n unimodular system in standard (base-expanded) form.

    a_matrix rows are the forms; the rows indexed by base_rows are exactly
    the n unit vectors, in order.  labels carry optional per-row provenance
    (e.g. edge names) and do not participate in equality.
    """

    n: int
    a_matrix: IntMatrix
    base_rows: tuple
    labels: tuple | None = field(default=None, compare=False)

    @property
    def N(self):
        return self.a_matrix.rows

    def row(self, i):
        return self.a_matrix.row(i)

    def tail_rows(self):
        """Row indices not in the base, in ascending order."""
        base = set(self.base_rows)
        return tuple(i for i in range(self.N) if i not in base)

    def label(self, i):
        return self.labels[i] if self.labels is not None else f"r{i}"

    def __repr__(self):
        return (f"UnimodularSystem(N={self.N}, n={self.n}, "
                f"base_rows={self.base_rows})")


EMPTY_SYSTEM = UnimodularSystem(n=0, a_matrix=IntMatrix(0, 0, ()), base_rows=())


def _normalize_row(row):
    """Flip the sign so the first nonzero entry is positive (for comparisons)."""
    for x in row:
        if x > 0:
            return row
        if x < 0:
            return tuple(-y for y in row)
    return row


def _first_base(m):
    """Indices of the first maximal linearly independent row subset."""
    picked = []
    for i in range(m.rows):
        if len(picked) == m.cols:
            break
        if rank(m.take_rows(picked + [i])) == len(picked) + 1:
            picked.append(i)
    return picked


def _tu_witness(m):
    """First square minor outside {0,1,-1}, scanning sizes small to large.

    Returns (row_set, col_set, value) or None.  1x1 minors are the entries,
    so this also rejects out-of-range coefficients immediately.
    """
    rows = m.row_list()
    for k in range(1, min(m.rows, m.cols) + 1):
        for rs in combinations(range(m.rows), k):
            picked = [rows[i] for i in rs]
            for cs in combinations(range(m.cols), k):
                d = _det_dense([[pr[j] for j in cs] for pr in picked])
                if d not in (0, 1, -1):
                    return rs, cs, d
    return None


def from_matrix(raw, labels=None):
    """Construct and fully verify a unimodular system from integer row data.

    The rows are re-expanded over the first maximal independent row subset
    (exact adjugate division); a row whose expansion is non-integer does not
    lie in the group generated by the base, so the maximal subsets generate
    different groups and the input is rejected.  The expanded matrix is then
    certified totally unimodular, with the first offending minor reported as
    a witness.  Scalar presentations collapse: [[2]] is accepted as the unit
    system, since the single row is a base of the group it generates.
    """
    m = raw if isinstance(raw, IntMatrix) else IntMatrix.from_rows(raw)
    N, n = m.rows, m.cols
    if n < 1:
        raise PreconditionError("a system needs at least one coordinate")
    if N < n:
        raise RankError(f"only {N} rows cannot have rank {n}")
    for i in range(N):
        if not any(m.row(i)):
            raise NotUnimodularError(f"row {i} is the zero form", rows=(i,))
    base = _first_base(m)
    if len(base) < n:
        raise RankError(f"matrix rank {len(base)} is below the column count {n}")
    bmat = m.take_rows(base)
    d = determinant(bmat)
    adjb = adjugate(bmat)
    out = []
    for i in range(N):
        num = vecmat(m.row(i), adjb)
        if any(x % d for x in num):
            raise NotUnimodularError(
                f"row {i} is not an integer combination of the base rows "
                f"{tuple(base)}: the maximal independent subsets generate "
                f"different groups", rows=(*base, i))
        out.append(tuple(x // d for x in num))
    a = IntMatrix.from_rows(out)
    witness = _tu_witness(a)
    if witness is not None:
        rs, cs, val = witness
        raise NotUnimodularError(
            f"minor on rows {rs}, columns {cs} equals {val}",
            rows=rs, cols=cs, value=val)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != N:
            raise PreconditionError("labels length must match the row count")
    return UnimodularSystem(n=n, a_matrix=a, base_rows=tuple(base), labels=labels)


# ---------------------------------------------------------------------------
# complexity and bases


@lru_cache(maxsize=None)
def gram_matrix(sys):
    """Gram matrix A^T A of the stored form matrix."""
    return sys.a_matrix.transpose() @ sys.a_matrix


@lru_cache(maxsize=None)
def complexity(sys):
    """Number of bases of the system (Cauchy-Binet: det of the Gram matrix)."""
    return determinant(gram_matrix(sys))


def enumerate_bases(sys, cap=DEFAULT_ENUMERATION_CAP):
    """All n-subsets of rows with nonzero determinant, lexicographically."""
    if sys.N > cap:
        raise CapError(f"base enumeration over {sys.N} rows exceeds cap {cap}")
    m = sys.a_matrix
    out = []
    for rs in combinations(range(sys.N), sys.n):
        if determinant(m.submatrix(rs, range(sys.n))) != 0:
            out.append(rs)
    return out


@lru_cache(maxsize=None)
def form_pairing_matrix(sys):
    """Pairings of the forms in the metric the system induces on its span.

    Returns (P, d) with P = A adj(A^T A) A^T and d = det(A^T A): the matrix
    of inner products of the forms is P/d.  These pairings are invariant
    under signed isomorphism (up to the signs), unlike raw row dot products,
    and drive both the isomorphism pruning and the zonotope projection.
    """
    a = sys.a_matrix
    g = gram_matrix(sys)
    return a @ adjugate(g) @ a.transpose(), determinant(g)


# ---------------------------------------------------------------------------
# direct sum and unit-summand splitting


def direct_sum(a, b):
    """Block direct sum; left operand's rows first, then the right's."""
    if a.N == 0:
        return b
    if b.N == 0:
        return a
    rows = []
    for i in range(a.N):
        rows.append(a.row(i) + (0,) * b.n)
    for i in range(b.N):
        rows.append((0,) * a.n + b.row(i))
    labels = None
    if a.labels is not None or b.labels is not None:
        labels = tuple(a.label(i) for i in range(a.N)) + \
            tuple(b.label(i) for i in range(b.N))
    return from_matrix(IntMatrix.from_rows(rows), labels=labels)


@dataclass(frozen=True)
class UpsilonSplit:
    """Result of splitting off all unit (one-form) summands."""

    core: UnimodularSystem
    s: int
    unit_rows: tuple  # row indices that carried a unit summand


def split_upsilon(sys):
    """Split sys into its unit-free core and s unit summands.

    A column of the standard form with a single nonzero entry is zero on
    every non-base row, so its base row is a unit vector of the lattice and
    splits off; deleting such rows/columns never creates new ones.
    """
    if sys.N == 0:
        return UpsilonSplit(core=EMPTY_SYSTEM, s=0, unit_rows=())
    m = sys.a_matrix
    unit_cols = []
    for j in range(sys.n):
        if sum(1 for x in m.col(j) if x) == 1:
            unit_cols.append(j)
    if not unit_cols:
        return UpsilonSplit(core=sys, s=0, unit_rows=())
    drop_rows = {sys.base_rows[j] for j in unit_cols}
    keep_rows = [i for i in range(sys.N) if i not in drop_rows]
    keep_cols = [j for j in range(sys.n) if j not in unit_cols]
    if not keep_cols:
        return UpsilonSplit(core=EMPTY_SYSTEM, s=len(unit_cols),
                            unit_rows=tuple(sorted(drop_rows)))
    sub = sys.a_matrix.submatrix(keep_rows, keep_cols)
    labels = tuple(sys.label(i) for i in keep_rows) if sys.labels else None
    core = from_matrix(sub, labels=labels)
    return UpsilonSplit(core=core, s=len(unit_cols),
                        unit_rows=tuple(sorted(drop_rows)))


# ---------------------------------------------------------------------------
# Gale duality


def gale_dual(sys):
    """The dual system on the orthogonal complement of the span.

    With the system in standard form [E; T] (base rows E, tail rows T), the
    dual is presented by [T^t; -E] with rows interleaved back into original
    row positions, so row i of the dual corresponds to row i of sys.  Rows
    that vanish identically (exactly the unit-summand carriers) are dropped;
    dualizing twice therefore returns the unit-free core up to isomorphism.
    """
    if sys.N == sys.n:  # pure unit block: complement is zero-dimensional
        return EMPTY_SYSTEM
    tail = sys.tail_rows()
    k = len(tail)
    pos_in_base = {r: p for p, r in enumerate(sys.base_rows)}
    pos_in_tail = {r: q for q, r in enumerate(tail)}
    rows = []
    kept = []
    for i in range(sys.N):
        if i in pos_in_base:
            p = pos_in_base[i]
            row = tuple(sys.row(t)[p] for t in tail)
        else:
            q = pos_in_tail[i]
            row = tuple(-1 if t == q else 0 for t in range(k))
        if any(row):
            rows.append(row)
            kept.append(i)
    labels = tuple(sys.label(i) for i in kept) if sys.labels else None
    return from_matrix(IntMatrix.from_rows(rows), labels=labels)


# ---------------------------------------------------------------------------
# multiplicity classes


def multiplicity_classes(sys):
    """Partition of row indices into classes of forms equal up to sign.

    Classes are ordered by smallest member; members ascend within a class.
    """
    seen = {}
    for i in range(sys.N):
        seen.setdefault(_normalize_row(sys.row(i)), []).append(i)
    classes = sorted(seen.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


# ---------------------------------------------------------------------------
# signed isomorphism


@dataclass(frozen=True)
class SignedCorrespondence:
    """Witness of a signed isomorphism from system a to system b.

    row_map[i] is the b-row image of a-row i, signs[i] in {1,-1}, and
    base_change G satisfies signs[i] * (row_i(a) @ G) == row_{row_map[i]}(b)
    for every i, with |det G| = 1.
    """

    row_map: tuple
    signs: tuple
    base_change: IntMatrix

    def verify(self, a, b):
        if sorted(self.row_map) != list(range(b.N)) or a.N != b.N:
            return False
        g = self.base_change
        if determinant(g) not in (1, -1):
            return False
        for i in range(a.N):
            img = vecmat(a.row(i), g)
            if tuple(self.signs[i] * x for x in img) != b.row(self.row_map[i]):
                return False
        return True


def _iso_prefilter(a, b):
    """Cheap isomorphism invariants; False means definitely not isomorphic."""
    if (a.N, a.n) != (b.N, b.n):
        return False
    if complexity(a) != complexity(b):
        return False
    prof_a = sorted(len(c) for c in multiplicity_classes(a))
    prof_b = sorted(len(c) for c in multiplicity_classes(b))
    if prof_a != prof_b:
        return False
    pa, _ = form_pairing_matrix(a)
    pb, _ = form_pairing_matrix(b)
    if sorted(pa[i, i] for i in range(a.N)) != sorted(pb[i, i] for i in range(b.N)):
        return False
    return True


def _search_correspondences(a, b, *, count_all):
    """Backtracking over signed images of a's base rows in b.

    Assignments must preserve the exact form pairings (P/d matrices), which
    prunes hard; a complete assignment forces the base change, and the
    remaining rows are matched as a multiset.  Yields either the first
    witness (count_all=False) or the total number of correspondences.
    """
    n, N = a.n, a.N
    pa, _ = form_pairing_matrix(a)
    pb, _ = form_pairing_matrix(b)
    ba = a.base_rows
    b_rows = b.a_matrix.row_list()
    by_norm = {}
    for i, r in enumerate(b_rows):
        by_norm.setdefault(_normalize_row(r), []).append(i)

    total = 0
    targets = [0] * n
    signs = [0] * n

    def complete():
        nonlocal total
        g = IntMatrix.from_rows(
            [tuple(signs[j] * x for x in b_rows[targets[j]]) for j in range(n)])
        if determinant(g) == 0:
            return None
        used = set(targets)
        rest_a = [i for i in range(N) if i not in set(ba)]
        rest_b_count = {}
        for i in range(N):
            if i not in used:
                rest_b_count[_normalize_row(b_rows[i])] = \
                    rest_b_count.get(_normalize_row(b_rows[i]), 0) + 1
        need = {}
        images = {}
        for i in rest_a:
            w = vecmat(a.row(i), g)
            key = _normalize_row(w)
            images[i] = w
            need[key] = need.get(key, 0) + 1
        if need != rest_b_count:
            return None
        if count_all:
            ways = 1
            for cnt in need.values():
                for t in range(2, cnt + 1):
                    ways *= t
            total += ways
            return None
        # build the first witness: smallest free b-row per a-row, ascending
        free = {}
        for i in range(N):
            if i not in used:
                free.setdefault(_normalize_row(b_rows[i]), []).append(i)
        row_map = [None] * N
        sgn = [0] * N
        for j in range(n):
            row_map[ba[j]] = targets[j]
            sgn[ba[j]] = signs[j]
        for i in rest_a:
            w = images[i]
            t = free[_normalize_row(w)].pop(0)
            row_map[i] = t
            sgn[i] = 1 if b_rows[t] == w else -1
        return SignedCorrespondence(tuple(row_map), tuple(sgn), g)

    def dfs(j):
        nonlocal total
        if j == n:
            found = complete()
            return found
        aj = ba[j]
        for t in range(N):
            if t in targets[:j]:
                continue
            if pb[t, t] != pa[aj, aj]:
                continue
            for eps in (1, -1):
                ok = True
                for i in range(j):
                    if pa[ba[i], aj] != signs[i] * eps * pb[targets[i], t]:
                        ok = False
                        break
                if not ok:
                    continue
                targets[j] = t
                signs[j] = eps
                found = dfs(j + 1)
                if found is not None and not count_all:
                    return found
        targets[j] = 0
        signs[j] = 0
        return None

    witness = dfs(0)
    return total if count_all else witness


def are_isomorphic(a, b, cap=DEFAULT_ENUMERATION_CAP):
    """First signed correspondence a -> b in deterministic search order, or None."""
    if a.N == 0 or b.N == 0:
        if a.N == b.N:
            return SignedCorrespondence((), (), IntMatrix(0, 0, ()))
        return None
    if max(a.N, b.N) > cap:
        raise CapError(f"isomorphism search over {max(a.N, b.N)} rows exceeds cap {cap}")
    if not _iso_prefilter(a, b):
        return None
    if a.a_matrix == b.a_matrix:
        return SignedCorrespondence(tuple(range(a.N)), (1,) * a.N,
                                    IntMatrix.identity(a.n))
    return _search_correspondences(a, b, count_all=False)


def automorphism_count(sys, cap=DEFAULT_ENUMERATION_CAP):
    """Number of signed self-correspondences (global flip included)."""
    if sys.N == 0:
        return 1
    if sys.N > cap:
        raise CapError(f"automorphism search over {sys.N} rows exceeds cap {cap}")
    return _search_correspondences(sys, sys, count_all=True)
