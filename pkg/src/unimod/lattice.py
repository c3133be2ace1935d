"""The integral lattice and reflexive polytope attached to a system.

The span W of the form columns is embedded in Z^N so that coordinate i of a
point is the value the i-th form takes on it.  The lattice L = W cap Z^N is
generated by the columns of the standard-form matrix (saturation comes from
total unimodularity), and the polytope D = {w in W : every |coordinate| <= 1}
is a reflexive lattice polytope whose lattice points all live in {-1,0,1}^N.
That makes an exact census possible: scan the cube, keep the points
orthogonal to a saturated basis of the complement.  The scan is also a
complete certificate for lattice vectors of square <= 3.

Projection of the +-1 cube onto W is done in exact rational arithmetic with
a single common denominator (the discriminant), so the zonotope property is
checked with integer comparisons only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from multiprocessing import get_context

from .errors import CapError, MembershipError, PreconditionError
from .intlinalg import (IntMatrix, adjugate, determinant, dot, hermite_form,
                        kernel_basis, matvec, rank, vecmat)
from .systems import (DEFAULT_ENUMERATION_CAP, complexity, enumerate_bases,
                      form_pairing_matrix, gram_matrix, multiplicity_classes)

DEFAULT_SCAN_CAP = 18
DEFAULT_SIGN_CAP = 16


@dataclass(frozen=True)
class LatticeModel:
    """L = W cap Z^N presented by the generating columns and their Gram data."""

    system: UnimodularSystem
    basis_columns: IntMatrix   # N x n; columns generate L
    gram: IntMatrix            # pairwise products of the generating columns
    complement_basis: tuple    # saturated basis of {z in Z^N : z @ A = 0}

    @property
    def ambient_dim(self):
        return self.basis_columns.rows


def lattice_of(sys):
    """Lattice model of a system; the column basis is the stored matrix."""
    return LatticeModel(system=sys,
                        basis_columns=sys.a_matrix,
                        gram=gram_matrix(sys),
                        complement_basis=kernel_basis(sys.a_matrix))


def discriminant(lat):
    """det of the Gram matrix; equals the complexity of the system."""
    return determinant(lat.gram)


# ---------------------------------------------------------------------------
# cube scan


def _cube_scan(n_coords, kernel):
    """All z in {-1,0,1}^n_coords orthogonal to every kernel vector.

    Meet-in-the-middle: index half-assignments by their partial products
    against the kernel, then join halves whose partials cancel.
    """
    if n_coords == 0:
        return [()]
    half = n_coords // 2
    left_len, right_len = half, n_coords - half
    kl = [k[:half] for k in kernel]
    kr = [k[half:] for k in kernel]
    table = {}
    for left in product((-1, 0, 1), repeat=left_len):
        key = tuple(dot(left, k) for k in kl)
        table.setdefault(key, []).append(left)
    out = []
    for right in product((-1, 0, 1), repeat=right_len):
        need = tuple(-dot(right, k) for k in kr)
        for left in table.get(need, ()):
            out.append(left + right)
    out.sort()
    return out


@dataclass(frozen=True)
class PolytopePoint:
    vector: tuple
    square: int
    coefficients: tuple  # integer coordinates in the generating columns


def _coefficients(sys, z):
    """Exact coordinates of a lattice point in the column basis.

    The base rows of the standard form are unit vectors, so the coordinates
    can be read off there; the remaining rows then verify membership.
    """
    c = tuple(z[i] for i in sys.base_rows)
    if matvec(sys.a_matrix, c) != tuple(z):
        raise MembershipError(f"{tuple(z)} is not in the lattice")
    return c


def polytope_points(sys, cap=DEFAULT_SCAN_CAP):
    """All lattice points of D, sorted lexicographically.

    Complete by the cube argument: a point of D has every form value in
    {-1,0,1}, and membership in W is equivalent to orthogonality against a
    saturated basis of the complement.
    """
    if sys.N > cap:
        raise CapError(f"cube scan over 3^{sys.N} points exceeds cap {cap}")
    kernel = kernel_basis(sys.a_matrix)
    pts = []
    for z in _cube_scan(sys.N, kernel):
        pts.append(PolytopePoint(vector=z,
                                 square=sum(1 for x in z if x),
                                 coefficients=_coefficients(sys, z)))
    return tuple(pts)


def vertex_test(sys, point):
    """Whether a lattice point of D is a vertex: active rows have full rank."""
    point = tuple(point)
    if len(point) != sys.N or any(x not in (-1, 0, 1) for x in point):
        raise PreconditionError("vertex_test expects a point of D")
    active = [i for i, x in enumerate(point) if x]
    if len(active) < sys.n:
        return False
    return rank(sys.a_matrix.take_rows(active)) == sys.n


@dataclass(frozen=True)
class FacetPair:
    """The two opposite facets cut out by one multiplicity class of forms."""

    rep_row: int          # smallest row index of the class
    class_rows: tuple     # all rows whose form equals the rep's up to sign
    plus_points: tuple    # lattice points at level +1 of the rep form
    minus_points: tuple
    plus_vertices: tuple
    minus_vertices: tuple


def facets(sys, cap=DEFAULT_SCAN_CAP):
    """One facet pair per distinct form (up to sign), with their points."""
    pts = polytope_points(sys, cap=cap)
    out = []
    for cls in multiplicity_classes(sys):
        rep = cls[0]
        plus = tuple(p.vector for p in pts if p.vector[rep] == 1)
        minus = tuple(p.vector for p in pts if p.vector[rep] == -1)
        out.append(FacetPair(
            rep_row=rep, class_rows=cls,
            plus_points=plus, minus_points=minus,
            plus_vertices=tuple(v for v in plus if vertex_test(sys, v)),
            minus_vertices=tuple(v for v in minus if vertex_test(sys, v))))
    return tuple(out)


# ---------------------------------------------------------------------------
# zonotope property


def _sign_ok(prows, d, s):
    for pr in prows:
        acc = 0
        for a, b in zip(pr, s):
            if b == 1:
                acc += a
            else:
                acc -= a
        if acc > d or acc < -d:
            return False
    return True


def _zono_block(args):
    prows, d, prefix, suffix_len = args
    for suffix in product((1, -1), repeat=suffix_len):
        if not _sign_ok(prows, d, prefix + suffix):
            return False
    return True


def zonotope_check(sys, cap=DEFAULT_SIGN_CAP, workers=1):
    """Project every +-1 sign vector onto W and test membership in D.

    The projection of s is (P s)/d with P = A adj(A^T A) A^T and
    d = det(A^T A), so membership is the integer condition
    max_i |(P s)_i| <= d.  Certifies the cube-projection half of the
    zonotope property; opposite sign vectors are equivalent, so s_1 = +1.
    """
    if sys.N > cap:
        raise CapError(f"sign scan over 2^{sys.N} vectors exceeds cap {cap}")
    if sys.N == 0:
        return True
    p, d = form_pairing_matrix(sys)
    prows = p.row_list()
    rest = sys.N - 1
    if workers > 1 and rest >= 2:
        split = min(4, rest)
        tasks = [(prows, d, (1,) + pre, rest - split)
                 for pre in product((1, -1), repeat=split)]
        with get_context("fork").Pool(workers) as pool:
            return all(pool.map(_zono_block, tasks))
    return _zono_block((prows, d, (1,), rest))


# ---------------------------------------------------------------------------
# short vectors


@dataclass(frozen=True)
class ShortVectorCensus:
    """Counts of lattice vectors of square 1, 2, 3 (both signs counted).

    The cube scan sees *every* lattice vector of square <= 3, so the counts
    are exact.  min_nonzero_square is the minimum over the nonzero points of
    D; when all counts vanish the true lattice minimum is only certified to
    be >= 4, attained exactly if a square-4 point of D exists.
    """

    counts: dict
    min_nonzero_square: int | None

    def units(self):
        return self.counts[1]

    def roots(self):
        return self.counts[2]

    def minimum_summary(self):
        for s in (1, 2, 3):
            if self.counts[s]:
                return str(s)
        if self.min_nonzero_square is None:
            return "none"
        if self.min_nonzero_square == 4:
            return "4 (attained)"
        return ">= 4"


def short_vector_census(sys, cap=DEFAULT_SCAN_CAP):
    pts = polytope_points(sys, cap=cap)
    counts = {1: 0, 2: 0, 3: 0}
    min_sq = None
    for p in pts:
        if p.square == 0:
            continue
        if p.square in counts:
            counts[p.square] += 1
        if min_sq is None or p.square < min_sq:
            min_sq = p.square
    return ShortVectorCensus(counts=counts, min_nonzero_square=min_sq)


# ---------------------------------------------------------------------------
# generation


def lattice_generated_by(lat, vectors):
    """Whether the given lattice vectors generate L (index-1 Hermite check)."""
    sys = lat.system
    coords = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != lat.ambient_dim:
            raise MembershipError("vector has the wrong ambient dimension")
        coords.append(_coefficients(sys, v))
    if not coords:
        return sys.n == 0
    h, _, rk = hermite_form(IntMatrix.from_rows(coords))
    if rk < sys.n:
        return False
    index = 1
    for i in range(sys.n):
        index *= h[i, i]
    return index == 1


def generation_index(lat, vectors):
    """Index in L of the sublattice the vectors generate (0 if lower rank)."""
    sys = lat.system
    coords = [_coefficients(sys, tuple(int(x) for x in v)) for v in vectors]
    if not coords:
        return 1 if sys.n == 0 else 0
    h, _, rk = hermite_form(IntMatrix.from_rows(coords))
    if rk < sys.n:
        return 0
    index = 1
    for i in range(sys.n):
        index *= h[i, i]
    return index


# ---------------------------------------------------------------------------
# full report


@dataclass(frozen=True)
class PolytopeReport:
    system: UnimodularSystem
    discriminant: int
    points: tuple
    vertices: tuple
    facet_pairs: tuple
    census: ShortVectorCensus
    zonotope_verified: bool
    reflexive_verified: bool

    def by_square(self):
        """Counts of nonzero lattice points by square (origin excluded)."""
        out = {}
        for p in self.points:
            if p.square:
                out[p.square] = out.get(p.square, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self):
        return {
            "N": self.system.N,
            "n": self.system.n,
            "base_rows": list(self.system.base_rows),
            "discriminant": self.discriminant,
            "origin_included": True,
            "census_by_square": {str(k): v for k, v in self.by_square().items()},
            "point_count": len(self.points),
            "points": [{"vector": list(p.vector), "square": p.square,
                        "coefficients": list(p.coefficients)}
                       for p in self.points],
            "vertex_count": len(self.vertices),
            "vertices": [list(v) for v in self.vertices],
            "facets": [{"rep_row": f.rep_row,
                        "class_rows": list(f.class_rows),
                        "plus_points": [list(v) for v in f.plus_points],
                        "minus_points": [list(v) for v in f.minus_points],
                        "plus_vertex_count": len(f.plus_vertices),
                        "minus_vertex_count": len(f.minus_vertices)}
                       for f in self.facet_pairs],
            "min_nonzero_square": self.census.minimum_summary(),
            "short_vectors": {str(k): v for k, v in self.census.counts.items()},
            "zonotope_verified": self.zonotope_verified,
            "reflexive_verified": self.reflexive_verified,
        }


def _basic_vertices(sys, cap):
    """Vertices of D the dual way: feasible basic solutions of n active rows.

    For every base S and sign pattern e, the system (rows S) x = e has a
    unique solution, integral because base minors are +-1; it is a vertex of
    D exactly when all coordinates of the lifted point lie in [-1, 1].
    """
    a = sys.a_matrix
    verts = set()
    for base in enumerate_bases(sys, cap=cap):
        b = a.take_rows(base)
        d = determinant(b)           # +-1 by total unimodularity
        adj_t = adjugate(b.transpose())
        for eps in product((1, -1), repeat=sys.n):
            x = tuple(v * d for v in vecmat(eps, adj_t))
            w = matvec(a, x)
            if all(-1 <= c <= 1 for c in w):
                verts.add(w)
    return verts


def build_polytope_report(sys, scan_cap=DEFAULT_SCAN_CAP,
                          sign_cap=DEFAULT_SIGN_CAP,
                          enum_cap=DEFAULT_ENUMERATION_CAP, workers=1):
    """Assemble the full polytope report with both verification routes.

    Reflexivity is certified by agreement of two independent vertex
    computations (cube scan + active-rank test vs. feasible basic solutions,
    which are integral because base determinants are +-1) plus nonemptiness
    of every facet; the zonotope flag comes from the exact sign-vector scan.
    """
    pts = polytope_points(sys, cap=scan_cap)
    vertices = tuple(p.vector for p in pts if vertex_test(sys, p.vector))
    fp = facets(sys, cap=scan_cap)
    census = short_vector_census(sys, cap=scan_cap)
    zono = zonotope_check(sys, cap=sign_cap, workers=workers)
    basic = _basic_vertices(sys, cap=enum_cap)
    reflexive = (set(vertices) == basic)
    if sys.n > 0:
        reflexive = reflexive and all(
            f.plus_vertices and f.minus_vertices for f in fp)
    return PolytopeReport(system=sys,
                          discriminant=complexity(sys),
                          points=pts,
                          vertices=vertices,
                          facet_pairs=fp,
                          census=census,
                          zonotope_verified=zono,
                          reflexive_verified=reflexive)
