"""Exact lattice-polytope toolkit.

Polar duals, reflexivity, lattice-point enumeration, integer kernels of
vertex matrices, combinatorial equivalence, and the kernel-pair predicates.
All arithmetic is exact (ints and Fractions); polytopes are immutable and
hashable, so every operation is safe to call concurrently.

Conventions: a polytope stores an ordered tuple of vertices (order is
significant -- the vertex-matrix kernel lives in Z^k indexed by that order).
A facet inequality <normal, x> >= -offset has a primitive integer normal.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional, Tuple

from .errors import (
    DegeneratePolytope,
    NonLatticeDual,
    NotInteriorOrigin,
    NotReflexive,
)
from .intlinalg import (
    left_kernel,
    mat_inverse,
    mat_rank,
    vec_primitive,
)

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class FacetInequality:
    """<normal, x> >= -offset, valid on the whole polytope, tight on a facet."""

    normal: LatticePoint
    offset: int


@dataclass(frozen=True)
class KernelLattice:
    """Integer kernel {a in Z^k : sum a_i v_i = 0} of a vertex matrix.

    The basis is the row Hermite normal form of any generating set, so two
    KernelLattice values are equal exactly when they are the same submodule
    of Z^k.
    """

    ambient_rank: int
    basis: Tuple[LatticePoint, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope given by its ordered vertices."""

    dim: int
    vertices: Tuple[LatticePoint, ...]
    id: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if any(len(v) != self.dim for v in verts):
            raise DegeneratePolytope("vertex length does not match dimension")
        if len(set(verts)) != len(verts):
            raise DegeneratePolytope("duplicate vertices")
        base = verts[0]
        diffs = tuple(
            tuple(v[j] - base[j] for j in range(self.dim)) for v in verts[1:]
        )
        if mat_rank(diffs) < self.dim:
            raise DegeneratePolytope("vertex list is not full-dimensional")
        # a point of the hull is a vertex iff its tight facet normals span
        fts = facets(self)
        for v in verts:
            tight = tuple(
                f.normal
                for f in fts
                if sum(f.normal[j] * v[j] for j in range(self.dim)) == -f.offset
            )
            if not tight or mat_rank(tight) < self.dim:
                raise DegeneratePolytope(f"point {v} is not a vertex")

    @property
    def nvertices(self) -> int:
        return len(self.vertices)

    def with_id(self, new_id) -> "LatticePolytope":
        return LatticePolytope(self.dim, self.vertices, new_id)

    def relabel(self, order) -> "LatticePolytope":
        """Same polytope with vertices reordered by the given index tuple."""
        return LatticePolytope(
            self.dim, tuple(self.vertices[i] for i in order), self.id
        )


@lru_cache(maxsize=None)
def facets(p: LatticePolytope) -> Tuple[FacetInequality, ...]:
    """All facet inequalities, each with primitive normal.

    Enumerates hyperplanes spanned by dim-subsets of vertices and keeps the
    supporting ones; exact and fast for the desk-scale vertex counts here.
    """
    n = p.dim
    verts = p.vertices
    if n == 1:
        lo = min(v[0] for v in verts)
        hi = max(v[0] for v in verts)
        return (FacetInequality((1,), -lo), FacetInequality((-1,), hi))
    seen = {}
    for sub in combinations(range(len(verts)), n):
        base = verts[sub[0]]
        diffs = [tuple(verts[i][j] - base[j] for j in range(n)) for i in sub[1:]]
        normals = left_kernel(tuple(zip(*diffs))) if diffs else ()
        if len(normals) != 1:
            continue
        normal = vec_primitive(normals[0])
        c = sum(normal[j] * base[j] for j in range(n))
        vals = [sum(normal[j] * v[j] for j in range(n)) for v in verts]
        if all(val >= c for val in vals):
            pass
        elif all(val <= c for val in vals):
            normal = tuple(-x for x in normal)
            c = -c
        else:
            continue
        seen[(normal, c)] = FacetInequality(normal, -c)
    return tuple(sorted(seen.values(), key=lambda f: (f.normal, f.offset)))


def has_interior_origin(p: LatticePolytope) -> bool:
    return all(f.offset >= 1 for f in facets(p))


def _require_interior_origin(p):
    if not has_interior_origin(p):
        raise NotInteriorOrigin(f"origin is not strictly interior to {p.id or p.vertices}")


def is_reflexive(p: LatticePolytope) -> bool:
    """True iff every facet has lattice distance 1 from the origin."""
    _require_interior_origin(p)
    return all(f.offset == 1 for f in facets(p))


def polar_dual(p: LatticePolytope) -> LatticePolytope:
    """Polar polytope {w : <v, w> >= -1 for all v}, vertices sorted lex.

    Raises NonLatticeDual when some dual vertex is non-integral, which is
    exactly the non-reflexive case.
    """
    _require_interior_origin(p)
    if p.dim > 4:
        raise DegeneratePolytope("polar_dual supports dimension <= 4")
    dual_verts = []
    for f in facets(p):
        if f.offset != 1:
            raise NonLatticeDual(
                f"facet {f.normal} has lattice distance {f.offset} != 1"
            )
        dual_verts.append(f.normal)
    return LatticePolytope(p.dim, tuple(sorted(dual_verts)))


@lru_cache(maxsize=None)
def lattice_points(p: LatticePolytope) -> Tuple[LatticePoint, ...]:
    """All lattice points of the polytope (boundary included), in lex order."""
    n = p.dim
    fts = facets(p)
    lo = [min(v[j] for v in p.vertices) for j in range(n)]
    hi = [max(v[j] for v in p.vertices) for j in range(n)]
    points = []
    for head in product(*(range(lo[j], hi[j] + 1) for j in range(n - 1))):
        # remaining last coordinate must satisfy every facet inequality
        lo_z, hi_z = lo[n - 1], hi[n - 1]
        feasible = True
        for f in fts:
            partial = sum(f.normal[j] * head[j] for j in range(n - 1))
            a = f.normal[n - 1]
            rhs = -f.offset - partial
            if a == 0:
                if partial < -f.offset:
                    feasible = False
                    break
            elif a > 0:
                lo_z = max(lo_z, -(-rhs // a))  # ceil(rhs / a)
            else:
                hi_z = min(hi_z, rhs // a)  # floor(rhs / a) with a < 0
        if feasible:
            points.extend(head + (z,) for z in range(lo_z, hi_z + 1))
    return tuple(points)


def vertex_kernel(p: LatticePolytope) -> KernelLattice:
    """Canonical basis of {a in Z^k : sum_i a_i v_i = 0}."""
    return KernelLattice(p.nvertices, left_kernel(p.vertices))


def _kernel_of_rows(rows) -> Tuple[LatticePoint, ...]:
    return left_kernel(rows)


@lru_cache(maxsize=None)
def vertex_facet_sets(p: LatticePolytope) -> Tuple[frozenset, ...]:
    """Facets as frozensets of vertex indices."""
    out = []
    for f in facets(p):
        tight = frozenset(
            i
            for i, v in enumerate(p.vertices)
            if sum(f.normal[j] * v[j] for j in range(p.dim)) == -f.offset
        )
        out.append(tight)
    return tuple(out)


def _vertex_degrees(p):
    fsets = vertex_facet_sets(p)
    return tuple(
        tuple(sorted(len(f) for f in fsets if i in f)) for i in range(p.nvertices)
    )


def combinatorial_bijections(
    p: LatticePolytope, q: LatticePolytope
) -> Iterator[Tuple[int, ...]]:
    """Yield every vertex bijection inducing a face-lattice isomorphism.

    For polytopes the face lattice is determined by vertex-facet incidence,
    so a bijection qualifies iff it maps the facet family of p onto that
    of q.  Backtracking with vertex-degree pruning; polytope sizes here are
    tiny (<= 14 vertices).
    """
    k = p.nvertices
    if k != q.nvertices:
        return
    pf, qf = vertex_facet_sets(p), vertex_facet_sets(q)
    if sorted(len(f) for f in pf) != sorted(len(f) for f in qf):
        return
    pdeg, qdeg = _vertex_degrees(p), _vertex_degrees(q)
    if sorted(pdeg) != sorted(qdeg):
        return
    qf_set = set(qf)
    sigma = [-1] * k
    used = [False] * k

    def extend(i):
        if i == k:
            if {frozenset(sigma[v] for v in f) for f in pf} == qf_set:
                yield tuple(sigma)
            return
        for j in range(k):
            if used[j] or pdeg[i] != qdeg[j]:
                continue
            sigma[i] = j
            used[j] = True
            # any fully-assigned p-facet must land on a q-facet
            ok = True
            for f in pf:
                if i in f and all(sigma[v] >= 0 for v in f):
                    if frozenset(sigma[v] for v in f) not in qf_set:
                        ok = False
                        break
            if ok:
                yield from extend(i + 1)
            used[j] = False
            sigma[i] = -1

    yield from extend(0)


def combinatorially_equivalent(
    p: LatticePolytope, q: LatticePolytope
) -> Optional[Tuple[int, ...]]:
    """A face-lattice-respecting vertex bijection, or None."""
    return next(combinatorial_bijections(p, q), None)


def is_kernel_pair(
    p: LatticePolytope,
    q: LatticePolytope,
    ordering: Optional[Tuple[int, ...]] = None,
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Decide whether p and q are a kernel pair; return a witness bijection.

    True iff p and q are combinatorially equivalent and some face-respecting
    vertex bijection sigma makes the vertex-matrix kernels equal as
    submodules of Z^k.  An explicit ordering pins the bijection instead of
    searching.
    """
    for poly in (p, q):
        if not is_reflexive(poly):
            raise NotReflexive(f"polytope {poly.id or poly.vertices} is not reflexive")
    kp = vertex_kernel(p).basis
    candidates = (
        [ordering] if ordering is not None else combinatorial_bijections(p, q)
    )
    for sigma in candidates:
        reordered = tuple(q.vertices[sigma[i]] for i in range(p.nvertices))
        if _kernel_of_rows(reordered) == kp:
            return True, tuple(sigma)
    return False, None


def _independent_vertex_indices(p):
    idx, rows = [], []
    for i, v in enumerate(p.vertices):
        if mat_rank(tuple(rows + [v])) > len(rows):
            rows.append(v)
            idx.append(i)
        if len(idx) == p.dim:
            return tuple(idx)
    raise DegeneratePolytope("vertices do not span")  # unreachable: checked at init


def lattice_isomorphism(
    p: LatticePolytope, q: LatticePolytope
) -> Optional[Tuple[Tuple[Fraction, ...], ...]]:
    """A GL(n,Z) matrix U with v @ U mapping vertices(p) onto vertices(q),
    compatibly with some face-lattice bijection; None if there is none."""
    if p.dim != q.dim or p.nvertices != q.nvertices:
        return None
    base = _independent_vertex_indices(p)
    m_p = tuple(p.vertices[i] for i in base)
    inv = mat_inverse(m_p)
    for sigma in combinatorial_bijections(p, q):
        m_q = tuple(q.vertices[sigma[i]] for i in base)
        u = tuple(
            tuple(sum(inv[r][t] * m_q[t][c] for t in range(p.dim)) for c in range(p.dim))
            for r in range(p.dim)
        )
        if any(x.denominator != 1 for row in u for x in row):
            continue
        uint = tuple(tuple(int(x) for x in row) for row in u)
        if all(
            tuple(sum(v[t] * uint[t][c] for t in range(p.dim)) for c in range(p.dim))
            == q.vertices[sigma[i]]
            for i, v in enumerate(p.vertices)
        ):
            from .intlinalg import mat_det

            if abs(mat_det(uint)) == 1:
                return uint
    return None


def is_mirror_kernel_pair(p: LatticePolytope, q: LatticePolytope) -> bool:
    """Kernel pair that is also a polar-dual pair.

    True iff q is GL(n,Z)-isomorphic to the polar dual of p, (p, q) is a
    kernel pair, and (polar_dual(p), polar_dual(q)) is a kernel pair.
    """
    p_dual = polar_dual(p)
    if lattice_isomorphism(p_dual, q) is None:
        return False
    ok, _ = is_kernel_pair(p, q)
    if not ok:
        return False
    ok, _ = is_kernel_pair(p_dual, polar_dual(q))
    return ok
