"""Normal affine monoids as rational polyhedral cones.

A monoid is stored in coordinates of its group lattice, so the working
lattice is exactly Z^d with d the rank. Facets come from the double
description method run on the dual cone {y : <y, g> >= 0 for all g}; its
extreme rays are the primitive facet valuations.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Optional

from .errors import DimensionMismatch, EmptyGenerators, InternalInconsistency, NotFullDimensional, NotPointed
from .lattice import IntegerMatrix, lattice_coordinates, primitive, rank, solve_rational, sublattice_basis


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonoidSpec:
    """A pointed, full-dimensional affine monoid in lattice coordinates.

    ``generators`` live in Z^dim where the lattice is spanned by ``basis``
    (ambient_dim x dim, columns); ``ambient_generators`` keeps the input.
    """

    dim: int
    generators: tuple
    basis: IntegerMatrix
    ambient_generators: tuple = ()

    @property
    def ambient_dim(self):
        return self.basis.rows

    def to_ambient(self, x):
        return self.basis.apply(x)

    def to_json(self):
        return {"dim": self.ambient_dim, "generators": [list(g) for g in self.ambient_generators]}


@dataclass(frozen=True)
class FacetSystem:
    normals: tuple
    valuation_matrix: IntegerMatrix = field(repr=False)

    @property
    def r(self):
        return len(self.normals)

    def valuation(self, x):
        return self.valuation_matrix.apply(x)

    def to_json(self, monoid=None):
        doc = {"normals": [list(v) for v in self.normals]}
        if monoid is not None:
            doc["simplicial"] = is_simplicial(self, monoid)
        return doc


@dataclass(frozen=True)
class FaceData:
    zero_set: frozenset
    generators: tuple


@dataclass(frozen=True)
class SaturationReport:
    saturated: bool
    witness: Optional[tuple]
    checked: int
    box_bound: int

    def to_json(self):
        return {"saturated": self.saturated,
                "witness": list(self.witness) if self.witness is not None else None,
                "checked": self.checked, "box_bound": self.box_bound}


def build_monoid(dim, generators, lattice=None) -> MonoidSpec:
    """Validate generators and re-express them in a basis of their lattice.

    ``lattice`` optionally names extra vectors whose span (together with the
    generators) is taken as the group lattice; by default it is ZM.
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise EmptyGenerators("a monoid needs at least one generator")
    if any(len(g) != dim for g in gens):
        raise DimensionMismatch("generators must have length %d" % dim)
    span = list(gens)
    if lattice is not None:
        extra = [tuple(int(x) for x in v) for v in lattice]
        if any(len(v) != dim for v in extra):
            raise DimensionMismatch("lattice vectors must have length %d" % dim)
        span += extra
    basis = sublattice_basis(span, dim)
    if basis.cols == 0:
        raise NotPointed("generators span only the zero lattice")
    local = tuple(lattice_coordinates(basis, g) for g in gens)
    if rank(IntegerMatrix.from_rows(local, basis.cols)) < basis.cols:
        raise NotFullDimensional("generators span a cone of lower dimension than the lattice")
    d = basis.cols
    rays = _dual_rays_cached(tuple(dict.fromkeys(g for g in local if any(g))), d)
    if rank(IntegerMatrix.from_rows(rays, d)) < d:
        # the lineality space is a face, hence contains a generator
        g = next(g for g in local if any(g) and all(_dot(r, g) == 0 for r in rays))
        raise NotPointed("cone contains the line through %r" % (basis.apply(g),),
                         witness=list(basis.apply(g)))
    return MonoidSpec(d, local, basis, tuple(gens))


def _independent_rows(gens, d):
    chosen = []
    for g in gens:
        if rank(IntegerMatrix.from_rows(chosen + [g], d)) > len(chosen):
            chosen.append(g)
            if len(chosen) == d:
                break
    return chosen


def _dual_extreme_rays(gens, d):
    """Extreme rays of {y : <y, g> >= 0 for all g} by double description."""
    base = _independent_rows(gens, d)
    if len(base) < d:
        raise NotFullDimensional("generators do not span a full-dimensional cone")
    # rays of the simplicial start cone: columns of base^{-1}
    rays = []
    for k in range(d):
        e = [int(i == k) for i in range(d)]
        col = solve_rational(IntegerMatrix.from_rows(base, d), e)
        den = lcm(*(c.denominator for c in col))
        rays.append(primitive(tuple(int(c * den) for c in col)))
    done = list(base)
    rest = [g for g in gens if g not in base]
    for g in rest:
        vals = [_dot(r, g) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        zer = [r for r, v in zip(rays, vals) if v == 0]
        if not neg:
            done.append(g)
            continue
        zsets = {r: frozenset(i for i, h in enumerate(done) if _dot(r, h) == 0) for r in rays}
        new = []
        for rp in pos:
            for rn in neg:
                common = zsets[rp] & zsets[rn]
                if len(common) < d - 2:
                    continue
                if any(common <= zsets[r] for r in rays if r != rp and r != rn):
                    continue
                a, b = _dot(rp, g), _dot(rn, g)
                new.append(primitive(tuple(a * y - b * x for x, y in zip(rp, rn))))
        rays = pos + zer + new
        done.append(g)
    return rays


@lru_cache(maxsize=256)
def _dual_rays_cached(gens, d):
    return tuple(_dual_extreme_rays(list(gens), d))


def facet_valuations(M: MonoidSpec) -> FacetSystem:
    """Primitive facet normals, sorted lexicographically."""
    d = M.dim
    gens = list(dict.fromkeys(g for g in M.generators if any(g)))
    if not gens:
        raise NotFullDimensional("no nonzero generators")
    normals = sorted(set(_dual_rays_cached(tuple(gens), d)))
    if rank(IntegerMatrix.from_rows(normals, d)) < d:
        raise NotPointed("cone is not pointed")
    for v in normals:
        if any(_dot(v, g) < 0 for g in gens):
            raise InternalInconsistency("normal %r negative on a generator" % (v,))
        zero = [g for g in gens if _dot(v, g) == 0]
        if rank(IntegerMatrix.from_rows(zero, d)) != d - 1:
            raise InternalInconsistency("normal %r does not cut out a facet" % (v,))
    return FacetSystem(tuple(normals), IntegerMatrix.from_rows(normals, d))


def is_simplicial(F: FacetSystem, M: MonoidSpec) -> bool:
    return F.r == M.dim


def embedding_matrix(F: FacetSystem) -> IntegerMatrix:
    """The map Gamma -> Z^r, m -> (nu_1(m), ..., nu_r(m)), as an r x d matrix."""
    return F.valuation_matrix


def face_of_complement(M: MonoidSpec, F: FacetSystem, S) -> FaceData:
    """Generators vanishing on every facet outside S."""
    S = frozenset(S)
    if any(i < 0 or i >= F.r for i in S):
        raise IndexError("facet index out of range")
    zero_set = frozenset(range(F.r)) - S
    gens = tuple(g for g in M.generators
                 if all(_dot(F.normals[j], g) == 0 for j in zero_set))
    return FaceData(zero_set, gens)


def interior_element(M: MonoidSpec, F: FacetSystem):
    d = M.dim
    return tuple(sum(g[k] for g in M.generators) for k in range(d))


def _grading(F):
    d = len(F.normals[0])
    return tuple(sum(v[k] for v in F.normals) for k in range(d))


def monoid_contains(M: MonoidSpec, F: FacetSystem, x) -> bool:
    """Is x a nonnegative integer combination of the generators?

    Bounded search: the sum of the facet normals is a positive grading, so
    the recursion depth is at most deg(x) / min deg(g).
    """
    w = _grading(F)
    gens = [g for g in dict.fromkeys(M.generators) if any(g)]
    normals = F.normals

    @lru_cache(maxsize=None)
    def member(y):
        if not any(y):
            return True
        if any(_dot(v, y) < 0 for v in normals):
            return False
        for g in gens:
            z = tuple(a - b for a, b in zip(y, g))
            if _dot(w, z) >= 0 and member(z):
                return True
        return False

    return member(tuple(x))


def saturation_check(M: MonoidSpec, F: FacetSystem, box_bound=3) -> SaturationReport:
    """Check M = cone(M) cap Z^d on the box |x_k| <= box_bound (lattice coordinates)."""
    if box_bound < 1:
        raise ValueError("box_bound must be positive")
    checked = 0
    rng = range(-box_bound, box_bound + 1)
    for x in product(rng, repeat=M.dim):
        if any(_dot(v, x) < 0 for v in F.normals):
            continue
        checked += 1
        if not monoid_contains(M, F, x):
            return SaturationReport(False, tuple(x), checked, box_bound)
    return SaturationReport(True, None, checked, box_bound)


def segre_monoid(m, n) -> MonoidSpec:
    """Monoid of K[T_i S_j : 1 <= i <= n, 1 <= j <= m].

    Ambient coordinates are (T_1..T_n, S_1..S_m); generators are listed with
    the T-index varying slowest.
    """
    if m < 1 or n < 1:
        raise ValueError("segre_monoid needs m, n >= 1")
    gens = []
    for i in range(n):
        for j in range(m):
            g = [0] * (n + m)
            g[i] = 1
            g[n + j] = 1
            gens.append(g)
    return build_monoid(n + m, gens)


def segre_facet_labels(m, n, M: MonoidSpec, F: FacetSystem):
    """Label each facet of segre_monoid(m, n) as ('row', i) or ('col', j), 1-based.

    Row facets belong to p_i = (T_i S_1, ..., T_i S_m); column facets to
    q_j = (T_1 S_j, ..., T_n S_j). When both descriptions fit (m = n = 1)
    the row label is used.
    """
    labels = []
    for v in F.normals:
        pos = [k for k, g in enumerate(M.generators) if _dot(v, g) > 0]
        rows = {k // m for k in pos}
        cols = {k % m for k in pos}
        if len(rows) == 1 and len(pos) == m:
            labels.append(("row", rows.pop() + 1))
        elif len(cols) == 1 and len(pos) == n:
            labels.append(("col", cols.pop() + 1))
        else:
            raise InternalInconsistency("facet %r is neither a row nor a column facet" % (v,))
    return labels
