"""Torus-invariant Weil divisors on Spec K[M].

A monomial divisor is an integer vector indexed by the facets of M (facet
order as returned by ``facet_valuations``). The divisor class group is
Z^r modulo the image of the facet valuation map; the affine class group is
its free part.
"""

from dataclasses import dataclass
from typing import Optional

from .cone import FacetSystem, MonoidSpec, embedding_matrix, face_of_complement, is_simplicial
from .errors import DimensionMismatch, InternalInconsistency, NotEffective
from .lattice import AbelianGroup, IntegerMatrix, class_of, cokernel


@dataclass(frozen=True)
class MonomialDivisor:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_support(cls, S, r):
        S = set(S)
        if any(i < 0 or i >= r for i in S):
            raise IndexError("facet index out of range")
        return cls(tuple(int(i in S) for i in range(r)))

    @property
    def effective(self):
        return all(c >= 0 for c in self.coeffs)


@dataclass(frozen=True)
class ClassGroupData:
    dkg: AbelianGroup
    akg: AbelianGroup
    projection: IntegerMatrix

    def to_json(self):
        return {"dkg": self.dkg.to_json(), "akg": self.akg.to_json()}


@dataclass(frozen=True)
class AffinityReport:
    affine: bool
    support: tuple
    witness: Optional[tuple]  # monoid element in lattice coordinates
    witness_valuation: Optional[tuple]


def _check_length(F, D):
    if len(D.coeffs) != F.r:
        raise DimensionMismatch("divisor has %d coefficients, monoid has %d facets"
                                % (len(D.coeffs), F.r))


def divisor_class_group(F: FacetSystem) -> ClassGroupData:
    P = embedding_matrix(F)
    dkg = cokernel(P)
    return ClassGroupData(dkg, dkg.free_part(), P)


def affine_class_group(F: FacetSystem) -> AbelianGroup:
    return divisor_class_group(F).akg


def support(D: MonomialDivisor) -> frozenset:
    if not D.effective:
        raise NotEffective("divisor %r has negative coefficients" % (D.coeffs,))
    return frozenset(i for i, c in enumerate(D.coeffs) if c > 0)


def realizing_monomial(M: MonoidSpec, F: FacetSystem, S):
    """Sum of the generators on the face cut out by the facets outside S.

    Every monomial with support inside S lies on that face, and the face is
    closed under addition, so this sum has the largest possible support.
    """
    face = face_of_complement(M, F, S)
    return tuple(sum(g[k] for g in face.generators) for k in range(M.dim))


def support_realizable(M: MonoidSpec, F: FacetSystem, S) -> bool:
    """Is there f in M whose valuation is positive exactly on S?"""
    S = frozenset(S)
    f = realizing_monomial(M, F, S)
    return frozenset(i for i, v in enumerate(F.valuation(f)) if v > 0) == S


def complement_report(M: MonoidSpec, F: FacetSystem, D: MonomialDivisor) -> AffinityReport:
    _check_length(F, D)
    S = support(D)
    f = realizing_monomial(M, F, S)
    val = F.valuation(f)
    ok = frozenset(i for i, v in enumerate(val) if v > 0) == S
    if ok:
        return AffinityReport(True, tuple(sorted(S)), f, val)
    return AffinityReport(False, tuple(sorted(S)), None, None)


def complement_is_affine(M: MonoidSpec, F: FacetSystem, D: MonomialDivisor) -> bool:
    """Does Spec K[M] minus the support of the effective divisor D stay affine?"""
    return complement_report(M, F, D).affine


def is_affine_trivial(F: FacetSystem, D: MonomialDivisor) -> bool:
    """True iff some positive multiple of D is principal (torsion class)."""
    _check_length(F, D)
    free, _ = class_of(embedding_matrix(F), D.coeffs)
    return not any(free)


def divisor_class(F: FacetSystem, D: MonomialDivisor):
    _check_length(F, D)
    return class_of(embedding_matrix(F), D.coeffs)


@dataclass(frozen=True)
class SimplicialityReport:
    simplicial: bool
    dkg_is_torsion: bool
    akg_zero: bool

    def to_json(self):
        return {"simplicial": self.simplicial, "dkg_is_torsion": self.dkg_is_torsion,
                "akg_zero": self.akg_zero}


def simpliciality_report(M: MonoidSpec, F: FacetSystem) -> SimplicialityReport:
    """Simplicial, torsion class group and vanishing affine class group must agree."""
    cg = divisor_class_group(F)
    rep = SimplicialityReport(is_simplicial(F, M), cg.dkg.is_torsion, cg.akg.is_trivial)
    if len({rep.simplicial, rep.dkg_is_torsion, rep.akg_zero}) != 1:
        raise InternalInconsistency("simpliciality equivalence violated: %r" % (rep,))
    return rep
