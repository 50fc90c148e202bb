"""Closed-form answers for three ring families.

Hyperbolas B = A[X,Y]/(XY - U_1^d_1 ... U_r^d_r) over a factorial base,
determinantal rings R_k = K[X_ij]/I_k, and the Segre rings
K[T_i S_j : 1 <= i <= n, 1 <= j <= m].

Hyperbola divisor classes are written in the basis p_1, ..., p_r with
p_i = (U_i, X); the relation module is Z*d and q_i = -p_i in the class group.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch, FormatViolation, MissingComaximalData
from .lattice import AbelianGroup, cokernel


@dataclass(frozen=True)
class HyperbolaData:
    d: tuple
    base_local: bool = True
    comaximal: Optional[tuple] = None  # r x r booleans, diagonal ignored

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        if not d:
            raise FormatViolation("hyperbola needs at least one prime U_i")
        if any(x < 1 for x in d):
            raise FormatViolation("exponents d_i must be >= 1")
        object.__setattr__(self, "d", d)
        if self.comaximal is not None:
            C = tuple(tuple(bool(x) for x in row) for row in self.comaximal)
            if len(C) != len(d) or any(len(row) != len(d) for row in C):
                raise DimensionMismatch("comaximal relation must be %d x %d" % (len(d), len(d)))
            if any(C[i][j] != C[j][i] for i in range(len(d)) for j in range(len(d))):
                raise FormatViolation("comaximal relation must be symmetric")
            object.__setattr__(self, "comaximal", C)

    @property
    def r(self):
        return len(self.d)


def hyperbola_dkg(H: HyperbolaData) -> AbelianGroup:
    return cokernel([[x] for x in H.d])


def hyperbola_akg_zero(H: HyperbolaData) -> bool:
    """AKG B = 0 iff the U_i are pairwise comaximal in A."""
    r = H.r
    if r == 1:
        return True
    if H.comaximal is None:
        if H.base_local:
            return False  # a local ring has no comaximal pair of non-units
        raise MissingComaximalData("comaximality of the U_i is needed for r >= 2")
    pairs = [H.comaximal[i][j] for i in range(r) for j in range(i + 1, r)]
    if H.base_local and any(pairs):
        raise FormatViolation("over a local base no two primes are comaximal")
    return all(pairs)


def _require_local(H, n):
    if not H.base_local:
        raise FormatViolation("coaffinity classification is only available over a local base")
    if len(n) != H.r:
        raise DimensionMismatch("divisor has %d coefficients, hyperbola has r = %d" % (len(n), H.r))


def hyperbola_is_coaffine(H: HyperbolaData, n) -> bool:
    """Is the class of n_1 p_1 + ... + n_r p_r coaffine?

    Coaffine iff principal (n in Z*d) or some shift n + k*d lies strictly
    between 0 and d in every coordinate. Such a shift needs d_i not dividing
    n_i, and then k is forced to -floor(n_i / d_i) in each coordinate.
    """
    n = tuple(int(x) for x in n)
    _require_local(H, n)
    d = H.d
    if all(x % y == 0 for x, y in zip(n, d)) and len({x // y for x, y in zip(n, d)}) == 1:
        return True
    if any(x % y == 0 for x, y in zip(n, d)):
        return False
    return len({-(x // y) for x, y in zip(n, d)}) == 1


def hyperbola_is_affine_trivial(H: HyperbolaData, n) -> bool:
    """True iff n is a rational multiple of d."""
    n = tuple(int(x) for x in n)
    _require_local(H, n)
    d = H.d
    return all(n[i] * d[j] == n[j] * d[i] for i in range(H.r) for j in range(i + 1, H.r))


def hyperbola_akg(H: HyperbolaData) -> AbelianGroup:
    if not H.base_local:
        raise FormatViolation("the affine class group formula needs a local base")
    return hyperbola_dkg(H).free_part()


@dataclass(frozen=True)
class DeterminantalData:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or not 1 < self.k <= min(self.m, self.n):
            raise FormatViolation("need m, n >= 1 and 1 < k <= min(m, n), got (%d, %d, %d)"
                                  % (self.m, self.n, self.k))


def det_dimension(D: DeterminantalData) -> int:
    return (D.m + D.n - D.k + 1) * (D.k - 1)


def det_ideal_height(D: DeterminantalData) -> int:
    return D.m * D.n - det_dimension(D)


def det_dkg(D: DeterminantalData) -> AbelianGroup:
    return AbelianGroup(1)


def det_akg(D: DeterminantalData) -> AbelianGroup:
    """AKG R_k = DKG R_k = Z, generated by the (k-1)-minors of the first k-1 rows."""
    return det_dkg(D)


def det_extension_height(D: DeterminantalData) -> int:
    """Height of the image of that prime in K[X_ij : i <= k-1].

    The image is I_{k-1} of a (k-1) x n generic matrix, whose height is
    (k-1)n - dim R_{k-1}((k-1) x n) = n - k + 2.
    """
    rows = minor = D.k - 1
    return rows * D.n - (rows + D.n - minor + 1) * (minor - 1)


def segre_union_affine(m, n, rows, cols) -> bool:
    """Is the complement of V(p_i : i in rows) u V(q_j : j in cols) affine?

    Labels follow K[T_i S_j : 1 <= i <= n, 1 <= j <= m] with
    p_i = (T_i S_1, ..., T_i S_m) and q_j = (T_1 S_j, ..., T_n S_j).
    For m, n >= 2 this is the rule: empty, or both sorts present. The
    preimage of V(p_i) in K[T, S] carries the codimension-m component
    V(S_1, ..., S_m), which is absorbed only by some V(S_j); symmetrically
    for q_j with codimension n. When m or n is 1 that component is already a
    hypersurface and imposes nothing.
    """
    rows, cols = set(rows), set(cols)
    if any(not 1 <= i <= n for i in rows) or any(not 1 <= j <= m for j in cols):
        raise IndexError("row labels run over 1..n, column labels over 1..m")
    if rows and not cols and m >= 2:
        return False
    if cols and not rows and n >= 2:
        return False
    return True


def segre_superheight(m, n, which) -> int:
    """Superheight of p_i ('row') is m, of q_j ('col') is n."""
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    if which == "row":
        return m
    if which == "col":
        return n
    raise ValueError("which must be 'row' or 'col'")
