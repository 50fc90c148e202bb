"""Brute-force cross-checks.

Nothing here calls into the normal-form or facet code it is meant to check;
each function recomputes its answer from definitions by enumeration.
"""

from itertools import combinations, permutations, product
from math import gcd


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
            if not term:
                break
        total += term
    return total


def determinantal_divisors(A):
    """D_k = gcd of all k x k minors, for k = 1 .. until a D_k vanishes."""
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, leibniz_det([[A[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_oracle(A):
    """Invariant factors d_k = D_k / D_{k-1}, 1s included."""
    D = determinantal_divisors(A)
    return [D[0]] + [D[k] // D[k - 1] for k in range(1, len(D))] if D else []


def hyperbola_window_oracle(d, n):
    """Coaffinity over a local base by scanning shifts n + k d."""
    bound = max(abs(x) for x in n) + 1
    for k in range(-bound, bound + 1):
        shifted = [x + k * y for x, y in zip(n, d)]
        if all(v == 0 for v in shifted):
            return True
        if all(0 < v < y for v, y in zip(shifted, d)):
            return True
    return False


def hyperbola_torsion_oracle(d, n, max_multiple=12):
    """Is some multiple t*n (1 <= t <= max_multiple) in Z*d?"""
    for t in range(1, max_multiple + 1):
        v = [t * x for x in n]
        if all(x % y == 0 for x, y in zip(v, d)) and len({x // y for x, y in zip(v, d)}) == 1:
            return True
    return False


def segre_realizable_supports(m, n, box=3):
    """Supports (rows, cols) of elements of the Segre monoid.

    The monoid of K[T_i S_j] is {(a, b) in N^n x N^m : sum a = sum b}; its
    p_i valuation is a_i and its q_j valuation is b_j.
    """
    found = set()
    for a in product(range(box + 1), repeat=n):
        sa = sum(a)
        for b in product(range(box + 1), repeat=m):
            if sum(b) != sa:
                continue
            found.add((frozenset(i + 1 for i, x in enumerate(a) if x),
                       frozenset(j + 1 for j, x in enumerate(b) if x)))
    return found


def monoid_member_oracle(generators, x, max_coeff=6):
    """Is x = sum c_g g with 0 <= c_g <= max_coeff?"""
    d = len(x)
    gens = [tuple(g) for g in generators]
    reach = {tuple([0] * d)}
    for g in gens:
        nxt = set()
        for y in reach:
            for c in range(max_coeff + 1):
                nxt.add(tuple(a + c * b for a, b in zip(y, g)))
        reach = nxt
    return tuple(x) in reach
