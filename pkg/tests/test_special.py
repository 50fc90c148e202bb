from itertools import chain, combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affclass import cone, divisors, special
from affclass.errors import DimensionMismatch, FormatViolation, MissingComaximalData
from affclass.lattice import AbelianGroup
from affclass.oracles import hyperbola_torsion_oracle, hyperbola_window_oracle

hyper_d = st.lists(st.integers(1, 4), min_size=1, max_size=3)


def test_hyperbola_d33():
    H = special.HyperbolaData((3, 3))
    assert special.hyperbola_dkg(H) == AbelianGroup(1, (3,))
    assert special.hyperbola_akg(H) == AbelianGroup(1)
    assert special.hyperbola_is_coaffine(H, (1, 1)) and special.hyperbola_is_affine_trivial(H, (1, 1))
    assert special.hyperbola_is_coaffine(H, (1, 2)) and not special.hyperbola_is_affine_trivial(H, (1, 2))
    assert not special.hyperbola_is_coaffine(H, (2, 3))


@pytest.mark.parametrize("d,dkg", [((2,), AbelianGroup(0, (2,))), ((1,), AbelianGroup(0)),
                                   ((2, 4), AbelianGroup(1, (2,))), ((2, 3), AbelianGroup(1)),
                                   ((6, 4, 2), AbelianGroup(2, (2,)))])
def test_hyperbola_dkg(d, dkg):
    assert special.hyperbola_dkg(special.HyperbolaData(d)) == dkg


def test_hyperbola_akg_zero_cases():
    assert special.hyperbola_akg_zero(special.HyperbolaData((5,)))
    assert not special.hyperbola_akg_zero(special.HyperbolaData((2, 2)))
    yes = ((False, True), (True, False))
    no = ((False, False), (False, False))
    assert special.hyperbola_akg_zero(special.HyperbolaData((2, 2), base_local=False, comaximal=yes))
    assert not special.hyperbola_akg_zero(special.HyperbolaData((2, 2), base_local=False, comaximal=no))
    with pytest.raises(MissingComaximalData):
        special.hyperbola_akg_zero(special.HyperbolaData((2, 2), base_local=False))
    with pytest.raises(FormatViolation):
        special.hyperbola_akg_zero(special.HyperbolaData((2, 2), comaximal=yes))


def test_hyperbola_input_errors():
    with pytest.raises(FormatViolation):
        special.HyperbolaData(())
    with pytest.raises(FormatViolation):
        special.HyperbolaData((0, 2))
    with pytest.raises(FormatViolation):
        special.HyperbolaData((2, 2), comaximal=((False, True), (False, False)))
    with pytest.raises(DimensionMismatch):
        special.hyperbola_is_coaffine(special.HyperbolaData((2, 2)), (1,))
    with pytest.raises(FormatViolation):
        special.hyperbola_is_coaffine(special.HyperbolaData((2, 2), base_local=False), (1, 1))


@given(hyper_d, st.data())
def test_coaffine_matches_window(d, data):
    n = data.draw(st.lists(st.integers(-6, 6), min_size=len(d), max_size=len(d)))
    H = special.HyperbolaData(d)
    assert special.hyperbola_is_coaffine(H, n) == hyperbola_window_oracle(d, n)


def test_trivial_implies_all_multiples_coaffine():
    for r in (1, 2, 3):
        for d in product(range(1, 5), repeat=r):
            H = special.HyperbolaData(d)
            for n in product(range(-6, 7), repeat=r):
                if not special.hyperbola_is_affine_trivial(H, n):
                    continue
                for t in range(-4, 5):
                    assert special.hyperbola_is_coaffine(H, [t * x for x in n]), (d, n, t)


@given(hyper_d, st.data())
def test_affine_trivial_is_torsion(d, data):
    n = data.draw(st.lists(st.integers(-6, 6), min_size=len(d), max_size=len(d)))
    H = special.HyperbolaData(d)
    assert special.hyperbola_is_affine_trivial(H, n) == hyperbola_torsion_oracle(d, n, 24)


@given(hyper_d, st.data())
def test_coaffine_periodic_in_d(d, data):
    n = data.draw(st.lists(st.integers(-6, 6), min_size=len(d), max_size=len(d)))
    k = data.draw(st.integers(-3, 3))
    H = special.HyperbolaData(d)
    shifted = [x + k * y for x, y in zip(n, d)]
    assert special.hyperbola_is_coaffine(H, n) == special.hyperbola_is_coaffine(H, shifted)


def test_determinantal_2x2():
    D = special.DeterminantalData(2, 2, 2)
    assert (special.det_dimension(D), special.det_ideal_height(D), special.det_extension_height(D)) == (3, 1, 2)
    assert special.det_akg(D) == special.det_dkg(D) == AbelianGroup(1)


@pytest.mark.parametrize("m,n,k,dim", [(3, 3, 2, 5), (3, 3, 3, 8), (2, 3, 2, 4), (4, 5, 3, 14)])
def test_determinantal_dimensions(m, n, k, dim):
    assert special.det_dimension(special.DeterminantalData(m, n, k)) == dim


@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_determinantal_identities(m, n, data):
    if min(m, n) < 2:
        with pytest.raises(FormatViolation):
            special.DeterminantalData(m, n, 2)
        return
    k = data.draw(st.integers(2, min(m, n)))
    D = special.DeterminantalData(m, n, k)
    assert special.det_dimension(D) + special.det_ideal_height(D) == m * n
    assert special.det_extension_height(D) == n - k + 2 >= 2
    # generic rank k-1 matrices: height of I_k is (m-k+1)(n-k+1)
    assert special.det_ideal_height(D) == (m - k + 1) * (n - k + 1)


def test_determinantal_rejects_k():
    for bad in [(2, 2, 1), (2, 2, 3), (0, 2, 2)]:
        with pytest.raises(FormatViolation):
            special.DeterminantalData(*bad)


def test_segre_superheights():
    assert special.segre_superheight(2, 2, "row") == 2
    assert special.segre_superheight(3, 5, "col") == 5
    assert special.segre_superheight(3, 5, "row") == 3
    with pytest.raises(ValueError):
        special.segre_superheight(2, 2, "diag")


def _subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))


@pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)])
def test_segre_rule_matches_toric(m, n):
    M = cone.segre_monoid(m, n)
    F = cone.facet_valuations(M)
    labels = cone.segre_facet_labels(m, n, M, F)
    for S in _subsets(range(F.r)):
        rows = [labels[i][1] for i in S if labels[i][0] == "row"]
        cols = [labels[i][1] for i in S if labels[i][0] == "col"]
        D = divisors.MonomialDivisor.from_support(S, F.r)
        assert special.segre_union_affine(m, n, rows, cols) == divisors.complement_is_affine(M, F, D)


def test_segre_rule_bad_labels():
    with pytest.raises(IndexError):
        special.segre_union_affine(2, 2, [3], [])
