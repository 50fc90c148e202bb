"""Regression set of worked computations, run by ``affclass selfcheck``.

Each criterion is a function that raises AssertionError on failure and
returns a short detail string on success. Time limits are part of the
criteria.
"""

import random
import time
from dataclasses import dataclass
from itertools import chain, combinations, product

from . import bounds, cone, divisors, lattice, oracles, special
from .errors import Contradiction


@dataclass
class CheckResult:
    id: int
    name: str
    passed: bool
    seconds: float
    detail: str

    def line(self):
        return "[%s] %2d %-34s %6.2fs  %s" % ("PASS" if self.passed else "FAIL", self.id,
                                             self.name, self.seconds, self.detail)

    def to_json(self):
        # timings are excluded so repeated runs serialise identically
        return {"id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail}


def _subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def _timed(limit):
    def deco(fn):
        fn.time_limit = limit
        return fn
    return deco


@_timed(1.0)
def segre_2x2():
    M = cone.segre_monoid(2, 2)
    F = cone.facet_valuations(M)
    assert F.r == 4, "expected 4 facets, got %d" % F.r
    cg = divisors.divisor_class_group(F)
    assert cg.dkg == lattice.AbelianGroup(1), "DKG = %s" % cg.dkg
    assert cg.akg == lattice.AbelianGroup(1), "AKG = %s" % cg.akg
    for i in range(F.r):
        assert not divisors.support_realizable(M, F, {i}), "facet %d realizable" % i
    # D(x, y) with x, y the row-2 generators T_2 S_1, T_2 S_2: its support is the row-2 facet
    labels = cone.segre_facet_labels(2, 2, M, F)
    D = divisors.MonomialDivisor.from_support({labels.index(("row", 2))}, F.r)
    assert not divisors.complement_is_affine(M, F, D)
    return "4 facets, DKG = AKG = Z, single facets not realizable"


@_timed(10.0)
def segre_both_sorts():
    compared = 0
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            M = cone.segre_monoid(m, n)
            F = cone.facet_valuations(M)
            labels = cone.segre_facet_labels(m, n, M, F)
            brute = oracles.segre_realizable_supports(m, n)
            for S in _subsets(range(F.r)):
                rows = {labels[i][1] for i in S if labels[i][0] == "row"}
                cols = {labels[i][1] for i in S if labels[i][0] == "col"}
                toric = divisors.support_realizable(M, F, S)
                closed = special.segre_union_affine(m, n, rows, cols)
                assert toric == closed, "m=%d n=%d rows=%s cols=%s: toric %s, rule %s" % (
                    m, n, sorted(rows), sorted(cols), toric, closed)
                if m >= 2 and n >= 2:
                    both = (not rows and not cols) or (bool(rows) and bool(cols))
                    assert closed == both
                    assert toric == ((frozenset(rows), frozenset(cols)) in brute)
                compared += 1
    return "%d facet subsets agree" % compared


@_timed(1.0)
def hyperbola_33():
    H = special.HyperbolaData((3, 3))
    co, tr = special.hyperbola_is_coaffine, special.hyperbola_is_affine_trivial
    assert tr(H, (1, 1)) and co(H, (1, 1))
    assert co(H, (1, 2)) and not tr(H, (1, 2))
    assert not co(H, (2, 3))
    assert special.hyperbola_dkg(H) == lattice.AbelianGroup(1, (3,))
    assert special.hyperbola_akg(H) == lattice.AbelianGroup(1)
    return "(1,1) trivial+coaffine, (1,2) coaffine only, (2,3) not coaffine"


@_timed(30.0)
def hyperbola_grid():
    count = 0
    for r in (1, 2, 3):
        for d in product(range(1, 5), repeat=r):
            H = special.HyperbolaData(d)
            for n in product(range(-6, 7), repeat=r):
                got = special.hyperbola_is_coaffine(H, n)
                want = oracles.hyperbola_window_oracle(d, n)
                assert got == want, "d=%s n=%s: %s vs oracle %s" % (d, n, got, want)
                count += 1
    return "%d cases, 0 disagreements" % count


def random_cone(rng: random.Random, d, k):
    """Random pointed, full-dimensional generator set (last coordinate >= 1)."""
    while True:
        gens = [tuple(rng.randint(-3, 3) for _ in range(d - 1)) + (rng.randint(1, 3),)
                for _ in range(k)]
        if lattice.rank(gens) == d:
            return gens


@_timed(60.0)
def simpliciality_equivalence(samples=120, seed=20261017):
    rng = random.Random(seed)
    seen = {True: 0, False: 0}
    for _ in range(samples):
        d = rng.randint(1, 4)
        k = rng.randint(d, 8)
        M = cone.build_monoid(d, random_cone(rng, d, k))
        F = cone.facet_valuations(M)
        rep = divisors.simpliciality_report(M, F)
        assert rep.simplicial == rep.dkg_is_torsion == rep.akg_zero, rep
        seen[rep.simplicial] += 1
    return "%d cones agree (%d simplicial, %d not)" % (samples, seen[True], seen[False])


@_timed(5.0)
def determinantal():
    D = special.DeterminantalData(2, 2, 2)
    assert special.det_dimension(D) == 3
    assert special.det_ideal_height(D) == 1
    assert special.det_akg(D) == lattice.AbelianGroup(1)
    assert special.det_extension_height(D) == 2
    count = 0
    for m in range(1, 7):
        for n in range(1, 7):
            for k in range(2, min(m, n) + 1):
                D = special.DeterminantalData(m, n, k)
                h = special.det_extension_height(D)
                assert h == n - k + 2 and h >= 2, (m, n, k, h)
                assert special.det_dimension(D) + special.det_ideal_height(D) == m * n
                count += 1
    # toric route for the 2 x 2 case: R_2 = K[u,v,x,y]/(ux - vy) is the Segre ring
    M = cone.segre_monoid(2, 2)
    assert divisors.affine_class_group(cone.facet_valuations(M)) == special.det_akg(special.DeterminantalData(2, 2, 2))
    return "(2,2,2): dim 3, height 1, AKG Z, ext height 2; %d triples ok" % count


@_timed(5.0)
def bounds_scenarios():
    kb = bounds.from_facts([("dim_ring", "eq", 3)], flags={"ring_local", "ideal_maximal"})
    out = bounds.propagate(kb)
    for k in ("ht", "alt", "supht_end", "supht", "ara", "afra", "kohoht", "dim_ring"):
        assert out[k] == bounds.Interval(3, 3), "%s = %s" % (k, out[k])
    assert out["cd"] == bounds.Interval(2, 2)
    assert "R6" in {s.rule for s in out.trace}

    kb = bounds.from_facts([("ht", "eq", 2), ("supht", "eq", 2), ("kohoht", "eq", 3), ("ara", "eq", 3)])
    out = bounds.propagate(kb)
    assert out["afra"] == bounds.Interval(3, 3), "afra = %s" % out["afra"]

    kb = bounds.from_facts([("supht", "eq", 3), ("dim_ring", "eq", 2)])
    try:
        bounds.propagate(kb)
    except Contradiction as exc:
        assert exc.rule == "R2", "contradiction named %s" % exc.rule
    else:
        raise AssertionError("supht = 3 > dim = 2 was not rejected")
    return "local maximal ideal, afra forced to 3, supht > dim named R2"


def random_kb(rng: random.Random):
    flags = {f for f in sorted(bounds.FLAGS) if rng.random() < 0.2}
    config = rng.choice(bounds.CONFIGURATIONS)
    kb = bounds.KnowledgeBase(flags=flags, configuration=config)
    for _ in range(rng.randint(0, 4)):
        kind = rng.choice(bounds.KINDS)
        rel = rng.choice(("eq", "le", "ge"))
        try:
            kb = bounds.assert_fact(kb, kind, rel, rng.randint(0, 6))
        except bounds.ImmediateContradiction:
            pass
    return kb


def _outcome(fn, *args):
    try:
        return fn(*args).intervals
    except Contradiction:
        return "contradiction"


@_timed(60.0)
def engine_algebra(samples=1000, seed=7):
    rng = random.Random(seed)
    contradictions = 0
    for _ in range(samples):
        kb = random_kb(rng)
        base = _outcome(bounds.propagate, kb)
        shuffled = _outcome(bounds.shuffled_propagate, kb, rng)
        assert base == shuffled, "rule order changed the fixpoint"
        if base == "contradiction":
            contradictions += 1
            continue
        once = bounds.propagate(kb)
        assert bounds.propagate(once).intervals == once.intervals, "not idempotent"
        kind = rng.choice(bounds.KINDS)
        try:
            more = bounds.propagate(bounds.assert_fact(once, kind, rng.choice(("eq", "le", "ge")),
                                                       rng.randint(0, 6)))
        except (Contradiction, bounds.ImmediateContradiction):
            continue
        for a, b in zip(more.intervals, once.intervals):
            assert a.subset_of(b), "adding a fact widened %s to %s" % (b, a)
    return "%d fact sets (%d contradictory)" % (samples, contradictions)


@_timed(30.0)
def smith_vs_minors(samples=200, seed=3):
    rng = random.Random(seed)
    for _ in range(samples):
        A = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        S = lattice.smith_normal_form(A)
        M = lattice.IntegerMatrix.from_rows(A)
        assert S.U @ M @ S.V == S.D
        assert abs(lattice.determinant(S.U)) == 1 and abs(lattice.determinant(S.V)) == 1
        diag = list(S.diagonal[:S.rank])
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
        assert diag == oracles.invariant_factors_oracle(A), (A, diag)
    return "%d random 3x3 matrices" % samples


@_timed(30.0)
def saturation():
    for M in (cone.segre_monoid(2, 2), cone.build_monoid(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
              cone.build_monoid(2, [(1, 0), (0, 1)])):
        rep = cone.saturation_check(M, cone.facet_valuations(M), 3)
        assert rep.saturated, rep
    full = [(2, 0), (1, 1), (0, 2)]
    M = cone.build_monoid(2, full)
    assert cone.saturation_check(M, cone.facet_valuations(M), 3).saturated
    # drop (1, 1) but keep the lattice it generates
    M = cone.build_monoid(2, [(2, 0), (0, 2)], lattice=full)
    rep = cone.saturation_check(M, cone.facet_valuations(M), 3)
    assert not rep.saturated and rep.witness is not None
    assert tuple(M.to_ambient(rep.witness)) == (1, 1), M.to_ambient(rep.witness)
    return "Segre, N^d saturated; witness (1,1) once (1,1) is removed"


CRITERIA = (
    (1, "segre 2x2 class groups", segre_2x2),
    (2, "segre both-sorts criterion", segre_both_sorts),
    (3, "hyperbola d=(3,3) examples", hyperbola_33),
    (4, "hyperbola closed form vs window", hyperbola_grid),
    (5, "simpliciality equivalence", simpliciality_equivalence),
    (6, "determinantal rings", determinantal),
    (7, "bounds engine scenarios", bounds_scenarios),
    (8, "engine algebra", engine_algebra),
    (9, "smith form vs minors", smith_vs_minors),
    (10, "saturation oracle", saturation),
)


def run_one(cid, name, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except Exception as exc:  # a criterion failing for any reason is reported, not raised
        detail = "%s: %s" % (type(exc).__name__, exc)
        ok = False
    dt = time.perf_counter() - t0
    limit = getattr(fn, "time_limit", None)
    if ok and limit is not None and dt > limit:
        ok = False
        detail = "took %.2fs, limit %.0fs" % (dt, limit)
    return CheckResult(cid, name, ok, dt, detail)


def run_all():
    return [run_one(*c) for c in CRITERIA]
