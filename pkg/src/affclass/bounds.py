"""Interval propagation over height-type invariants of one configuration.

A configuration is either an ideal a in a noetherian ring A (with U = D(a))
or a noetherian scheme X. Each invariant carries an integer interval
[lo, hi] with hi possibly infinite; rules are monotone narrowing operators,
so chaotic iteration reaches the same fixpoint in any rule order.
"""

import math
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .errors import Contradiction, ImmediateContradiction

INF = math.inf


class InvariantKind(str, Enum):
    ht = "ht"
    alt = "alt"
    supht_end = "supht_end"
    supht = "supht"
    ara = "ara"
    afra = "afra"
    kohoht = "kohoht"
    cd = "cd"
    pd_height = "pd_height"
    dim_ring = "dim_ring"


KINDS = tuple(k.value for k in InvariantKind)

FLAGS = frozenset({
    "ring_local", "ideal_maximal", "ring_regular", "finite_type_over_field",
    "normal_domain", "finite_pd", "char_p", "open_set_affine", "punctured_local",
})

CONFIGURATIONS = ("ideal", "scheme")


@dataclass(frozen=True)
class Interval:
    lo: int = 0
    hi: float = INF

    @property
    def empty(self):
        return self.lo > self.hi

    @property
    def is_point(self):
        return self.lo == self.hi

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def __str__(self):
        hi = "inf" if self.hi == INF else str(self.hi)
        return "[%d, %s]" % (self.lo, hi)

    def to_json(self):
        return {"lo": self.lo, "hi": None if self.hi == INF else int(self.hi)}

    def subset_of(self, other):
        return other.lo <= self.lo and self.hi <= other.hi


@dataclass(frozen=True)
class Step:
    rule: str
    anchor: str
    invariant: str
    before: Interval
    after: Interval

    def to_json(self):
        return {"rule": self.rule, "anchor": self.anchor, "invariant": self.invariant,
                "before": self.before.to_json(), "after": self.after.to_json()}


@dataclass(frozen=True)
class KnowledgeBase:
    intervals: tuple = tuple(Interval() for _ in KINDS)
    flags: frozenset = frozenset()
    configuration: str = "ideal"
    trace: tuple = field(default=(), compare=False)

    def __post_init__(self):
        unknown = set(self.flags) - FLAGS
        if unknown:
            raise ValueError("unknown flags: %s" % ", ".join(sorted(unknown)))
        if self.configuration not in CONFIGURATIONS:
            raise ValueError("configuration must be one of %s" % (CONFIGURATIONS,))
        object.__setattr__(self, "flags", frozenset(self.flags))

    def __getitem__(self, kind):
        return self.intervals[KINDS.index(_kind(kind))]

    def as_dict(self):
        return dict(zip(KINDS, self.intervals))

    def with_flags(self, *flags):
        return replace(self, flags=self.flags | set(flags))


def _kind(kind):
    return kind.value if isinstance(kind, InvariantKind) else InvariantKind(kind).value


def assert_fact(kb: KnowledgeBase, kind, relation, value) -> KnowledgeBase:
    """Intersect one interval with {x rel value}; no propagation."""
    kind = _kind(kind)
    value = int(value)
    if value < 0:
        raise ValueError("invariant values are nonnegative")
    cur = kb[kind]
    if relation == "eq":
        new = Interval(max(cur.lo, value), min(cur.hi, value))
    elif relation == "le":
        new = Interval(cur.lo, min(cur.hi, value))
    elif relation == "ge":
        new = Interval(max(cur.lo, value), cur.hi)
    else:
        raise ValueError("relation must be eq, le or ge")
    if new.empty:
        raise ImmediateContradiction("%s %s %d conflicts with %s %s" % (kind, relation, value, kind, cur),
                                     witness={"invariant": kind, "current": cur.to_json()})
    ivs = list(kb.intervals)
    ivs[KINDS.index(kind)] = new
    return replace(kb, intervals=tuple(ivs))


class _State:
    """Mutable working copy used while one propagation runs."""

    def __init__(self, kb):
        self.lo = {k: iv.lo for k, iv in zip(KINDS, kb.intervals)}
        self.hi = {k: iv.hi for k, iv in zip(KINDS, kb.intervals)}
        self.flags = kb.flags
        self.configuration = kb.configuration
        self.steps = list(kb.trace)
        self.rule = None
        self.changed = False

    def tighten(self, kind, lo=None, hi=None):
        before = Interval(self.lo[kind], self.hi[kind])
        nlo = before.lo if lo is None else max(before.lo, lo)
        nhi = before.hi if hi is None else min(before.hi, hi)
        if (nlo, nhi) == (before.lo, before.hi):
            return
        after = Interval(nlo, nhi)
        self.lo[kind], self.hi[kind] = nlo, nhi
        self.changed = True
        self.steps.append(Step(self.rule.id, self.rule.anchor, kind, before, after))
        if after.empty:
            raise Contradiction("rule %s (%s) empties %s: lower bound %d above upper bound %s"
                                % (self.rule.id, self.rule.anchor, kind, nlo, nhi),
                                rule=self.rule.id, invariant=kind, lo=nlo,
                                hi=None if nhi == INF else int(nhi), trace=self.steps)

    def le(self, a, b, offset=0):
        """a <= b + offset."""
        self.tighten(a, hi=self.hi[b] + offset)
        self.tighten(b, lo=self.lo[a] - offset)

    def eq(self, a, b, offset=0):
        self.le(a, b, offset)
        self.le(b, a, -offset)


@dataclass(frozen=True)
class Rule:
    id: str
    anchor: str
    flags: frozenset
    configuration: Optional[str]
    body: object = field(repr=False)

    def active(self, kb):
        return self.flags <= kb.flags and self.configuration in (None, kb.configuration)


def _r1(s):
    s.le("ht", "alt")
    s.le("alt", "supht_end")
    s.le("supht_end", "supht")
    s.le("supht", "ara")


def _r2(s):
    s.le("supht", "dim_ring")


def _r3(s):
    s.le("supht", "kohoht")
    s.le("kohoht", "afra")
    if s.configuration == "ideal":
        s.le("afra", "ara")


def _r4(s):
    s.eq("kohoht", "cd", 1)


def _r5_scheme(s):
    s.le("cd", "dim_ring")


def _r5_open(s):
    # needs dim A >= 1; guaranteed once cd >= 1 since cd <= dim
    if s.lo["dim_ring"] >= 1 or s.lo["cd"] >= 1:
        s.le("cd", "dim_ring", -1)


def _r6(s):
    chain = ("ht", "alt", "supht_end", "supht", "ara", "afra", "kohoht", "dim_ring")
    for a, b in zip(chain, chain[1:]):
        s.eq(a, b)


def _r7(s):
    s.eq("alt", "supht")


def _r8(s):
    s.eq("supht_end", "supht")


def _r9(s):
    s.le("supht", "pd_height")


def _r10(s):
    s.le("kohoht", "pd_height")


def _r11(s):
    s.tighten("cd", hi=0)


def _r12(s):
    s.eq("cd", "dim_ring", -1)


def _r13(s):
    # alt <= d - 1 forces supht_end <= d - 1; and contrapositively
    if s.hi["alt"] < s.lo["dim_ring"]:
        s.tighten("supht_end", hi=s.hi["dim_ring"] - 1)
    if s.lo["supht_end"] >= s.hi["dim_ring"]:
        s.tighten("alt", lo=s.lo["dim_ring"])


def _r14(s):
    s.le("supht", "dim_ring", 1)


def _f(*names):
    return frozenset(names)


RULES = (
    Rule("R1", "height chain: ht <= alt <= supht_end <= supht <= ara", _f(), "ideal", _r1),
    Rule("R2", "superheight bounded by ring dimension: supht <= dim A", _f(), "ideal", _r2),
    Rule("R3", "covering chain: ara >= afra >= kohoht >= supht", _f(), None, _r3),
    Rule("R4", "cohomological height: kohoht = cd + 1", _f(), None, _r4),
    Rule("R5", "Grothendieck vanishing: cd X <= dim X", _f(), None, _r5_scheme),
    Rule("R5", "open subsets of affine schemes: cd U <= dim A - 1", _f(), "ideal", _r5_open),
    Rule("R6", "maximal ideal of a local ring: ht = alt = supht_end = supht = ara = afra = kohoht = dim A",
         _f("ring_local", "ideal_maximal"), "ideal", _r6),
    Rule("R7", "regular ring: alt = supht", _f("ring_regular"), "ideal", _r7),
    Rule("R8", "finite type over a field: supht_end = supht",
         _f("finite_type_over_field"), "ideal", _r8),
    Rule("R9", "homological height: pd(A/a) >= supht a", _f("finite_pd"), "ideal", _r9),
    Rule("R10", "characteristic p, finite projective height: pd(A/a) >= kohoht a",
         _f("finite_pd", "char_p"), "ideal", _r10),
    Rule("R11", "cohomological criterion: U affine iff cd U = 0", _f("open_set_affine"), None, _r11),
    Rule("R12", "punctured spectrum of a local ring: cd = dim A - 1", _f("punctured_local"), "ideal", _r12),
    Rule("R13", "normal domain: alt <= dim A - 1 implies supht_end <= dim A - 1", _f("normal_domain"), "ideal", _r13),
    Rule("R14", "schemes: supht X <= dim X + 1", _f(), "scheme", _r14),
)

RULE_IDS = tuple(dict.fromkeys(r.id for r in RULES))

MAX_SWEEPS = 100_000


def propagate(kb: KnowledgeBase, order=None, rules=None) -> KnowledgeBase:
    """Narrow all intervals to the fixpoint of the active rules.

    ``order`` optionally permutes the rule sequence (used to test that the
    fixpoint does not depend on it). Raises Contradiction naming the first
    rule that empties an interval.
    """
    active = [r for r in (RULES if rules is None else rules) if r.active(kb)]
    if order is not None:
        active = [active[i] for i in order]
    s = _State(kb)
    for _ in range(MAX_SWEEPS):
        s.changed = False
        for rule in active:
            s.rule = rule
            rule.body(s)
        if not s.changed:
            break
    else:
        raise RuntimeError("propagation did not stabilise")
    ivs = tuple(Interval(s.lo[k], s.hi[k]) for k in KINDS)
    base = _baseline(kb.configuration)
    steps = tuple(st for st in s.steps
                  if st in kb.trace or not base[st.invariant].subset_of(st.after))
    return replace(kb, intervals=ivs, trace=steps)


_BASELINES = {}


def _baseline(configuration):
    """Fixpoint of the flag-free rules with no facts: the intrinsic domain.

    Steps that merely re-derive this domain (kohoht >= 1 and what follows)
    are left out of traces.
    """
    if configuration not in _BASELINES:
        s = _State(KnowledgeBase(configuration=configuration))
        active = [r for r in RULES if r.configuration in (None, configuration) and not r.flags]
        while True:
            s.changed = False
            for rule in active:
                s.rule = rule
                rule.body(s)
            if not s.changed:
                break
        _BASELINES[configuration] = {k: Interval(s.lo[k], s.hi[k]) for k in KINDS}
    return _BASELINES[configuration]


def shuffled_propagate(kb, rng: random.Random):
    n = sum(1 for r in RULES if r.active(kb))
    order = list(range(n))
    rng.shuffle(order)
    return propagate(kb, order=order)


def query(kb: KnowledgeBase, kind) -> Interval:
    return kb[kind]


def explain(kb: KnowledgeBase):
    """The recorded narrowing steps, oldest first."""
    return list(kb.trace)


def affine_status(kb: KnowledgeBase):
    """True / False / None (undecided) for affinity of U via cd = 0."""
    cd = kb["cd"]
    if cd.hi == 0:
        return True
    if cd.lo >= 1:
        return False
    return None


def combine(whole: KnowledgeBase, closed: KnowledgeBase, open_part: KnowledgeBase):
    """Subadditivity across X = Y u U with Y closed and U = X - Y.

    supht X <= supht Y + supht U and kohoht X <= kohoht U + kohoht Y.
    Returns the three knowledge bases narrowed and propagated to a joint
    fixpoint.
    """
    kbs = [propagate(whole), propagate(closed), propagate(open_part)]
    while True:
        before = [kb.intervals for kb in kbs]
        for kind in ("supht", "kohoht"):
            w, c, o = (kb[kind] for kb in kbs)
            kbs[0] = _narrow(kbs[0], kind, hi=c.hi + o.hi, rule="COMB", anchor=_comb_anchor(kind))
            kbs[1] = _narrow(kbs[1], kind, lo=w.lo - o.hi, rule="COMB", anchor=_comb_anchor(kind))
            kbs[2] = _narrow(kbs[2], kind, lo=w.lo - c.hi, rule="COMB", anchor=_comb_anchor(kind))
        kbs = [propagate(kb) for kb in kbs]
        if [kb.intervals for kb in kbs] == before:
            return tuple(kbs)


def _comb_anchor(kind):
    if kind == "supht":
        return "supht X <= supht Y + supht (X - Y)"
    return "kohoht X <= kohoht U + kohoht Y"


def _narrow(kb, kind, lo=None, hi=None, rule="", anchor=""):
    cur = kb[kind]
    nlo = cur.lo if lo is None or lo == -INF else max(cur.lo, int(lo))
    nhi = cur.hi if hi is None else min(cur.hi, hi)
    if (nlo, nhi) == (cur.lo, cur.hi):
        return kb
    new = Interval(nlo, nhi)
    step = Step(rule, anchor, kind, cur, new)
    if new.empty:
        raise Contradiction("%s empties %s" % (anchor, kind), rule=rule, invariant=kind,
                            lo=nlo, hi=None if nhi == INF else int(nhi),
                            trace=list(kb.trace) + [step])
    ivs = list(kb.intervals)
    ivs[KINDS.index(kind)] = new
    return replace(kb, intervals=tuple(ivs), trace=kb.trace + (step,))


def from_facts(facts, flags=(), configuration="ideal") -> KnowledgeBase:
    """Build a knowledge base from (invariant, rel, value) triples."""
    kb = KnowledgeBase(flags=frozenset(flags), configuration=configuration)
    for kind, rel, value in facts:
        kb = assert_fact(kb, kind, rel, value)
    return kb


def report(kb: KnowledgeBase):
    """JSON-ready propagation outcome (never raises Contradiction)."""
    try:
        out = propagate(kb)
    except Contradiction as exc:
        return {"status": "contradiction",
                "code": exc.code,
                "witness": exc.witness,
                "message": str(exc),
                "trace": [s.to_json() for s in exc.trace]}
    return {"status": "consistent",
            "intervals": {k: iv.to_json() for k, iv in out.as_dict().items()},
            "affine": affine_status(out),
            "trace": [s.to_json() for s in out.trace]}
