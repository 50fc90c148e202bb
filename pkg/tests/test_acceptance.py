"""Acceptance gate: every worked computation, at its stated tolerance and time limit."""

import io
import json
from dataclasses import replace

import pytest

from affclass import bounds, selfcheck
from affclass.cli import run

RESULTS = []


@pytest.fixture(scope="module")
def results():
    out = {r.id: r for r in selfcheck.run_all()}
    RESULTS.extend(out.values())
    return out


@pytest.mark.parametrize("cid,name", [(c[0], c[1]) for c in selfcheck.CRITERIA],
                         ids=["c%02d" % c[0] for c in selfcheck.CRITERIA])
def test_criterion(results, cid, name):
    r = results[cid]
    print(r.line())
    assert r.passed, r.detail


def test_mutated_rule_is_named(monkeypatch):
    # loosen supht <= dim to supht <= dim + 1
    def loose(s):
        s.le("supht", "dim_ring", 1)
    rules = tuple(replace(r, body=loose) if r.id == "R2" else r for r in bounds.RULES)
    monkeypatch.setattr(bounds, "RULES", rules)
    r = selfcheck.run_one(7, "bounds engine scenarios", selfcheck.bounds_scenarios)
    assert not r.passed
    # R5 still rejects the facts, but under the wrong name
    assert r.detail == "AssertionError: contradiction named R5"


def test_mutated_local_rule_fails(monkeypatch):
    rules = tuple(r for r in bounds.RULES if r.id != "R6")
    monkeypatch.setattr(bounds, "RULES", rules)
    r = selfcheck.run_one(7, "bounds engine scenarios", selfcheck.bounds_scenarios)
    assert not r.passed and r.detail.startswith("AssertionError: ht = [0, ")


def test_selfcheck_cli_is_deterministic(results):
    out = io.StringIO()
    code = run(["selfcheck"], stdout=out, stderr=io.StringIO())
    doc = json.loads(out.getvalue())
    assert code == (0 if doc["passed"] else 1)
    expected = [r.to_json() for r in sorted(results.values(), key=lambda r: r.id)]
    assert doc["criteria"] == expected
