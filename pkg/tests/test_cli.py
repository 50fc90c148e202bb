import io
import json
import subprocess
import sys

import jsonschema
import pytest

from affclass.cli import COMMANDS, load_schema, run

SEGRE22 = {"segre": {"m": 2, "n": 2}}

CASES = [
    ("monoid-facets", {"dim": 2, "generators": [[1, 0], [1, 1], [1, 2]]}),
    ("monoid-facets", dict(SEGRE22, saturation_bound=2)),
    ("monoid-facets", {"dim": 2, "generators": [[2, 0], [0, 2]], "lattice": [[1, 1]], "saturation_bound": 2}),
    ("monoid-dkg", {"dim": 2, "generators": [[1, 0], [1, 1], [1, 2]]}),
    ("monoid-akg", SEGRE22),
    ("monoid-affine", dict(SEGRE22, rows=[1])),
    ("monoid-affine", dict(SEGRE22, rows=[1], cols=[2])),
    ("monoid-affine", {"dim": 2, "generators": [[1, 0], [1, 1], [1, 2]], "coeffs": [1, 0]}),
    ("hyperbola", {"d": [3, 3], "n": [1, 2]}),
    ("hyperbola", {"d": [2, 2], "local": False, "comaximal": [[False, True], [True, False]]}),
    ("determinantal", {"m": 2, "n": 2, "k": 2}),
    ("segre", {"m": 2, "n": 3, "rows": [1], "cols": []}),
    ("bounds", {"facts": [{"invariant": "dim_ring", "rel": "eq", "value": 3}],
                "flags": ["ring_local", "ideal_maximal"]}),
]


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), stdout=out, stderr=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def call_json(cmd, doc, fmt="json"):
    return call(cmd, "--json", json.dumps(doc), "--format", fmt)


@pytest.mark.parametrize("cmd,doc", CASES)
def test_output_matches_schema_and_is_stable(cmd, doc):
    code, out, err = call_json(cmd, doc)
    assert code == 0, err
    jsonschema.validate(json.loads(out), load_schema(COMMANDS[cmd][2]))
    assert call_json(cmd, doc)[1] == out


@pytest.mark.parametrize("cmd,doc", CASES)
def test_inputs_match_schema(cmd, doc):
    jsonschema.validate(doc, load_schema(COMMANDS[cmd][1]))


def test_segre_row_complement_not_affine():
    code, out, _ = call_json("monoid-affine", dict(SEGRE22, rows=[1]))
    doc = json.loads(out)
    assert code == 0 and doc["affine"] is False and doc["witness"] is None
    assert doc["support_labels"] == ["row1"]
    doc = json.loads(call_json("monoid-affine", dict(SEGRE22, rows=[1], cols=[1]))[1])
    assert doc["affine"] is True and len(doc["witness"]) == 4


def test_hyperbola_example():
    doc = json.loads(call_json("hyperbola", {"d": [3, 3], "n": [1, 2], "local": True})[1])
    assert doc["coaffine"] is True and doc["affine_trivial"] is False
    assert doc["dkg"]["text"] == "Z + Z/3" and doc["akg"]["text"] == "Z"


def test_bounds_all_equal():
    doc = json.loads(call_json("bounds", CASES[-1][1])[1])
    ivs = doc["intervals"]
    assert {json.dumps(ivs[k]) for k in ("ht", "alt", "supht", "ara", "afra", "kohoht")} == {'{"hi": 3, "lo": 3}'}
    assert "R6" in {s["rule"] for s in doc["trace"]}


def test_bounds_contradiction_exit_1():
    facts = {"facts": [{"invariant": "supht", "rel": "eq", "value": 3},
                       {"invariant": "dim_ring", "rel": "eq", "value": 2}]}
    code, out, err = call_json("bounds", facts)
    doc = json.loads(out)
    assert code == 1 and doc["code"] == "Contradiction" and doc["witness"]["rule"] == "R2"
    jsonschema.validate(doc, load_schema("bounds_output"))
    jsonschema.validate(doc, load_schema("error_output"))
    assert "R2" in err


@pytest.mark.parametrize("cmd,doc,code", [
    ("monoid-facets", {"dim": 2, "generators": [[1, 0], [-1, 0], [0, 1]]}, "NotPointed"),
    ("monoid-facets", {"dim": 2, "generators": []}, "EmptyGenerators"),
    ("monoid-affine", {"dim": 2, "generators": [[1, 0], [1, 1], [1, 2]], "coeffs": [1, -1]}, "NotEffective"),
    ("monoid-affine", {"dim": 2, "generators": [[1, 0], [0, 1]], "rows": [1]}, "FormatViolation"),
    ("monoid-affine", dict(SEGRE22, rows=[5]), "FormatViolation"),
    ("hyperbola", {"d": [2, 2], "n": [1, 1], "local": False,
                   "comaximal": [[False, False], [False, False]]}, "FormatViolation"),
    ("hyperbola", {"d": [2, 2], "local": False}, "MissingComaximalData"),
    ("determinantal", {"m": 2, "n": 2, "k": 3}, "FormatViolation"),
    ("segre", {"m": 2, "n": 2, "rows": [3]}, "FormatViolation"),
    ("bounds", {"facts": [{"invariant": "ht", "rel": "le", "value": 1},
                          {"invariant": "ht", "rel": "ge", "value": 2}]}, "ImmediateContradiction"),
])
def test_domain_errors_exit_1(cmd, doc, code):
    rc, out, err = call_json(cmd, doc)
    assert rc == 1
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("error_output"))
    assert payload["code"] == code
    assert err.startswith("affclass: ")


@pytest.mark.parametrize("argv", [
    ["nope"],
    [],
    ["hyperbola", "--json", "{not json"],
    ["hyperbola", "--json", '{"d": [0]}'],
    ["hyperbola", "--json", '{"d": [2], "extra": 1}'],
    ["bounds", "--json", '{"facts": [{"invariant": "height", "rel": "eq", "value": 1}]}'],
    ["monoid-dkg", "--json", '{"dim": 2}'],
    ["determinantal", "-i", "/nonexistent/file.json"],
    ["determinantal", "--json", "{}", "--format", "yaml"],
])
def test_usage_errors_exit_2(argv):
    rc, out, _ = call(*argv)
    assert rc == 2 and out == ""


def test_input_file_and_stdin(tmp_path):
    p = tmp_path / "det.json"
    p.write_text('{"m": 3, "n": 3, "k": 2}')
    rc, out, _ = call("determinantal", "-i", str(p))
    assert rc == 0 and json.loads(out)["dimension"] == 5
    rc, out2, _ = call("determinantal", stdin='{"m": 3, "n": 3, "k": 2}')
    assert out2 == out


def test_text_format_is_a_projection():
    rc, out, _ = call_json("determinantal", {"m": 2, "n": 2, "k": 2}, fmt="text")
    assert rc == 0
    assert out.splitlines() == ["akg: Z", "dimension: 3", "dkg: Z", "extension_height: 2", "ideal_height: 1"]
    rc, out, _ = call_json("hyperbola", {"d": [3, 3], "n": [1, 2]}, fmt="text")
    assert "coaffine: yes" in out and "dkg: Z + Z/3" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "affclass", "segre", "--json", '{"m": 2, "n": 2, "rows": [1]}'],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["affine"] is False
