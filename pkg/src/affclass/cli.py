"""Command line front end.

Every subcommand reads one JSON document (``-i FILE``, ``--json TEXT`` or
standard input), writes one report to standard output and exits with
0 on success, 1 on a domain error, 2 on a usage or parse error.
"""

import argparse
import json
import sys
from importlib import resources

import jsonschema

from . import bounds, cone, divisors, special
from .errors import DomainError, FormatViolation
from .selfcheck import run_all

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_schema(name):
    text = resources.files("affclass").joinpath("schemas", name + ".json").read_text()
    return json.loads(text)


def _validate(doc, name):
    try:
        jsonschema.validate(doc, load_schema(name))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise UsageError("input does not match %s at %s: %s" % (name, where, exc.message))


# monoid subcommands

def _monoid(doc):
    if "segre" in doc:
        m, n = doc["segre"]["m"], doc["segre"]["n"]
        M = cone.segre_monoid(m, n)
        F = cone.facet_valuations(M)
        return M, F, cone.segre_facet_labels(m, n, M, F)
    M = cone.build_monoid(doc["dim"], doc["generators"], doc.get("lattice"))
    return M, cone.facet_valuations(M), None


def _label(lab):
    return "%s%d" % lab


def _divisor(doc, F, labels):
    given = [k for k in ("coeffs", "support", "rows", "cols") if k in doc]
    if not given:
        raise FormatViolation("a divisor is needed: give coeffs, support, or rows/cols")
    if "coeffs" in doc and len(given) > 1:
        raise FormatViolation("give either coeffs or a support, not both")
    if "coeffs" in doc:
        return divisors.MonomialDivisor(doc["coeffs"])
    S = set(doc.get("support", ()))
    if "rows" in doc or "cols" in doc:
        if labels is None:
            raise FormatViolation("rows/cols only apply to a segre monoid")
        want = {("row", i) for i in doc.get("rows", ())} | {("col", j) for j in doc.get("cols", ())}
        missing = want - set(labels)
        if missing:
            raise FormatViolation("no such facet: %s" % ", ".join(sorted(map(_label, missing))))
        S |= {k for k, lab in enumerate(labels) if lab in want}
    if any(i >= F.r for i in S):
        raise FormatViolation("facet index out of range 0..%d" % (F.r - 1))
    return divisors.MonomialDivisor.from_support(S, F.r)


def cmd_monoid_facets(doc):
    M, F, labels = _monoid(doc)
    out = F.to_json(M)
    out["dim"] = M.dim
    out["lattice_basis"] = [list(c) for c in M.basis.columns()]
    if labels is not None:
        out["labels"] = [_label(lab) for lab in labels]
    if "saturation_bound" in doc:
        out["saturation"] = cone.saturation_check(M, F, doc["saturation_bound"]).to_json()
    return out


def cmd_monoid_dkg(doc):
    M, F, _ = _monoid(doc)
    cg = divisors.divisor_class_group(F)
    out = cg.to_json()
    out["facets"] = F.r
    out["simpliciality"] = divisors.simpliciality_report(M, F).to_json()
    return out


cmd_monoid_akg = cmd_monoid_dkg


def cmd_monoid_affine(doc):
    M, F, labels = _monoid(doc)
    D = _divisor(doc, F, labels)
    rep = divisors.complement_report(M, F, D)
    free, torsion = divisors.divisor_class(F, D)
    out = {"affine": rep.affine,
           "support": list(rep.support),
           "witness": list(M.to_ambient(rep.witness)) if rep.witness is not None else None,
           "affine_trivial": divisors.is_affine_trivial(F, D),
           "class": {"free": list(free), "torsion": list(torsion)}}
    if labels is not None:
        out["support_labels"] = [_label(labels[i]) for i in rep.support]
    return out


def cmd_hyperbola(doc):
    H = special.HyperbolaData(doc["d"], doc.get("local", True), doc.get("comaximal"))
    out = {"dkg": special.hyperbola_dkg(H).to_json(), "akg_zero": special.hyperbola_akg_zero(H)}
    if H.base_local:
        out["akg"] = special.hyperbola_akg(H).to_json()
    if "n" in doc:
        out["coaffine"] = special.hyperbola_is_coaffine(H, doc["n"])
        out["affine_trivial"] = special.hyperbola_is_affine_trivial(H, doc["n"])
    return out


def cmd_determinantal(doc):
    D = special.DeterminantalData(doc["m"], doc["n"], doc["k"])
    return {"dimension": special.det_dimension(D),
            "ideal_height": special.det_ideal_height(D),
            "dkg": special.det_dkg(D).to_json(),
            "akg": special.det_akg(D).to_json(),
            "extension_height": special.det_extension_height(D)}


def cmd_segre(doc):
    m, n = doc["m"], doc["n"]
    rows, cols = doc.get("rows", []), doc.get("cols", [])
    try:
        closed = special.segre_union_affine(m, n, rows, cols)
    except IndexError as exc:
        raise FormatViolation(str(exc))
    M = cone.segre_monoid(m, n)
    F = cone.facet_valuations(M)
    labels = cone.segre_facet_labels(m, n, M, F)
    want = {("row", i) for i in rows} | {("col", j) for j in cols}
    # with m = n = 1 the single facet carries the row label only
    if m == 1 and n == 1 and want:
        want = {("row", 1)}
    S = {k for k, lab in enumerate(labels) if lab in want}
    return {"affine": closed,
            "toric_affine": divisors.support_realizable(M, F, S),
            "superheight": {"row": special.segre_superheight(m, n, "row"),
                            "col": special.segre_superheight(m, n, "col")},
            "akg": divisors.affine_class_group(F).to_json()}


def cmd_bounds(doc):
    facts = [(f["invariant"], f["rel"], f["value"]) for f in doc["facts"]]
    kb = bounds.from_facts(facts, doc.get("flags", ()), doc.get("configuration", "ideal"))
    return bounds.report(kb)


COMMANDS = {
    "monoid-facets": (cmd_monoid_facets, "monoid_input", "facets_output"),
    "monoid-dkg": (cmd_monoid_dkg, "monoid_input", "classgroup_output"),
    "monoid-akg": (cmd_monoid_akg, "monoid_input", "classgroup_output"),
    "monoid-affine": (cmd_monoid_affine, "monoid_input", "affine_output"),
    "hyperbola": (cmd_hyperbola, "hyperbola_input", "hyperbola_output"),
    "determinantal": (cmd_determinantal, "determinantal_input", "determinantal_output"),
    "segre": (cmd_segre, "segre_input", "segre_output"),
    "bounds": (cmd_bounds, "bounds_input", "bounds_output"),
}


# rendering

def _text(value, indent=""):
    lines = []
    if isinstance(value, dict):
        if set(value) == {"free_rank", "invariant_factors", "text"}:
            return [indent + value["text"]]
        if set(value) == {"lo", "hi"}:
            return [indent + "[%s, %s]" % (value["lo"], "inf" if value["hi"] is None else value["hi"])]
        for k in sorted(value):
            sub = _text(value[k], indent + "  ")
            if len(sub) == 1:
                lines.append("%s%s: %s" % (indent, k, sub[0].strip()))
            else:
                lines.append("%s%s:" % (indent, k))
                lines.extend(sub)
        return lines
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for v in value:
            sub = _text(v, indent + "  ")
            lines.append(indent + "- " + sub[0].strip())
            lines.extend(sub[1:])
        return lines or [indent + "[]"]
    if isinstance(value, list):
        return [indent + "[" + ", ".join(map(str, value)) + "]"]
    if value is None:
        return [indent + "none"]
    if isinstance(value, bool):
        return [indent + ("yes" if value else "no")]
    return [indent + str(value)]


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return "\n".join(_text(doc)) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="affclass", description="Class groups, affine complements and height bounds.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in list(COMMANDS) + ["selfcheck"]:
        sp = sub.add_parser(name)
        if name != "selfcheck":
            src = sp.add_mutually_exclusive_group()
            src.add_argument("-i", "--input", metavar="FILE", help="read the JSON input from FILE ('-' for stdin)")
            src.add_argument("--json", metavar="TEXT", help="inline JSON input")
        sp.add_argument("--format", choices=("json", "text"), default="json")
    return p


def _read_input(args):
    if args.json is not None:
        text = args.json
    elif args.input not in (None, "-"):
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (args.input, exc.strerror))
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("invalid JSON: %s" % exc)


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "selfcheck":
        results = run_all()
        for r in results:
            stderr.write(r.line() + "\n")
        passed = all(r.passed for r in results)
        doc = {"passed": passed, "criteria": [r.to_json() for r in results]}
        if args.format == "text":
            stdout.write("".join("[%s] %2d %s: %s\n" % ("PASS" if r.passed else "FAIL", r.id, r.name, r.detail)
                                 for r in results))
        else:
            stdout.write(render(doc, "json"))
        return EXIT_OK if passed else EXIT_DOMAIN

    fn, in_schema, _ = COMMANDS[args.command]
    try:
        doc = _read_input(args)
        _validate(doc, in_schema)
    except UsageError as exc:
        stderr.write("affclass: %s\n" % exc)
        return EXIT_USAGE
    try:
        out = fn(doc)
    except DomainError as exc:
        stderr.write("affclass: %s: %s\n" % (exc.code, exc))
        stdout.write(render(exc.to_json(), args.format))
        return EXIT_DOMAIN
    stdout.write(render(out, args.format))
    if out.get("status") == "contradiction":
        stderr.write("affclass: Contradiction: %s\n" % out["message"])
        return EXIT_DOMAIN
    return EXIT_OK


def main():
    sys.exit(run())
