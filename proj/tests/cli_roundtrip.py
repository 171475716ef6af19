#!/usr/bin/env python3
# Copyright 2026 The skewgal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Every verb twice: outputs must be byte-identical, validate against the
# published schema, and re-parse through the tool where an input form exists.
#
# usage: cli_roundtrip.py <skewgal binary> <schema dir> [--with-selftest]

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
WITH_SELFTEST = "--with-selftest" in sys.argv[3:]

failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(label, args, schema_name, want_exit=0, stream="out"):
    first = run(args)
    second = run(args)
    if first != second:
        failures.append(f"{label}: output differs between identical runs")
    code, out, err = first
    if code != want_exit:
        failures.append(f"{label}: exit {code}, expected {want_exit}; stderr {err.strip()}")
        return None
    text = out if stream == "out" else err
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: not JSON ({e})")
        return None
    try:
        jsonschema.validate(doc, schema(schema_name))
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: schema {schema_name}: {e.message}")
    return doc


def norm(poly):
    # elements are emitted at full length; compare without trailing zeros
    def strip(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return c
    return {**poly, "coeffs": [strip(c) for c in poly["coeffs"]]}


tmp = pathlib.Path(tempfile.mkdtemp(prefix="skewgal-cli-"))
(tmp / "g.json").write_text(json.dumps({"catalog": "C6"}))
(tmp / "a.json").write_text(json.dumps([0, 1, 2, 0, 1, 2]))

v = check("decide", ["decide", "--group", str(tmp / "g.json"), "--alpha", str(tmp / "a.json"),
                     "--K", "2^2", "--L", "2^6", "--sigma", "1"], "verdict")
if v and (v["status"] != "SOLVABLE" or v["tau"] != {"frob": 3}):
    failures.append(f"decide: expected SOLVABLE with tau frob 3, got {v}")
check("decide-seeded", ["--seed", "7", "decide", "--group", '{"catalog":"S3"}', "--alpha", "[0,0,0,1,1,1]",
                        "--K", "3", "--L", "3^2", "--sigma", "0", "--pretty"], "verdict")

check("lift-tau", ["lift-tau", "--K", "2^2", "--L", "2^6", "--sigma", "1"], "lift_tau")
e = check("lift-tau-error", ["lift-tau", "--K", "2^2", "--L", "2^4", "--sigma", "1"], "error", 1, "err")
if e and e["error"] != "CoprimalityFailure":
    failures.append(f"lift-tau-error: {e}")

check("extension-criteria", ["extension-criteria", "--K", "2^2", "--L", "2^6", "--sigma", "1", "--tau", "3"], "extension_criteria")

x = {"base": "2^2", "frob": 1, "coeffs": [[1], [1]]}
y = {"base": "2^2", "frob": 1, "coeffs": [[0, 1], [1]]}
for op in ["mul", "divmod", "gcd", "lcm", "witness"]:
    d = check(f"ore-{op}", ["ore", "--op", op, "--f", json.dumps(x), "--g", json.dumps(y)], "ore")
    if d and op == "mul":
        # the product re-parses and divides back to x
        back = check("ore-divmod-back", ["ore", "--op", "divmod", "--f", json.dumps(d["product"]),
                                         "--g", json.dumps(y)], "ore")
        if back and (norm(back["quotient"]) != norm(x) or back["remainder"]["coeffs"] != []):
            failures.append(f"ore round trip: {back}")

check("tower", ["tower", "--group", '{"catalog":"S4"}'], "tower")
check("tower-perm", ["tower", "--group", '{"perm_gens":[[[0,1,2]],[[0,1]]]}'], "tower")

rep = check("construct-lprime", ["--seed", "3", "construct-lprime", "--spec", "3:rq", "--spec", "inf:ts",
                                 "--p-kernel", "5", "--n-min", "4"], "report")
if rep:
    (tmp / "rep.json").write_text(json.dumps(rep))
    ver = check("verify-report", ["verify-report", "--report", str(tmp / "rep.json")], "verify")
    if ver and not ver["ok"]:
        failures.append(f"verify-report: {ver}")
    bad = dict(rep)
    bad["Q"] = list(rep["Q"])
    bad["Q"][0] = str(int(bad["Q"][0]) + 1)
    (tmp / "bad.json").write_text(json.dumps(bad))
    check("verify-report-tampered", ["verify-report", "--report", str(tmp / "bad.json")], "verify", 3)

for place in ["2", "3", "5", "inf"]:
    check(f"level-{place}", ["level", "--place", place], "level")
for field in ["Qp:7", "Q", "Q(sqrt:-7)", "Q(sqrt:2)", "Q(sqrt:-1)"]:
    check(f"level-{field}", ["level", "--field", field], "level")
for field in ["Q", "Q(sqrt:-1)", "Q(sqrt:2)", "Q(sqrt:-7)", "Q(sqrt:-5)"]:
    check(f"feasible-{field}", ["feasible-level4", "--field", field], "feasibility")

check("parse-error", ["decide", "--group", "{", "--alpha", "[]", "--K", "2", "--L", "2", "--sigma", "0"],
      "error", 2, "err")
check("domain-error", ["construct-lprime", "--p-kernel", "2"], "error", 1, "err")

if WITH_SELFTEST:
    s = check("selftest", ["selftest"], "selftest")
    if s and not s["passed"]:
        failures.append("selftest reported a failing suite")
else:
    check("selftest-subset", ["selftest", "--suite", "8", "--suite", "9"], "selftest")

for f in failures:
    print("FAIL", f)
print("cli round trip:", "ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
