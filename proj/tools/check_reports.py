"""Runs the CLI, validates JSON reports against the schema and compares text and JSON statuses."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


for group, suite, kappa in [("A1@2", "all", "symbolic"), ("B2@2", "p_OA2", "1,-1/2"), ("A2@3", "l_Oun", "symbolic")]:
    common = ["verify", "--group", group, "--suite", suite, "--kappa", kappa, "--no-timing"]
    js = run(*common, "--format", "json")
    if js.returncode != 0:
        sys.exit(f"{group} {suite}: exit {js.returncode}\n{js.stderr}")
    reports = json.loads(js.stdout)
    jsonschema.validate(reports, schema)
    text = run(*common, "--format", "text")
    rows = [line.split() for line in text.stdout.splitlines()[1:]]
    if [(r[0], r[1]) for r in rows] != [(r["id"], r["status"]) for r in reports]:
        sys.exit(f"{group} {suite}: text and json statuses differ")
    again = run(*common, "--format", "json")
    if again.stdout != js.stdout:
        sys.exit(f"{group} {suite}: output is not deterministic")

cross = run("crosscheck", "--group", "A1@2", "--samples", "5", "--format", "json")
jsonschema.validate(json.loads(cross.stdout), schema)
mutated = run("crosscheck", "--group", "A1@2", "--samples", "5", "--mutate", "--format", "json")
if mutated.returncode != 1:
    sys.exit("mutated crosscheck did not fail")
jsonschema.validate(json.loads(mutated.stdout), schema)
print("reports valid")
