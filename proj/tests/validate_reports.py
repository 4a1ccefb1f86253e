"""Runs every subcommand with --format json and validates the output
against schemas/report.json."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    (["dist", "--family", "geometric", "--stat", "min", "--params", "0.5,0.5", "--k", "0..3"], 0),
    (["dist", "--family", "poisson", "--stat", "min", "--params", "0.1,0.2", "--k", "0..200"], 0),
    (["compare", "--a", "8,0.8,0.1", "--b", "7,1,0.9", "--relation", "rhr"], 3),
    (["compare", "--family", "geometric", "--a", "0.999", "--b", "0.5", "--relation", "hr", "--cap", "20"], 0),
    (["theorem", "T3_3", "--trials", "50"], 0),
    (["counterexample", "reproduce", "CE3_1"], 0),
    (["counterexample", "reproduce", "CE3_2"], 1),
    (["counterexample", "reproduce", "CE3_3"], 0),
    (["counterexample", "search", "--relation", "rhr", "--family", "geometric", "--budget", "200"], 3),
    (["counterexample", "search", "--relation", "st", "--budget", "50"], 0),
    (["mc-check", "--params", "8,0.8,0.1", "--samples", "5000"], 0),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args, code in COMMANDS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}: {proc.stderr.strip()}")
            failed += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {list(e.absolute_path)}: {e.message}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
