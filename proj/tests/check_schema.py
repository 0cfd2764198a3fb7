"""Runs the CLI with --json and validates every emitted object against the schema file."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

cases = [
    (["eta", "S2;(2,1)(3,-1)(6,-1)"], 0),
    (["obstruct", "S2;(2,1)(3,-1)(6,-1)"], 3),
    (["obstruct", "T2;"], 0),
    (["dedekind", "3", "7"], 0),
    (["catalog"], 0),
    (["gauss-bonnet", "--chi", "2"], 0),
    (["gauss-bonnet", "--volume", "26.3189450696"], 0),
    (["eta", "S2;(2,"], 1),
    (["eta", "S2;(4,2)"], 2),
    (["eta", "S2;(2,1)(3,1)"], 2),
    (["gauss-bonnet", "--volume", "20"], 2),
]

failed = 0
for args, expected_code in cases:
    proc = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != expected_code:
        print(f"FAIL {label}: exit {proc.returncode}, expected {expected_code}")
        failed += 1
        continue
    for stream in (proc.stdout, proc.stderr):
        lines = [line for line in stream.splitlines() if line.strip()]
        if len(lines) > 1:
            print(f"FAIL {label}: {len(lines)} JSON lines on one stream")
            failed += 1
        for line in lines:
            try:
                jsonschema.validate(json.loads(line), schema)
            except (ValueError, jsonschema.ValidationError) as e:
                print(f"FAIL {label}: {e}")
                failed += 1
    print(f"ok   {label}")

sys.exit(1 if failed else 0)
