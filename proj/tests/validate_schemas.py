"""Validate the CLI's JSON outputs against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("matrix.schema.json", ["matrix", "window", "--family", "H1", "--n", "4", "--json"]),
    ("matrix.schema.json", ["matrix", "window", "--family", "M1:a=-3", "--n", "3", "--m", "5", "--k", "2", "--json"]),
    ("ldu.schema.json", ["matrix", "ldu", "--family", "H2", "--n", "5", "--json"]),
    ("report.schema.json", ["verify", "m2-leading-minors", "--n-max", "8", "--json"]),
    ("report.schema.json", ["verify", "m1a-window-minors", "--n-max", "3", "--k-max", "4", "--json", "--timing"]),
    ("report_list.schema.json", ["verify", "all", "--n-max", "6", "--k-max", "4", "--a-range", "-2:2", "--json"]),
    ("sequence.schema.json", ["seq", "dump", "--kind", "catalan", "--n", "12"]),
    ("cf.schema.json", ["cf", "expand", "--series", "L2", "--coeffs", "21", "--quotients", "15", "--json"]),
    ("tvalue.schema.json", ["net", "t-value", "--p", "3", "--dims", "M1:a=0,M1:a=1", "--m-max", "5", "--json"]),
    ("points.schema.json", ["net", "points", "--p", "3", "--dims", "P1:a=0,P1:a=1", "--m", "2", "--n", "9",
                            "--format", "json"]),
    ("search.schema.json", ["net", "search", "--p", "3", "--m-max", "3", "--budget", "5", "--json"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {f.name: json.loads(f.read_text()) for f in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(body)) for name, body in schemas.items())

    with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as csv:
        points = subprocess.run([binary, "net", "points", "--p", "2", "--dims", "P1:a=0,P1:a=1", "--m", "3",
                                 "--n", "8", "--format", "csv"], capture_output=True, text=True, check=True)
        csv.write(points.stdout)
    cases = CASES + [("discrepancy.schema.json", ["net", "discrepancy", "--input", csv.name, "--json"])]

    failures = 0
    for schema_name, args in cases:
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        run = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        try:
            if run.returncode != 0:
                raise RuntimeError(f"exit status {run.returncode}: {run.stderr.strip()}")
            validator.validate(json.loads(run.stdout))
            print(f"ok   {schema_name}: {' '.join(args)}")
        except Exception as exc:  # noqa: BLE001 - report every case
            failures += 1
            print(f"FAIL {schema_name}: {' '.join(args)}: {exc}")
    pathlib.Path(csv.name).unlink()
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
