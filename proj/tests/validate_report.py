"""Run cone_verify for a few cases and validate each JSON report against the schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    cases = [("I", 1, 0), ("I", 2, 0), ("II", 1, 0), ("III", 1, 0), ("I", 3, 2)]
    failed = 0
    for family, n, expected in cases:
        proc = subprocess.run([binary, "verify", "--family", family, "--n", str(n)],
                              capture_output=True, text=True)
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=str)
        status = "ok" if not errors and proc.returncode == expected else "FAILED"
        print(f"{family} {n}: exit {proc.returncode} verdict {report['verdict']} -> {status}")
        for e in errors:
            print("   ", e.message)
        failed += status != "ok"
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
