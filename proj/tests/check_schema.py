import json
import subprocess
import sys

import jsonschema

malg, schema_path, data = sys.argv[1:4]
schema = json.load(open(schema_path))
validator = jsonschema.Draft202012Validator(schema)

commands = [
    (["demo", "counterexample"], 0),
    (["validate", f"{data}/P2.poset"], 0),
    (["validate", f"{data}/antichain.poset"], 1),
    (["validate", f"{data}/PA.oalg"], 0),
    (["functor", "p", f"{data}/A.malg"], 0),
    (["check-hom", "--contract", "hom", f"{data}/id2.map", f"{data}/A.malg", f"{data}/B.malg"], 0),
    (["enumerate", "--contract", "ordered", f"{data}/PA.oalg", f"{data}/PA.oalg"], 0),
    (["roundtrip", f"{data}/A.malg"], 0),
    (["adjunction", f"{data}/PA.oalg", f"{data}/B.malg"], 0),
    (["monad", f"{data}/A.malg"], 0),
    (["eval", "--term", "s(x)", "--val", "x=0", f"{data}/A.malg"], 0),
    (["validate", f"{data}/missing.malg"], 2),
    (["--cap", "3", "enumerate", f"{data}/A.malg", f"{data}/B.malg"], 3),
]

failures = 0
for args, expected in commands:
    proc = subprocess.run([malg, "--json", *args], capture_output=True, text=True)
    label = " ".join(args)
    try:
        report = json.loads(proc.stdout)
        validator.validate(report)
        assert proc.returncode == expected, f"exit {proc.returncode}, expected {expected}"
        assert report["exit_code"] == proc.returncode, "exit_code field disagrees with the process"
        print(f"ok   {label}")
    except Exception as e:  # noqa: BLE001
        failures += 1
        print(f"FAIL {label}: {e}")
sys.exit(1 if failures else 0)
