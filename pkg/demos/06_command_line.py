"""
Driving everything from the command line
========================================

The `nilcoh` executable wraps the library for scripting: every subcommand
prints one canonical JSON document (stable key order, deterministic
bytes), and the exit code carries the verdict - 0 for success, 1 for a
failed check, 2 for usage or parse errors.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

def run(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "nilcoh.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr

workdir = Path(tempfile.mkdtemp())
iwasawa = workdir / "iwasawa.alg"
iwasawa.write_text("algebra iwasawa dim 3\nd a3 = (-1) * a1^a2\n")

# validate: structural checks, exit 0 when the structure is consistent.
code, out, _ = run("validate", str(iwasawa))
print("validate ->", code)
print(out, end="")

# table: pick a theory; --pretty renders an aligned grid instead of JSON.
code, out, _ = run("table", str(iwasawa), "--theory", "bc", "--pretty")
print("\ntable --theory bc --pretty ->", code)
print(out, end="")

# metric: exit 1 signals "condition fails", with the witness in the JSON.
code, out, _ = run("metric", str(iwasawa), "--check", "astheno",
                   "--diag", "1,1,1")
payload = json.loads(out)
print("\nmetric --check astheno ->", code,
      "(holds: %s)" % payload["verdicts"]["metric"]["holds"])
print("witness:", payload["verdicts"]["metric"]["witness"])

# obstruct: the all-in-one report; exit 1 when astheno is excluded.
code, out, _ = run("obstruct", str(iwasawa), "--diag", "1,1,1")
payload = json.loads(out)
print("\nobstruct ->", code,
      "(astheno_excluded: %s, excluded_by: %s)"
      % (payload["verdicts"]["astheno_excluded"],
         payload["verdicts"]["excluded_by"]))

# product: writes a new structure file for the direct sum.
torus = workdir / "torus.alg"
torus.write_text("algebra torus dim 1\n")
code, out, _ = run("product", str(iwasawa), str(torus))
print("\nproduct ->", code)
print(out, end="")

# catalog: the bundled worked examples, recomputed and diffed on demand.
code, out, _ = run("catalog", "suite", "kodaira", "--pretty")
print("\ncatalog suite kodaira ->", code)
print(out, end="")

# Errors are reported on stderr with exit code 2:
bad = workdir / "bad.alg"
bad.write_text("algebra broken dim 2\nd a2 = oops\n")
code, _, err = run("validate", str(bad))
print("\nvalidate (syntax error) ->", code)
print(err, end="")
