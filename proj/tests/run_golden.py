#!/usr/bin/env python3
"""Byte-exact golden-file checks for the command-line tool.

Usage: run_golden.py <cli-binary> <golden-dir>

Each non-comment line of cases.txt reads
    <expected-stdout-file> <expected-exit-code> <cli args...>
with file arguments relative to the golden directory.
"""

import subprocess
import sys
from pathlib import Path


def main():
    cli = Path(sys.argv[1]).resolve()
    golden = Path(sys.argv[2])
    failures = 0
    for line in (golden / "cases.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        expect_file, expect_exit, args = toks[0], int(toks[1]), toks[2:]
        proc = subprocess.run([str(cli), *args], cwd=golden,
                              capture_output=True)
        expected = (golden / expect_file).read_bytes()
        ok = proc.returncode == expect_exit and proc.stdout == expected
        print(("PASS" if ok else "FAIL"), expect_file)
        if not ok:
            failures += 1
            print("  exit:", proc.returncode, "want", expect_exit)
            print("  stdout:")
            sys.stdout.write(proc.stdout.decode(errors="replace"))
            print("  stderr:")
            sys.stdout.write(proc.stderr.decode(errors="replace"))
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
