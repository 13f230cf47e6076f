#!/usr/bin/env python3
# Copyright 2026 The owamilp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Re-solves exported models with HiGHS and compares against known optima.

Exit status: 0 all checks passed, 1 a check failed, 77 HiGHS unavailable.
"""

import argparse
import os
import subprocess
import sys
import tempfile

CASES = [
    ("example1", "Fz", 23),
    ("example1", "FzR2", 23),
    ("example1", "Fs", 23),
    ("example1", "Fzy", 23),
    ("example2", "Fz", 4),
    ("example3", "Fz", 2),
]


def solve_file(highspy, path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    status = h.readModel(path)
    if status != highspy.HighsStatus.kOk:
        raise RuntimeError(f"HiGHS could not read {path}")
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        raise RuntimeError(f"HiGHS status {h.modelStatusToString(h.getModelStatus())}")
    return h.getInfo().objective_function_value


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cli", required=True, help="path to the owa executable")
    args = parser.parse_args()
    try:
        import highspy
    except ImportError:
        print("highspy not installed; external check skipped")
        return 77

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for instance, variant, expected in CASES:
            for fmt in ("mps", "lp"):
                path = os.path.join(tmp, f"{instance}-{variant}.{fmt}")
                subprocess.run(
                    [args.cli, "export", "-i", instance, "-v", variant,
                     "--format", fmt, "-o", path],
                    check=True)
                try:
                    value = solve_file(highspy, path)
                    ok = abs(value - expected) <= 1e-6
                except RuntimeError as err:
                    value, ok = str(err), False
                print(f"{'ok  ' if ok else 'FAIL'} {instance} {variant} {fmt}: "
                      f"{value} (expected {expected})")
                failures += 0 if ok else 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
