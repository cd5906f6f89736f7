#!/usr/bin/env python3
"""Run the acceptance suite with per-criterion pass/fail lines."""

import os
import subprocess
import sys

here = os.path.dirname(os.path.abspath(__file__))
root = os.path.dirname(here)
sys.exit(
    subprocess.call(
        [
            sys.executable,
            "-m",
            "pytest",
            os.path.join(root, "tests", "test_acceptance.py"),
            "-q",
            "-s",
        ]
    )
)
