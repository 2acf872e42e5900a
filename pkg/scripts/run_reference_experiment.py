#!/usr/bin/env python3
"""Run the full reference experiment: every CLI artifact from one config.

Produces spectrum.csv, force_curve.csv, vacuum_content.csv,
pair_distribution.csv, oracle_check.json and trajectory.csv in the chosen
output directory, and prints the SI perfect-conductor reference pressure
at one micron.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from casimir_toy import cli

REPO_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG = REPO_ROOT / "configs" / "reference.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--config", default=str(DEFAULT_CONFIG), help="JSON run configuration"
    )
    parser.add_argument(
        "--output-dir", default="out/reference", help="artifact directory"
    )
    args = parser.parse_args()

    common = ["--config", args.config, "--output-dir", args.output_dir]
    commands = [
        ["spectrum", *common],
        ["force-curve", *common, "--with-oracle"],
        ["vacuum-content", *common],
        ["oracle-check", *common],
        ["evolve", *common],
        ["reference-casimir", "--y", "1e-6", "--hbar", "1.054571817e-34", "--c", "2.99792458e8"],
    ]
    for argv in commands:
        print(f"$ casimir-toy {' '.join(argv)}")
        code = cli.main(argv)
        if code != 0:
            print(f"command failed with exit code {code}", file=sys.stderr)
            return code
    print(f"all artifacts written under {args.output_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
