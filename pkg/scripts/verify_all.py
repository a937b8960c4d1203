"""Run every exact verification suite and write one JSON report.

Equivalent to ``hahnfir verify --suite all``; kept here so a single command
regenerates every table in ``results/``.
"""

import argparse
import sys
from pathlib import Path

from hahnfir.cli import main

if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    sys.exit(main(["verify", "--suite", "all", "--seed", str(args.seed),
                   "--output", str(args.out / "verification.json")]))
