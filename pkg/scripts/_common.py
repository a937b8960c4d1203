"""Small helpers shared by the data-generation scripts."""

from __future__ import annotations

import argparse
import csv
from pathlib import Path


def base_parser(description: str, default_points: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description=description)
    p.add_argument("--out", type=Path, default=Path("results"), help="output directory")
    p.add_argument("--points", type=int, default=default_points)
    p.add_argument("--digits", type=int, default=50)
    return p


def write_csv(path: Path, header, rows) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return path
