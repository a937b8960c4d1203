"""Magnitude response of the order-zero Hahn smoother (beta = 0).

Two sweeps: N = 200 with alpha in {0, 1, 2, 4}, and alpha = 4 with
N in {50, 100, 200}. Each goes to its own CSV (omega_t, alpha, N, abs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from _common import base_parser, write_csv
from hahnfir.exactnum import MPComplex
from hahnfir.lowpass import lp_transfer_closed
from hahnfir.transfer import log_grid


@dataclass
class Sweep:
    name: str
    cases: list = field(default_factory=list)  # (alpha, N)


SWEEPS = [
    Sweep("lowpass_by_alpha", [(a, 200) for a in (0, 1, 2, 4)]),
    Sweep("lowpass_by_N", [(4, n) for n in (50, 100, 200)]),
]


def sweep_rows(sweep: Sweep, grid, digits: int):
    rows = []
    for alpha, N in sweep.cases:
        for w in grid:
            H = lp_transfer_closed(alpha, N, MPComplex.expj(w, digits))
            rows.append([repr(w), alpha, N, mpmath.nstr(abs(H), 17)])
    return rows


if __name__ == "__main__":
    args = base_parser(__doc__, 256).parse_args()
    grid = log_grid(1e-4, math.pi, args.points)
    for sweep in SWEEPS:
        path = write_csv(args.out / f"{sweep.name}.csv", ["omega_t", "alpha", "N", "abs"],
                         sweep_rows(sweep, grid, args.digits))
        print(path)
