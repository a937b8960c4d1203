"""|H_m(e^{jwT}, N)| of the Shmaliy smoother for several orders (N = 500 by default).

Writes one long-format CSV: omega_t, m, abs, route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from _common import base_parser, write_csv
from hahnfir.transfer import frequency_response, log_grid


@dataclass
class Config:
    N: int = 500
    orders: tuple = (1, 2, 3)
    wmin: float = 1e-4
    wmax: float = math.pi
    points: int = 256
    digits: int = 50


def run(cfg: Config):
    grid = log_grid(cfg.wmin, cfg.wmax, cfg.points)
    rows = []
    for m in cfg.orders:
        for s in frequency_response(m, cfg.N, grid, cfg.digits):
            rows.append([repr(s.omega_t), m, mpmath.nstr(s.magnitude, 17), s.route])
    return rows


if __name__ == "__main__":
    parser = base_parser(__doc__, 256)
    parser.add_argument("--N", type=int, default=500)
    args = parser.parse_args()
    cfg = Config(N=args.N, points=args.points, digits=args.digits)
    path = write_csv(args.out / f"shmaliy_response_N{cfg.N}.csv", ["omega_t", "m", "abs", "route"], run(cfg))
    print(path)
