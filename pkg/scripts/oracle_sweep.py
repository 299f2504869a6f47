#!/usr/bin/env python3
"""Sweep alpha and grade both numerical oracles against the closed form.

Prints one row per alpha with the worst relative eigenvalue error of the
shooting route and the finite-difference route (wall-extrapolated for
attractive alpha).  This is the calibration experiment behind the
default grids and tolerances.

Usage: python scripts/oracle_sweep.py [--n-max 4] [--alphas -0.24 -0.1 0.5 2.0]
"""

import argparse
import sys
import time
from dataclasses import dataclass

from singosc.model import Domain, indicial_roots
from singosc.oracle import (
    GridSpec,
    compare,
    fd_eigen,
    fd_eigen_extrapolated,
    shoot_spectrum,
)
from singosc.spectrum import spectrum_table

DENSE_CUTOFFS = (1e-2, 3e-3, 1e-3, 3e-4, 1e-4)


@dataclass(frozen=True)
class SweepConfig:
    alphas: tuple[float, ...] = (-0.24, -0.1, 0.5, 2.0)
    n_max: int = 4
    shoot_rtol: float = 1e-7


def run(cfg: SweepConfig) -> None:
    print(f"{'alpha':>8}  {'beta_plus':>10}  {'shoot err':>10}  {'fd err':>10}  {'fd resid':>10}  {'sec':>6}")
    for alpha in cfg.alphas:
        t0 = time.perf_counter()
        table = spectrum_table(alpha, cfg.n_max, Domain.HALF_LINE)
        shoot = shoot_spectrum(alpha, cfg.n_max, rtol=cfg.shoot_rtol)
        beta = indicial_roots(alpha).beta_plus
        if alpha >= 0:
            fd = fd_eigen(alpha, GridSpec(n_points=24000), k=cfg.n_max + 1)
        else:
            cutoffs = DENSE_CUTOFFS if beta < -0.35 else (1e-2, 1e-3, 1e-4)
            fd = fd_eigen_extrapolated(alpha, k=cfg.n_max + 1, cutoffs=cutoffs)
        rs = compare(table, shoot, tol=1e-4)
        rf = compare(table, fd, tol=5e-3)
        dt = time.perf_counter() - t0
        print(
            f"{alpha:>8.3f}  {beta:>10.5f}  {rs.max_rel_error:>10.2e}  "
            f"{rf.max_rel_error:>10.2e}  {fd.residual_estimate:>10.2e}  {dt:>6.2f}"
        )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", type=float, nargs="+",
                    default=list(SweepConfig.alphas))
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    args = ap.parse_args(argv)
    run(SweepConfig(alphas=tuple(args.alphas), n_max=args.n_max))
    return 0


if __name__ == "__main__":
    sys.exit(main())
