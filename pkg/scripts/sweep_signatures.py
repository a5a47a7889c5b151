"""Compare factor-derived signatures with the printed trichotomy over a grid
of (n, mu), and check the sign claims behind the quadratic factor.

    python scripts/sweep_signatures.py --n-max 12 --mu-max 12
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from affsig.designs import DesignParams, is_admissible
from affsig.spectra import factor_coefficients, signature_from_factors, theorem1_signature


@dataclass
class SweepConfig:
    n_max: int = 12
    mu_max: int = 12


def run(cfg: SweepConfig) -> list[tuple]:
    rows = []
    for n in range(2, cfg.n_max + 1):
        for mu in range(1, cfg.mu_max + 1):
            if not is_admissible(n, mu):
                continue
            f = factor_coefficients(n, mu)  # raises if e0 <= 0 or not integral
            p = DesignParams.from_n_mu(n, mu)
            rows.append((n, mu, p.v + p.b, f.e1, f.e0,
                         signature_from_factors(n, mu), theorem1_signature(n, mu)))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    parser.add_argument("--mu-max", type=int, default=SweepConfig.mu_max)
    args = parser.parse_args()
    rows = run(SweepConfig(args.n_max, args.mu_max))
    bad = 0
    for n, mu, size, e1, e0, derived, printed in rows:
        flag = "" if derived == printed else "  <- printed differs"
        bad += derived != printed
        print(f"n={n:<3} mu={mu:<3} v+b={size:<6} e1={e1:<8} e0={e0:<12} "
              f"{str(derived):<22} {str(printed):<22}{flag}")
    print(f"{len(rows)} admissible cells, {bad} discrepancies, e0 > 0 everywhere")


if __name__ == "__main__":
    main()
