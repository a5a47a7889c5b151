"""Verify the closed forms on a corpus of affine designs and print a summary.

    python scripts/verify_corpus.py [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from affsig.designs import (build_affine_geometry, build_hadamard_paley,
                            build_hadamard_sylvester, hadamard_to_affine_design)
from affsig.spectra import verify_design


@dataclass
class CorpusConfig:
    affine: list[tuple[int, int, int]] = field(default_factory=lambda: [
        (2, 2, 1), (2, 3, 1), (3, 2, 1), (2, 2, 2), (2, 5, 1), (3, 3, 1), (2, 7, 1)])
    sylvester: list[int] = field(default_factory=lambda: [2, 3, 4])
    paley: list[int] = field(default_factory=lambda: [7, 11, 19])


def corpus(cfg: CorpusConfig):
    for m, p, k in cfg.affine:
        yield f"AG({m},{p ** k})", build_affine_geometry(m, p, k)
    for t in cfg.sylvester:
        yield f"Sylvester-{2 ** t}", hadamard_to_affine_design(build_hadamard_sylvester(t))
    for q in cfg.paley:
        yield f"Paley-{q + 1}", hadamard_to_affine_design(build_hadamard_paley(q))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--json", help="also write every report to this file")
    args = parser.parse_args()

    reports = {}
    print(f"{'design':<14} {'(n,mu)':<8} {'v+b':>4}  {'computed':<14} {'printed':<14} "
          f"{'charpoly':<8} time")
    for name, d in corpus(CorpusConfig()):
        t0 = time.perf_counter()
        r = verify_design(d)
        secs = time.perf_counter() - t0
        p = r.params
        print(f"{name:<14} {str((p.n, p.mu)):<8} {p.v + p.b:>4}  "
              f"{str(r.computed_signature):<14} {str(r.printed_signature):<14} "
              f"{'equal' if r.charpoly_equal else 'DIFFERS':<8} {secs:.1f}s")
        other = [f for f in r.failures() if "theorem 1 (printed)" not in f]
        if other:
            print(f"    unexpected failures: {other}")
        reports[name] = r.to_dict()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)


if __name__ == "__main__":
    main()
