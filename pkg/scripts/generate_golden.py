"""Regenerate tests/golden/convergence_metrics.json.

Run from the repository root after any intentional change to the
convergence diagnostics:

    python3 scripts/generate_golden.py

The file pins every diagnostic at fixed family/rank points, rounded
through %.12g so the comparison tolerance in the test suite (1e-9) is
meaningful, together with the acceptance thresholds the metrics must stay
inside.
"""

from __future__ import annotations

import argparse
import json
import pathlib

from qkostant import DEFAULT_T_GRID, convergence_sweep

FAMILIES = ("A", "B", "C", "D", "product")
METRIC_RANKS = (25, 100, 400)
MGF_RANKS = (20, 320)
BUMPS = 3  # bumped indices for the product family only

THRESHOLDS = {
    "ks_max_at_top_rank": 0.05,
    "abs_skewness_max_at_top_rank": 0.1,
    "abs_excess_kurtosis_max_at_top_rank": 0.1,
    "mgf_max_at_top_rank": 0.05,
}


def rounded(x: float) -> float:
    return float(format(x, ".12g"))


def build_payload():
    families = {}
    for family in FAMILIES:
        bumps = BUMPS if family == "product" else 0
        rows = {}
        for s in convergence_sweep(family, METRIC_RANKS, bumps=bumps):
            rows[str(s.rank)] = {
                "ks_distance": rounded(s.ks_distance),
                "skewness": rounded(s.skewness),
                "excess_kurtosis": rounded(s.excess_kurtosis),
            }
        mgf = {}
        for s in convergence_sweep(family, MGF_RANKS, bumps=bumps):
            mgf[str(s.rank)] = {
                format(t, ".12g"): rounded(e) for t, e in s.mgf_errors
            }
        families[family] = {"metrics": rows, "mgf_errors": mgf}
    return {
        "metric_ranks": list(METRIC_RANKS),
        "mgf_ranks": list(MGF_RANKS),
        "t_grid": [rounded(t) for t in DEFAULT_T_GRID],
        "product_bumps": BUMPS,
        "thresholds": THRESHOLDS,
        "families": families,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--output",
        type=pathlib.Path,
        default=pathlib.Path("tests/golden/convergence_metrics.json"),
    )
    args = parser.parse_args()
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(json.dumps(build_payload(), indent=2, sort_keys=True) + "\n")
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
