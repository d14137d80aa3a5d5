"""Small wall-clock comparison of the two balance metrics.

Runs the benchmark grid at desk scale and prints how each metric's
median time moves with the planted frustrated fraction. Eigensolving
should be fraction-blind; annealing slows as frustration is planted,
until the instances saturate and the trend flattens.
"""

import argparse

from signedbalance import run_grid, trend_summary
from signedbalance.bench import write_bench_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[60, 120])
    ap.add_argument("--fractions", type=float, nargs="+", default=[0.1, 0.3, 0.5, 0.7, 0.9])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="timing_demo.csv")
    args = ap.parse_args()

    records = run_grid(
        args.sizes, args.fractions, reps=args.reps, seed=args.seed,
        progress=lambda line: print("  " + line),
    )
    write_bench_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")

    summary = trend_summary(records)
    print()
    print("spearman(time, fraction) per size:")
    for n in args.sizes:
        print(f"  n={n:4d}: anneal {summary['anneal_fraction_spearman'][n]:+.3f}   "
              f"eigen {summary['eigen_fraction_spearman'][n]:+.3f}")


if __name__ == "__main__":
    main()
