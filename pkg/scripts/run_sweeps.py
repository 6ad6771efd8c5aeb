"""Run every verification campaign at several dimensions and tabulate the outcome.

    python scripts/run_sweeps.py [--trials 50] [--dims 8 16 32] [--seed 0]
"""
import argparse
import time

from csymop.cli import RunConfig, UsageError, run_check, summarize
from csymop.theorems import CHECK_IDS


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--dims", type=int, nargs="+", default=[8, 16, 32])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'check':<11} {'dim':>4} {'pass':>5} {'fail':>5} {'inconc':>6} {'secs':>6}  worst checked residual")
    for check in CHECK_IDS:
        for n in args.dims:
            config = RunConfig(dimension=n, seed=args.seed, trials=args.trials)
            start = time.perf_counter()
            try:
                reports = list(run_check(check, config))
            except UsageError as exc:
                print(f"{check:<11} {n:>4}  skipped: {exc}")
                continue
            summary = summarize(check, config, reports)
            counts = summary.parameters["counts"]
            worst = max(
                ((k, v) for r in reports for k, v in r.residuals.items() if k in r.tolerances),
                key=lambda kv: kv[1],
                default=("-", 0.0),
            )
            elapsed = time.perf_counter() - start
            print(
                f"{check:<11} {n:>4} {counts['pass']:>5} {counts['fail']:>5} {counts['inconclusive']:>6} "
                f"{elapsed:>6.2f}  {worst[0]}={worst[1]:.3e}"
            )


if __name__ == "__main__":
    main()
