"""Run every verification suite at one size and print a summary.

    python scripts/verify_all.py --n 5
"""

import argparse
import time

from tangled.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()
    failed = 0
    for name in SUITES:
        t = time.perf_counter()
        checks = run_suite(name, args.n)
        bad = [c for c in checks if not c.ok]
        failed += len(bad)
        print(f"{name:<10} {len(checks) - len(bad):>4}/{len(checks):<4} {time.perf_counter() - t:6.2f}s")
        for c in bad:
            print("   ", c.line(), c.counterexample)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
