"""Recompute the 3-noncrossing tangled-diagram table three ways and compare.

    python scripts/reproduce_table.py [--max-n 10] [--brute-max-n 5]
"""

import argparse
import time

from tangled.enumeration import count_all, count_brute, count_by_vt, golden_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--brute-max-n", type=int, default=5)
    args = ap.parse_args()

    golden = dict(golden_table("d23_table").terms) if args.k == 3 else {}
    print(f"{'n':>3} {'formula':>14} {'vt-dp':>14} {'brute':>8} {'golden':>14}")
    ok = True
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        f = count_all(args.k, n)
        v = count_by_vt(args.k, n)
        b = count_brute(args.k, n) if n <= args.brute_max_n else None
        g = golden.get(n)
        ok &= f == v and b in (None, f) and g in (None, f)
        print(f"{n:>3} {f:>14} {v:>14} {'' if b is None else b:>8} {'' if g is None else g:>14}"
              f"   ({time.perf_counter() - t:.2f}s)")
    print("all methods agree" if ok else "MISMATCH")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
