"""Branch table for property (b) over even n, with optional audit trails."""

import argparse
from collections import Counter

from hyperjac.reptheory import check_property_b


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=1000)
    ap.add_argument("--audit", action="store_true", help="print every audit line")
    args = ap.parse_args()
    counts = Counter()
    failures = []
    for n in range(10, args.n_max + 1, 2):
        r = check_property_b(n)
        counts[r.branch.value] += 1
        if not r.verdict:
            failures.append(n)
        if args.audit:
            print(f"n={n:5d} s={r.s} D={r.bound} {r.branch.value:16s} {r.verdict}")
            for line in r.audit:
                print("    " + line)
    print("branches:", dict(sorted(counts.items())))
    print("failures:", failures or "none")


if __name__ == "__main__":
    main()
