"""Fraction of fibres y^2 = x^(2g+2) - x + c with nonzero p-rank, per prime.

A nonzero p-rank on a fibre rules out supersingularity of that fibre's
Jacobian; the survey reports how often this happens over F_p.
"""

import argparse
import json

from hyperjac.ffpoly import Poly, PrimeField, is_prime
from hyperjac.supersing import p_rank_survey


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--g", type=int, default=4)
    ap.add_argument("--p-max", type=int, default=60)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    n = 2 * args.g + 2
    for p in range(3, args.p_max + 1):
        if not is_prime(p):
            continue
        F = PrimeField(p)
        entries = p_rank_survey(lambda c: Poly(F, [c, -1] + [0] * (n - 2) + [1]), p, args.count, args.seed)
        good = [e for e in entries if e.certificate]
        ranks = sorted({e.certificate.p_rank for e in good})
        refuted = sum(e.certificate.verdict.refutes for e in good)
        excluded = (args.g + 1) * (2 * args.g + 1) % p == 0
        print(json.dumps({"p": p, "g": args.g, "excluded_by_hypothesis": excluded,
                          "squarefree": len(good), "refuted": refuted,
                          "p_ranks_seen": ranks, "distinct_c": len({e.c for e in good})}, sort_keys=True))


if __name__ == "__main__":
    main()
