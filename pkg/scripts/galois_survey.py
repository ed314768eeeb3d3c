"""Certification rate of decide_galois on x^(2g+2) - x + z across primes and seeds."""

import argparse
import json
import time

from hyperjac.families import EvenTheorem, FamilySpec, InvariantViolation, build_family
from hyperjac.ffpoly import PrimeField, is_prime
from hyperjac.galois import decide_galois


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", type=int, default=4)
    ap.add_argument("--p-max", type=int, default=31)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--budget", type=int, default=500)
    args = ap.parse_args()
    for p in range(3, args.p_max + 1):
        if not is_prime(p):
            continue
        try:
            F = build_family(FamilySpec(EvenTheorem(args.g), PrimeField(p)))
        except InvariantViolation as e:
            print(json.dumps({"p": p, "skipped": str(e)}))
            continue
        t0 = time.perf_counter()
        verdicts = [decide_galois(F, args.budget, s).status.value for s in range(args.seeds)]
        print(json.dumps({"p": p, "g": args.g, "verdicts": verdicts,
                          "seconds": round(time.perf_counter() - t0, 2)}, sort_keys=True))


if __name__ == "__main__":
    main()
