"""Compare x^(q+t) - x z^t + 1 with x^(q+t) - z x^t + 1 over F_p(z).

For each form: the discriminant in z, whether it is a square over the prime
and quadratic constant fields, the cycle lengths seen among samples, and the
resulting Galois verdicts.
"""

import argparse
import json

from hyperjac.ffpoly import PrimeField
from hyperjac.galois import (
    BivarPoly,
    bivariate_discriminant,
    decide_galois,
    disc_square_in_function_field,
    sample_specializations,
)


def forms(p, q, t):
    F = PrimeField(p)
    n = q + t
    return {
        "x^n - x*z^t + 1": BivarPoly.from_terms(F, {(n, 0): 1, (1, t): -1, (0, 0): 1}),
        "x^n - z*x^t + 1": BivarPoly.from_terms(F, {(n, 0): 1, (t, 1): -1, (0, 0): 1}),
    }


def probe(F, budget, seed):
    D = bivariate_discriminant(F)
    recs = sample_specializations(F, budget, seed)
    lengths = sorted({m for r in recs if r.squarefree for m in r.outcome.parts})
    parity: dict[int, list[int]] = {}
    for r in recs:
        if r.squarefree:
            parity.setdefault(r.field_degree, [0, 0])[0 if r.outcome.is_even else 1] += 1
    out = {
        "disc_z_degree": D.deg,
        "disc_square_prime_field": disc_square_in_function_field(D, 1),
        "disc_square_quadratic_field": disc_square_in_function_field(D, 2),
        "cycle_lengths_seen": lengths,
        "even_odd_by_field_degree": {str(k): v for k, v in sorted(parity.items())},
    }
    for c in (1, 2):
        v = decide_galois(F, budget, seed, base_degree=c)
        out[f"verdict_base_degree_{c}"] = v.status.value
        out[f"jordan_m_base_degree_{c}"] = v.jordan.m if v.jordan else None
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--t", type=int, default=7)
    ap.add_argument("--budget", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for name, F in forms(args.p, args.q, args.t).items():
        print(json.dumps({"form": name, "p": args.p, "q": args.q, "t": args.t,
                          **probe(F, args.budget, args.seed)}, sort_keys=True))


if __name__ == "__main__":
    main()
