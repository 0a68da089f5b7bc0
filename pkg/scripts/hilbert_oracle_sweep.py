"""Compare the completion solver with brute force on random weight vectors.

Reports agreement and timings; disagreements are printed and make the exit
status nonzero.

    python scripts/hilbert_oracle_sweep.py --trials 500 --max-weight 4
"""

import argparse
import random
import time

from vgit.lattice import Completeness, DiophantineSystem, brute_force_minimal_solutions, hilbert_basis


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--max-rank", type=int, default=5)
    ap.add_argument("--max-weight", type=int, default=3)
    ap.add_argument("--bound", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    t_solver = t_brute = 0.0
    sizes = []
    truncated = 0
    for _ in range(args.trials):
        r = rng.randint(1, args.max_rank)
        w = tuple(rng.randint(-args.max_weight, args.max_weight) for _ in range(r))
        system = DiophantineSystem(r, w)
        t0 = time.perf_counter()
        hb = hilbert_basis(system, args.bound)
        t1 = time.perf_counter()
        oracle = brute_force_minimal_solutions(system, args.bound)
        t2 = time.perf_counter()
        t_solver += t1 - t0
        t_brute += t2 - t1
        sizes.append(len(hb.elements))
        truncated += hb.status is Completeness.TRUNCATED
        if list(hb.elements) != oracle:
            bad += 1
            print(f"mismatch for {w}: solver {hb.elements} oracle {oracle}")
    print(f"{args.trials} systems, {bad} mismatches, {truncated} truncated at bound {args.bound}")
    print(f"largest basis {max(sizes)}, mean {sum(sizes) / len(sizes):.1f}")
    print(f"solver {t_solver:.2f}s, brute force {t_brute:.2f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
