"""Class counts, connected counts and both sides of the trace formula."""

import argparse
import time
from dataclasses import dataclass

from hopfsimp.complex import enumerate_complexes
from hopfsimp.hopf import connected_counts, mult_table, trace_antipode, trace_antipode_direct, trace_mult_basis


@dataclass
class Config:
    max_n: int = 5


def main(cfg: Config):
    conn = connected_counts(cfg.max_n)
    print(f"{'n':>2} {'classes':>8} {'connected':>10} {'tr S':>6} {'direct':>7} {'mult side':>10}  mult(k,n)")
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        row = (len(enumerate_complexes(n)), conn[n], trace_antipode(n),
               trace_antipode_direct(n), trace_mult_basis(n))
        dt = time.perf_counter() - t0
        print(f"{n:>2} {row[0]:>8} {row[1]:>10} {row[2]:>6} {str(row[3]):>7} {row[4]:>10}  "
              f"{mult_table(n)}  [{dt:.2f}s]")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", dest="max_n", type=int, default=Config.max_n)
    main(Config(**vars(p.parse_args())))
