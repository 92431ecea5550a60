"""Print the per-flat antipode table of a complex (default: the paw)."""

import argparse
from dataclasses import dataclass

from hopfsimp.complex import parse_complex, to_text
from hopfsimp.hopf import antipode_flat, antipode_table


@dataclass
class Config:
    complex: str = "n=4; {0,1,2},{2,3}"


def main(cfg: Config):
    cx = parse_complex(cfg.complex)
    print(f"complex: {to_text(cx)}")
    print(f"{'flat edges (1-based)':<34}{'sign':>8}{'a':>5}  term")
    for r in antipode_table(cx):
        edges = ",".join("{%d,%d}" % (u + 1, v + 1) for u, v in r.flat.edges) or "∅"
        print(f"{edges:<34}{'(-1)^%d' % r.exponent:>8}{r.a_value:>5}  {to_text(r.term)}")
    print("\ncollected:")
    for term, c in antipode_flat(cx):
        print(f"{str(c):>6}  {to_text(term)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--complex", default=Config.complex)
    main(Config(**vars(p.parse_args())))
