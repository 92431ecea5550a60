"""Search all graphs on n vertices for non-isomorphic pairs with equal
chromatic symmetric function, then print the m_(3,2) coefficient of the
q-analog for each member."""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from hopfsimp.characters import chromatic_symmetric_function, m32_q_coefficient, stanley_pair
from hopfsimp.complex import enumerate_complexes
from hopfsimp.graph import one_skeleton_graph


@dataclass
class Config:
    n: int = 5
    s: int = 2


def main(cfg: Config):
    groups = defaultdict(list)
    graphs = [one_skeleton_graph(cx) for cx in enumerate_complexes(cfg.n) if cx.dim <= 1]
    for G in graphs:
        groups[chromatic_symmetric_function(G)].append(G)
    print(f"{len(graphs)} graphs on {cfg.n} vertices")
    for f, members in groups.items():
        if len(members) < 2:
            continue
        print(f"\nshared X_G = {f}")
        for G in members:
            line = f"  edges {list(G.edges)}"
            if cfg.n == 5:
                line += f"  m[3,2] coefficient: {m32_q_coefficient(G, cfg.s)}"
            print(line)
    if cfg.n == 5:
        B, K = stanley_pair()
        print(f"\nbuilt-in pair: {m32_q_coefficient(B, cfg.s)}  vs  {m32_q_coefficient(K, cfg.s)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--s", type=int, default=Config.s)
    main(Config(**vars(p.parse_args())))
