"""Class groups of random pointed cones, with the simpliciality check on each."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from affclass import cone, divisors
from affclass.selfcheck import random_cone


@dataclass
class Config:
    samples: int = 500
    max_dim: int = 4
    max_gens: int = 8
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    groups = Counter()
    simplicial = 0
    for _ in range(cfg.samples):
        d = rng.randint(1, cfg.max_dim)
        M = cone.build_monoid(d, random_cone(rng, d, rng.randint(d, cfg.max_gens)))
        F = cone.facet_valuations(M)
        rep = divisors.simpliciality_report(M, F)
        simplicial += rep.simplicial
        groups[str(divisors.divisor_class_group(F).dkg)] += 1
    print("%d cones, %d simplicial, all three criteria agreed" % (cfg.samples, simplicial))
    for g, c in groups.most_common(15):
        print("%6d  %s" % (c, g))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--max-gens", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    main(Config(a.samples, a.max_dim, a.max_gens, a.seed))
