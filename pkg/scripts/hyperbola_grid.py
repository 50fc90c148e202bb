"""Print the coaffine / affine-trivial pattern of a two-prime hyperbola."""

import argparse
from dataclasses import dataclass

from affclass import special


@dataclass
class Config:
    d1: int = 3
    d2: int = 3
    radius: int = 6


def main(cfg: Config):
    H = special.HyperbolaData((cfg.d1, cfg.d2))
    print("d = (%d, %d), DKG = %s, AKG = %s" % (cfg.d1, cfg.d2, special.hyperbola_dkg(H), special.hyperbola_akg(H)))
    print("T affine-trivial, c coaffine only, . neither; rows n1, columns n2")
    span = range(-cfg.radius, cfg.radius + 1)
    print("     " + "".join("%3d" % x for x in span))
    for a in span:
        row = []
        for b in span:
            if special.hyperbola_is_affine_trivial(H, (a, b)):
                row.append("  T")
            elif special.hyperbola_is_coaffine(H, (a, b)):
                row.append("  c")
            else:
                row.append("  .")
        print("%4d " % a + "".join(row))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("d1", type=int, nargs="?", default=3)
    p.add_argument("d2", type=int, nargs="?", default=3)
    p.add_argument("--radius", type=int, default=6)
    a = p.parse_args()
    main(Config(a.d1, a.d2, a.radius))
