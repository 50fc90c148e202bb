"""Tabulate facets, class groups and affine facet unions for Segre monoids."""

import argparse
from dataclasses import dataclass
from itertools import chain, combinations

from affclass import cone, divisors, special


@dataclass
class Config:
    max_m: int = 3
    max_n: int = 3


def main(cfg: Config):
    print("%3s %3s %4s %7s %6s %9s %8s" % ("m", "n", "dim", "facets", "AKG", "subsets", "affine"))
    for m in range(1, cfg.max_m + 1):
        for n in range(1, cfg.max_n + 1):
            M = cone.segre_monoid(m, n)
            F = cone.facet_valuations(M)
            labels = cone.segre_facet_labels(m, n, M, F)
            subsets = list(chain.from_iterable(combinations(range(F.r), k) for k in range(F.r + 1)))
            affine = 0
            for S in subsets:
                ok = divisors.support_realizable(M, F, S)
                rows = [labels[i][1] for i in S if labels[i][0] == "row"]
                cols = [labels[i][1] for i in S if labels[i][0] == "col"]
                assert ok == special.segre_union_affine(m, n, rows, cols)
                affine += ok
            print("%3d %3d %4d %7d %6s %9d %8d" % (m, n, M.dim, F.r, divisors.affine_class_group(F),
                                                   len(subsets), affine))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=3)
    a = p.parse_args()
    main(Config(a.max_m, a.max_n))
