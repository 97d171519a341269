"""Table of type-A m-cluster orbit categories: object counts and checks.

    python3 scripts/orbit_table.py --max-n 5 --max-m 3
"""

import argparse

from qpcat.orbitcat import check_cluster_tilting, check_cy, enumerate_orbit_objects


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-m", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'n':>3} {'m':>3} {'objects':>8} {'CY viol':>8} {'Hom(T,T[r])':>12} {'add(T)':>7} {'End T':>6}")
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            objs = enumerate_orbit_objects(n, m)
            cy = check_cy(n, m)
            t = check_cluster_tilting(n, m)
            ext = sum(t.self_ext.values())
            print(f"{n:>3} {m:>3} {len(objs):>8} {len(cy.violations):>8} {ext:>12} "
                  f"{len(t.summands):>7} {t.end_dim:>6}")


if __name__ == "__main__":
    main()
