"""Minimal warping degree of reduced knot shadows by crossing number.

Full enumeration; c=9 takes well under a minute, c=10 around five minutes on
one core, c=11 roughly an hour.

    python scripts/reproduce_table1.py --to 9
"""

from __future__ import annotations

import argparse
import time

from warpdeg.census import dmin_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="c_from", type=int, default=3)
    ap.add_argument("--to", dest="c_to", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)

    print("c,count_reduced,d_min,ir_min,ir_max,seconds")
    for c in range(args.c_from, args.c_to + 1):
        t0 = time.perf_counter()
        (row,) = dmin_table(c, c, limit=max(c, 8), jobs=args.jobs)
        print(f"{row.c},{row.count_reduced},{row.d_min},{row.ir_min},{row.ir_max},"
              f"{time.perf_counter() - t0:.1f}", flush=True)


if __name__ == "__main__":
    main()
