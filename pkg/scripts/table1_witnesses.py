"""Find reduced knot shadows with warping degree 3 at 10, 11 and 12 crossings.

Starts from the 9-crossing census members with d = 3 and grows them one
crossing at a time (inverse smoothing), keeping reduced knot shadows whose
warping degree stays 3.  Each hit is an upper-bound witness d_min(c) <= 3.
The first witness per level is what tests/test_acceptance.py freezes.
"""

from __future__ import annotations

import argparse

from warpdeg.census import enumerate_knot_shadows, grow
from warpdeg.codec import canonical, emit_pd
from warpdeg.warping import warping_degree_shadow


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--to", type=int, default=12)
    ap.add_argument("--target", type=int, default=3, help="warping degree to keep")
    ap.add_argument("--width", type=int, default=40, help="shadows kept per level")
    args = ap.parse_args(argv)

    level = [s for s in enumerate_knot_shadows(9, limit=9)
             if warping_degree_shadow(s).d_p == args.target]
    print(f"# 9 crossings: {len(level)} reduced shadows with d = {args.target}")
    for c in range(10, args.to + 1):
        found = {}
        for s in level[:args.width]:
            for g in grow(s):
                if not (g.is_knot and g.is_reduced()):
                    continue
                key = canonical(g)
                if key not in found and warping_degree_shadow(g).d_p == args.target:
                    found[key] = g
            if len(found) >= args.width:
                break
        level = [found[k] for k in sorted(found)]
        print(f"# {c} crossings: {len(level)} witnesses kept")
        if not level:
            break
        print(emit_pd(level[0], f"W{c}"))


if __name__ == "__main__":
    main()
