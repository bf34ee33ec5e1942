"""Compare two ways of removing a trigon on the connected link census.

three-crossing: smooth all three corners of the least trigon, trying the
    eight reconnection patterns (what ``splice_trigon`` does).
one-then-reduce: smooth a single trigon crossing, then keep splicing nugatory
    crossings until none is left.

For each strategy the script counts attempts that end connected with exactly
three fewer crossings.
"""

from __future__ import annotations

import argparse
from collections import Counter

from warpdeg.census import enumerate_link_shadows
from warpdeg.errors import TrigonCountMismatch
from warpdeg.moves import (
    _trigon_candidates,
    find_small_faces,
    smooth_with_transport,
    splice_reducible,
    transport_is_valid,
)


def one_then_reduce(s, t):
    x = min(s.regions()[t].incident_crossings)
    out = Counter()
    for choice in (0, 1):
        cur, _ = smooth_with_transport(s, x, choice)
        if not cur.is_connected:
            out["disconnected"] += 1
            continue
        while cur.crossing_count > 1 and not cur.is_reduced():
            cur, _ = splice_reducible(cur)
        out["c-3" if cur.crossing_count == s.crossing_count - 3 else "other count"] += 1
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=6)
    args = ap.parse_args(argv)

    three = Counter()
    patterns = Counter()
    single = Counter()
    for c in range(4, args.max_crossings + 1):
        for s in enumerate_link_shadows(c):
            tri = find_small_faces(s)[2]
            if not tri:
                continue
            hit = None
            for choice, new, tm in _trigon_candidates(s, tri[0]):
                if new.crossing_count == c - 3 and transport_is_valid(s, new, tm):
                    hit = choice
                    break
            three["ok" if hit is not None else "mismatch"] += 1
            if hit is not None:
                patterns[hit] += 1
            single.update(one_then_reduce(s, tri[0]))

    total = sum(three.values())
    print(f"shadows with a trigon (c = 4..{args.max_crossings}): {total}")
    print(f"three-crossing splice: {three['ok']}/{total} reach c-3 "
          f"({three['mismatch']} would raise {TrigonCountMismatch.__name__})")
    print("  reconnection pattern used: " + ", ".join(f"{k}:{v}" for k, v in sorted(patterns.items())))
    attempts = sum(single.values())
    print(f"one-then-reduce: {single['c-3']}/{attempts} attempts reach c-3, "
          f"{single['disconnected']} disconnect, {single['other count']} stop elsewhere")


if __name__ == "__main__":
    main()
