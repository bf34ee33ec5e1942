"""Smoothing (splicing) of shadows and transport of independent region sets.

A smoothing at crossing ``x`` joins rotation-adjacent slots: choice 0 joins
slots (0,1) and (2,3), choice 1 joins (1,2) and (3,0).  Choice 0 merges the
faces at corners 1 and 3; choice 1 merges corners 0 and 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FeatureAbsent, TransportFailure, TrigonCountMismatch
from .region_opt import is_independent, max_independent_regions
from .shadow import Shadow, quadrants, region_incidence, trace_regions

__all__ = [
    "SpliceChoice", "TransportMap", "smooth", "smooth_tracked", "merging_choice",
    "find_small_faces", "splice_reducible", "splice_bigon", "splice_trigon",
    "transport_independent_set", "max_independent_regions", "insert_crossing",
    "add_curl", "edge_sides", "transport_is_valid", "smooth_with_transport",
]


@dataclass(frozen=True)
class SpliceChoice:
    crossing: int
    pairing: int  # 0 joins (0,1)&(2,3); 1 joins (1,2)&(3,0)


@dataclass(frozen=True)
class TransportMap:
    """Regions of a spliced shadow -> regions of the original.

    ``constituents[r]`` are the original regions that merged into ``r``;
    ``target[r]`` is the least of them.
    """

    constituents: dict[int, frozenset[int]]
    target: dict[int, int]

    def compose(self, later: "TransportMap") -> "TransportMap":
        """``later`` maps a further-spliced shadow onto this map's spliced shadow."""
        cons = {
            r: frozenset().union(*(self.constituents[q] for q in qs))
            for r, qs in later.constituents.items()
        }
        return TransportMap(cons, {r: min(parts) for r, parts in cons.items()})


def merging_choice(corner: int) -> int:
    """Smoothing choice that merges the faces at ``corner`` and ``corner + 2``."""
    return 1 if corner % 2 == 0 else 0


def smooth_tracked(s: Shadow, x: int, choice: int) -> tuple[Shadow, dict[int, int], tuple[int, int]]:
    """Smooth crossing ``x``.

    Returns the new shadow, the map from surviving old darts to new darts,
    and the pair of old corner darts whose faces were merged.
    """
    c = s.crossing_count
    if not 0 <= x < c:
        raise IndexError(f"crossing {x} out of range 0..{c - 1}")
    if choice not in (0, 1):
        raise ValueError("choice must be 0 or 1")
    join = {0: 1, 1: 0, 2: 3, 3: 2} if choice == 0 else {1: 2, 2: 1, 3: 0, 0: 3}
    base = 4 * x
    new_id = {}
    for d in range(4 * c):
        y = d >> 2
        if y != x:
            new_id[d] = d - 4 if y > x else d
    pairing = [0] * (4 * (c - 1))
    for d, e in enumerate(s.pairing):
        if d >> 2 != x and e >> 2 != x:
            pairing[new_id[d]] = new_id[e]
    visited = set()
    for slot in range(4):
        if slot in visited:
            continue
        outer = s.pairing[base + slot]
        if outer >> 2 == x:
            continue
        # follow the new arc from the outside dart through x's slots
        k = slot
        while True:
            visited.add(k)
            k2 = join[k]
            visited.add(k2)
            nxt = s.pairing[base + k2]
            if nxt >> 2 != x:
                break
            k = nxt & 3
        a, b = new_id[outer], new_id[nxt]
        pairing[a], pairing[b] = b, a
    loops = 0
    for slot in range(4):
        if slot in visited:
            continue
        k = slot
        while k not in visited:
            visited.add(k)
            k2 = join[k]
            visited.add(k2)
            k = s.pairing[base + k2] & 3
        loops += 1
    merged = (base + 1, base + 3) if choice == 0 else (base, base + 2)
    return Shadow(tuple(pairing), s.free_loops + loops), new_id, merged


def smooth(s: Shadow, ch: SpliceChoice) -> Shadow:
    return smooth_tracked(s, ch.crossing, ch.pairing)[0]


def _transport_for(old: Shadow, new: Shadow, new_id: dict[int, int], merged) -> TransportMap:
    old_face = old.face_of
    cons = {r.id: set() for r in trace_regions(new)}
    for d, nd in new_id.items():
        cons[new.face_of(nd)].add(old_face(d))
    merged_faces = {old_face(merged[0]), old_face(merged[1])}
    for r, parts in cons.items():
        if parts & merged_faces:
            parts |= merged_faces
    frozen = {r: frozenset(p) for r, p in cons.items()}
    return TransportMap(frozen, {r: min(p) for r, p in frozen.items()})


def smooth_with_transport(s: Shadow, x: int, choice: int) -> tuple[Shadow, TransportMap]:
    new, new_id, merged = smooth_tracked(s, x, choice)
    return new, _transport_for(s, new, new_id, merged)


def find_small_faces(s: Shadow) -> tuple[list[int], list[int], list[int]]:
    """Region ids of monogons, bigons and trigons.

    A k-gon has k corners at k distinct crossings.
    """
    out = ([], [], [])
    for r in trace_regions(s):
        if 1 <= r.size <= 3 and len(r.incident_crossings) == r.size:
            out[r.size - 1].append(r.id)
    return out


def _connected_result(s, x, choice):
    new, tm = smooth_with_transport(s, x, choice)
    return (new, tm) if new.is_connected else None


def splice_reducible(s: Shadow) -> tuple[Shadow, TransportMap]:
    """Smooth the least nugatory crossing so that the result stays connected."""
    s.require_connected()
    for x in range(s.crossing_count):
        q = quadrants(s, x)
        for k in (0, 1):
            if q[k] == q[k + 2]:
                res = _connected_result(s, x, merging_choice(k + 1))
                if res is not None:
                    return res
    raise FeatureAbsent("no reducible crossing")


def splice_bigon(s: Shadow) -> tuple[Shadow, TransportMap]:
    """Smooth the lower crossing of the least bigon, merging the bigon with the face opposite it."""
    s.require_connected()
    _, bigons, _ = find_small_faces(s)
    if not bigons:
        raise FeatureAbsent("no bigon")
    regions = trace_regions(s)
    t = bigons[0]
    x = min(regions[t].incident_crossings)
    corner = quadrants(s, x).index(t)
    new, tm = smooth_with_transport(s, x, merging_choice(corner))
    return new, tm


def _trigon_candidates(s: Shadow, t: int):
    regions = trace_regions(s)
    xs = sorted(regions[t].incident_crossings)
    for choices in range(8):
        cur, tm = s, None
        ok = True
        remaining = list(xs)
        for i in range(3):
            x = remaining[i]
            corner = None
            cur_regions = quadrants(cur, x)
            target = tm_face_of(tm, t)
            for k in range(4):
                if target is not None and cur_regions[k] in target:
                    corner = k
                    break
            if corner is None:
                ok = False
                break
            ch = merging_choice(corner) if (choices >> i) & 1 == 0 else merging_choice(corner + 1)
            nxt, step = smooth_with_transport(cur, x, ch)
            tm = step if tm is None else tm.compose(step)
            cur = nxt
            remaining = [y - 1 if y > x else y for y in remaining]
        if ok and cur.is_connected:
            yield choices, cur, tm


def tm_face_of(tm, original_region):
    """Regions of the current shadow whose constituents include ``original_region``."""
    if tm is None:
        return {original_region}
    return {r for r, parts in tm.constituents.items() if original_region in parts}


def transport_is_valid(original: Shadow, spliced: Shadow, tm: TransportMap) -> bool:
    """Every independent pair of the spliced shadow maps to an independent pair."""
    inc_new = region_incidence(spliced)
    inc_old = region_incidence(original)
    ids = sorted(tm.target)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if inc_new[a] & inc_new[b]:
                continue
            if not is_independent([tm.target[a], tm.target[b]], inc_old):
                return False
    return True


def splice_trigon(s: Shadow) -> tuple[Shadow, TransportMap]:
    """Remove all three crossings of the least trigon.

    The eight smoothing combinations are tried in order; the first that
    leaves a connected shadow with a valid region transport wins.  Bit ``i``
    of the combination selects, at the trigon's ``i``-th crossing, whether
    the trigon merges across the corner (0) or stays closed (1).  Raises
    ``TrigonCountMismatch`` when no combination qualifies.
    """
    s.require_connected()
    _, _, trigons = find_small_faces(s)
    if not trigons:
        raise FeatureAbsent("no trigon")
    c = s.crossing_count
    for t in trigons[:1]:
        for _, new, tm in _trigon_candidates(s, t):
            if new.crossing_count == c - 3 and transport_is_valid(s, new, tm):
                return new, tm
    raise TrigonCountMismatch(
        f"no smoothing of trigon {trigons[0]} gives a connected shadow with {c - 3} crossings "
        "and a valid transport", expected=c - 3, got=None,
    )


def transport_independent_set(regions, tm: TransportMap, original: Shadow) -> tuple[int, ...]:
    """Image of an independent set of the spliced shadow; re-verified in ``original``."""
    image = tuple(sorted(tm.target[r] for r in regions))
    inc = region_incidence(original)
    if len(set(image)) != len(tuple(regions)) or not is_independent(image, inc):
        raise TransportFailure(f"regions {tuple(regions)} map to dependent set {image}")
    return image


# inverse moves, used to grow the link census

def edge_sides(s: Shadow) -> list[list[int]]:
    """For each face, its boundary edge sides as out-darts ``u`` (edge ``u -> pairing[u]``).

    The face lies to the right of each listed traversal, in boundary order.
    """
    return [[(d & ~3) | ((d + 1) & 3) for d in r.boundary] for r in trace_regions(s)]


def insert_crossing(s: Shadow, u1: int, u2: int) -> Shadow:
    """Join two distinct edge sides of one face through a new crossing.

    Smoothing the new crossing with choice 1 restores ``s``.
    """
    w1, w2 = s.pairing[u1], s.pairing[u2]
    if u1 == u2 or {u1, w1} == {u2, w2}:
        raise ValueError("edge sides must lie on distinct edges")
    c = s.crossing_count
    n = 4 * c
    pairing = list(s.pairing) + [0, 0, 0, 0]
    # counterclockwise at the new crossing: towards u1, w2, u2, w1
    for slot, end in enumerate((u1, w2, u2, w1)):
        pairing[n + slot] = end
        pairing[end] = n + slot
    return Shadow(tuple(pairing), s.free_loops)


def add_curl(s: Shadow, u: int, side: int) -> Shadow:
    """Put a kink on edge ``u -> pairing[u]``; ``side`` picks which face receives the loop."""
    w = s.pairing[u]
    n = 4 * s.crossing_count
    pairing = list(s.pairing) + [0, 0, 0, 0]
    if side == 0:
        links = ((0, u), (3, w), (1, n + 2))
    else:
        links = ((0, u), (1, w), (3, n + 2))
    for slot, end in links:
        pairing[n + slot] = end
        pairing[end] = n + slot
    return Shadow(tuple(pairing), s.free_loops)
