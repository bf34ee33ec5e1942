"""Exhaustive census of knot and link shadows by crossing number.

Knot shadows come from unsigned Gauss words: every word whose repeated
letters sit an odd distance apart, up to cyclic shift and reversal, is
realized on the sphere in all possible ways.  Connected link shadows are
grown one crossing at a time by the inverse of smoothing, starting from the
one-crossing curl; every connected shadow with c+1 crossings has a crossing
whose smoothing stays connected, so the growth is exhaustive.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .codec import canonical, realize
from .errors import LimitExceeded
from .moves import add_curl, edge_sides, insert_crossing
from .region_opt import ir, max_independent_regions
from .shadow import Shadow
from .warping import warping_degree_shadow

log = logging.getLogger(__name__)

DEFAULT_KNOT_LIMIT = 8
DEFAULT_LINK_LIMIT = 6


@dataclass(frozen=True)
class CensusConfig:
    """Crossing budgets and worker count for census runs."""

    knot_limit: int = DEFAULT_KNOT_LIMIT
    link_limit: int = DEFAULT_LINK_LIMIT
    jobs: int = 1


@dataclass(frozen=True)
class CensusRow:
    c: int
    count_reduced: int
    d_min: int
    ir_min: int
    ir_max: int


@dataclass(frozen=True)
class LinkCensusRow:
    c: int
    count: int
    m_min: int


@dataclass(frozen=True)
class Theorem2Report:
    n: int
    m: int
    m_by_c: tuple[tuple[int, int], ...]
    checked: int
    d_violations: tuple[str, ...]
    ir_violations: tuple[str, ...]
    extension_violations: tuple[str, ...]

    @property
    def informative(self) -> bool:
        return self.m - 1 >= 1

    @property
    def status(self) -> str:
        if self.d_violations or self.ir_violations or self.extension_violations:
            return "FAIL"
        return "pass" if self.informative else "uninformative"


# Gauss words

def parity_words(c: int):
    """Words on 0..c-1 in first-occurrence order whose letter pairs are an odd distance apart."""
    n = 2 * c
    word = [-1] * n

    def fill(pos, nxt):
        while pos < n and word[pos] >= 0:
            pos += 1
        if pos == n:
            yield tuple(word)
            return
        word[pos] = nxt
        for j in range(pos + 1, n, 2):
            if word[j] < 0:
                word[j] = nxt
                yield from fill(pos + 1, nxt + 1)
                word[j] = -1
        word[pos] = -1

    yield from fill(0, 0)


def _normalize(seq):
    relabel = {}
    return tuple(relabel.setdefault(a, len(relabel)) for a in seq)


def dihedral_canonical(word) -> tuple[int, ...]:
    """Least relabeled word over all cyclic shifts and both reading directions."""
    n = len(word)
    best = None
    for w in (word, word[::-1]):
        for r in range(n):
            cand = _normalize(w[r:] + w[:r])
            if best is None or cand < best:
                best = cand
    return best


def has_isolated_chord(word) -> bool:
    """True when some crossing interlaces no other one (a nugatory crossing)."""
    pos = {}
    for i, a in enumerate(word):
        pos.setdefault(a, []).append(i)
    for a, (i, j) in pos.items():
        inside = set(word[i + 1:j])
        if all(pos[b][0] > i and pos[b][1] < j for b in inside):
            return True
    return False


def knot_words(c: int, reduced_only: bool) -> list[tuple[int, ...]]:
    words = set()
    for w in parity_words(c):
        if reduced_only and has_isolated_chord(w):
            continue
        words.add(dihedral_canonical(w))
    return sorted(words)


def _realize_word(word):
    return [(canonical(s), s) for s in realize(word)]


def _check_limit(c, limit, what):
    if c < 1:
        raise ValueError("crossing number must be at least 1")
    if c > limit:
        raise LimitExceeded(f"{what} census limited to c <= {limit} (got {c}); raise --limit")


def enumerate_knot_shadows(c: int, reduced_only: bool = True, limit: int = DEFAULT_KNOT_LIMIT,
                           jobs: int = 1) -> list[Shadow]:
    """All knot shadows with c crossings up to sphere isomorphism and reflection.

    Sorted by canonical code.
    """
    _check_limit(c, limit, "knot")
    return list(_knot_census(c, reduced_only, jobs))


@lru_cache(maxsize=None)
def _knot_census(c, reduced_only, jobs=1):
    words = knot_words(c, reduced_only)
    log.info("c=%d: %d Gauss words up to symmetry", c, len(words))
    found = {}
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            batches = pool.map(_realize_word, words, chunksize=64)
            for batch in batches:
                for key, s in batch:
                    found.setdefault(key, s)
    else:
        for w in words:
            for key, s in _realize_word(w):
                found.setdefault(key, s)
    shadows = [found[k] for k in sorted(found)]
    if reduced_only:
        shadows = [s for s in shadows if s.is_reduced()]
    return tuple(shadows)


def curl() -> Shadow:
    """The one-crossing figure-eight curve."""
    return Shadow((1, 0, 3, 2))


def grow(s: Shadow):
    """Every connected shadow with one more crossing whose smoothing can give ``s``."""
    for sides in edge_sides(s):
        for i in range(len(sides)):
            for j in range(i + 1, len(sides)):
                u1, u2 = sides[i], sides[j]
                if u2 in (u1, s.pairing[u1]):
                    continue
                yield insert_crossing(s, u1, u2)
    for u in range(len(s.pairing)):
        if u < s.pairing[u]:
            yield add_curl(s, u, 0)
            yield add_curl(s, u, 1)


@lru_cache(maxsize=None)
def _link_level(c):
    if c == 1:
        return (curl(),)
    found = {}
    for s in _link_level(c - 1):
        for t in grow(s):
            found.setdefault(canonical(t), t)
    log.info("c=%d: %d connected link shadows", c, len(found))
    return tuple(found[k] for k in sorted(found))


def enumerate_link_shadows(c: int, connected_only: bool = True,
                           limit: int = DEFAULT_LINK_LIMIT) -> list[Shadow]:
    """All connected link shadows (any number of components) with c crossings."""
    if not connected_only:
        raise ValueError("only connected link shadows are enumerated")
    _check_limit(c, limit, "link")
    return list(_link_level(c))


def knots_by_growth(c: int, reduced_only: bool = True, limit: int = DEFAULT_LINK_LIMIT) -> list[Shadow]:
    """Knot shadows taken from the link census; an independent route to the knot census."""
    out = [s for s in enumerate_link_shadows(c, limit=limit) if s.component_count == 1]
    if reduced_only:
        out = [s for s in out if s.is_reduced()]
    return out


def dmin_table(c_from: int, c_to: int, limit: int = DEFAULT_KNOT_LIMIT, jobs: int = 1) -> list[CensusRow]:
    rows = []
    for c in range(c_from, c_to + 1):
        shadows = enumerate_knot_shadows(c, reduced_only=True, limit=limit, jobs=jobs)
        if not shadows:
            continue
        ds = [warping_degree_shadow(s).d_p for s in shadows]
        irs = [ir(s).ir for s in shadows]
        rows.append(CensusRow(c, len(shadows), min(ds), min(irs), max(irs)))
    return rows


def link_census_row(c: int, limit: int = DEFAULT_LINK_LIMIT) -> LinkCensusRow:
    shadows = enumerate_link_shadows(c, limit=limit)
    return LinkCensusRow(c, len(shadows), min(max_independent_regions(s) for s in shadows))


def theorem2_check(n: int, knot_limit: int = DEFAULT_KNOT_LIMIT,
                   link_limit: int = DEFAULT_LINK_LIMIT, jobs: int = 1) -> Theorem2Report:
    """Take m from the link census at n, n+1, n+2 and test d >= m-1 and IR >= m-1.

    Also checks the extension step: every connected link shadow with
    n..link_limit crossings has at least m independent regions.
    """
    if n + 2 > link_limit:
        raise LimitExceeded(f"n + 2 = {n + 2} exceeds the link census limit {link_limit}")
    m_by_c = tuple((c, link_census_row(c, link_limit).m_min) for c in (n, n + 1, n + 2))
    m = min(v for _, v in m_by_c)
    ext = []
    for c in range(n, link_limit + 1):
        for i, s in enumerate(enumerate_link_shadows(c, limit=link_limit)):
            if max_independent_regions(s) < m:
                ext.append(f"L{c}_{i + 1}")
    d_bad, ir_bad = [], []
    checked = 0
    for c in range(max(n, 1), knot_limit + 1):
        for i, s in enumerate(enumerate_knot_shadows(c, True, knot_limit, jobs)):
            checked += 1
            if warping_degree_shadow(s).d_p < m - 1:
                d_bad.append(f"K{c}_{i + 1}")
            if ir(s).ir < m - 1:
                ir_bad.append(f"K{c}_{i + 1}")
    return Theorem2Report(n, m, m_by_c, checked, tuple(d_bad), tuple(ir_bad), tuple(ext))


def census_names(prefix: str, c: int, shadows) -> list[tuple[str, Shadow]]:
    return [(f"{prefix}{c}_{i + 1}", s) for i, s in enumerate(shadows)]
